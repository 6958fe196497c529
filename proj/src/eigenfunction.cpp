#include "hp/eigenfunction.hpp"

#include <cmath>
#include <stdexcept>

#include "hp/eta.hpp"
#include "hp/special.hpp"

namespace hp {
namespace {

// (base)^{-e} with real base > 0: no branch choice to make.
Complex neg_pow(double base, Complex e) {
  return std::exp(-e * std::log(base));
}

}  // namespace

Complex f_rho_quadrature(double x, const EigenParams& p) {
  if (!(x > 0.0)) throw std::invalid_argument("f_rho_quadrature: requires x > 0");
  const Complex rho = p.rho;
  const double re = rho.real();
  auto f = [x, rho](double t) {
    return z_eta(t * x) * std::exp((rho - 1.0) * std::log(t));
  };
  // |Z eta(u)| <= 200 e^{-u^2} for u >= 1/2 and is O(1) below; fold in the
  // power factor through max(t,1)^{Re rho - 1}.
  auto bound = [x, re](double t) {
    const double u = std::max(t * x, 0.5);
    return 200.0 * std::exp(-u * u) * std::pow(std::max(t, 1.0), re - 1.0);
  };
  QuadResult r = integrate_semi_infinite(f, 1.0, bound, p.quad);
  if (!r.converged)
    throw std::runtime_error("f_rho_quadrature: quadrature did not converge");
  return r.value;
}

Complex f_rho_series(double x, const EigenParams& p) {
  if (!(x > 0.0)) throw std::invalid_argument("f_rho_series: requires x > 0");
  const Complex rho = p.rho;
  KahanSumComplex sum;
  int extra = -1;
  for (long n = 1; n <= 500000; ++n) {
    const double a = n * x;
    sum.add(neg_pow(a, rho) * eta_tail_mellin(a, rho));
    if (a >= 1.0) {
      const double term_bound = kEtaBoundCoeff * a * a * a * a *
                                std::exp(-kPi * a * a) *
                                std::pow(a, -rho.real());
      if (extra < 0 && term_bound < p.series_tol) extra = 0;
      if (extra >= 0 && ++extra > 2) return sum.value();
    }
  }
  throw std::domain_error("f_rho_series: truncation cap exceeded");
}

Complex f_rho_derivative(double x, const EigenParams& p) {
  if (!(x > 0.0)) throw std::invalid_argument("f_rho_derivative: requires x > 0");
  const Complex rho = p.rho;
  KahanSumComplex sum;
  int extra = -1;
  for (long n = 1; n <= 500000; ++n) {
    const double a = n * x;
    // d/dx [(nx)^{-rho} T(nx)] with T' (A) = -eta(A) A^{rho-1}.
    const Complex term =
        static_cast<double>(n) *
        (-rho * neg_pow(a, rho + 1.0) * eta_tail_mellin(a, rho) - eta(a) / a);
    sum.add(term);
    if (a >= 1.0) {
      const double term_bound = static_cast<double>(n) * (std::abs(rho) + 1.0) *
                                kEtaBoundCoeff * a * a * a * a *
                                std::exp(-kPi * a * a) *
                                std::pow(a, -rho.real());
      if (extra < 0 && term_bound < p.series_tol) extra = 0;
      if (extra >= 0 && ++extra > 2) return sum.value();
    }
  }
  throw std::domain_error("f_rho_derivative: truncation cap exceeded");
}

double eigen_residual(double x, const EigenParams& p) {
  const Complex lhs = -x * f_rho_derivative(x, p);
  const Complex rhs = p.rho * f_rho_series(x, p) + z_eta(x);
  return std::abs(lhs - rhs);
}

Complex inv_dilation_fourier(double t, const EigenParams& p) {
  if (!(t > 0.0))
    throw std::invalid_argument("inv_dilation_fourier: requires t > 0");
  return std::exp((p.rho - 1.0) * std::log(t)) *
         eta_head_mellin(t, 1.0 - p.rho);
}

}  // namespace hp
