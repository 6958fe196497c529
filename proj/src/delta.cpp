#include "hp/delta.hpp"

#include <cmath>
#include <stdexcept>

#include "hp/eigenfunction.hpp"
#include "hp/eta.hpp"
#include "hp/special.hpp"

namespace hp {
namespace {

// e^{-pi B^2} underflow threshold for the incomplete-gamma terms.
constexpr double kGaussianUnderflow = 700.0;

void check(const DeltaQuery& q) {
  if (q.l < 1 || !(q.x > 0.0))
    throw std::invalid_argument("delta: requires l >= 1 and x > 0");
}

Complex pow_complex(double base, Complex e) {
  return std::exp(e * std::log(base));
}

}  // namespace

Complex delta_closed_a(const DeltaQuery& q) {
  check(q);
  const Complex rho = q.rho;
  const double B = q.B();
  const Complex b_rho = pow_complex(B, rho);
  Complex value = mellin_eta(1.0 - rho) * b_rho / rho;
  if (kPi * B * B <= kGaussianUnderflow) {
    // 4 pi B^rho int_B^inf e^{-pi u^2} u^{2-rho} du
    //   = 2 pi B^rho pi^{-(3-rho)/2} Gamma((3-rho)/2, pi B^2)
    const Complex a = 0.5 * (3.0 - rho);
    value += 2.0 * kPi * b_rho * std::exp(-a * std::log(kPi)) *
             upper_incomplete_gamma(a, kPi * B * B);
  }
  return value;
}

Complex delta_closed_b(const DeltaQuery& q, bool use_quadrature) {
  check(q);
  const Complex rho = q.rho;
  const double B = q.B();
  if (use_quadrature) {
    auto f = [B, rho](double u) {
      return std::exp((2.0 - rho) * std::log(u) - kPi * B * B * u * u);
    };
    QuadResult r = integrate_adaptive(f, 0.0, 1.0);
    return -4.0 * kPi * B * B * B * r.value;
  }
  if (kPi * B * B > kGaussianUnderflow) {
    // gamma((3-rho)/2, pi B^2) has saturated to Gamma((3-rho)/2).
    const Complex a = 0.5 * (3.0 - rho);
    return -2.0 * kPi * pow_complex(B, rho) * std::exp(-a * std::log(kPi)) *
           gamma(a);
  }
  const Complex a = 0.5 * (3.0 - rho);
  return -2.0 * kPi * pow_complex(B, rho) * std::exp(-a * std::log(kPi)) *
         lower_incomplete_gamma(a, kPi * B * B);
}

Complex delta_quadrature(const DeltaQuery& q, const QuadSpec& spec) {
  check(q);
  EigenParams p;
  p.rho = q.rho;
  auto f = [&p](double t) {
    return t > 0.0 ? inv_dilation_fourier(t, p) : Complex(0.0, 0.0);
  };
  // Budget the absolute tolerance per unit length: the panel error estimates
  // are conservative and their sum grows with B even when the true error
  // stays near machine precision.
  QuadSpec scaled = spec;
  scaled.abs_tol *= std::max(1.0, q.B());
  QuadResult r = integrate_adaptive(f, 0.0, q.B(), scaled);
  if (!r.converged)
    throw std::runtime_error("delta_quadrature: quadrature did not converge");
  return r.value;
}

}  // namespace hp
