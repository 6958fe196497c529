#include "hp/eta.hpp"

#include <cmath>
#include <stdexcept>

#include "hp/special.hpp"

namespace hp {

double eta(double t) {
  const double t2 = t * t;
  return 8.0 * kPi * t2 * (kPi * t2 - 1.5) * std::exp(-kPi * t2);
}

double eta_antiderivative(double A) {
  if (A < 0.0) throw std::invalid_argument("eta_antiderivative: requires A >= 0");
  return -4.0 * kPi * A * A * A * std::exp(-kPi * A * A);
}

Complex mellin_eta(Complex s) {
  // s(s-1) pi^{-s/2} Gamma(s/2) with the pole at s = 0 cancelled analytically.
  return 2.0 * (s - 1.0) * std::exp(log_gamma(0.5 * s + 1.0) -
                                    0.5 * s * std::log(kPi));
}

Complex eta_tail_mellin(double A, Complex s) {
  if (!(A > 0.0)) throw std::invalid_argument("eta_tail_mellin: requires A > 0");
  const double x = kPi * A * A;
  const Complex pis = std::exp(-0.5 * s * std::log(kPi));
  return pis * (4.0 * upper_incomplete_gamma(0.5 * s + 2.0, x) -
                6.0 * upper_incomplete_gamma(0.5 * s + 1.0, x));
}

Complex eta_head_mellin(double A, Complex s) {
  if (!(A > 0.0)) throw std::invalid_argument("eta_head_mellin: requires A > 0");
  if (s.real() <= -2.0)
    throw std::invalid_argument("eta_head_mellin: requires Re s > -2");
  const double x = kPi * A * A;
  const Complex pis = std::exp(-0.5 * s * std::log(kPi));
  return pis * (4.0 * lower_incomplete_gamma(0.5 * s + 2.0, x) -
                6.0 * lower_incomplete_gamma(0.5 * s + 1.0, x));
}

double fourier_eta_numeric(double y, const QuadSpec& spec) {
  // |eta(t)| <= 16 e^{-t^2} for all t, decreasing majorant for the cutoff.
  auto f = [y](double t) {
    return Complex(eta(t) * std::cos(2.0 * kPi * t * y), 0.0);
  };
  auto bound = [](double t) { return 16.0 * std::exp(-t * t); };
  QuadResult r = integrate_semi_infinite(f, 0.0, bound, spec);
  return 2.0 * r.value.real();
}

double z_eta(double x, double tol) {
  if (!(x > 0.0)) throw std::invalid_argument("z_eta: requires x > 0");
  if (x < 1e-4) throw std::domain_error("z_eta: x below truncation range");

  KahanSum sum;
  int extra = -1;  // safety terms past the bound threshold
  for (long n = 1; n <= 500000; ++n) {
    const double t = n * x;
    sum.add(eta(t));
    if (t >= 1.0) {
      const double term_bound =
          kEtaBoundCoeff * t * t * t * t * std::exp(-kPi * t * t);
      // Integral comparison bounds the remaining sum by term_bound * (1/x + 1).
      if (extra < 0 && term_bound * (1.0 / x + 1.0) < 0.1 * tol) extra = 0;
      if (extra >= 0 && ++extra > 2) return sum.value();
    }
  }
  throw std::domain_error("z_eta: truncation cap exceeded");
}

}  // namespace hp
