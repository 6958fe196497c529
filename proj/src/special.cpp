#include "hp/special.hpp"

#include <cmath>
#include <stdexcept>

#include "hp/quadrature.hpp"

namespace hp {
namespace {

constexpr double kEulerGamma = 0.57721566490153286060651209008240243;
constexpr double kStieltjes1 = -0.07281584548367672486058637587490131;

// B_{2n} / (2n (2n-1)), the Stirling-series coefficients.
constexpr double kStirling[8] = {
    1.0 / 12.0,       -1.0 / 360.0,      1.0 / 1260.0,     -1.0 / 1680.0,
    1.0 / 1188.0,     -691.0 / 360360.0, 7.0 / 1092.0,     -3617.0 / 122400.0};

// B_{2k} for the Euler-Maclaurin tail of zeta.
constexpr double kBernoulli[12] = {
    1.0 / 6.0,         -1.0 / 30.0,        1.0 / 42.0,   -1.0 / 30.0,
    5.0 / 66.0,        -691.0 / 2730.0,    7.0 / 6.0,    -3617.0 / 510.0,
    43867.0 / 798.0,   -174611.0 / 330.0,  854513.0 / 138.0,
    -236364091.0 / 2730.0};

bool is_nonpositive_integer(Complex s) {
  return s.imag() == 0.0 && s.real() <= 0.0 &&
         s.real() == std::floor(s.real());
}

// log sin(pi z) for Im z >= 0, up to a multiple of 2 pi i.
Complex log_sin_pi(Complex z) {
  const Complex i(0.0, 1.0);
  Complex w = std::exp(2.0 * kPi * i * z);  // |w| <= 1 for Im z >= 0
  return std::log(0.5) + i * kPi * (0.5 - z) + std::log(1.0 - w);
}

Complex stirling_log_gamma(Complex w) {
  Complex res = (w - 0.5) * std::log(w) - w + 0.5 * std::log(2.0 * kPi);
  Complex w2 = w * w;
  Complex p = w;
  for (double coeff : kStirling) {
    res += coeff / p;
    p *= w2;
  }
  return res;
}

}  // namespace

Complex log_gamma(Complex s) {
  if (is_nonpositive_integer(s))
    throw std::domain_error("log_gamma: pole at nonpositive integer");
  if (s.imag() < 0.0) return std::conj(log_gamma(std::conj(s)));
  if (s.real() < 0.5)
    return std::log(kPi) - log_sin_pi(s) - log_gamma(1.0 - s);

  Complex shift(0.0, 0.0);
  Complex w = s;
  while (std::abs(w) < 15.0) {
    shift += std::log(w);
    w += 1.0;
  }
  return stirling_log_gamma(w) - shift;
}

Complex gamma(Complex s) {
  if (is_nonpositive_integer(s))
    throw std::domain_error("gamma: pole at nonpositive integer");
  return std::exp(log_gamma(s));
}

Complex zeta(Complex s, const SpecialFunConfig& cfg) {
  if (s == Complex(1.0, 0.0)) throw std::domain_error("zeta: pole at s = 1");
  if (s.imag() < 0.0) return std::conj(zeta(std::conj(s), cfg));

  const int n_cut = std::max(20, static_cast<int>(std::ceil(std::abs(s.imag()))));
  KahanSumComplex sum;
  for (int n = 1; n < n_cut; ++n)
    sum.add(std::exp(-s * std::log(static_cast<double>(n))));

  const double nd = static_cast<double>(n_cut);
  const Complex n_pow = std::exp(-s * std::log(nd));  // N^{-s}
  Complex result = sum.value() + nd * n_pow / (s - 1.0) + 0.5 * n_pow;

  // Euler-Maclaurin corrections: B_{2k}/(2k)! * (s)_{2k-1} * N^{-s-2k+1}.
  Complex rising = s;            // s(s+1)...(s+2k-2)
  double factorial = 2.0;        // (2k)!
  double n_shift = nd;           // N^{2k-1}
  const int terms = std::min(cfg.em_terms, 12);
  for (int k = 1; k <= terms; ++k) {
    if (k > 1) {
      rising *= (s + static_cast<double>(2 * k - 3)) *
                (s + static_cast<double>(2 * k - 2));
      factorial *= (2.0 * k) * (2.0 * k - 1.0);
      n_shift *= nd * nd;
    }
    result += n_pow * kBernoulli[k - 1] / factorial * rising / n_shift;
  }
  return result;
}

Complex xi_completed(Complex s, const SpecialFunConfig& cfg) {
  if (s.imag() < 0.0) return std::conj(xi_completed(std::conj(s), cfg));

  Complex pole_free;  // (s-1) * zeta(s), entire
  if (std::abs(s - 1.0) < 1e-6) {
    const Complex u = s - 1.0;
    pole_free = 1.0 + kEulerGamma * u - kStieltjes1 * u * u;
  } else {
    pole_free = (s - 1.0) * zeta(s, cfg);
  }
  // s * Gamma(s/2) = 2 * Gamma(s/2 + 1); log scale the Gamma/pi^{-s/2} product.
  return 2.0 * std::exp(log_gamma(0.5 * s + 1.0) - 0.5 * s * std::log(kPi)) *
         pole_free;
}

double xi_critical(double t, const SpecialFunConfig& cfg) {
  return xi_completed(Complex(0.5, t), cfg).real();
}

Complex upper_incomplete_gamma(Complex a, double x,
                               const SpecialFunConfig& cfg) {
  if (x < 0.0)
    throw std::invalid_argument("upper_incomplete_gamma: requires x >= 0");
  if (x == 0.0) return gamma(a);
  if (a.imag() < 0.0)
    return std::conj(upper_incomplete_gamma(std::conj(a), x, cfg));

  const Complex prefactor = std::exp(a * std::log(x) - x);  // x^a e^{-x}
  if (x < std::abs(a) + 1.0) {
    // Lower-function power series, then complement.
    Complex term = 1.0 / a;
    Complex sum = term;
    for (int n = 1; n <= 4 * cfg.cf_max_iters; ++n) {
      term *= x / (a + static_cast<double>(n));
      sum += term;
      if (std::abs(term) < cfg.series_tol * std::abs(sum))
        return gamma(a) - prefactor * sum;
    }
    throw std::runtime_error("incomplete gamma: series did not converge");
  }

  // Lentz continued fraction for the upper function.
  constexpr double kTiny = 1e-300;
  Complex b = x + 1.0 - a;
  Complex c = 1.0 / kTiny;
  Complex d = 1.0 / b;
  Complex h = d;
  for (int i = 1; i <= cfg.cf_max_iters; ++i) {
    const Complex an = -static_cast<double>(i) * (static_cast<double>(i) - a);
    b += 2.0;
    d = an * d + b;
    if (std::abs(d) < kTiny) d = kTiny;
    c = b + an / c;
    if (std::abs(c) < kTiny) c = kTiny;
    d = 1.0 / d;
    const Complex delta = d * c;
    h *= delta;
    if (std::abs(delta - 1.0) < cfg.series_tol) return prefactor * h;
  }
  throw std::runtime_error("incomplete gamma: continued fraction did not converge");
}

Complex lower_incomplete_gamma(Complex a, double x,
                               const SpecialFunConfig& cfg) {
  if (a.real() <= 0.0)
    throw std::invalid_argument("lower_incomplete_gamma: requires Re a > 0");
  if (x < 0.0)
    throw std::invalid_argument("lower_incomplete_gamma: requires x >= 0");
  if (x == 0.0) return Complex(0.0, 0.0);
  if (a.imag() < 0.0)
    return std::conj(lower_incomplete_gamma(std::conj(a), x, cfg));

  if (x < std::abs(a) + 1.0) {
    const Complex prefactor = std::exp(a * std::log(x) - x);
    Complex term = 1.0 / a;
    Complex sum = term;
    for (int n = 1; n <= 4 * cfg.cf_max_iters; ++n) {
      term *= x / (a + static_cast<double>(n));
      sum += term;
      if (std::abs(term) < cfg.series_tol * std::abs(sum))
        return prefactor * sum;
    }
    throw std::runtime_error("incomplete gamma: series did not converge");
  }
  return gamma(a) - upper_incomplete_gamma(a, x, cfg);
}

}  // namespace hp
