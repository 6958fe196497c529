#pragma once

#include "hp/types.hpp"

namespace hp {

struct SpecialFunConfig {
  double series_tol = 1e-15;
  int cf_max_iters = 500;   // continued-fraction cap
  int em_terms = 12;        // Euler-Maclaurin correction depth for zeta
};

/// log Gamma(s) up to an integer multiple of 2*pi*i (exact after exp).
Complex log_gamma(Complex s);

/// Gamma(s). Throws std::domain_error at the poles (nonpositive integers).
Complex gamma(Complex s);

/// Riemann zeta via Euler-Maclaurin. Throws std::domain_error at s = 1.
Complex zeta(Complex s, const SpecialFunConfig& cfg = {});

/// Completed zeta in the convention xi(s) = s(s-1) pi^{-s/2} Gamma(s/2) zeta(s).
/// Entire: the Gamma pole at s = 0 is removed via s*Gamma(s/2) = 2*Gamma(s/2+1)
/// and the zeta pole at s = 1 via the (s-1) factor.
Complex xi_completed(Complex s, const SpecialFunConfig& cfg = {});

/// xi_completed(1/2 + i t), real for real t; its sign changes locate the
/// nontrivial zeros.
double xi_critical(double t, const SpecialFunConfig& cfg = {});

/// Upper incomplete gamma Gamma(a, x) = int_x^inf t^{a-1} e^{-t} dt for
/// complex shape a and real x >= 0. Power series below x = |a|+1, Lentz
/// continued fraction above.
Complex upper_incomplete_gamma(Complex a, double x,
                               const SpecialFunConfig& cfg = {});

/// Lower incomplete gamma; requires Re a > 0.
Complex lower_incomplete_gamma(Complex a, double x,
                               const SpecialFunConfig& cfg = {});

}  // namespace hp
