#pragma once

#include "hp/quadrature.hpp"
#include "hp/types.hpp"

namespace hp {

/// Parameters for the eigenfunction F_rho attached to rho = 1/2 + i gamma
/// (any rho in the critical strip is accepted; the integral definition does
/// not require zeta(rho) = 0).
struct EigenParams {
  Complex rho{0.5, 14.134725141734694};
  double series_tol = 1e-14;
  QuadSpec quad{};
};

/// F_rho(x) = int_1^inf Z eta(t x) t^{rho-1} dt by semi-infinite quadrature.
/// Trusted-slow path; cross-checks the series below.
Complex f_rho_quadrature(double x, const EigenParams& p);

/// F_rho(x) = sum_{n>=1} (n x)^{-rho} int_{n x}^inf eta(v) v^{rho-1} dv,
/// the fast closed-form path.
Complex f_rho_series(double x, const EigenParams& p);

/// d/dx of the series form, term by term.
Complex f_rho_derivative(double x, const EigenParams& p);

/// |(-x F') - rho F - Z eta(x)|: the eigen-equation defect. An integration
/// by parts identity, so it vanishes for every rho in the strip, zero or not.
double eigen_residual(double x, const EigenParams& p);

/// Fourier transform of the formal dilation inverse,
/// FZ^{-1}F_rho(t) = int_1^inf eta(t/u) u^{rho-2} du
///                 = t^{rho-1} int_0^t eta(w) w^{-rho} dw.
Complex inv_dilation_fourier(double t, const EigenParams& p);

}  // namespace hp
