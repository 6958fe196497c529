#pragma once

#include "hp/quadrature.hpp"
#include "hp/types.hpp"

namespace hp {

/// Kernel bound |eta(t)| <= kEtaBoundCoeff * t^4 * e^{-pi t^2} for t >= 1.
inline constexpr double kEtaBoundCoeff = 8.0 * kPi * kPi;

/// eta(t) = 8 pi t^2 (pi t^2 - 3/2) e^{-pi t^2}, extended evenly to t < 0.
double eta(double t);

/// int_0^A eta = -4 pi A^3 e^{-pi A^2}.
double eta_antiderivative(double A);

/// Mellin transform int_0^inf eta(v) v^{s-1} dv = s(s-1) pi^{-s/2} Gamma(s/2),
/// entire after the s Gamma(s/2) = 2 Gamma(s/2+1) rewrite.
Complex mellin_eta(Complex s);

/// int_A^inf eta(v) v^{s-1} dv via upper incomplete gammas.
Complex eta_tail_mellin(double A, Complex s);

/// int_0^A eta(v) v^{s-1} dv; requires Re s > -2. head + tail = mellin_eta.
Complex eta_head_mellin(double A, Complex s);

/// Fourier transform 2 int_0^inf eta(t) cos(2 pi t y) dt by quadrature;
/// equals eta(y) (the kernel is self-Fourier).
double fourier_eta_numeric(double y, const QuadSpec& spec = {});

/// Dilation sum Z eta(x) = sum_{n>=1} eta(n x), truncated by the Gaussian
/// kernel bound. Throws std::domain_error for x < 1e-4.
double z_eta(double x, double tol = 1e-14);

}  // namespace hp
