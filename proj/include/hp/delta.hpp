#pragma once

#include "hp/quadrature.hpp"
#include "hp/types.hpp"

namespace hp {

/// Evaluation point of the mollifier delta_{l, F_rho}.
struct DeltaQuery {
  int l = 1;        // Dirichlet-kernel order
  double x = 1.0;   // evaluation point
  Complex rho{0.5, 14.134725141734694};

  double B() const { return (l + 0.5) / x; }
};

/// First closed form:
///   mellin_eta(1-rho) B^rho / rho + 4 pi B^rho int_B^inf e^{-pi u^2} u^{2-rho} du
/// with B = (l+1/2)/x. The incomplete-gamma term is exactly 0 once
/// pi B^2 > 700 (double-precision underflow of e^{-pi B^2}).
Complex delta_closed_a(const DeltaQuery& q);

/// Second closed form: -4 pi B^3 int_0^1 u^{2-rho} e^{-pi (B u)^2} du,
/// reduced to a lower incomplete gamma. With use_quadrature the u-integral
/// is evaluated adaptively instead (verification route).
Complex delta_closed_b(const DeltaQuery& q, bool use_quadrature = false);

/// Defining quadrature: int_0^B FZ^{-1}F_rho(t) dt.
Complex delta_quadrature(const DeltaQuery& q, const QuadSpec& spec = {});

}  // namespace hp
