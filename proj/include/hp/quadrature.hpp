#pragma once

#include <functional>

#include "hp/types.hpp"

namespace hp {

/// Tolerances and subdivision limits for the adaptive integrators.
struct QuadSpec {
  double abs_tol = 1e-12;
  double rel_tol = 1e-10;
  int max_depth = 40;
  double tail_cutoff = 1e-16;  // semi-infinite truncation threshold
};

struct QuadResult {
  Complex value{0.0, 0.0};
  double error_estimate = 0.0;
  long evaluations = 0;
  bool converged = true;
};

using Integrand = std::function<Complex(double)>;

/// Adaptive Gauss-Kronrod (7-15) integration of f over [a, b].
/// Bisects until the panel error estimates meet the tolerance or
/// max_depth is reached, in which case converged is false.
QuadResult integrate_adaptive(const Integrand& f, double a, double b,
                              const QuadSpec& spec = {});

/// Integrate f over [a, inf). `bound` must be a non-increasing majorant of
/// |f|; the interval is truncated where the bound-based tail estimate
/// drops below spec.tail_cutoff and the tail estimate is folded into
/// error_estimate.
QuadResult integrate_semi_infinite(const Integrand& f, double a,
                                   const std::function<double(double)>& bound,
                                   const QuadSpec& spec = {});

/// Integrate f over [a, b] with panel breaks at the zeros t = k/(2l+1) of
/// sin((2l+1) pi t). The Dirichlet-type factor lives inside f; this routine
/// only supplies the subdivision and compensated panel summation.
QuadResult integrate_oscillatory_dirichlet(const Integrand& f, double a,
                                           double b, int l,
                                           const QuadSpec& spec = {});

/// Compensated (Kahan) accumulator.
class KahanSum {
 public:
  void add(double x) {
    double y = x - c_;
    double t = s_ + y;
    c_ = (t - s_) - y;
    s_ = t;
  }
  double value() const { return s_; }

 private:
  double s_ = 0.0;
  double c_ = 0.0;
};

class KahanSumComplex {
 public:
  void add(Complex z) {
    re_.add(z.real());
    im_.add(z.imag());
  }
  Complex value() const { return {re_.value(), im_.value()}; }

 private:
  KahanSum re_, im_;
};

}  // namespace hp
