#pragma once

#include <functional>
#include <utility>
#include <vector>

#include "hp/eigenfunction.hpp"
#include "hp/quadrature.hpp"
#include "hp/types.hpp"

namespace hp {

/// Z^{-1}F_rho(t) = int_1^inf eta(t u) u^{rho-1} du = t^{-rho} int_t^inf
/// eta(v) v^{rho-1} dv, extended evenly to t < 0. Grows like |t|^{-Re rho}
/// towards 0 and decays like a Gaussian.
Complex z_inverse_f_rho(double t, const EigenParams& p);

/// Truncated dual sum (1/x) sum_{m=1}^l FZ^{-1}F_rho(m/x).
Complex partial_sum(int l, double x, const EigenParams& p);

/// partial_sum - delta_closed_a - F_rho(x): the quantity driven to zero by
/// the mollified Poisson reconstruction.
Complex residual(int l, double x, const EigenParams& p);

struct DecompositionTerms {
  Complex i1;  // near kernel defect: int_0^1/2 f(xt)(1/sin - 1/(pi t)) sin((2l+1)pi t)
  Complex i2;  // far tail:           int_1/2^inf f(xt) sin((2l+1)pi t)/(pi t)
  Complex i3;  // shifted windows:    sum_m int_{-1/2}^{1/2} (f(tx+mx)-f(mx)) D_l(t)
};

/// The three terms whose combination i1 - i2 + i3 equals residual(l, x).
DecompositionTerms decomposition_terms(int l, double x, const EigenParams& p,
                                       const QuadSpec& spec = {});

/// sqrt of the trapezoidal approximation of int |r(x)|^2 dx on a log-spaced
/// grid of n_grid points over [x_min, x_max].
double l2_norm_of(const std::function<Complex(double)>& r, double x_min,
                  double x_max, int n_grid);

double l2_norm_residual(int l, const EigenParams& p, double x_min,
                        double x_max, int n_grid);

struct RateFit {
  std::vector<std::pair<int, double>> points;  // (l, norm)
  double slope = 0.0;
  double intercept = 0.0;
  double r_squared = 0.0;
};

/// Least-squares line through (log(2l+1), log norm); the slope is the
/// empirical convergence exponent.
RateFit rate_fit(const std::vector<std::pair<int, double>>& points);

struct ReconstructionReport {
  int l = 0;
  Complex rho;
  std::vector<double> grid;
  std::vector<Complex> partial_sums;
  std::vector<Complex> deltas;
  std::vector<Complex> f_values;
  std::vector<Complex> residuals;
  double l2_norm = 0.0;
  std::pair<double, double> domain{0.0, 0.0};
};

ReconstructionReport make_report(int l, const EigenParams& p,
                                 const std::vector<double>& grid);

/// Log-spaced grid helper shared by the report and norm routines.
std::vector<double> log_grid(double x_min, double x_max, int n);

}  // namespace hp
