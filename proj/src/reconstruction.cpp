#include "hp/reconstruction.hpp"

#include <cmath>
#include <stdexcept>

#include "hp/delta.hpp"
#include "hp/eta.hpp"

namespace hp {
namespace {

// sin((2l+1) pi t) / sin(pi t) with the removable singularities at integer t.
double dirichlet_kernel(double t, int l) {
  const double den = std::sin(kPi * t);
  const double m = 2.0 * l + 1.0;
  if (std::abs(den) < 1e-12)
    return m * std::cos(m * kPi * t) / std::cos(kPi * t);
  return std::sin(m * kPi * t) / den;
}

}  // namespace

Complex z_inverse_f_rho(double t, const EigenParams& p) {
  const double a = std::abs(t);
  if (a == 0.0) return {0.0, 0.0};
  return std::exp(-p.rho * std::log(a)) * eta_tail_mellin(a, p.rho);
}

Complex partial_sum(int l, double x, const EigenParams& p) {
  if (l < 1 || !(x > 0.0))
    throw std::invalid_argument("partial_sum: requires l >= 1 and x > 0");
  KahanSumComplex sum;
  for (int m = 1; m <= l; ++m) sum.add(inv_dilation_fourier(m / x, p));
  return sum.value() / x;
}

Complex residual(int l, double x, const EigenParams& p) {
  return partial_sum(l, x, p) - delta_closed_a({l, x, p.rho}) -
         f_rho_series(x, p);
}

DecompositionTerms decomposition_terms(int l, double x, const EigenParams& p,
                                       const QuadSpec& spec) {
  if (l < 1 || !(x > 0.0))
    throw std::invalid_argument("decomposition_terms: requires l >= 1 and x > 0");
  DecompositionTerms out;

  auto f = [&p](double t) { return z_inverse_f_rho(t, p); };
  const double m_factor = 2.0 * l + 1.0;

  auto near_kernel = [&](double t) -> Complex {
    if (t <= 0.0) return {0.0, 0.0};
    return f(x * t) * (1.0 / std::sin(kPi * t) - 1.0 / (kPi * t)) *
           std::sin(m_factor * kPi * t);
  };
  QuadResult r1 = integrate_oscillatory_dirichlet(near_kernel, 0.0, 0.5, l, spec);
  out.i1 = r1.value;

  // Far tail: the Gaussian factor of f kills the integrand past x t ~ 6.5.
  const double t_max = std::max(1.0, 6.5 / x);
  auto far_tail = [&](double t) -> Complex {
    return f(x * t) * std::sin(m_factor * kPi * t) / (kPi * t);
  };
  QuadResult r2 = integrate_oscillatory_dirichlet(far_tail, 0.5, t_max, l, spec);
  out.i2 = r2.value;

  // Shifted windows, truncated by the same majorant (two safety terms).
  KahanSumComplex i3;
  int m_stop = static_cast<int>(std::ceil(6.0 / x)) + 2;
  for (int m = 1; m <= m_stop; ++m) {
    const Complex f_center = f(m * x);
    auto window = [&](double t) -> Complex {
      return (f(t * x + m * x) - f_center) * dirichlet_kernel(t, l);
    };
    QuadResult rm = integrate_oscillatory_dirichlet(window, -0.5, 0.5, l, spec);
    if (!rm.converged)
      throw std::runtime_error("decomposition_terms: window integral did not converge");
    i3.add(rm.value);
  }
  out.i3 = i3.value();
  return out;
}

double l2_norm_of(const std::function<Complex(double)>& r, double x_min,
                  double x_max, int n_grid) {
  if (!(0.0 < x_min && x_min < x_max) || n_grid < 16)
    throw std::invalid_argument("l2_norm: requires 0 < x_min < x_max, n_grid >= 16");
  const std::vector<double> xs = log_grid(x_min, x_max, n_grid);
  std::vector<double> sq(xs.size());
  for (std::size_t i = 0; i < xs.size(); ++i) sq[i] = std::norm(r(xs[i]));
  KahanSum acc;
  for (std::size_t i = 0; i + 1 < xs.size(); ++i)
    acc.add(0.5 * (xs[i + 1] - xs[i]) * (sq[i] + sq[i + 1]));
  return std::sqrt(acc.value());
}

double l2_norm_residual(int l, const EigenParams& p, double x_min,
                        double x_max, int n_grid) {
  return l2_norm_of([l, &p](double x) { return residual(l, x, p); }, x_min,
                    x_max, n_grid);
}

RateFit rate_fit(const std::vector<std::pair<int, double>>& points) {
  if (points.size() < 3)
    throw std::invalid_argument("rate_fit: requires at least 3 points");
  RateFit fit;
  fit.points = points;
  std::vector<double> xs, ys;
  for (const auto& [l, norm] : points) {
    if (!(norm > 0.0)) throw std::invalid_argument("rate_fit: norms must be positive");
    xs.push_back(std::log(2.0 * l + 1.0));
    ys.push_back(std::log(norm));
  }
  const double n = static_cast<double>(xs.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sx += xs[i];
    sy += ys[i];
    sxx += xs[i] * xs[i];
    sxy += xs[i] * ys[i];
  }
  const double denom = n * sxx - sx * sx;
  if (std::abs(denom) < 1e-12)
    throw std::invalid_argument("rate_fit: degenerate abscissae (all l equal)");
  fit.slope = (n * sxy - sx * sy) / denom;
  fit.intercept = (sy - fit.slope * sx) / n;
  double ss_res = 0, ss_tot = 0;
  const double y_mean = sy / n;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double fit_y = fit.slope * xs[i] + fit.intercept;
    ss_res += (ys[i] - fit_y) * (ys[i] - fit_y);
    ss_tot += (ys[i] - y_mean) * (ys[i] - y_mean);
  }
  fit.r_squared = ss_tot > 0.0 ? 1.0 - ss_res / ss_tot : 1.0;
  return fit;
}

std::vector<double> log_grid(double x_min, double x_max, int n) {
  std::vector<double> xs(n);
  const double ratio = std::log(x_max / x_min);
  for (int i = 0; i < n; ++i)
    xs[i] = x_min * std::exp(ratio * i / (n - 1.0));
  xs.back() = x_max;
  return xs;
}

ReconstructionReport make_report(int l, const EigenParams& p,
                                 const std::vector<double>& grid) {
  ReconstructionReport rep;
  rep.l = l;
  rep.rho = p.rho;
  rep.grid = grid;
  KahanSum acc;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const double x = grid[i];
    rep.partial_sums.push_back(partial_sum(l, x, p));
    rep.deltas.push_back(delta_closed_a({l, x, p.rho}));
    rep.f_values.push_back(f_rho_series(x, p));
    rep.residuals.push_back(rep.partial_sums[i] - rep.deltas[i] -
                            rep.f_values[i]);
  }
  for (std::size_t i = 0; i + 1 < grid.size(); ++i)
    acc.add(0.5 * (grid[i + 1] - grid[i]) *
            (std::norm(rep.residuals[i]) + std::norm(rep.residuals[i + 1])));
  rep.l2_norm = std::sqrt(acc.value());
  if (!grid.empty()) rep.domain = {grid.front(), grid.back()};
  return rep;
}

}  // namespace hp
