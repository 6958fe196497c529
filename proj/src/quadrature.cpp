#include "hp/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace hp {
namespace {

// 15-point Kronrod extension of the 7-point Gauss rule (QUADPACK dqk15).
constexpr double kNodes[8] = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144838258730, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.0};
constexpr double kWeightsKronrod[8] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
// Gauss weights for the odd Kronrod nodes (indices 1, 3, 5, 7).
constexpr double kWeightsGauss[4] = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Panel {
  Complex value;
  double error;
};

Panel gk15(const Integrand& f, double a, double b, long& evals) {
  const double mid = 0.5 * (a + b);
  const double half = 0.5 * (b - a);

  Complex fc = f(mid);
  Complex gauss = kWeightsGauss[3] * fc;
  Complex kronrod = kWeightsKronrod[7] * fc;
  for (int i = 0; i < 7; ++i) {
    const double dx = half * kNodes[i];
    Complex fsum = f(mid - dx) + f(mid + dx);
    kronrod += kWeightsKronrod[i] * fsum;
    if (i % 2 == 1) gauss += kWeightsGauss[i / 2] * fsum;
  }
  evals += 15;
  gauss *= half;
  kronrod *= half;
  return {kronrod, std::abs(kronrod - gauss)};
}

void refine(const Integrand& f, double a, double b, double tol, int depth,
            const QuadSpec& spec, KahanSumComplex& acc, double& err_acc,
            long& evals, bool& converged) {
  Panel p = gk15(f, a, b, evals);
  if (p.error <= tol || depth >= spec.max_depth) {
    if (p.error > tol) converged = false;
    acc.add(p.value);
    err_acc += p.error;
    return;
  }
  const double mid = 0.5 * (a + b);
  refine(f, a, mid, 0.5 * tol, depth + 1, spec, acc, err_acc, evals, converged);
  refine(f, mid, b, 0.5 * tol, depth + 1, spec, acc, err_acc, evals, converged);
}

}  // namespace

QuadResult integrate_adaptive(const Integrand& f, double a, double b,
                              const QuadSpec& spec) {
  if (!(a < b)) throw std::invalid_argument("integrate_adaptive: requires a < b");
  QuadResult res;
  Panel first = gk15(f, a, b, res.evaluations);
  const double tol =
      std::max(spec.abs_tol, spec.rel_tol * std::abs(first.value));
  KahanSumComplex acc;
  double err = 0.0;
  bool converged = true;
  refine(f, a, b, tol, 0, spec, acc, err, res.evaluations, converged);
  res.value = acc.value();
  res.error_estimate = err;
  res.converged = converged && err <= std::max(spec.abs_tol,
                                               spec.rel_tol * std::abs(res.value));
  return res;
}

QuadResult integrate_semi_infinite(const Integrand& f, double a,
                                   const std::function<double(double)>& bound,
                                   const QuadSpec& spec) {
  constexpr double kHardCap = 1e8;
  double t = std::max(a + 1.0, 1.0);
  while (2.0 * bound(t) * std::max(1.0, t) >= spec.tail_cutoff) {
    t *= 1.5;
    if (t > kHardCap) {
      QuadResult res;
      res.converged = false;
      return res;
    }
  }
  QuadResult res = integrate_adaptive(f, a, t, spec);
  res.error_estimate += 2.0 * bound(t) * std::max(1.0, t);
  return res;
}

QuadResult integrate_oscillatory_dirichlet(const Integrand& f, double a,
                                           double b, int l,
                                           const QuadSpec& spec) {
  if (!(a < b)) throw std::invalid_argument("oscillatory: requires a < b");
  if (l < 1) throw std::invalid_argument("oscillatory: requires l >= 1");

  const double period = 1.0 / (2.0 * l + 1.0);
  std::vector<double> cuts;
  cuts.push_back(a);
  for (long k = static_cast<long>(std::floor(a / period)) + 1;
       k * period < b; ++k) {
    const double c = k * period;
    if (c > a) cuts.push_back(c);
  }
  cuts.push_back(b);

  QuadResult total;
  KahanSumComplex acc;
  KahanSum err;
  QuadSpec panel_spec = spec;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    const double len = cuts[i + 1] - cuts[i];
    if (len <= 0.0) continue;
    panel_spec.abs_tol = spec.abs_tol * std::max(len / (b - a), 1e-3);
    QuadResult panel = integrate_adaptive(f, cuts[i], cuts[i + 1], panel_spec);
    acc.add(panel.value);
    err.add(panel.error_estimate);
    total.evaluations += panel.evaluations;
    total.converged = total.converged && panel.converged;
  }
  total.value = acc.value();
  total.error_estimate = err.value();
  return total;
}

}  // namespace hp
