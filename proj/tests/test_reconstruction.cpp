#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "hp/delta.hpp"
#include "hp/eta.hpp"
#include "hp/reconstruction.hpp"

using namespace hp;

namespace {
EigenParams params(Complex rho) {
  EigenParams p;
  p.rho = rho;
  return p;
}

const Complex kRho1(0.5, 14.134725141734694);
}  // namespace

TEST_CASE("z_inverse_f_rho: even extension and zero at 0") {
  auto p = params(kRho1);
  CHECK(z_inverse_f_rho(0.0, p) == Complex{0.0, 0.0});
  CHECK(z_inverse_f_rho(-0.8, p) == z_inverse_f_rho(0.8, p));
}

TEST_CASE("z_inverse_f_rho: quadrature cross-check, including small t") {
  auto p = params(kRho1);
  for (double t : {0.02, 0.3, 1.0}) {
    auto q = integrate_semi_infinite(
        [&](double u) {
          return eta(t * u) * std::exp((kRho1 - 1.0) * std::log(u));
        },
        1.0,
        [t](double u) {
          return 16.0 * std::exp(-t * t * u * u) / std::sqrt(u);
        });
    CHECK(std::abs(z_inverse_f_rho(t, p) - q.value) < 1e-8);
  }
}

TEST_CASE("z_inverse_f_rho: Gaussian decay") {
  auto p = params(kRho1);
  CHECK(std::abs(z_inverse_f_rho(6.0, p)) < 1e-40);
}

TEST_CASE("partial_sum: l = 1 is a single dual term") {
  auto p = params(kRho1);
  const double x = 1.3;
  CHECK(std::abs(partial_sum(1, x, p) - inv_dilation_fourier(1.0 / x, p) / x) <
        1e-16);
}

TEST_CASE("partial_sum and residual: conjugation symmetry") {
  auto p = params(kRho1);
  auto pc = params(std::conj(kRho1));
  CHECK(partial_sum(5, 1.0, pc) == std::conj(partial_sum(5, 1.0, p)));
  CHECK(std::abs(residual(5, 1.0, pc) - std::conj(residual(5, 1.0, p))) < 1e-15);
}

TEST_CASE("frozen values") {
  auto p = params(kRho1);
  CHECK(std::abs(partial_sum(5, 1.0, p) -
                 Complex{-0.000523461615801411945, 0.145856125076912207}) < 1e-13);
  CHECK(std::abs(residual(3, 1.0, p) -
                 Complex{-0.000387352095399919604, 0.000320942078861284713}) < 1e-12);
  CHECK(std::abs(std::abs(residual(8, 0.7, p)) - 0.000107404091343930679) < 1e-12);
}

TEST_CASE("residual shrinks as the kernel order grows") {
  auto p = params(kRho1);
  const double r4 = std::abs(residual(4, 1.0, p));
  const double r16 = std::abs(residual(16, 1.0, p));
  CHECK(r16 < r4 / 8.0);
  const double r5 = std::abs(residual(5, 1.0, p));
  const double r50 = std::abs(residual(50, 1.0, p));
  CHECK(r50 < r5 / 30.0);
}

TEST_CASE("all three mollifier routes give the same residual") {
  auto p = params(kRho1);
  const int l = 6;
  const double x = 0.9;
  const Complex ps = partial_sum(l, x, p);
  const Complex f = f_rho_series(x, p);
  const DeltaQuery q{l, x, kRho1};
  const Complex ra = ps - delta_closed_a(q) - f;
  const Complex rb = ps - delta_closed_b(q) - f;
  const Complex rq = ps - delta_quadrature(q) - f;
  CHECK(std::abs(ra - residual(l, x, p)) == 0.0);
  CHECK(std::abs(ra - rb) < 1e-9);
  CHECK(std::abs(ra - rq) < 1e-6);
}

TEST_CASE("integral decomposition reproduces the residual") {
  auto p = params(kRho1);
  for (auto [l, x] : {std::pair<int, double>{3, 1.0}, {8, 0.7}}) {
    const auto terms = decomposition_terms(l, x, p);
    const Complex combined = terms.i1 - terms.i2 + terms.i3;
    CHECK(std::abs(combined - residual(l, x, p)) < 1e-6);
  }
}

TEST_CASE("naive dual sum diverges like B^{1/2} once the mollifier is removed") {
  auto p = params(kRho1);
  const Complex f = f_rho_series(1.0, p);
  const double g16 = std::abs(partial_sum(16, 1.0, p) - f);
  const double g64 = std::abs(partial_sum(64, 1.0, p) - f);
  const double predicted = std::sqrt(64.5 / 16.5);
  CHECK(std::abs(g64 / g16 - predicted) < 0.05 * predicted);
}

TEST_CASE("l2_norm_of: basics") {
  CHECK(l2_norm_of([](double) { return Complex{0.0, 0.0}; }, 0.1, 10.0, 32) ==
        0.0);
  // constant 1 on [1, e]: norm sqrt(e - 1)
  const double n = l2_norm_of([](double) { return Complex{1.0, 0.0}; }, 1.0,
                              std::exp(1.0), 4096);
  CHECK(n == doctest::Approx(std::sqrt(std::exp(1.0) - 1.0)).epsilon(1e-6));
  CHECK_THROWS_AS(
      l2_norm_of([](double) { return Complex{}; }, 0.1, 10.0, 8),
      std::invalid_argument);
}

TEST_CASE("l2 residual norm decreases in l and is grid-stable") {
  auto p = params(kRho1);
  const double n2 = l2_norm_residual(2, p, 0.1, 10.0, 64);
  const double n16 = l2_norm_residual(16, p, 0.1, 10.0, 64);
  CHECK(n16 < n2);
  const double n2f = l2_norm_residual(2, p, 0.1, 10.0, 128);
  CHECK(std::abs(n2f / n2 - 1.0) < 0.05);
}

TEST_CASE("rate_fit: exact synthetic power laws") {
  for (double exponent : {-1.0, -2.0}) {
    std::vector<std::pair<int, double>> pts;
    for (int l : {2, 4, 8, 16, 32})
      pts.push_back({l, 3.7 * std::pow(2.0 * l + 1.0, exponent)});
    auto fit = rate_fit(pts);
    CHECK(fit.slope == doctest::Approx(exponent).epsilon(1e-12));
    CHECK(fit.intercept == doctest::Approx(std::log(3.7)).epsilon(1e-12));
    CHECK(fit.r_squared == doctest::Approx(1.0).epsilon(1e-12));
  }
}

TEST_CASE("rate_fit: rejects bad input") {
  CHECK_THROWS_AS(rate_fit({{2, 1.0}, {4, 0.5}}), std::invalid_argument);
  CHECK_THROWS_AS(rate_fit({{2, 1.0}, {4, 0.5}, {8, -0.1}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(rate_fit({{4, 1.0}, {4, 0.5}, {4, 0.2}}),
                  std::invalid_argument);
}

TEST_CASE("log_grid endpoints and monotonicity") {
  auto g = log_grid(0.1, 10.0, 9);
  REQUIRE(g.size() == 9);
  CHECK(g.front() == doctest::Approx(0.1).epsilon(1e-14));
  CHECK(g.back() == doctest::Approx(10.0).epsilon(1e-14));
  CHECK(g[4] == doctest::Approx(1.0).epsilon(1e-14));
  for (std::size_t i = 1; i < g.size(); ++i) CHECK(g[i] > g[i - 1]);
}

TEST_CASE("make_report is internally consistent") {
  auto p = params(kRho1);
  auto grid = log_grid(0.5, 2.0, 17);
  auto rep = make_report(4, p, grid);
  REQUIRE(rep.grid.size() == grid.size());
  REQUIRE(rep.residuals.size() == grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) {
    CHECK(std::abs(rep.residuals[i] -
                   (rep.partial_sums[i] - rep.deltas[i] - rep.f_values[i])) <
          1e-15);
  }
  CHECK(rep.l == 4);
  CHECK(rep.l2_norm > 0.0);
  CHECK(rep.domain.first == 0.5);
  CHECK(rep.domain.second == 2.0);
}
