#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "hp/eigenfunction.hpp"
#include "hp/eta.hpp"
#include "hp/special.hpp"
#include "hp/zeros.hpp"

using namespace hp;

namespace {
EigenParams params(Complex rho) {
  EigenParams p;
  p.rho = rho;
  return p;
}

const Complex kRho1(0.5, 14.134725141734694);
const Complex kRho2(0.5, 21.022039638771555);
const Complex kRho3(0.5, 25.010857580145689);
}  // namespace

TEST_CASE("f_rho: single dilation term dominates at x = 4") {
  auto p = params(kRho1);
  const Complex expected =
      std::exp(-kRho1 * std::log(4.0)) * eta_tail_mellin(4.0, kRho1);
  CHECK(std::abs(f_rho_series(4.0, p) - expected) < 1e-10);
  CHECK(std::abs(f_rho_quadrature(4.0, p) - expected) < 1e-10);
}

TEST_CASE("f_rho: two-path agreement over the grid") {
  for (Complex rho : {kRho1, kRho2, kRho3}) {
    auto p = params(rho);
    // At x = 0.3 the integral is ~1e-13 through oscillatory cancellation and
    // cannot certify the default 1e-12 absolute target; 1e-10 is ample for
    // the 1e-8 agreement bound.
    p.quad.abs_tol = 1e-10;
    for (double x : {0.3, 0.7, 1.0, 2.0, 5.0}) {
      CHECK(std::abs(f_rho_series(x, p) - f_rho_quadrature(x, p)) < 1e-8);
    }
  }
}

TEST_CASE("f_rho: non-zero parameter is fine too") {
  auto p = params({2.0, 0.0});
  CHECK(std::abs(f_rho_series(1.0, p) - f_rho_quadrature(1.0, p)) < 1e-8);
  // frozen mpmath value
  CHECK(std::abs(f_rho_series(1.0, p) - Complex{0.657163606655967397, 0.0}) < 1e-12);
}

TEST_CASE("f_rho: frozen values at the first zero") {
  auto p = params(kRho1);
  CHECK(std::abs(f_rho_series(1.0, p) - Complex{0.0, 0.14528964910366502}) < 1e-13);
  CHECK(std::abs(f_rho_series(0.5, p) -
                 Complex{-0.00025911013675819899, 0.000154058510967873685}) < 1e-13);
}

TEST_CASE("f_rho: conjugation symmetry") {
  for (double x : {0.5, 1.0, 2.0}) {
    CHECK(f_rho_series(x, params(std::conj(kRho1))) ==
          std::conj(f_rho_series(x, params(kRho1))));
  }
}

TEST_CASE("derivative matches Richardson finite difference") {
  for (Complex rho : {kRho1, kRho2, Complex{0.3, 5.0}}) {
    auto p = params(rho);
    for (double x : {0.7, 1.0, 2.0}) {
      const double h = x * 1e-5;
      auto d = [&](double step) {
        return (f_rho_series(x + step, p) - f_rho_series(x - step, p)) /
               (2.0 * step);
      };
      const Complex fd = (4.0 * d(h / 2.0) - d(h)) / 3.0;  // Richardson
      const Complex an = f_rho_derivative(x, p);
      CHECK(std::abs(an - fd) < 1e-6 * std::max(1.0, std::abs(an)));
    }
  }
}

TEST_CASE("eigen-equation residual across the strip") {
  for (Complex rho : {kRho1, kRho2, kRho3, Complex{0.3, 5.0}}) {
    auto p = params(rho);
    for (double x : {0.3, 0.7, 1.0, 2.0, 5.0}) {
      CHECK(eigen_residual(x, p) < 1e-6);
    }
  }
}

TEST_CASE("inv_dilation_fourier: small-t decay") {
  auto p = params(kRho1);
  CHECK(std::abs(inv_dilation_fourier(1e-3, p)) < 1e-5);
  CHECK(std::abs(inv_dilation_fourier(1e-5, p)) < 1e-9);
}

TEST_CASE("inv_dilation_fourier: quadrature cross-check at t = 1") {
  auto p = params(kRho1);
  auto q = integrate_adaptive(
      [&](double v) { return eta(v) * std::exp(-kRho1 * std::log(v)); },
      1e-10, 1.0);
  CHECK(std::abs(inv_dilation_fourier(1.0, p) - q.value) < 1e-9);
}

TEST_CASE("inv_dilation_fourier: saturates to the complete transform") {
  auto p = params(kRho1);
  const double t = 6.0;
  const Complex limit =
      std::exp((kRho1 - 1.0) * std::log(t)) * mellin_eta(1.0 - kRho1);
  // Both sides are ~3e-3 prefactors, so double rounding leaves ~1e-18.
  CHECK(std::abs(inv_dilation_fourier(t, p) - limit) < 1e-16);
}

TEST_CASE("Mellin transform of F_rho matches xi(s)/(s - rho) at s = 2") {
  auto p = params(kRho1);
  const Complex expected =
      mellin_eta({2.0, 0.0}) * zeta({2.0, 0.0}) / (Complex{2.0, 0.0} - kRho1);
  QuadSpec spec;
  spec.abs_tol = 1e-7;
  auto q = integrate_adaptive(
      [&](double x) { return f_rho_series(x, p) * x; }, 0.01, 8.0, spec);
  CHECK(std::abs(q.value - expected) < 1e-4);
}
