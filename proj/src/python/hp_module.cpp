#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "hp/delta.hpp"
#include "hp/eigenfunction.hpp"
#include "hp/eta.hpp"
#include "hp/reconstruction.hpp"
#include "hp/special.hpp"
#include "hp/zeros.hpp"

namespace py = pybind11;
using namespace hp;

namespace {

EigenParams make_params(Complex rho) {
  EigenParams p;
  p.rho = rho;
  return p;
}

}  // namespace

PYBIND11_MODULE(_hp, m) {
  m.doc() =
      "Numerical core: self-Fourier kernel, eigenfunctions attached to zeta "
      "zeros, mollified dual-sum reconstruction";

  // kernel
  m.def("eta", &eta, py::arg("t"));
  m.def("eta_antiderivative", &eta_antiderivative, py::arg("a"));
  m.def("mellin_eta", &mellin_eta, py::arg("s"));
  m.def("eta_tail_mellin", &eta_tail_mellin, py::arg("a"), py::arg("s"));
  m.def("eta_head_mellin", &eta_head_mellin, py::arg("a"), py::arg("s"));
  m.def("fourier_eta", [](double y) { return fourier_eta_numeric(y); },
        py::arg("y"));
  m.def("z_eta", [](double x) { return z_eta(x); }, py::arg("x"));

  // special functions
  m.def("gamma", [](Complex s) { return hp::gamma(s); }, py::arg("s"));
  m.def("zeta", [](Complex s) { return zeta(s); }, py::arg("s"));
  m.def("xi", [](Complex s) { return xi_completed(s); }, py::arg("s"));
  m.def("upper_incomplete_gamma",
        [](Complex a, double x) { return upper_incomplete_gamma(a, x); },
        py::arg("a"), py::arg("x"));
  m.def("lower_incomplete_gamma",
        [](Complex a, double x) { return lower_incomplete_gamma(a, x); },
        py::arg("a"), py::arg("x"));

  // zeros
  py::class_<ZetaZero>(m, "ZetaZero")
      .def_readonly("index", &ZetaZero::index)
      .def_readonly("gamma", &ZetaZero::gamma)
      .def_readonly("residual", &ZetaZero::residual)
      .def("__repr__", [](const ZetaZero& z) {
        return "ZetaZero(index=" + std::to_string(z.index) +
               ", gamma=" + std::to_string(z.gamma) + ")";
      });
  m.def("load_zeros", &load_zeros, py::arg("count"));
  m.def("zero_count", &embedded_zero_count);
  m.def("refine_zero", &refine_zero, py::arg("lo"), py::arg("hi"),
        py::arg("tol") = 1e-11);
  m.def("rho_from_index", &rho_from_index, py::arg("index"));

  // eigenfunctions
  m.def("f_rho",
        [](double x, Complex rho) { return f_rho_series(x, make_params(rho)); },
        py::arg("x"), py::arg("rho"));
  m.def("f_rho_quadrature",
        [](double x, Complex rho) {
          return f_rho_quadrature(x, make_params(rho));
        },
        py::arg("x"), py::arg("rho"));
  m.def("f_rho_derivative",
        [](double x, Complex rho) {
          return f_rho_derivative(x, make_params(rho));
        },
        py::arg("x"), py::arg("rho"));
  m.def("eigen_residual",
        [](double x, Complex rho) { return eigen_residual(x, make_params(rho)); },
        py::arg("x"), py::arg("rho"));

  // mollifier
  m.def("delta_closed_a",
        [](int l, double x, Complex rho) {
          return delta_closed_a({l, x, rho});
        },
        py::arg("l"), py::arg("x"), py::arg("rho"));
  m.def("delta_closed_b",
        [](int l, double x, Complex rho) {
          return delta_closed_b({l, x, rho});
        },
        py::arg("l"), py::arg("x"), py::arg("rho"));
  m.def("delta_quadrature",
        [](int l, double x, Complex rho) {
          return delta_quadrature({l, x, rho});
        },
        py::arg("l"), py::arg("x"), py::arg("rho"));

  // reconstruction
  m.def("partial_sum",
        [](int l, double x, Complex rho) {
          return partial_sum(l, x, make_params(rho));
        },
        py::arg("l"), py::arg("x"), py::arg("rho"));
  m.def("residual",
        [](int l, double x, Complex rho) {
          return residual(l, x, make_params(rho));
        },
        py::arg("l"), py::arg("x"), py::arg("rho"));
  m.def("decomposition_terms",
        [](int l, double x, Complex rho) {
          const auto t = decomposition_terms(l, x, make_params(rho));
          return py::make_tuple(t.i1, t.i2, t.i3);
        },
        py::arg("l"), py::arg("x"), py::arg("rho"));
  m.def("l2_norm_residual",
        [](int l, Complex rho, double x_min, double x_max, int n_grid) {
          return l2_norm_residual(l, make_params(rho), x_min, x_max, n_grid);
        },
        py::arg("l"), py::arg("rho"), py::arg("x_min") = 0.1,
        py::arg("x_max") = 10.0, py::arg("n_grid") = 64);
  m.def("log_grid", &log_grid, py::arg("x_min"), py::arg("x_max"), py::arg("n"));

  py::class_<RateFit>(m, "RateFit")
      .def_readonly("points", &RateFit::points)
      .def_readonly("slope", &RateFit::slope)
      .def_readonly("intercept", &RateFit::intercept)
      .def_readonly("r_squared", &RateFit::r_squared);
  m.def("rate_fit", &rate_fit, py::arg("points"));
}
