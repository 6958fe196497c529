// Command-line front end: runs verification suites over the numerical core
// and writes deterministic CSV/JSON reports.

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "hp/delta.hpp"
#include "hp/eigenfunction.hpp"
#include "hp/eta.hpp"
#include "hp/reconstruction.hpp"
#include "hp/special.hpp"
#include "hp/zeros.hpp"

using json = nlohmann::ordered_json;
using namespace hp;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;

// Versioned defaults table; every report embeds the subset it used.
const json kThresholds = {
    {"version", 1},
    {"self_fourier", 1e-8},
    {"theta_equation", 1e-10},
    {"antiderivative", 1e-12},
    {"eigen_residual", 1e-6},
    {"delta_closed_pair", 1e-9},
    {"delta_quadrature", 1e-6},
    {"zero_residual", 1e-8},
    {"rate_slope_max", -0.9},
};

struct Options {
  int rho_index = 1;
  std::vector<int> l_list;
  std::vector<double> x_list;
  std::string domain;  // lo:hi:n
  std::string out;
  std::string format = "json";
  double abs_tol = 1e-12;
  double rel_tol = 1e-10;
  int jobs = static_cast<int>(std::thread::hardware_concurrency());
};

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

bool parse_domain(const std::string& s, double& lo, double& hi, int& n) {
  char colon1 = 0, colon2 = 0;
  std::istringstream in(s);
  if (!(in >> lo >> colon1 >> hi >> colon2 >> n)) return false;
  return colon1 == ':' && colon2 == ':' && lo > 0.0 && hi > lo && n >= 2 &&
         in.eof();
}

// Parallel map over [0, n) preserving output order.
template <typename Fn>
void parallel_for(int n, int jobs, Fn&& fn) {
  jobs = std::max(1, std::min(jobs, n));
  if (jobs == 1) {
    for (int i = 0; i < n; ++i) fn(i);
    return;
  }
  std::vector<std::thread> pool;
  for (int w = 0; w < jobs; ++w)
    pool.emplace_back([&, w] {
      for (int i = w; i < n; i += jobs) fn(i);
    });
  for (auto& t : pool) t.join();
}

int write_output(const Options& opt, const std::string& text) {
  if (opt.out.empty()) {
    std::cout << text;
    return kExitPass;
  }
  std::ofstream f(opt.out, std::ios::binary);
  if (!f) {
    std::cerr << "error: cannot open output file: " << opt.out << "\n";
    return kExitUsage;
  }
  f << text;
  return f.good() ? kExitPass : kExitUsage;
}

EigenParams eigen_params(const Options& opt) {
  EigenParams p;
  p.rho = rho_from_index(opt.rho_index);
  p.quad.abs_tol = opt.abs_tol;
  p.quad.rel_tol = opt.rel_tol;
  return p;
}

json check_entry(const std::string& name, double err, double tol) {
  return {{"check", name},
          {"max_abs_error", err},
          {"tolerance", tol},
          {"pass", err < tol}};
}

// --- suites --------------------------------------------------------------

json suite_eta() {
  double self_fourier = 0.0;
  for (double y : {0.0, 0.25, 0.5, 1.0, 1.5, 2.0, 3.0})
    self_fourier = std::max(self_fourier, std::abs(fourier_eta_numeric(y) - eta(y)));

  double theta = 0.0;
  for (double x : {0.3, 0.5, 0.8, 1.0, 1.7, 2.9})
    theta = std::max(theta, std::abs(z_eta(x) - z_eta(1.0 / x) / x));

  double antider = 0.0;
  for (double A : {0.5, 1.0, 2.0, 3.0}) {
    auto q = integrate_adaptive([](double t) { return Complex{eta(t), 0.0}; },
                                0.0, A);
    antider = std::max(antider, std::abs(q.value.real() - eta_antiderivative(A)));
  }

  return json::array({
      check_entry("self_fourier", self_fourier, kThresholds["self_fourier"]),
      check_entry("theta_equation", theta, kThresholds["theta_equation"]),
      check_entry("antiderivative", antider, kThresholds["antiderivative"]),
  });
}

json suite_eigen(const Options& opt) {
  auto p = eigen_params(opt);
  std::vector<double> xs = opt.x_list;
  if (xs.empty()) xs = {0.3, 0.7, 1.0, 2.0, 5.0};
  std::vector<double> residuals(xs.size());
  parallel_for(static_cast<int>(xs.size()), opt.jobs,
               [&](int i) { residuals[i] = eigen_residual(xs[i], p); });
  double worst = 0.0;
  for (double r : residuals) worst = std::max(worst, r);
  return json::array(
      {check_entry("eigen_residual", worst, kThresholds["eigen_residual"])});
}

struct DeltaRow {
  int l;
  double x;
  Complex a, b, quad;
  double max_disagreement;
};

std::vector<DeltaRow> delta_rows(const Options& opt) {
  const Complex rho = rho_from_index(opt.rho_index);
  std::vector<int> ls = opt.l_list.empty() ? std::vector<int>{1, 5, 10} : opt.l_list;
  std::vector<double> xs =
      opt.x_list.empty() ? std::vector<double>{0.5, 1.0, 2.0} : opt.x_list;
  std::vector<DeltaRow> rows;
  for (int l : ls)
    for (double x : xs) rows.push_back({l, x, {}, {}, {}, 0.0});
  parallel_for(static_cast<int>(rows.size()), opt.jobs, [&](int i) {
    auto& r = rows[i];
    const DeltaQuery q{r.l, r.x, rho};
    r.a = delta_closed_a(q);
    r.b = delta_closed_b(q);
    r.quad = delta_quadrature(q);
    r.max_disagreement = std::max(std::abs(r.a - r.b), std::abs(r.a - r.quad));
  });
  return rows;
}

bool delta_pass(const std::vector<DeltaRow>& rows) {
  for (const auto& r : rows) {
    if (std::abs(r.a - r.b) >= kThresholds["delta_closed_pair"].get<double>())
      return false;
    if (std::abs(r.a - r.quad) >= kThresholds["delta_quadrature"].get<double>())
      return false;
  }
  return true;
}

json suite_delta(const Options& opt) {
  const auto rows = delta_rows(opt);
  double worst_ab = 0.0, worst_aq = 0.0;
  for (const auto& r : rows) {
    worst_ab = std::max(worst_ab, std::abs(r.a - r.b));
    worst_aq = std::max(worst_aq, std::abs(r.a - r.quad));
  }
  return json::array({
      check_entry("delta_closed_pair", worst_ab, kThresholds["delta_closed_pair"]),
      check_entry("delta_quadrature", worst_aq, kThresholds["delta_quadrature"]),
  });
}

json suite_zeros() {
  double worst = 0.0;
  for (const auto& z : load_zeros(embedded_zero_count()))
    worst = std::max(worst, z.residual);
  return json::array(
      {check_entry("zero_residual", worst, kThresholds["zero_residual"])});
}

bool suite_pass(const json& checks) {
  for (const auto& c : checks)
    if (!c["pass"].get<bool>()) return false;
  return true;
}

int emit_verify(const Options& opt, const std::string& suite_name,
                const json& checks) {
  json report = {{"suite", suite_name},
                 {"checks", checks},
                 {"thresholds", kThresholds},
                 {"pass", suite_pass(checks)}};
  int io = write_output(opt, report.dump(2) + "\n");
  if (io != kExitPass) return io;
  return suite_pass(checks) ? kExitPass : kExitCheckFailed;
}

int cmd_zeros(const Options& opt, int count) {
  const auto zeros = load_zeros(count);
  bool pass = true;
  for (const auto& z : zeros)
    pass = pass && z.residual < kThresholds["zero_residual"].get<double>();
  std::string text;
  if (opt.format == "csv") {
    text = "index,gamma,residual\n";
    for (const auto& z : zeros)
      text += std::to_string(z.index) + "," + fmt(z.gamma) + "," +
              fmt(z.residual) + "\n";
  } else {
    json rows = json::array();
    for (const auto& z : zeros)
      rows.push_back({{"index", z.index},
                      {"gamma", z.gamma},
                      {"residual", z.residual}});
    json report = {{"zeros", rows},
                   {"thresholds", kThresholds},
                   {"pass", pass}};
    text = report.dump(2) + "\n";
  }
  int io = write_output(opt, text);
  if (io != kExitPass) return io;
  return pass ? kExitPass : kExitCheckFailed;
}

int cmd_delta(const Options& opt) {
  const auto rows = delta_rows(opt);
  std::string text;
  if (opt.format == "csv") {
    text = "l,x,re_a,im_a,re_b,im_b,re_quad,im_quad,max_disagreement\n";
    for (const auto& r : rows)
      text += std::to_string(r.l) + "," + fmt(r.x) + "," + fmt(r.a.real()) +
              "," + fmt(r.a.imag()) + "," + fmt(r.b.real()) + "," +
              fmt(r.b.imag()) + "," + fmt(r.quad.real()) + "," +
              fmt(r.quad.imag()) + "," + fmt(r.max_disagreement) + "\n";
  } else {
    json jrows = json::array();
    for (const auto& r : rows)
      jrows.push_back({{"l", r.l},
                       {"x", r.x},
                       {"re_a", r.a.real()},
                       {"im_a", r.a.imag()},
                       {"re_b", r.b.real()},
                       {"im_b", r.b.imag()},
                       {"re_quad", r.quad.real()},
                       {"im_quad", r.quad.imag()},
                       {"max_disagreement", r.max_disagreement}});
    json report = {{"rho_index", opt.rho_index},
                   {"rows", jrows},
                   {"thresholds", kThresholds},
                   {"pass", delta_pass(rows)}};
    text = report.dump(2) + "\n";
  }
  int io = write_output(opt, text);
  if (io != kExitPass) return io;
  return delta_pass(rows) ? kExitPass : kExitCheckFailed;
}

int cmd_reconstruct(const Options& opt) {
  double lo = 0.1, hi = 10.0;
  int n = 64;
  if (!opt.domain.empty() && !parse_domain(opt.domain, lo, hi, n)) {
    std::cerr << "error: --domain expects lo:hi:n with 0 < lo < hi, n >= 2\n";
    return kExitUsage;
  }
  const int l = opt.l_list.empty() ? 8 : opt.l_list.front();
  auto p = eigen_params(opt);
  const auto grid = log_grid(lo, hi, n);
  ReconstructionReport rep;
  rep.l = l;
  rep.rho = p.rho;
  rep.grid = grid;
  rep.partial_sums.resize(grid.size());
  rep.deltas.resize(grid.size());
  rep.f_values.resize(grid.size());
  rep.residuals.resize(grid.size());
  parallel_for(static_cast<int>(grid.size()), opt.jobs, [&](int i) {
    const double x = grid[i];
    rep.partial_sums[i] = partial_sum(l, x, p);
    rep.deltas[i] = delta_closed_a({l, x, p.rho});
    rep.f_values[i] = f_rho_series(x, p);
    rep.residuals[i] = rep.partial_sums[i] - rep.deltas[i] - rep.f_values[i];
  });
  {
    // Trapezoid over the residuals already computed on this grid.
    KahanSum acc;
    for (std::size_t i = 1; i < grid.size(); ++i) {
      const double a = std::norm(rep.residuals[i - 1]);
      const double b = std::norm(rep.residuals[i]);
      acc.add(0.5 * (a + b) * (grid[i] - grid[i - 1]));
    }
    rep.l2_norm = std::sqrt(acc.value());
  }

  std::string text;
  if (opt.format == "csv") {
    text =
        "x,re_partial,im_partial,re_delta,im_delta,re_f,im_f,re_residual,"
        "im_residual\n";
    for (std::size_t i = 0; i < grid.size(); ++i)
      text += fmt(grid[i]) + "," + fmt(rep.partial_sums[i].real()) + "," +
              fmt(rep.partial_sums[i].imag()) + "," +
              fmt(rep.deltas[i].real()) + "," + fmt(rep.deltas[i].imag()) +
              "," + fmt(rep.f_values[i].real()) + "," +
              fmt(rep.f_values[i].imag()) + "," +
              fmt(rep.residuals[i].real()) + "," +
              fmt(rep.residuals[i].imag()) + "\n";
  } else {
    json jrows = json::array();
    for (std::size_t i = 0; i < grid.size(); ++i)
      jrows.push_back({{"x", grid[i]},
                       {"re_residual", rep.residuals[i].real()},
                       {"im_residual", rep.residuals[i].imag()}});
    json report = {{"l", l},
                   {"rho_index", opt.rho_index},
                   {"domain", {lo, hi, n}},
                   {"l2_norm", rep.l2_norm},
                   {"residuals", jrows},
                   {"thresholds", kThresholds}};
    text = report.dump(2) + "\n";
  }
  return write_output(opt, text);
}

int cmd_rate(const Options& opt) {
  double lo = 0.1, hi = 10.0;
  int n = 64;
  if (!opt.domain.empty() && !parse_domain(opt.domain, lo, hi, n)) {
    std::cerr << "error: --domain expects lo:hi:n with 0 < lo < hi, n >= 2\n";
    return kExitUsage;
  }
  n = std::max(n, 16);
  std::vector<int> ls =
      opt.l_list.empty() ? std::vector<int>{2, 4, 8, 16, 32} : opt.l_list;
  auto p = eigen_params(opt);
  std::vector<std::pair<int, double>> pts(ls.size());
  parallel_for(static_cast<int>(ls.size()), opt.jobs, [&](int i) {
    pts[i] = {ls[i], l2_norm_residual(ls[i], p, lo, hi, n)};
  });
  RateFit fit;
  try {
    fit = rate_fit(pts);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  json jpts = json::array();
  for (const auto& [l, norm] : pts) jpts.push_back({{"l", l}, {"norm", norm}});
  const double slope_max = kThresholds["rate_slope_max"];
  json report = {{"points", jpts},
                 {"slope", fit.slope},
                 {"intercept", fit.intercept},
                 {"r_squared", fit.r_squared},
                 {"thresholds", kThresholds},
                 {"pass", fit.slope <= slope_max}};
  int io = write_output(opt, report.dump(2) + "\n");
  if (io != kExitPass) return io;
  return fit.slope <= slope_max ? kExitPass : kExitCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Numerical verification suites for a self-Fourier kernel, its "
               "attached eigenfunctions, and mollified dual-sum reconstruction"};
  app.require_subcommand(1);

  Options opt;
  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--rho-index", opt.rho_index,
                    "1-based index into the bundled zero table")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--l", opt.l_list, "comma-separated kernel orders")
        ->delimiter(',');
    cmd->add_option("--x", opt.x_list, "comma-separated evaluation points")
        ->delimiter(',');
    cmd->add_option("--domain", opt.domain, "log grid as lo:hi:n");
    cmd->add_option("--out", opt.out, "output file (default stdout)");
    cmd->add_option("--format", opt.format, "report format")
        ->check(CLI::IsMember({"csv", "json"}));
    cmd->add_option("--abs-tol", opt.abs_tol, "quadrature absolute tolerance");
    cmd->add_option("--rel-tol", opt.rel_tol, "quadrature relative tolerance");
    cmd->add_option("--jobs", opt.jobs, "parallel map width")
        ->check(CLI::PositiveNumber);
  };

  int zero_count = 0;
  auto* zeros_cmd = app.add_subcommand("zeros", "emit the certified zero table");
  add_common(zeros_cmd);
  zeros_cmd->add_option("--count", zero_count, "number of zeros (default all)");

  auto* verify_cmd = app.add_subcommand("verify", "run a verification suite");
  std::string suite;
  verify_cmd->add_option("suite", suite, "eta | eigen | delta | zeros")
      ->required()
      ->check(CLI::IsMember({"eta", "eigen", "delta", "zeros"}));
  add_common(verify_cmd);

  auto* delta_cmd =
      app.add_subcommand("delta", "tabulate the mollifier by all three routes");
  add_common(delta_cmd);

  auto* rec_cmd =
      app.add_subcommand("reconstruct", "dual-sum reconstruction on a grid");
  add_common(rec_cmd);

  auto* rate_cmd = app.add_subcommand("rate", "L2 convergence-rate fit");
  add_common(rate_cmd);

  auto* all_cmd = app.add_subcommand("all", "run every verification suite");
  add_common(all_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitPass : kExitUsage;
  }

  try {
    if (zeros_cmd->parsed()) {
      const int count =
          zero_count > 0 ? zero_count : embedded_zero_count();
      return cmd_zeros(opt, count);
    }
    if (verify_cmd->parsed()) {
      if (suite == "eta") return emit_verify(opt, "eta", suite_eta());
      if (suite == "eigen") return emit_verify(opt, "eigen", suite_eigen(opt));
      if (suite == "delta") return emit_verify(opt, "delta", suite_delta(opt));
      return emit_verify(opt, "zeros", suite_zeros());
    }
    if (delta_cmd->parsed()) return cmd_delta(opt);
    if (rec_cmd->parsed()) return cmd_reconstruct(opt);
    if (rate_cmd->parsed()) return cmd_rate(opt);
    if (all_cmd->parsed()) {
      json suites = {{"eta", suite_eta()},
                     {"eigen", suite_eigen(opt)},
                     {"delta", suite_delta(opt)},
                     {"zeros", suite_zeros()}};
      bool pass = true;
      for (const auto& [name, checks] : suites.items())
        pass = pass && suite_pass(checks);
      json report = {{"suites", suites},
                     {"thresholds", kThresholds},
                     {"pass", pass}};
      int io = write_output(opt, report.dump(2) + "\n");
      if (io != kExitPass) return io;
      return pass ? kExitPass : kExitCheckFailed;
    }
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitCheckFailed;
  }
  return kExitUsage;
}
