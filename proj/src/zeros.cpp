#include "hp/zeros.hpp"

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "hp/special.hpp"

namespace hp {

// Defined in the generated zeros_data.cpp (CSV text, header `index,gamma`).
extern const char* kEmbeddedZerosCsv;

namespace {

std::vector<double> parse_zeros_csv(std::istream& in) {
  std::vector<double> gammas;
  std::string line;
  bool header = true;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    if (header) {  // `index,gamma`
      header = false;
      continue;
    }
    const auto comma = line.find(',');
    if (comma == std::string::npos)
      throw std::runtime_error("zeros CSV: malformed line: " + line);
    gammas.push_back(std::stod(line.substr(comma + 1)));
  }
  return gammas;
}

const std::vector<double>& gamma_table() {
  static const std::vector<double> table = [] {
    if (const char* path = std::getenv("HP_ZEROS_PATH")) {
      std::ifstream in(path);
      if (!in) throw std::runtime_error(std::string("cannot open HP_ZEROS_PATH: ") + path);
      return parse_zeros_csv(in);
    }
    std::istringstream in(kEmbeddedZerosCsv);
    return parse_zeros_csv(in);
  }();
  return table;
}

double zeta_residual(double g) {
  return std::abs(zeta(Complex(0.5, g)));
}

}  // namespace

int embedded_zero_count() { return static_cast<int>(gamma_table().size()); }

std::vector<ZetaZero> load_zeros(int count) {
  const auto& table = gamma_table();
  if (count < 0 || count > static_cast<int>(table.size()))
    throw std::out_of_range("load_zeros: count exceeds table size");
  std::vector<ZetaZero> zeros;
  zeros.reserve(count);
  for (int i = 0; i < count; ++i)
    zeros.push_back({i + 1, table[i], zeta_residual(table[i])});
  return zeros;
}

ZetaZero refine_zero(double bracket_lo, double bracket_hi, double tol) {
  if (!(bracket_lo < bracket_hi) || !(tol > 0.0))
    throw std::invalid_argument("refine_zero: bad bracket or tolerance");
  double flo = xi_critical(bracket_lo);
  double fhi = xi_critical(bracket_hi);
  if (!(flo * fhi < 0.0))
    throw std::invalid_argument("refine_zero: no sign change in bracket");

  double lo = bracket_lo, hi = bracket_hi;
  for (int iter = 0; iter < 200 && hi - lo > tol; ++iter) {
    const double mid = 0.5 * (lo + hi);
    const double fmid = xi_critical(mid);
    if (fmid == 0.0) {
      lo = hi = mid;
      break;
    }
    if (flo * fmid < 0.0) {
      hi = mid;
    } else {
      lo = mid;
      flo = fmid;
    }
  }
  const double g = 0.5 * (lo + hi);

  // Best-effort ordinal: match against the embedded table when close.
  int index = 0;
  const auto& table = gamma_table();
  for (std::size_t i = 0; i < table.size(); ++i) {
    if (std::abs(table[i] - g) < 0.5) {
      index = static_cast<int>(i) + 1;
      break;
    }
  }
  return {index, g, zeta_residual(g)};
}

bool verify_zero(const ZetaZero& z, double tol) {
  return zeta_residual(z.gamma) < tol;
}

Complex rho_from_index(int index) {
  const auto& table = gamma_table();
  if (index < 1 || index > static_cast<int>(table.size()))
    throw std::out_of_range("rho_from_index: index outside embedded table");
  return Complex(0.5, table[index - 1]);
}

}  // namespace hp
