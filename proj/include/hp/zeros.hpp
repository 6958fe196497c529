#pragma once

#include <vector>

#include "hp/types.hpp"

namespace hp {

/// A nontrivial zero rho = 1/2 + i gamma with a recomputed residual bound.
struct ZetaZero {
  int index = 0;       // ordinal among zeros with gamma > 0
  double gamma = 0.0;  // imaginary part
  double residual = 0.0;  // |zeta(1/2 + i gamma)|
};

/// First `count` zeros from the embedded table (or the CSV named by the
/// HP_ZEROS_PATH environment variable). Residuals are recomputed at load
/// time. Throws std::out_of_range past the end of the table.
std::vector<ZetaZero> load_zeros(int count);

/// Number of zeros available in the embedded table.
int embedded_zero_count();

/// Bisection root of Xi(t) = xi_completed(1/2 + i t) inside the bracket.
/// Requires a sign change; throws std::invalid_argument otherwise.
ZetaZero refine_zero(double bracket_lo, double bracket_hi, double tol);

/// True iff |zeta(1/2 + i z.gamma)| < tol.
bool verify_zero(const ZetaZero& z, double tol);

/// rho = 1/2 + i gamma_index (1-based) from the embedded table.
Complex rho_from_index(int index);

}  // namespace hp
