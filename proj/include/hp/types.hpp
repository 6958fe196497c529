#pragma once

#include <complex>

namespace hp {

using Complex = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846264338327950288;

}  // namespace hp
