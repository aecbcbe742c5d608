#pragma once

#include <complex>
#include <cstddef>

namespace qec {

using cplx = std::complex<double>;

// Centralized tolerance defaults.  kCheckTol guards normalization,
// unitarity and orthogonality checks; kAlgebraTol guards algebraic
// identities between two exact computation routes; kKlTol absorbs the
// accumulation of N^9-dimensional inner products in double precision.
inline constexpr double kCheckTol = 1e-10;
inline constexpr double kAlgebraTol = 1e-12;
inline constexpr double kKlTol = 1e-9;

// Measurement branches with probability at or below this are dropped.
inline constexpr double kBranchEps = 1e-12;

// Default cap on dense state size: covers N <= 5 at nine registers
// (5^9 = 1953125 amplitudes).  Overridable per call site.
inline constexpr std::size_t kDefaultAmpCap = 2'000'000;

} // namespace qec
