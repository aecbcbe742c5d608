#pragma once

#include "qec/config.hpp"
#include "qec/operators.hpp"
#include "qec/state.hpp"

#include <cstdint>
#include <random>

namespace qec {

// Stateless seed mixer for deriving independent per-trial substreams.
std::uint64_t mix_seed(std::uint64_t master, std::uint64_t stream);

// Normalized vector of iid standard complex Gaussians.
StateVec random_state(int levels, int registers, std::mt19937_64& rng);

// iid standard complex Gaussian entries (nonzero almost surely).
Operator random_matrix(int dim, std::mt19937_64& rng);

// Orthonormalized Gaussian matrix.
Operator random_unitary(int dim, std::mt19937_64& rng);

} // namespace qec
