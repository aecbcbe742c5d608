#include "qec/random.hpp"

#include <cmath>
#include <stdexcept>

namespace qec {

std::uint64_t mix_seed(std::uint64_t master, std::uint64_t stream) {
    // splitmix64 step on the combined value
    std::uint64_t z = master + 0x9e3779b97f4a7c15ULL * (stream + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

StateVec random_state(int levels, int registers, std::mt19937_64& rng) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    StateVec s(levels, registers);
    for (auto& a : s.amps()) a = {gauss(rng), gauss(rng)};
    s.normalize();
    return s;
}

Operator random_matrix(int dim, std::mt19937_64& rng) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    Operator op(dim);
    for (int r = 0; r < dim; ++r) {
        for (int c = 0; c < dim; ++c) {
            op.at(r, c) = {gauss(rng), gauss(rng)};
        }
    }
    return op;
}

Operator random_unitary(int dim, std::mt19937_64& rng) {
    // Gram-Schmidt on Gaussian columns, with one re-orthogonalization pass.
    Operator m = random_matrix(dim, rng);
    for (int c = 0; c < dim; ++c) {
        for (int pass = 0; pass < 2; ++pass) {
            for (int prev = 0; prev < c; ++prev) {
                cplx overlap = 0.0;
                for (int r = 0; r < dim; ++r) {
                    overlap += std::conj(m.at(r, prev)) * m.at(r, c);
                }
                for (int r = 0; r < dim; ++r) {
                    m.at(r, c) -= overlap * m.at(r, prev);
                }
            }
        }
        double nrm = 0.0;
        for (int r = 0; r < dim; ++r) nrm += std::norm(m.at(r, c));
        nrm = std::sqrt(nrm);
        if (nrm < 1e-12) {
            throw std::runtime_error("random_unitary: degenerate Gaussian draw");
        }
        for (int r = 0; r < dim; ++r) m.at(r, c) /= nrm;
    }
    return m;
}

} // namespace qec
