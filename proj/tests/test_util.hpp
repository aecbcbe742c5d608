#pragma once

#include "qec/operators.hpp"
#include "qec/state.hpp"

#include <cmath>
#include <complex>
#include <random>
#include <vector>

namespace qec::test {

inline double max_amp_diff(const StateVec& a, const StateVec& b) {
    double worst = 0.0;
    for (std::size_t i = 0; i < a.dim(); ++i) {
        worst = std::max(worst, std::abs(a[i] - b[i]));
    }
    return worst;
}

// Test-side matrix product, independent of qec::matmul.
inline Operator naive_matmul(const Operator& a, const Operator& b) {
    Operator out(a.dim());
    for (int i = 0; i < a.dim(); ++i) {
        for (int j = 0; j < a.dim(); ++j) {
            cplx acc = 0.0;
            for (int k = 0; k < a.dim(); ++k) acc += a.at(i, k) * b.at(k, j);
            out.at(i, j) = acc;
        }
    }
    return out;
}

// Test-side inner product by direct summation.
inline cplx naive_inner(const StateVec& a, const StateVec& b) {
    cplx acc = 0.0;
    for (std::size_t i = 0; i < a.dim(); ++i) acc += std::conj(a[i]) * b[i];
    return acc;
}

inline std::vector<cplx> random_cvec(std::size_t n, std::mt19937_64& rng) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    std::vector<cplx> v(n);
    for (auto& z : v) z = {gauss(rng), gauss(rng)};
    return v;
}

} // namespace qec::test
