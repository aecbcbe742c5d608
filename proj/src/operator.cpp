#include "qec/operators.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace qec {

Operator::Operator(int dim, std::vector<cplx> entries) : dim_(dim), m_(std::move(entries)) {
    if (dim < 1 || m_.size() != static_cast<std::size_t>(dim) * dim) {
        throw std::invalid_argument("Operator: entry count does not match dim*dim");
    }
}

Operator Operator::identity(int dim) {
    Operator op(dim);
    for (int i = 0; i < dim; ++i) op.at(i, i) = 1.0;
    return op;
}

Operator Operator::dagger() const {
    Operator out(dim_);
    for (int r = 0; r < dim_; ++r) {
        for (int c = 0; c < dim_; ++c) {
            out.at(c, r) = std::conj(at(r, c));
        }
    }
    return out;
}

bool Operator::is_zero(double tol) const {
    return std::all_of(m_.begin(), m_.end(),
                       [tol](const cplx& z) { return std::abs(z) <= tol; });
}

double Operator::unitarity_deviation() const {
    double worst = 0.0;
    for (int i = 0; i < dim_; ++i) {
        for (int j = 0; j < dim_; ++j) {
            cplx s = 0.0;
            for (int k = 0; k < dim_; ++k) {
                s += std::conj(at(k, i)) * at(k, j);
            }
            if (i == j) s -= 1.0;
            worst = std::max(worst, std::abs(s));
        }
    }
    return worst;
}

Operator matmul(const Operator& a, const Operator& b) {
    if (a.dim() != b.dim()) {
        throw std::invalid_argument("matmul: dimension mismatch");
    }
    const int d = a.dim();
    Operator out(d);
    for (int i = 0; i < d; ++i) {
        for (int k = 0; k < d; ++k) {
            const cplx aik = a.at(i, k);
            if (aik == cplx{}) continue;
            for (int j = 0; j < d; ++j) {
                out.at(i, j) += aik * b.at(k, j);
            }
        }
    }
    return out;
}

Operator tensor_op(const Operator& a, const Operator& b) {
    const int da = a.dim(), db = b.dim();
    Operator out(da * db);
    for (int i = 0; i < da; ++i) {
        for (int j = 0; j < da; ++j) {
            const cplx aij = a.at(i, j);
            if (aij == cplx{}) continue;
            for (int k = 0; k < db; ++k) {
                for (int l = 0; l < db; ++l) {
                    out.at(i * db + k, j * db + l) = aij * b.at(k, l);
                }
            }
        }
    }
    return out;
}

double max_abs_diff(const Operator& a, const Operator& b) {
    if (a.dim() != b.dim()) {
        throw std::invalid_argument("max_abs_diff: dimension mismatch");
    }
    double worst = 0.0;
    for (std::size_t i = 0; i < a.entries().size(); ++i) {
        worst = std::max(worst, std::abs(a.entries()[i] - b.entries()[i]));
    }
    return worst;
}

} // namespace qec
