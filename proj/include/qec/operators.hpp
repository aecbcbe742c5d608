#pragma once

#include "qec/config.hpp"

#include <cstddef>
#include <vector>

namespace qec {

// Dense square complex matrix, row-major.  Error operators need not be
// unitary; anything nonzero is admissible.
class Operator {
  public:
    Operator() = default;
    explicit Operator(int dim) : dim_(dim), m_(static_cast<std::size_t>(dim) * dim) {}
    Operator(int dim, std::vector<cplx> entries);

    static Operator identity(int dim);

    int dim() const { return dim_; }
    cplx& at(int row, int col) { return m_[static_cast<std::size_t>(row) * dim_ + col]; }
    const cplx& at(int row, int col) const {
        return m_[static_cast<std::size_t>(row) * dim_ + col];
    }
    const std::vector<cplx>& entries() const { return m_; }

    Operator dagger() const;
    bool is_zero(double tol = 0.0) const;
    // max |(U^dag U - I)_{ij}|
    double unitarity_deviation() const;
    bool is_unitary(double tol = kCheckTol) const { return unitarity_deviation() <= tol; }

  private:
    int dim_ = 0;
    std::vector<cplx> m_;
};

Operator matmul(const Operator& a, const Operator& b);
Operator tensor_op(const Operator& a, const Operator& b);
double max_abs_diff(const Operator& a, const Operator& b);

} // namespace qec
