#pragma once

#include "qec/config.hpp"
#include "qec/operators.hpp"

#include <cstddef>
#include <span>
#include <vector>

namespace qec {

// Dense amplitude vector over `registers` qudits of `levels` states each.
// Basis convention: |d0 d1 ... d_{n-1}> lives at index sum_i d_i * N^(n-1-i),
// i.e. register 0 is the most significant digit.
class StateVec {
  public:
    StateVec(int levels, int registers, std::size_t amp_cap = kDefaultAmpCap);

    static StateVec basis(int levels, int registers, std::span<const int> digits,
                          std::size_t amp_cap = kDefaultAmpCap);
    static StateVec basis_index(int levels, int registers, std::size_t index,
                                std::size_t amp_cap = kDefaultAmpCap);

    int levels() const { return levels_; }
    int registers() const { return registers_; }
    std::size_t dim() const { return amps_.size(); }

    std::span<cplx> amps() { return amps_; }
    std::span<const cplx> amps() const { return amps_; }
    cplx& operator[](std::size_t i) { return amps_[i]; }
    const cplx& operator[](std::size_t i) const { return amps_[i]; }

    double norm_sq() const;
    double norm() const;
    bool is_normalized(double tol = kCheckTol) const;
    // Scales to unit norm; rejects a numerically zero vector.
    void normalize();

    // N^(n-1-reg): the index step that increments this register's digit.
    std::size_t stride(int reg) const;
    int digit(std::size_t index, int reg) const;

  private:
    int levels_ = 0;
    int registers_ = 0;
    std::vector<cplx> amps_;
};

// Checked N^n with an amplitude cap; rejects overflow and cap violations.
std::size_t state_dim(int levels, int registers, std::size_t amp_cap = kDefaultAmpCap);

// (I x ... x op x ... x I)|state> with op at `reg`.  op must be N x N.
StateVec apply_local(const StateVec& state, const Operator& op, int reg);

// Two-register analog: op is N^2 x N^2 acting on the ordered digit pair
// (reg_a, reg_b), i.e. basis |a,b> at column a*N+b.
StateVec apply_local_pair(const StateVec& state, const Operator& op, int reg_a,
                          int reg_b);

cplx inner_product(const StateVec& a, const StateVec& b);

// |<a|b>|; global phase is unobservable so this is the recovery-success
// metric.  Inputs must be normalized unless allow_unnormalized.
double fidelity_up_to_phase(const StateVec& a, const StateVec& b,
                            bool allow_unnormalized = false);

// Kronecker product |a> x |b> respecting the big-endian digit convention.
StateVec tensor(const StateVec& a, const StateVec& b);

} // namespace qec
