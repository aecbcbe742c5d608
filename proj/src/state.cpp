#include "qec/state.hpp"

#include "qec/kernels.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace qec {

std::size_t state_dim(int levels, int registers, std::size_t amp_cap) {
    if (levels < 2) throw std::invalid_argument("state_dim: levels must be >= 2");
    if (registers < 1) throw std::invalid_argument("state_dim: registers must be >= 1");
    std::size_t dim = 1;
    for (int i = 0; i < registers; ++i) {
        if (dim > amp_cap / static_cast<std::size_t>(levels)) {
            throw std::invalid_argument(
                "state_dim: N^n = " + std::to_string(levels) + "^" +
                std::to_string(registers) + " exceeds the amplitude cap of " +
                std::to_string(amp_cap));
        }
        dim *= static_cast<std::size_t>(levels);
    }
    return dim;
}

StateVec::StateVec(int levels, int registers, std::size_t amp_cap)
    : levels_(levels), registers_(registers), amps_(state_dim(levels, registers, amp_cap)) {}

StateVec StateVec::basis(int levels, int registers, std::span<const int> digits,
                         std::size_t amp_cap) {
    if (static_cast<int>(digits.size()) != registers) {
        throw std::invalid_argument("StateVec::basis: digit count != registers");
    }
    std::size_t index = 0;
    for (int d : digits) {
        if (d < 0 || d >= levels) {
            throw std::invalid_argument("StateVec::basis: digit out of range");
        }
        index = index * static_cast<std::size_t>(levels) + static_cast<std::size_t>(d);
    }
    return basis_index(levels, registers, index, amp_cap);
}

StateVec StateVec::basis_index(int levels, int registers, std::size_t index,
                               std::size_t amp_cap) {
    StateVec s(levels, registers, amp_cap);
    if (index >= s.dim()) {
        throw std::invalid_argument("StateVec::basis_index: index out of range");
    }
    s.amps_[index] = 1.0;
    return s;
}

double StateVec::norm_sq() const {
    return kernels::active().norm_sq(amps_.data(), amps_.size());
}

double StateVec::norm() const { return std::sqrt(norm_sq()); }

bool StateVec::is_normalized(double tol) const {
    return std::abs(norm_sq() - 1.0) <= tol;
}

void StateVec::normalize() {
    const double n = norm();
    if (n < 1e-12) {
        throw std::invalid_argument("StateVec::normalize: vector is numerically zero");
    }
    kernels::active().cscale(1.0 / n, amps_.data(), amps_.size());
}

std::size_t StateVec::stride(int reg) const {
    std::size_t s = 1;
    for (int i = registers_ - 1 - reg; i > 0; --i) s *= static_cast<std::size_t>(levels_);
    return s;
}

int StateVec::digit(std::size_t index, int reg) const {
    return static_cast<int>((index / stride(reg)) % static_cast<std::size_t>(levels_));
}

namespace {

void check_register(const StateVec& state, int reg, const char* who) {
    if (reg < 0 || reg >= state.registers()) {
        throw std::invalid_argument(std::string(who) + ": register " + std::to_string(reg) +
                                    " out of range for " + std::to_string(state.registers()) +
                                    " registers");
    }
}

} // namespace

StateVec apply_local(const StateVec& state, const Operator& op, int reg) {
    check_register(state, reg, "apply_local");
    const int n_levels = state.levels();
    if (op.dim() != n_levels) {
        throw std::invalid_argument("apply_local: operator dim " + std::to_string(op.dim()) +
                                    " does not match register levels " +
                                    std::to_string(n_levels));
    }
    const auto& kern = kernels::active();
    StateVec out(state.levels(), state.registers(), state.dim());
    const std::size_t stride = state.stride(reg);
    const std::size_t group = stride * static_cast<std::size_t>(n_levels);
    const cplx* in = state.amps().data();
    cplx* dst = out.amps().data();
    if (stride >= 16 || n_levels > 32) {
        // Column slices are long contiguous runs: accumulate with caxpy.
        for (std::size_t base = 0; base < state.dim(); base += group) {
            for (int row = 0; row < n_levels; ++row) {
                cplx* out_slice = dst + base + static_cast<std::size_t>(row) * stride;
                for (int col = 0; col < n_levels; ++col) {
                    const cplx a = op.at(row, col);
                    if (a == cplx{}) continue;
                    kern.caxpy(a, in + base + static_cast<std::size_t>(col) * stride, out_slice,
                               stride);
                }
            }
        }
        return out;
    }
    // Short strides: gather the N strided values and multiply in place.
    double xr[32], xi[32];
    for (std::size_t base = 0; base < state.dim(); base += group) {
        for (std::size_t i = 0; i < stride; ++i) {
            const cplx* src = in + base + i;
            for (int col = 0; col < n_levels; ++col) {
                xr[col] = src[static_cast<std::size_t>(col) * stride].real();
                xi[col] = src[static_cast<std::size_t>(col) * stride].imag();
            }
            cplx* out_col = dst + base + i;
            for (int row = 0; row < n_levels; ++row) {
                double re = 0.0, im = 0.0;
                for (int col = 0; col < n_levels; ++col) {
                    const cplx a = op.at(row, col);
                    re += a.real() * xr[col] - a.imag() * xi[col];
                    im += a.real() * xi[col] + a.imag() * xr[col];
                }
                out_col[static_cast<std::size_t>(row) * stride] = {re, im};
            }
        }
    }
    return out;
}

StateVec apply_local_pair(const StateVec& state, const Operator& op, int reg_a, int reg_b) {
    check_register(state, reg_a, "apply_local_pair");
    check_register(state, reg_b, "apply_local_pair");
    if (reg_a == reg_b) {
        throw std::invalid_argument("apply_local_pair: registers must differ");
    }
    const int n_levels = state.levels();
    const int dd = n_levels * n_levels;
    if (op.dim() != dd) {
        throw std::invalid_argument("apply_local_pair: operator dim " +
                                    std::to_string(op.dim()) + " != levels^2 = " +
                                    std::to_string(dd));
    }
    const std::size_t sa = state.stride(reg_a);
    const std::size_t sb = state.stride(reg_b);
    StateVec out(state.levels(), state.registers(), state.dim());
    std::vector<cplx> in_block(static_cast<std::size_t>(dd));
    // Visit each orbit once, at its representative with both digits zero.
    for (std::size_t x = 0; x < state.dim(); ++x) {
        if (state.digit(x, reg_a) != 0 || state.digit(x, reg_b) != 0) continue;
        for (int a = 0; a < n_levels; ++a) {
            for (int b = 0; b < n_levels; ++b) {
                in_block[static_cast<std::size_t>(a * n_levels + b)] =
                    state[x + static_cast<std::size_t>(a) * sa + static_cast<std::size_t>(b) * sb];
            }
        }
        for (int row = 0; row < dd; ++row) {
            cplx acc = 0.0;
            for (int col = 0; col < dd; ++col) {
                const cplx m = op.at(row, col);
                if (m == cplx{}) continue;
                acc += m * in_block[static_cast<std::size_t>(col)];
            }
            const int a = row / n_levels, b = row % n_levels;
            out[x + static_cast<std::size_t>(a) * sa + static_cast<std::size_t>(b) * sb] = acc;
        }
    }
    return out;
}

cplx inner_product(const StateVec& a, const StateVec& b) {
    if (a.levels() != b.levels() || a.registers() != b.registers()) {
        throw std::invalid_argument("inner_product: shape mismatch");
    }
    return kernels::active().cdot(a.amps().data(), b.amps().data(), a.dim());
}

double fidelity_up_to_phase(const StateVec& a, const StateVec& b, bool allow_unnormalized) {
    if (!allow_unnormalized && (!a.is_normalized() || !b.is_normalized())) {
        throw std::invalid_argument(
            "fidelity_up_to_phase: inputs must be normalized (or pass allow_unnormalized)");
    }
    return std::abs(inner_product(a, b));
}

StateVec tensor(const StateVec& a, const StateVec& b) {
    if (a.levels() != b.levels()) {
        throw std::invalid_argument("tensor: levels mismatch");
    }
    if (b.dim() != 0 && a.dim() > static_cast<std::size_t>(-1) / b.dim()) {
        throw std::invalid_argument("tensor: result dimension overflows");
    }
    StateVec out(a.levels(), a.registers() + b.registers(), a.dim() * b.dim());
    const std::size_t db = b.dim();
    for (std::size_t i = 0; i < a.dim(); ++i) {
        const cplx ai = a[i];
        if (ai == cplx{}) continue;
        kernels::active().caxpy(ai, b.amps().data(), out.amps().data() + i * db, db);
    }
    return out;
}

} // namespace qec
