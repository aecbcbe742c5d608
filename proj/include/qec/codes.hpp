#pragma once

#include "qec/config.hpp"
#include "qec/operators.hpp"
#include "qec/state.hpp"

#include <cstdint>
#include <vector>

namespace qec {

// A concrete code: the N encoded images of the logical basis states.
struct CodeSpec {
    int levels = 0;
    int registers = 0;
    std::vector<StateVec> codewords; // codewords[m] encodes |m>
};

// Largest pairwise deviation of the codeword Gram matrix from the identity.
double code_gram_deviation(const CodeSpec& code);

// omega_N = exp(2*pi*i/N), the canonical primitive N-th root of unity.
cplx root_of_unity(int N);

// sum_{m=0}^{N-1} omega_N^{mk}: N when k == 0 (mod N), else 0.  Computed by
// direct summation; the congruence form is what tests assert.
cplx character_sum(int N, long long k);

// |i> -> |iii| repetition over one block; corrects level flips.
StateVec encode_flip(const StateVec& logical);

// The three-register code correcting the single phase error R_i:
// |1> and |i> map to (|1> +- |i>)^x3 / sqrt(8), every other |j> to |jjj>.
// i = 1 is rejected: the pair {|1>, |i>} degenerates.
CodeSpec pair_phase_code(int i, int N);

// |m> -> N^(-3/2) sum_{k,p,q} omega^{(k+p+q)m} |kpq>; corrects phase errors.
StateVec encode_phase(const StateVec& logical);

// Nine-register codeword map |m> -> N^(-3/2) sum omega^{(k+p+q)m} |kkkpppqqq>
// (the phase code with each register expanded by the flip code), extended
// linearly to an arbitrary single-register state.
StateVec encode_nine(const StateVec& logical);

// All N codewords of the nine-register code.
CodeSpec build_nine_code(int N, std::size_t amp_cap = kDefaultAmpCap);

// F_{km} = omega^{km} / sqrt(N): |m> -> N^(-1/2) sum_k omega^{km} |k>.
Operator dft_gate(int N);

// Two-register gate |a,b> -> |a, (a+b) mod N>; CNOT at N = 2, and a copy
// on a zeroed target for any N.
Operator copy_gate(int N);

// Circuit-route encoder: copy register 0 to 3 and 6, DFT registers 0/3/6,
// then copy each of 0/3/6 into its two block neighbors.  Agrees with
// encode_nine entrywise.
StateVec encode_nine_by_circuit(const StateVec& logical);

// Room condition [1 + (N^2-1)n] N <= N^n for a single-error code on n
// registers of N levels; equality makes the code perfect.
struct DimensionBound {
    std::uint64_t lhs = 0;
    std::uint64_t rhs = 0;    // valid only when !rhs_overflow
    bool rhs_overflow = false; // N^n exceeded uint64 (bound trivially satisfied)
    bool satisfied = false;
    bool perfect = false;
};

DimensionBound dimension_bound(int N, int n);

} // namespace qec
