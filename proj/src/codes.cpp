#include "qec/codes.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace qec {

namespace {

void require_single_register(const StateVec& logical, const char* who) {
    if (logical.registers() != 1) {
        throw std::invalid_argument(std::string(who) + ": expected a single-register state, got " +
                                    std::to_string(logical.registers()) + " registers");
    }
}

cplx omega_pow(int N, long long e) {
    const double angle = 2.0 * std::numbers::pi * static_cast<double>(e) / N;
    return {std::cos(angle), std::sin(angle)};
}

} // namespace

double code_gram_deviation(const CodeSpec& code) {
    double worst = 0.0;
    for (std::size_t i = 0; i < code.codewords.size(); ++i) {
        for (std::size_t j = 0; j < code.codewords.size(); ++j) {
            cplx g = inner_product(code.codewords[i], code.codewords[j]);
            if (i == j) g -= 1.0;
            worst = std::max(worst, std::abs(g));
        }
    }
    return worst;
}

cplx root_of_unity(int N) {
    if (N < 2) throw std::invalid_argument("root_of_unity: N must be >= 2");
    return omega_pow(N, 1);
}

cplx character_sum(int N, long long k) {
    if (N < 2) throw std::invalid_argument("character_sum: N must be >= 2");
    cplx sum = 0.0;
    for (int m = 0; m < N; ++m) {
        sum += omega_pow(N, static_cast<long long>(m) * k);
    }
    return sum;
}

StateVec encode_flip(const StateVec& logical) {
    require_single_register(logical, "encode_flip");
    const int N = logical.levels();
    StateVec out(N, 3);
    const std::size_t rep = static_cast<std::size_t>(N) * N + N + 1; // index of |iii>
    for (int i = 0; i < N; ++i) {
        out[static_cast<std::size_t>(i) * rep] = logical[static_cast<std::size_t>(i)];
    }
    return out;
}

CodeSpec pair_phase_code(int i, int N) {
    if (N < 2) throw std::invalid_argument("pair_phase_code: N must be >= 2");
    if (i < 1 || i > N - 1) {
        throw std::invalid_argument("pair_phase_code: i must satisfy 1 <= i <= N-1");
    }
    if (i == 1) {
        throw std::invalid_argument(
            "pair_phase_code: i = 1 degenerates (the pair kets |1> and |i> coincide)");
    }
    CodeSpec code;
    code.levels = N;
    code.registers = 3;
    const double inv_sqrt8 = 1.0 / std::sqrt(8.0);
    for (int m = 0; m < N; ++m) {
        StateVec w(N, 3);
        if (m == 1 || m == i) {
            // (|1> +- |i>)^x3 / sqrt(8): eight terms with digits in {1, i}.
            for (int a = 0; a < 2; ++a) {
                for (int b = 0; b < 2; ++b) {
                    for (int c = 0; c < 2; ++c) {
                        const int da = a ? i : 1, db = b ? i : 1, dc = c ? i : 1;
                        const std::size_t idx =
                            (static_cast<std::size_t>(da) * N + static_cast<std::size_t>(db)) * N +
                            static_cast<std::size_t>(dc);
                        const bool negate = (m == i) && ((a + b + c) % 2 == 1);
                        w[idx] = negate ? -inv_sqrt8 : inv_sqrt8;
                    }
                }
            }
        } else {
            const std::size_t rep = static_cast<std::size_t>(N) * N + N + 1;
            w[static_cast<std::size_t>(m) * rep] = 1.0;
        }
        code.codewords.push_back(std::move(w));
    }
    return code;
}

StateVec encode_phase(const StateVec& logical) {
    require_single_register(logical, "encode_phase");
    const int N = logical.levels();
    const double scale = 1.0 / (static_cast<double>(N) * std::sqrt(static_cast<double>(N)));
    StateVec out(N, 3);
    std::size_t idx = 0;
    for (int k = 0; k < N; ++k) {
        for (int p = 0; p < N; ++p) {
            for (int q = 0; q < N; ++q, ++idx) {
                cplx amp = 0.0;
                for (int m = 0; m < N; ++m) {
                    const cplx c = logical[static_cast<std::size_t>(m)];
                    if (c == cplx{}) continue;
                    amp += c * omega_pow(N, static_cast<long long>(k + p + q) * m);
                }
                out[idx] = scale * amp;
            }
        }
    }
    return out;
}

StateVec encode_nine(const StateVec& logical) {
    require_single_register(logical, "encode_nine");
    const int N = logical.levels();
    const double scale = 1.0 / (static_cast<double>(N) * std::sqrt(static_cast<double>(N)));
    StateVec out(N, 9);
    // |kkkpppqqq| index: k, p, q each repeated over one block of three.
    const std::size_t s6 = out.stride(2);                          // N^6
    const std::size_t block_k = out.stride(0) + out.stride(1) + s6; // digit k in regs 0..2
    const std::size_t block_p = out.stride(3) + out.stride(4) + out.stride(5);
    const std::size_t block_q = out.stride(6) + out.stride(7) + out.stride(8);
    for (int k = 0; k < N; ++k) {
        for (int p = 0; p < N; ++p) {
            for (int q = 0; q < N; ++q) {
                cplx amp = 0.0;
                for (int m = 0; m < N; ++m) {
                    const cplx c = logical[static_cast<std::size_t>(m)];
                    if (c == cplx{}) continue;
                    amp += c * omega_pow(N, static_cast<long long>(k + p + q) * m);
                }
                const std::size_t idx = static_cast<std::size_t>(k) * block_k +
                                        static_cast<std::size_t>(p) * block_p +
                                        static_cast<std::size_t>(q) * block_q;
                out[idx] = scale * amp;
            }
        }
    }
    return out;
}

CodeSpec build_nine_code(int N, std::size_t amp_cap) {
    state_dim(N, 9, amp_cap); // reject oversized N up front
    CodeSpec code;
    code.levels = N;
    code.registers = 9;
    for (int m = 0; m < N; ++m) {
        StateVec logical(N, 1);
        logical[static_cast<std::size_t>(m)] = 1.0;
        code.codewords.push_back(encode_nine(logical));
    }
    return code;
}

Operator dft_gate(int N) {
    if (N < 2) throw std::invalid_argument("dft_gate: N must be >= 2");
    Operator f(N);
    const double scale = 1.0 / std::sqrt(static_cast<double>(N));
    for (int k = 0; k < N; ++k) {
        for (int m = 0; m < N; ++m) {
            f.at(k, m) = scale * omega_pow(N, static_cast<long long>(k) * m);
        }
    }
    return f;
}

Operator copy_gate(int N) {
    if (N < 2) throw std::invalid_argument("copy_gate: N must be >= 2");
    Operator g(N * N);
    for (int a = 0; a < N; ++a) {
        for (int b = 0; b < N; ++b) {
            g.at(a * N + (a + b) % N, a * N + b) = 1.0;
        }
    }
    return g;
}

StateVec encode_nine_by_circuit(const StateVec& logical) {
    require_single_register(logical, "encode_nine_by_circuit");
    const int N = logical.levels();

    // |m> -> |m00000000>
    StateVec state(N, 9);
    const std::size_t s0 = state.stride(0);
    for (int m = 0; m < N; ++m) {
        state[static_cast<std::size_t>(m) * s0] = logical[static_cast<std::size_t>(m)];
    }

    const Operator cpy = copy_gate(N);
    const Operator dft = dft_gate(N);

    // Stage 1: spread the logical digit to the block leads: |m00m00m00>.
    state = apply_local_pair(state, cpy, 0, 3);
    state = apply_local_pair(state, cpy, 0, 6);
    // Stage 2: DFT each lead.
    for (int lead : {0, 3, 6}) {
        state = apply_local(state, dft, lead);
    }
    // Stage 3: fill each block from its lead: |kkkpppqqq>.
    for (int lead : {0, 3, 6}) {
        state = apply_local_pair(state, cpy, lead, lead + 1);
        state = apply_local_pair(state, cpy, lead, lead + 2);
    }
    return state;
}

DimensionBound dimension_bound(int N, int n) {
    if (N < 2) throw std::invalid_argument("dimension_bound: N must be >= 2");
    if (n < 1) throw std::invalid_argument("dimension_bound: n must be >= 1");
    DimensionBound b;
    const std::uint64_t nn = static_cast<std::uint64_t>(N);
    b.lhs = (1 + (nn * nn - 1) * static_cast<std::uint64_t>(n)) * nn;
    std::uint64_t rhs = 1;
    for (int i = 0; i < n; ++i) {
        if (rhs > UINT64_MAX / nn) {
            b.rhs_overflow = true;
            break;
        }
        rhs *= nn;
    }
    if (!b.rhs_overflow) b.rhs = rhs;
    b.satisfied = b.rhs_overflow || b.lhs <= b.rhs;
    b.perfect = !b.rhs_overflow && b.lhs == b.rhs;
    return b;
}

} // namespace qec
