#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qec/error_model.hpp"
#include "qec/io.hpp"
#include "qec/kernels.hpp"
#include "qec/random.hpp"
#include "qec/state.hpp"
#include "test_util.hpp"

#include <array>
#include <cstdio>
#include <fstream>
#include <random>
#include <sstream>

using namespace qec;

TEST_CASE("basis indexing follows the big-endian digit convention") {
    // |01> for N=2, n=2 sits at index 1; |10> at index 2.
    const std::array<int, 2> d01{0, 1};
    const std::array<int, 2> d10{1, 0};
    CHECK(StateVec::basis(2, 2, d01)[1] == cplx{1.0});
    CHECK(StateVec::basis(2, 2, d10)[2] == cplx{1.0});
    const std::size_t idx = 2 * 27 + 1 * 9 + 0 * 3 + 2; // digits (2, 1, 0, 2)
    const StateVec s = StateVec::basis_index(3, 4, idx);
    CHECK(s[idx] == cplx{1.0});
    CHECK(s.digit(idx, 0) == 2);
    CHECK(s.digit(idx, 1) == 1);
    CHECK(s.digit(idx, 2) == 0);
    CHECK(s.digit(idx, 3) == 2);
}

TEST_CASE("apply_local identity and single-register errors") {
    const StateVec zero = StateVec::basis_index(2, 1, 0);
    CHECK(test::max_amp_diff(apply_local(zero, Operator::identity(2), 0), zero) == 0.0);

    // P_01 interchanges |0> and |1>.
    const StateVec one = StateVec::basis_index(2, 1, 1);
    CHECK(test::max_amp_diff(apply_local(zero, make_P(0, 1, 2), 0), one) <= 1e-15);

    // R_1 on |01> at register 1 flips the sign.
    const std::array<int, 2> d01{0, 1};
    const StateVec s01 = StateVec::basis(2, 2, d01);
    const StateVec flipped = apply_local(s01, make_R(1, 2), 1);
    CHECK(std::abs(flipped[1] - cplx{-1.0}) <= 1e-15);
    CHECK(flipped.norm_sq() == doctest::Approx(1.0));
}

TEST_CASE("apply_local rejects shape errors") {
    const StateVec s(2, 2);
    CHECK_THROWS_AS(apply_local(s, Operator::identity(3), 0), std::invalid_argument);
    CHECK_THROWS_AS(apply_local(s, Operator::identity(2), 2), std::invalid_argument);
    CHECK_THROWS_AS(apply_local(s, Operator::identity(2), -1), std::invalid_argument);
}

TEST_CASE("inner product basics and random-state norm") {
    const StateVec zero = StateVec::basis_index(2, 1, 0);
    const StateVec one = StateVec::basis_index(2, 1, 1);
    CHECK(inner_product(zero, zero) == cplx{1.0});
    CHECK(inner_product(zero, one) == cplx{0.0});
    CHECK_THROWS_AS(inner_product(zero, StateVec(2, 2)), std::invalid_argument);
    CHECK_THROWS_AS(inner_product(zero, StateVec(3, 1)), std::invalid_argument);

    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 20; ++trial) {
        const StateVec psi = random_state(3, 4, rng);
        CHECK(std::abs(inner_product(psi, psi) - cplx{1.0}) <= 1e-10);
    }
}

TEST_CASE("fidelity is phase invariant and rejects unnormalized input") {
    std::mt19937_64 rng(8);
    const StateVec psi = random_state(2, 3, rng);
    CHECK(fidelity_up_to_phase(psi, psi) == doctest::Approx(1.0));

    StateVec rotated = psi;
    kernels::active().cscale(std::polar(1.0, 1.234), rotated.amps().data(), rotated.dim());
    CHECK(fidelity_up_to_phase(psi, rotated) == doctest::Approx(1.0).epsilon(1e-10));

    const StateVec zero = StateVec::basis_index(2, 1, 0);
    const StateVec one = StateVec::basis_index(2, 1, 1);
    CHECK(fidelity_up_to_phase(zero, one) == doctest::Approx(0.0));

    StateVec big = psi;
    kernels::active().cscale(2.0, big.amps().data(), big.dim());
    CHECK_THROWS_AS(fidelity_up_to_phase(psi, big), std::invalid_argument);
    CHECK(fidelity_up_to_phase(psi, big, true) == doctest::Approx(2.0).epsilon(1e-10));
}

TEST_CASE("tensor product respects index convention and bilinearity") {
    const StateVec zero = StateVec::basis_index(2, 1, 0);
    const StateVec one = StateVec::basis_index(2, 1, 1);
    const StateVec zo = tensor(zero, one);
    CHECK(zo.dim() == 4);
    CHECK(zo[1] == cplx{1.0});

    StateVec plus(2, 1);
    plus[0] = plus[1] = 1.0 / std::sqrt(2.0);
    const StateVec pz = tensor(plus, zero);
    CHECK(std::abs(pz[0] - cplx{1.0 / std::sqrt(2.0)}) <= 1e-15);
    CHECK(std::abs(pz[2] - cplx{1.0 / std::sqrt(2.0)}) <= 1e-15);
    CHECK(pz[1] == cplx{0.0});

    CHECK_THROWS_AS(tensor(zero, StateVec(3, 1)), std::invalid_argument);
}

TEST_CASE("tensor associativity by direct index arithmetic") {
    std::mt19937_64 rng(9);
    const StateVec a = random_state(3, 1, rng);
    const StateVec b = random_state(3, 2, rng);
    const StateVec c = random_state(3, 1, rng);
    const StateVec left = tensor(tensor(a, b), c);
    const StateVec right = tensor(a, tensor(b, c));
    CHECK(test::max_amp_diff(left, right) <= 1e-15);
    // Oracle: amplitude at (i, j, k) must be a_i * b_j * c_k.
    for (std::size_t i = 0; i < a.dim(); ++i) {
        for (std::size_t j = 0; j < b.dim(); ++j) {
            for (std::size_t k = 0; k < c.dim(); ++k) {
                const std::size_t idx = (i * b.dim() + j) * c.dim() + k;
                CHECK(std::abs(left[idx] - a[i] * b[j] * c[k]) <= 1e-15);
            }
        }
    }
}

TEST_CASE("apply_local properties: unitarity, composition, commutation, bilinearity") {
    std::mt19937_64 rng(10);
    const int N = 3;
    const StateVec psi = random_state(N, 3, rng);

    const Operator u = random_unitary(N, rng);
    CHECK(u.unitarity_deviation() <= 1e-12);
    CHECK(std::abs(apply_local(psi, u, 1).norm_sq() - 1.0) <= 1e-10);

    // Composition on one register equals the matrix product.
    const Operator a = random_matrix(N, rng);
    const Operator b = random_matrix(N, rng);
    const StateVec seq = apply_local(apply_local(psi, a, 2), b, 2);
    const StateVec prod = apply_local(psi, test::naive_matmul(b, a), 2);
    CHECK(test::max_amp_diff(seq, prod) <= 1e-12);

    // Application on distinct registers commutes.
    const StateVec ab = apply_local(apply_local(psi, a, 0), b, 2);
    const StateVec ba = apply_local(apply_local(psi, b, 2), a, 0);
    CHECK(test::max_amp_diff(ab, ba) <= 1e-12);

    // Tensor then apply on register 0 equals apply-to-left-factor then tensor.
    const StateVec left = random_state(N, 1, rng);
    const StateVec right = random_state(N, 2, rng);
    const StateVec route1 = apply_local(tensor(left, right), a, 0);
    const StateVec route2 = tensor(apply_local(left, a, 0), right);
    CHECK(test::max_amp_diff(route1, route2) <= 1e-12);
}

TEST_CASE("apply_local_pair agrees with tensored operator on adjacent registers") {
    std::mt19937_64 rng(11);
    const int N = 2;
    const StateVec psi = random_state(N, 3, rng);
    const Operator a = random_matrix(N, rng);
    const Operator b = random_matrix(N, rng);
    // A on reg 1, B on reg 2 == (A x B) on the pair (1, 2).
    const StateVec separate = apply_local(apply_local(psi, a, 1), b, 2);
    const StateVec paired = apply_local_pair(psi, tensor_op(a, b), 1, 2);
    CHECK(test::max_amp_diff(separate, paired) <= 1e-12);
    // Also with the pair given in swapped order (B x A) on (2, 1).
    const StateVec swapped = apply_local_pair(psi, tensor_op(b, a), 2, 1);
    CHECK(test::max_amp_diff(separate, swapped) <= 1e-12);

    CHECK_THROWS_AS(apply_local_pair(psi, tensor_op(a, b), 1, 1), std::invalid_argument);
}

TEST_CASE("state dimension cap is enforced") {
    CHECK(state_dim(5, 9) == 1953125);
    CHECK_THROWS_AS(state_dim(6, 9), std::invalid_argument);
    CHECK(state_dim(6, 9, 20'000'000) == 10077696);
    CHECK_THROWS_AS(StateVec(2, 1, 1), std::invalid_argument);
}

TEST_CASE("state file round-trip preserves bytes and values") {
    std::mt19937_64 rng(12);
    const StateVec psi = random_state(3, 2, rng);
    const std::string path = "tensor_core_state_roundtrip.json";
    write_state_file(psi, path);

    const StateVec back = read_state_file(path);
    CHECK(back.levels() == psi.levels());
    CHECK(back.registers() == psi.registers());
    CHECK(test::max_amp_diff(back, psi) == 0.0); // 17 digits pin the doubles

    // Rewriting the parsed state reproduces the file byte for byte.
    const std::string path2 = "tensor_core_state_roundtrip2.json";
    write_state_file(back, path2);
    std::ifstream f1(path), f2(path2);
    std::stringstream s1, s2;
    s1 << f1.rdbuf();
    s2 << f2.rdbuf();
    CHECK(s1.str() == s2.str());
    CHECK(s1.str().find("\"N\"") != std::string::npos);
    std::remove(path.c_str());
    std::remove(path2.c_str());
}

TEST_CASE("malformed state JSON is rejected") {
    ojson j;
    j["N"] = 2;
    j["registers"] = 2;
    j["amplitudes"] = ojson::array({ojson::array({1.0, 0.0})}); // wrong count
    CHECK_THROWS_AS(state_from_json(j), std::invalid_argument);
    j.erase("amplitudes");
    CHECK_THROWS_AS(state_from_json(j), std::invalid_argument);
}
