#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qec/codes.hpp"
#include "qec/io.hpp"
#include "qec/kl.hpp"
#include "qec/random.hpp"

#include <cmath>
#include <random>

using namespace qec;

namespace {

CodeSpec flip_code(int N) {
    CodeSpec code;
    code.levels = N;
    code.registers = 3;
    for (int m = 0; m < N; ++m) {
        code.codewords.push_back(
            encode_flip(StateVec::basis_index(N, 1, static_cast<std::size_t>(m))));
    }
    return code;
}

ErrorChain single(ErrorLabel label, int reg) { return ErrorChain{{PlacedError{label, reg}}}; }

} // namespace

TEST_CASE("error set counting: 1 + registers*(N^2 - 1)") {
    CHECK(single_register_error_set(2, 9).size() == 28);
    CHECK(single_register_error_set(3, 9).size() == 73);
    CHECK(single_register_error_set(4, 9).size() == 136);
    CHECK(single_register_error_set(3, 3).size() == 25);
}

TEST_CASE("every emitted label constructs a unitary") {
    for (int N : {2, 3, 4}) {
        for (const auto& chain : single_register_error_set(N, 9)) {
            REQUIRE(chain.factors.size() == 1);
            CHECK(chain.factors[0].label.to_operator(N).unitarity_deviation() <= 1e-15);
        }
    }
}

TEST_CASE("identity pair restates orthonormality: lambda = 1, no violation") {
    const CodeSpec code = build_nine_code(2);
    const KLReport report = kl_check(code, {single(ErrorLabel::identity(), 0)});
    CHECK(report.passed);
    CHECK(std::abs(report.lambda[0][0] - cplx{1.0}) <= 1e-10);
    CHECK(report.max_offdiag_violation <= 1e-10);
    CHECK(report.max_lambda_inconsistency <= 1e-10);
}

TEST_CASE("bare flip code handles level flips but not phase errors") {
    const CodeSpec code = flip_code(2);
    std::vector<ErrorChain> flips{single(ErrorLabel::identity(), 0)};
    for (int r = 0; r < 3; ++r) flips.push_back(single(ErrorLabel::p(0, 1), r));
    CHECK(kl_check(code, flips).passed);

    const KLReport bad = kl_check(code, {single(ErrorLabel::identity(), 0),
                                         single(ErrorLabel::r(1), 0)});
    CHECK(!bad.passed);
    CHECK(bad.max_lambda_inconsistency > 0.5);
}

TEST_CASE("nine-register code passes the full spanning set for N in {2,3}") {
    for (int N : {2, 3}) {
        const CodeSpec code = build_nine_code(N);
        const auto errors = single_register_error_set(N, 9);
        const KLReport report = kl_check(code, errors);
        CHECK(report.passed);
        CHECK(report.max_offdiag_violation <= 1e-9);
        CHECK(report.max_lambda_inconsistency <= 1e-9);
        // lambda is Hermitian with unit diagonal (all errors unitary) and
        // entries bounded by 1.
        for (std::size_t a = 0; a < errors.size(); ++a) {
            CHECK(std::abs(report.lambda[a][a] - cplx{1.0}) <= 1e-9);
            for (std::size_t b = 0; b < errors.size(); ++b) {
                CHECK(std::abs(report.lambda[a][b] - std::conj(report.lambda[b][a])) <= 1e-12);
                CHECK(std::abs(report.lambda[a][b]) <= 1.0 + 1e-9);
            }
        }
    }
}

TEST_CASE("basis pass extends to random single-register error matrices") {
    std::mt19937_64 rng(31);
    for (int N : {2, 3}) {
        const CodeSpec code = build_nine_code(N);
        std::vector<ErrorChain> errors{single(ErrorLabel::identity(), 0)};
        std::uniform_int_distribution<int> reg_pick(0, 8);
        for (int trial = 0; trial < 20; ++trial) {
            errors.push_back(single(
                ErrorLabel::custom_matrix(random_matrix(N, rng), "custom:rand"), reg_pick(rng)));
        }
        CHECK(kl_check(code, errors).passed);
    }
}

TEST_CASE("a two-register product error defeats the nine-register code") {
    const CodeSpec code = build_nine_code(2);
    auto errors = single_register_error_set(2, 9);
    errors.push_back(ErrorChain{
        {PlacedError{ErrorLabel::p(0, 1), 0}, PlacedError{ErrorLabel::p(0, 1), 1}}});
    const KLReport report = kl_check(code, errors);
    CHECK(!report.passed);
    CHECK(report.max_lambda_inconsistency > 0.5);
}

TEST_CASE("kl_check validates inputs") {
    const CodeSpec code = build_nine_code(2);
    CHECK_THROWS_AS(kl_check(code, {single(ErrorLabel::identity(), 9)}), std::invalid_argument);
    CodeSpec bad = code;
    bad.codewords[1] = bad.codewords[0]; // not orthogonal
    CHECK_THROWS_AS(kl_check(bad, {single(ErrorLabel::identity(), 0)}), std::invalid_argument);
    CHECK_THROWS_AS(kl_check(CodeSpec{}, {}), std::invalid_argument);
}

TEST_CASE("KL report serializes with labels, lambda matrix and verdict") {
    const CodeSpec code = build_nine_code(2);
    const KLReport report =
        kl_check(code, {single(ErrorLabel::identity(), 0), single(ErrorLabel::r(1), 4)});
    const ojson j = kl_report_to_json(report);
    CHECK(j.at("labels").at(1).get<std::string>() == "R:1@4");
    CHECK(j.at("lambda").size() == 2);
    CHECK(j.at("lambda").at(0).at(0).at(0).get<double>() == doctest::Approx(1.0));
    CHECK(j.at("passed").get<bool>());
    const std::string text = dump_json(j);
    CHECK(text.find("\"tolerance\"") != std::string::npos);
}
