#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qec/kernels.hpp"
#include "test_util.hpp"

#include <cmath>
#include <complex>
#include <random>
#include <vector>

using namespace qec;
using kernels::Ops;

namespace {

// Sizes chosen to exercise the vector body and every tail length.
const std::size_t kSizes[] = {1, 2, 3, 4, 5, 7, 8, 15, 64, 127, 1000, 4097};

double rel_scale(std::size_t n) { return static_cast<double>(n) * 1e-14; }

} // namespace

TEST_CASE("scalar cdot matches direct complex summation") {
    std::mt19937_64 rng(42);
    for (std::size_t n : kSizes) {
        auto a = test::random_cvec(n, rng);
        auto b = test::random_cvec(n, rng);
        cplx expect = 0.0;
        for (std::size_t i = 0; i < n; ++i) expect += std::conj(a[i]) * b[i];
        const cplx got = kernels::scalar().cdot(a.data(), b.data(), n);
        CHECK(std::abs(got - expect) <= rel_scale(n));
    }
}

TEST_CASE("scalar norm_sq and cscale and caxpy match direct formulas") {
    std::mt19937_64 rng(43);
    for (std::size_t n : kSizes) {
        auto a = test::random_cvec(n, rng);
        double expect_norm = 0.0;
        for (const auto& z : a) expect_norm += std::norm(z);
        CHECK(kernels::scalar().norm_sq(a.data(), n) ==
              doctest::Approx(expect_norm).epsilon(1e-12));

        const cplx alpha{0.3, -1.7};
        auto x = test::random_cvec(n, rng);
        auto y = test::random_cvec(n, rng);
        auto y2 = y;
        kernels::scalar().caxpy(alpha, x.data(), y.data(), n);
        for (std::size_t i = 0; i < n; ++i) y2[i] += alpha * x[i];
        for (std::size_t i = 0; i < n; ++i) CHECK(std::abs(y[i] - y2[i]) <= 1e-14);

        auto s = x;
        kernels::scalar().cscale(alpha, s.data(), n);
        for (std::size_t i = 0; i < n; ++i) CHECK(std::abs(s[i] - alpha * x[i]) <= 1e-14);
    }
}

TEST_CASE("avx2 kernels agree with scalar reference") {
    const Ops* simd = kernels::avx2_or_null();
    if (!simd) {
        MESSAGE("AVX2 backend not available on this host; skipping equivalence");
        return;
    }
    const Ops& ref = kernels::scalar();
    std::mt19937_64 rng(44);
    for (std::size_t n : kSizes) {
        auto a = test::random_cvec(n, rng);
        auto b = test::random_cvec(n, rng);

        const cplx d_ref = ref.cdot(a.data(), b.data(), n);
        const cplx d_simd = simd->cdot(a.data(), b.data(), n);
        CHECK(std::abs(d_ref - d_simd) <= rel_scale(n));

        CHECK(std::abs(ref.norm_sq(a.data(), n) - simd->norm_sq(a.data(), n)) <= rel_scale(n));

        const cplx alpha{-0.25, 0.9};
        auto y_ref = b;
        auto y_simd = b;
        ref.caxpy(alpha, a.data(), y_ref.data(), n);
        simd->caxpy(alpha, a.data(), y_simd.data(), n);
        for (std::size_t i = 0; i < n; ++i) {
            CHECK(std::abs(y_ref[i] - y_simd[i]) <= 1e-13);
        }

        auto s_ref = a;
        auto s_simd = a;
        ref.cscale(alpha, s_ref.data(), n);
        simd->cscale(alpha, s_simd.data(), n);
        for (std::size_t i = 0; i < n; ++i) {
            CHECK(std::abs(s_ref[i] - s_simd[i]) <= 1e-13);
        }
    }
}

TEST_CASE("active backend is one of the known implementations") {
    const Ops& act = kernels::active();
    const bool known = std::string(act.name) == "scalar" || std::string(act.name) == "avx2";
    CHECK(known);
    // Smoke: the dispatched kernels produce sane values.
    std::vector<cplx> v{{1, 0}, {0, 1}, {-1, 0}};
    CHECK(act.norm_sq(v.data(), v.size()) == doctest::Approx(3.0));
    CHECK(std::abs(act.cdot(v.data(), v.data(), v.size()) - cplx{3.0, 0.0}) <= 1e-15);
}
