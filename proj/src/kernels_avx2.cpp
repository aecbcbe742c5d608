#if defined(__AVX2__) && defined(__FMA__)

#include "qec/kernels.hpp"

#include <immintrin.h>

// AVX2/FMA kernels.  A __m256d lane pair holds two complex doubles as
// [re0, im0, re1, im1].  Complex products use the fmaddsub pattern:
//   (a*b).re = ar*br - ai*bi   (even lanes, subtract)
//   (a*b).im = ai*br + ar*bi   (odd lanes, add)

namespace qec::kernels::detail {

namespace {

inline __m256d cmul(__m256d a, __m256d b) {
    __m256d b_re = _mm256_movedup_pd(b);
    __m256d b_im = _mm256_permute_pd(b, 0xF);
    __m256d a_sw = _mm256_permute_pd(a, 0x5);
    return _mm256_fmaddsub_pd(a, b_re, _mm256_mul_pd(a_sw, b_im));
}

cplx cdot_avx2(const cplx* a, const cplx* b, std::size_t n) {
    const double* pa = reinterpret_cast<const double*>(a);
    const double* pb = reinterpret_cast<const double*>(b);
    const __m256d conj_mask = _mm256_setr_pd(0.0, -0.0, 0.0, -0.0);
    __m256d acc0 = _mm256_setzero_pd();
    __m256d acc1 = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256d a0 = _mm256_xor_pd(_mm256_loadu_pd(pa + 2 * i), conj_mask);
        __m256d a1 = _mm256_xor_pd(_mm256_loadu_pd(pa + 2 * i + 4), conj_mask);
        acc0 = _mm256_add_pd(acc0, cmul(a0, _mm256_loadu_pd(pb + 2 * i)));
        acc1 = _mm256_add_pd(acc1, cmul(a1, _mm256_loadu_pd(pb + 2 * i + 4)));
    }
    __m256d acc = _mm256_add_pd(acc0, acc1);
    __m128d s = _mm_add_pd(_mm256_castpd256_pd128(acc),
                           _mm256_extractf128_pd(acc, 1));
    double re = _mm_cvtsd_f64(s);
    double im = _mm_cvtsd_f64(_mm_unpackhi_pd(s, s));
    for (; i < n; ++i) {
        const double ar = a[i].real(), ai = a[i].imag();
        const double br = b[i].real(), bi = b[i].imag();
        re += ar * br + ai * bi;
        im += ar * bi - ai * br;
    }
    return {re, im};
}

double norm_sq_avx2(const cplx* a, std::size_t n) {
    const double* pa = reinterpret_cast<const double*>(a);
    __m256d acc0 = _mm256_setzero_pd();
    __m256d acc1 = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256d v0 = _mm256_loadu_pd(pa + 2 * i);
        __m256d v1 = _mm256_loadu_pd(pa + 2 * i + 4);
        acc0 = _mm256_fmadd_pd(v0, v0, acc0);
        acc1 = _mm256_fmadd_pd(v1, v1, acc1);
    }
    __m256d acc = _mm256_add_pd(acc0, acc1);
    __m128d s = _mm_add_pd(_mm256_castpd256_pd128(acc),
                           _mm256_extractf128_pd(acc, 1));
    s = _mm_add_pd(s, _mm_unpackhi_pd(s, s));
    double out = _mm_cvtsd_f64(s);
    for (; i < n; ++i) {
        out += a[i].real() * a[i].real() + a[i].imag() * a[i].imag();
    }
    return out;
}

void caxpy_avx2(cplx alpha, const cplx* x, cplx* y, std::size_t n) {
    const double* px = reinterpret_cast<const double*>(x);
    double* py = reinterpret_cast<double*>(y);
    const __m256d a_re = _mm256_set1_pd(alpha.real());
    const __m256d a_im = _mm256_set1_pd(alpha.imag());
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        __m256d xv = _mm256_loadu_pd(px + 2 * i);
        __m256d x_sw = _mm256_permute_pd(xv, 0x5);
        __m256d prod = _mm256_fmaddsub_pd(xv, a_re, _mm256_mul_pd(x_sw, a_im));
        _mm256_storeu_pd(py + 2 * i, _mm256_add_pd(_mm256_loadu_pd(py + 2 * i), prod));
    }
    const double cr = alpha.real(), ci = alpha.imag();
    for (; i < n; ++i) {
        const double xr = x[i].real(), xi = x[i].imag();
        y[i] = {y[i].real() + cr * xr - ci * xi,
                y[i].imag() + cr * xi + ci * xr};
    }
}

void cscale_avx2(cplx alpha, cplx* x, std::size_t n) {
    double* px = reinterpret_cast<double*>(x);
    const __m256d a_re = _mm256_set1_pd(alpha.real());
    const __m256d a_im = _mm256_set1_pd(alpha.imag());
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        __m256d xv = _mm256_loadu_pd(px + 2 * i);
        __m256d x_sw = _mm256_permute_pd(xv, 0x5);
        _mm256_storeu_pd(px + 2 * i,
                         _mm256_fmaddsub_pd(xv, a_re, _mm256_mul_pd(x_sw, a_im)));
    }
    const double cr = alpha.real(), ci = alpha.imag();
    for (; i < n; ++i) {
        const double xr = x[i].real(), xi = x[i].imag();
        x[i] = {cr * xr - ci * xi, cr * xi + ci * xr};
    }
}

} // namespace

const Ops* avx2_ops() {
    static const Ops ops{"avx2", cdot_avx2, norm_sq_avx2, caxpy_avx2,
                         cscale_avx2};
    return &ops;
}

} // namespace qec::kernels::detail

#endif // __AVX2__ && __FMA__
