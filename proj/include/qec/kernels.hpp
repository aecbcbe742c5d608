#pragma once

#include <complex>
#include <cstddef>

// Data-parallel inner loops over contiguous complex<double> arrays.
// A scalar reference implementation always exists; an AVX2+FMA variant is
// compiled when the toolchain supports it and selected at runtime when the
// CPU does.  The two are equivalence-tested against each other; results may
// differ by FMA rounding only.

namespace qec::kernels {

using cplx = std::complex<double>;

struct Ops {
    const char* name;
    // sum_i conj(a[i]) * b[i]
    cplx (*cdot)(const cplx* a, const cplx* b, std::size_t n);
    // sum_i |a[i]|^2
    double (*norm_sq)(const cplx* a, std::size_t n);
    // y[i] += alpha * x[i]
    void (*caxpy)(cplx alpha, const cplx* x, cplx* y, std::size_t n);
    // x[i] *= alpha
    void (*cscale)(cplx alpha, cplx* x, std::size_t n);
};

const Ops& scalar();

// Null when the AVX2 translation unit was not compiled or the CPU lacks
// AVX2/FMA.
const Ops* avx2_or_null();

// Dispatched once per process: AVX2 when available, else scalar.  The env
// var QEC_KERNEL=scalar|avx2 forces a specific backend (avx2 falls back to
// scalar with no error if unavailable).
const Ops& active();

} // namespace qec::kernels
