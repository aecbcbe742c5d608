#include "qec/kernels.hpp"

// Reference kernels.  Complex arithmetic is written out on re/im parts so
// the compiler emits plain mul/add instead of the Annex-G __muldc3 call.

namespace qec::kernels {

namespace {

cplx cdot_scalar(const cplx* a, const cplx* b, std::size_t n) {
    double re = 0.0, im = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double ar = a[i].real(), ai = a[i].imag();
        const double br = b[i].real(), bi = b[i].imag();
        re += ar * br + ai * bi;
        im += ar * bi - ai * br;
    }
    return {re, im};
}

double norm_sq_scalar(const cplx* a, std::size_t n) {
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        acc += a[i].real() * a[i].real() + a[i].imag() * a[i].imag();
    }
    return acc;
}

void caxpy_scalar(cplx alpha, const cplx* x, cplx* y, std::size_t n) {
    const double cr = alpha.real(), ci = alpha.imag();
    for (std::size_t i = 0; i < n; ++i) {
        const double xr = x[i].real(), xi = x[i].imag();
        y[i] = {y[i].real() + cr * xr - ci * xi,
                y[i].imag() + cr * xi + ci * xr};
    }
}

void cscale_scalar(cplx alpha, cplx* x, std::size_t n) {
    const double cr = alpha.real(), ci = alpha.imag();
    for (std::size_t i = 0; i < n; ++i) {
        const double xr = x[i].real(), xi = x[i].imag();
        x[i] = {cr * xr - ci * xi, cr * xi + ci * xr};
    }
}

} // namespace

const Ops& scalar() {
    static const Ops ops{"scalar", cdot_scalar, norm_sq_scalar, caxpy_scalar,
                         cscale_scalar};
    return ops;
}

} // namespace qec::kernels
