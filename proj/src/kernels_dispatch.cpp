#include "qec/kernels.hpp"

#include <cstdlib>
#include <cstring>

namespace qec::kernels {

#if defined(QEC_HAVE_AVX2_TU)
namespace detail {
const Ops* avx2_ops();
}
#endif

const Ops* avx2_or_null() {
#if defined(QEC_HAVE_AVX2_TU)
    if (__builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma")) {
        return detail::avx2_ops();
    }
#endif
    return nullptr;
}

const Ops& active() {
    static const Ops* selected = [] {
        const Ops* simd = avx2_or_null();
        if (const char* force = std::getenv("QEC_KERNEL")) {
            if (std::strcmp(force, "scalar") == 0) return &scalar();
            if (std::strcmp(force, "avx2") == 0 && simd) return simd;
        }
        return simd ? simd : &scalar();
    }();
    return *selected;
}

} // namespace qec::kernels
