#include "pdg/fpvec.hpp"

namespace pdg {

void fp_axpy_scalar(uint32_t* dst, const uint32_t* src, uint32_t c,
                    std::size_t len, uint32_t p) {
    for (std::size_t i = 0; i < len; ++i) {
        dst[i] = static_cast<uint32_t>(
            (dst[i] + static_cast<uint64_t>(c) * src[i]) % p);
    }
}

void fp_scale_scalar(uint32_t* row, uint32_t c, std::size_t len, uint32_t p) {
    for (std::size_t i = 0; i < len; ++i) {
        row[i] = static_cast<uint32_t>((static_cast<uint64_t>(c) * row[i]) % p);
    }
}

#if defined(__x86_64__)
namespace {
bool have_avx2() {
    __builtin_cpu_init();
    return __builtin_cpu_supports("avx2");
}
} // namespace

const fp_axpy_fn fp_axpy = have_avx2() ? fp_axpy_avx2 : fp_axpy_scalar;
const fp_scale_fn fp_scale = have_avx2() ? fp_scale_avx2 : fp_scale_scalar;

const char* fp_kernel_name() { return have_avx2() ? "avx2" : "scalar"; }
#else
const fp_axpy_fn fp_axpy = fp_axpy_scalar;
const fp_scale_fn fp_scale = fp_scale_scalar;

const char* fp_kernel_name() { return "scalar"; }
#endif

} // namespace pdg
