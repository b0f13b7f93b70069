#if defined(__x86_64__)

#include "pdg/fpvec.hpp"

#include <immintrin.h>

namespace pdg {

namespace {

// Reduce eight lanes of x < 2^30 modulo p < 2^15 via Barrett:
// q = (x * M) >> 32 with M = floor(2^32 / p) + 1 satisfies
// x - q*p in [-p, p), so one conditional correction suffices.
inline __m256i mod_p(__m256i x, __m256i vp, __m256i vm) {
    __m256i x_even = x;
    __m256i x_odd = _mm256_srli_epi64(x, 32);
    __m256i q_even = _mm256_srli_epi64(_mm256_mul_epu32(x_even, vm), 32);
    __m256i q_odd = _mm256_srli_epi64(_mm256_mul_epu32(x_odd, vm), 32);
    __m256i q = _mm256_blend_epi32(q_even, _mm256_slli_epi64(q_odd, 32), 0xAA);
    __m256i r = _mm256_sub_epi32(x, _mm256_mullo_epi32(q, vp));
    __m256i neg = _mm256_srai_epi32(r, 31);
    r = _mm256_add_epi32(r, _mm256_and_si256(neg, vp));
    __m256i ge = _mm256_cmpgt_epi32(vp, r);
    r = _mm256_sub_epi32(r, _mm256_andnot_si256(ge, vp));
    return r;
}

} // namespace

void fp_axpy_avx2(uint32_t* dst, const uint32_t* src, uint32_t c,
                  std::size_t len, uint32_t p) {
    const __m256i vp = _mm256_set1_epi32(static_cast<int>(p));
    const uint64_t m = (UINT64_C(1) << 32) / p + 1;
    const __m256i vm = _mm256_set1_epi32(static_cast<int>(static_cast<uint32_t>(m)));
    const __m256i vc = _mm256_set1_epi32(static_cast<int>(c));
    std::size_t i = 0;
    for (; i + 8 <= len; i += 8) {
        __m256i d = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst + i));
        __m256i s = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + i));
        __m256i x = _mm256_add_epi32(d, _mm256_mullo_epi32(vc, s));
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), mod_p(x, vp, vm));
    }
    if (i < len) fp_axpy_scalar(dst + i, src + i, c, len - i, p);
}

void fp_scale_avx2(uint32_t* row, uint32_t c, std::size_t len, uint32_t p) {
    const __m256i vp = _mm256_set1_epi32(static_cast<int>(p));
    const uint64_t m = (UINT64_C(1) << 32) / p + 1;
    const __m256i vm = _mm256_set1_epi32(static_cast<int>(static_cast<uint32_t>(m)));
    const __m256i vc = _mm256_set1_epi32(static_cast<int>(c));
    std::size_t i = 0;
    for (; i + 8 <= len; i += 8) {
        __m256i r = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(row + i));
        __m256i x = _mm256_mullo_epi32(vc, r);
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(row + i), mod_p(x, vp, vm));
    }
    if (i < len) fp_scale_scalar(row + i, c, len - i, p);
}

} // namespace pdg

#endif
