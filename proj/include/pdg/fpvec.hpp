#pragma once

#include <cstddef>
#include <cstdint>

namespace pdg {

// Row kernels for dense linear algebra mod p: dst[i] += c*src[i] and
// row scaling, on canonical residues. A scalar reference implementation
// and an AVX2 variant are provided; the active one is chosen at runtime
// from CPU capabilities. Both require 2 <= p < 2^15.

using fp_axpy_fn = void (*)(uint32_t* dst, const uint32_t* src, uint32_t c,
                            std::size_t len, uint32_t p);
using fp_scale_fn = void (*)(uint32_t* row, uint32_t c, std::size_t len,
                             uint32_t p);

void fp_axpy_scalar(uint32_t* dst, const uint32_t* src, uint32_t c,
                    std::size_t len, uint32_t p);
void fp_scale_scalar(uint32_t* row, uint32_t c, std::size_t len, uint32_t p);

#if defined(__x86_64__)
void fp_axpy_avx2(uint32_t* dst, const uint32_t* src, uint32_t c,
                  std::size_t len, uint32_t p);
void fp_scale_avx2(uint32_t* row, uint32_t c, std::size_t len, uint32_t p);
#endif

// Dispatched entry points (function pointers resolved once).
extern const fp_axpy_fn fp_axpy;
extern const fp_scale_fn fp_scale;

// Name of the selected kernel set ("scalar" or "avx2"), for reporting.
const char* fp_kernel_name();

} // namespace pdg
