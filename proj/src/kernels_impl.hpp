#pragma once

#include "efcp/kernels.hpp"

// Per-variant entry points. Every variant of a kernel performs the exact
// same sequence of rounded operations per output element (multiply then
// add, ascending entry order), so outputs are bit-identical across
// backends and worker counts.
namespace efcp::kernels::detail {

void sp_scalar_f64(const uint32_t*, const double*, size_t, size_t, const double*, double*);
void sp_scalar_f32(const uint32_t*, const float*, size_t, size_t, const double*, double*);
void lcg_scalar_f64(const uint32_t*, const double*, size_t, const uint32_t*, const double*,
                    size_t, const BlockLayout&, double*);
void lcg_scalar_f32(const uint32_t*, const float*, size_t, const uint32_t*, const double*,
                    size_t, const BlockLayout&, double*);

#ifdef EFCP_HAVE_AVX2_SOURCES
void sp_avx2_f64(const uint32_t*, const double*, size_t, size_t, const double*, double*);
void sp_avx2_f32(const uint32_t*, const float*, size_t, size_t, const double*, double*);
void lcg_avx2_f64(const uint32_t*, const double*, size_t, const uint32_t*, const double*,
                  size_t, const BlockLayout&, double*);
void lcg_avx2_f32(const uint32_t*, const float*, size_t, const uint32_t*, const double*,
                  size_t, const BlockLayout&, double*);
#endif

}  // namespace efcp::kernels::detail
