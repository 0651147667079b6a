// AVX2 variant of the convolution kernel. Compiled with -mavx2 in this single
// translation unit; callers reach it only through the runtime dispatch in
// kernels.cpp, so the rest of the binary stays baseline-ISA clean.

#if defined(__x86_64__) || defined(_M_X64)

#include "howe/kernels.hpp"

#include <immintrin.h>

namespace howe::kern {

void conv_accum_avx2(const std::uint32_t* a, std::size_t na,
                     const std::uint32_t* b, std::size_t nb,
                     std::uint64_t* acc) {
    for (std::size_t i = 0; i < na; ++i) {
        const std::uint64_t ai = a[i];
        if (!ai) continue;
        std::uint64_t* row = acc + i;
        const __m256i va = _mm256_set1_epi64x((long long)ai);
        std::size_t j = 0;
        for (; j + 4 <= nb; j += 4) {
            // zero-extend 4 u32 residues into the low halves of u64 lanes
            __m128i b32 = _mm_loadu_si128((const __m128i*)(b + j));
            __m256i vb = _mm256_cvtepu32_epi64(b32);
            __m256i prod = _mm256_mul_epu32(va, vb);
            __m256i cur = _mm256_loadu_si256((__m256i*)(row + j));
            _mm256_storeu_si256((__m256i*)(row + j), _mm256_add_epi64(cur, prod));
        }
        for (; j < nb; ++j) row[j] += ai * b[j];
    }
}

} // namespace howe::kern

#endif
