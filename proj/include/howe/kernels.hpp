#pragma once

#include <cstddef>
#include <cstdint>

// Arithmetic kernels for the dense polynomial inner loops. Residues are
// uint32 values < p with p < 2^21, products are accumulated unreduced into
// uint64 lanes and reduced once at the end; with fewer than 2^22 accumulated
// terms per lane this cannot overflow. The convolution kernel has a scalar
// reference implementation and an AVX2 variant selected at runtime; both must
// produce identical accumulator contents (equivalence-tested).

namespace howe::kern {

enum class Impl { scalar, avx2 };

bool avx2_supported();
Impl active_impl();
// Honors HOWE_KERNEL=scalar|avx2 in the environment at first use.
void set_impl(Impl impl); // throws Error if unsupported on this machine
const char* impl_name(Impl impl);

// acc[i+j] += a[i] * b[j] for all i < na, j < nb. acc must have na+nb-1 slots.
void conv_accum_scalar(const std::uint32_t* a, std::size_t na,
                       const std::uint32_t* b, std::size_t nb,
                       std::uint64_t* acc);
#if defined(__x86_64__) || defined(_M_X64)
void conv_accum_avx2(const std::uint32_t* a, std::size_t na,
                     const std::uint32_t* b, std::size_t nb,
                     std::uint64_t* acc);
#endif
void conv_accum(const std::uint32_t* a, std::size_t na,
                const std::uint32_t* b, std::size_t nb,
                std::uint64_t* acc);

// out[i] = acc[i] mod p. O(n) next to the O(n^2) convolution, kept scalar.
void mod_reduce(const std::uint64_t* acc, std::size_t n, std::uint32_t p,
                std::uint32_t* out);

} // namespace howe::kern
