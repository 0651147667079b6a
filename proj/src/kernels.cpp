#include "howe/kernels.hpp"

#include "howe/errors.hpp"

#include <atomic>
#include <cstdlib>
#include <cstring>

#if defined(__x86_64__) || defined(_M_X64)
#include <cpuid.h>
#endif

namespace howe::kern {

bool avx2_supported() {
#if defined(__x86_64__) || defined(_M_X64)
    unsigned eax, ebx, ecx, edx;
    if (!__get_cpuid_count(7, 0, &eax, &ebx, &ecx, &edx)) return false;
    return (ebx & (1u << 5)) != 0; // AVX2 feature bit
#else
    return false;
#endif
}

namespace {

Impl detect_default() {
    if (const char* env = std::getenv("HOWE_KERNEL")) {
        if (std::strcmp(env, "scalar") == 0) return Impl::scalar;
        if (std::strcmp(env, "avx2") == 0 && avx2_supported()) return Impl::avx2;
    }
    return avx2_supported() ? Impl::avx2 : Impl::scalar;
}

std::atomic<Impl>& impl_slot() {
    static std::atomic<Impl> impl{detect_default()};
    return impl;
}

} // namespace

Impl active_impl() { return impl_slot().load(std::memory_order_relaxed); }

void set_impl(Impl impl) {
    if (impl == Impl::avx2 && !avx2_supported())
        throw Error("kernels: AVX2 not supported on this machine");
    impl_slot().store(impl, std::memory_order_relaxed);
}

const char* impl_name(Impl impl) {
    return impl == Impl::avx2 ? "avx2" : "scalar";
}

void conv_accum_scalar(const std::uint32_t* a, std::size_t na,
                       const std::uint32_t* b, std::size_t nb,
                       std::uint64_t* acc) {
    for (std::size_t i = 0; i < na; ++i) {
        const std::uint64_t ai = a[i];
        if (!ai) continue;
        std::uint64_t* row = acc + i;
        for (std::size_t j = 0; j < nb; ++j) row[j] += ai * b[j];
    }
}

void conv_accum(const std::uint32_t* a, std::size_t na,
                const std::uint32_t* b, std::size_t nb,
                std::uint64_t* acc) {
    if (na == 0 || nb == 0) return;
#if defined(__x86_64__) || defined(_M_X64)
    if (active_impl() == Impl::avx2) {
        conv_accum_avx2(a, na, b, nb, acc);
        return;
    }
#endif
    conv_accum_scalar(a, na, b, nb, acc);
}

void mod_reduce(const std::uint64_t* acc, std::size_t n, std::uint32_t p,
                std::uint32_t* out) {
    for (std::size_t i = 0; i < n; ++i) out[i] = (std::uint32_t)(acc[i] % p);
}

} // namespace howe::kern
