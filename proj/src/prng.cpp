#include "howe/prng.hpp"

#include <atomic>

namespace howe {

namespace {
std::atomic<std::uint64_t> g_seed{0};
}

void set_global_seed(std::uint64_t seed) {
    g_seed.store(seed, std::memory_order_relaxed);
}

std::uint64_t global_seed() { return g_seed.load(std::memory_order_relaxed); }

std::uint64_t derive_seed(const void* data, std::size_t len) {
    std::uint64_t h = 0xcbf29ce484222325ULL ^ global_seed();
    const auto* bytes = static_cast<const unsigned char*>(data);
    for (std::size_t i = 0; i < len; ++i) {
        h ^= bytes[i];
        h *= 0x100000001b3ULL;
    }
    return h;
}

std::uint64_t derive_seed(std::uint64_t tag) { return derive_seed(&tag, sizeof(tag)); }

} // namespace howe
