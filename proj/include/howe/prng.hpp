#pragma once

#include <cstddef>
#include <cstdint>

namespace howe {

// splitmix64: small, fast, and good enough for randomized splitting steps.
// Every consumer derives its own stream from (global seed, task tag), so the
// output of a run is a pure function of the seed regardless of scheduling.
class Prng {
public:
    explicit Prng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // uniform in [0, n)
    std::uint64_t below(std::uint64_t n) { return n ? next() % n : 0; }

private:
    std::uint64_t state_;
};

void set_global_seed(std::uint64_t seed);
std::uint64_t global_seed();

// FNV-1a over arbitrary bytes, folded with the global seed. Used to derive
// per-task PRNG streams from the task's input data.
std::uint64_t derive_seed(const void* data, std::size_t len);
std::uint64_t derive_seed(std::uint64_t tag);

} // namespace howe
