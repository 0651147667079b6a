#pragma once

#include <cstdint>
#include <vector>

namespace howe {

// Just enough unsigned big-integer support for exponents of the form
// (p^k - 1) / 2 used by modular powering. Little-endian 64-bit limbs.
class BigUInt {
public:
    BigUInt() = default;
    explicit BigUInt(std::uint64_t v) {
        if (v) limbs_.push_back(v);
    }

    static BigUInt power(std::uint64_t base, unsigned exp) {
        BigUInt r(1);
        for (unsigned i = 0; i < exp; ++i) r.mul_small(base);
        return r;
    }

    bool is_zero() const { return limbs_.empty(); }

    void mul_small(std::uint64_t m) {
        unsigned __int128 carry = 0;
        for (auto& l : limbs_) {
            unsigned __int128 cur = (unsigned __int128)l * m + carry;
            l = (std::uint64_t)cur;
            carry = cur >> 64;
        }
        if (carry) limbs_.push_back((std::uint64_t)carry);
    }

    // assumes *this >= v
    void sub_small(std::uint64_t v) {
        std::uint64_t borrow = v;
        for (std::size_t i = 0; i < limbs_.size() && borrow; ++i) {
            std::uint64_t old = limbs_[i];
            limbs_[i] -= borrow;
            borrow = (limbs_[i] > old) ? 1 : 0;
        }
        trim();
    }

    void shr1() {
        for (std::size_t i = 0; i < limbs_.size(); ++i) {
            limbs_[i] >>= 1;
            if (i + 1 < limbs_.size() && (limbs_[i + 1] & 1))
                limbs_[i] |= 0x8000000000000000ULL;
        }
        trim();
    }

    std::size_t bit_length() const {
        if (limbs_.empty()) return 0;
        std::uint64_t top = limbs_.back();
        std::size_t n = (limbs_.size() - 1) * 64;
        while (top) {
            ++n;
            top >>= 1;
        }
        return n;
    }

    bool bit(std::size_t i) const {
        std::size_t limb = i / 64;
        if (limb >= limbs_.size()) return false;
        return (limbs_[limb] >> (i % 64)) & 1;
    }

private:
    void trim() {
        while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
    }
    std::vector<std::uint64_t> limbs_;
};

} // namespace howe
