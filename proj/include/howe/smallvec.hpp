#pragma once

#include <algorithm>
#include <cstdint>
#include <cstring>

namespace howe {

// Residue vector with inline storage. Field elements in this artifact have
// at most a dozen prime-field coordinates, so the heap path is cold.
class SmallVecU32 {
public:
    static constexpr std::uint32_t kInline = 12;

    SmallVecU32() = default;
    explicit SmallVecU32(std::uint32_t n) { resize(n); }

    SmallVecU32(const SmallVecU32& o) { assign(o.data(), o.size_); }
    SmallVecU32& operator=(const SmallVecU32& o) {
        if (this != &o) {
            release();
            assign(o.data(), o.size_);
        }
        return *this;
    }
    SmallVecU32(SmallVecU32&& o) noexcept { steal(o); }
    SmallVecU32& operator=(SmallVecU32&& o) noexcept {
        if (this != &o) {
            release();
            steal(o);
        }
        return *this;
    }
    ~SmallVecU32() { release(); }

    void resize(std::uint32_t n) {
        release();
        size_ = n;
        if (n > kInline) heap_ = new std::uint32_t[n];
        std::memset(data(), 0, n * sizeof(std::uint32_t));
    }

    std::uint32_t size() const { return size_; }
    std::uint32_t* data() { return heap_ ? heap_ : inline_; }
    const std::uint32_t* data() const { return heap_ ? heap_ : inline_; }
    std::uint32_t& operator[](std::uint32_t i) { return data()[i]; }
    std::uint32_t operator[](std::uint32_t i) const { return data()[i]; }

    bool operator==(const SmallVecU32& o) const {
        return size_ == o.size_ &&
               std::equal(data(), data() + size_, o.data());
    }

private:
    void assign(const std::uint32_t* src, std::uint32_t n) {
        size_ = n;
        heap_ = nullptr;
        if (n > kInline) heap_ = new std::uint32_t[n];
        std::memcpy(data(), src, n * sizeof(std::uint32_t));
    }
    void steal(SmallVecU32& o) {
        size_ = o.size_;
        heap_ = o.heap_;
        if (!heap_)
            std::memcpy(inline_, o.inline_, size_ * sizeof(std::uint32_t));
        o.heap_ = nullptr;
        o.size_ = 0;
    }
    void release() {
        delete[] heap_;
        heap_ = nullptr;
        size_ = 0;
    }

    std::uint32_t inline_[kInline] = {};
    std::uint32_t* heap_ = nullptr;
    std::uint32_t size_ = 0;
};

} // namespace howe
