#pragma once

#include "howe/biguint.hpp"
#include "howe/errors.hpp"
#include "howe/smallvec.hpp"

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace howe {

using u32 = std::uint32_t;
using u64 = std::uint64_t;

bool is_prime(u64 n);
u64 mod_pow(u64 base, u64 exp, u64 mod);
u32 mod_inv(u32 a, u32 p);

class FieldCtx;
class FieldElement;
using FieldCtxPtr = std::shared_ptr<const FieldCtx>;

// F_{p^d} = F_p[g] / (modulus), with the deterministic canonical modulus:
// monic polynomials of degree d are scanned in lexicographic coefficient
// order (constant term varying fastest) and the first irreducible one wins.
// Contexts are interned, so equal (p, d) means pointer-equal ctx and
// bit-identical serialization. The public tower only uses even degrees
// (level = d/2); degree 1 exists for prime-field scratch work.
class FieldCtx : public std::enable_shared_from_this<FieldCtx> {
public:
    // interned canonical context; p must be prime (> 3 for the even-degree
    // tower entry points, see make_base_field)
    static FieldCtxPtr get(u32 p, u32 degree);

    u32 p() const { return p_; }
    u32 degree() const { return degree_; }
    u32 level() const; // degree/2, throws Error on odd degree
    const std::vector<u32>& modulus() const { return modulus_; }

    // g^(degree+k) expressed in the power basis, k = 0 .. degree-2
    const std::vector<std::vector<u32>>& reduction_rows() const { return red_; }

    bool size_fits_u64() const { return size_fits_; }
    u64 size_u64() const; // p^degree, throws if it does not fit

    FieldElement zero() const;
    FieldElement one() const;
    FieldElement from_int(u64 v) const; // prime-subfield constant v mod p
    FieldElement from_coeffs(const std::vector<u32>& coeffs) const;
    FieldElement generator() const; // the class of g
    // k-th element in ascending canonical order, k < p^degree
    FieldElement element_at(u64 k) const;

    // schoolbook multiply of two length-degree coefficient arrays, reduced
    void raw_mul(const u32* a, const u32* b, u32* out) const;

    std::string describe() const; // "GF(p^d)" for logs

private:
    FieldCtx(u32 p, u32 degree, std::vector<u32> modulus);

    u32 p_ = 0;
    u32 degree_ = 0;
    std::vector<u32> modulus_;
    std::vector<std::vector<u32>> red_;
    bool size_fits_ = false;
    u64 size_ = 0;

    friend class FieldElement;
};

class FieldElement {
public:
    FieldElement() = default; // null element; only assignment is allowed

    const FieldCtxPtr& ctx() const { return ctx_; }
    bool valid() const { return ctx_ != nullptr; }
    u32 size() const { return coeffs_.size(); }
    const u32* data() const { return coeffs_.data(); }
    u32 coeff(u32 i) const { return coeffs_[i]; }

    bool is_zero() const;
    bool operator==(const FieldElement& o) const;
    bool operator!=(const FieldElement& o) const { return !(*this == o); }

    FieldElement operator+(const FieldElement& o) const;
    FieldElement operator-(const FieldElement& o) const;
    FieldElement operator*(const FieldElement& o) const;
    FieldElement operator-() const;
    FieldElement inv() const; // extended Euclid on the modulus
    FieldElement operator/(const FieldElement& o) const { return *this * o.inv(); }

    FieldElement pow(u64 e) const;
    FieldElement pow(const BigUInt& e) const;
    FieldElement frobenius(u64 k = 1) const; // x^(p^k)

    // true when the element is fixed by the p^m-power Frobenius
    bool in_subfield(u32 m) const;
    // least m dividing degree with x^(p^m) = x
    u32 min_subfield_degree() const;

    std::vector<u32> to_coeffs() const;
    std::string str() const;

    // total order: compare coefficient vectors most-significant first
    static bool canonical_less(const FieldElement& a, const FieldElement& b);

private:
    FieldElement(FieldCtxPtr ctx, SmallVecU32 coeffs)
        : ctx_(std::move(ctx)), coeffs_(std::move(coeffs)) {}

    static void require_same_ctx(const FieldElement& a, const FieldElement& b);

    FieldCtxPtr ctx_;
    SmallVecU32 coeffs_;

    friend class FieldCtx;
};

// --- module operations -----------------------------------------------------

// canonical F_{p^2} context (errors: CompositeOrSmallPrime)
FieldCtxPtr make_base_field(u32 p);

// prime-field scratch context F_p
FieldCtxPtr prime_field(u32 p);

// ring-homomorphic injection between canonical contexts of the same p,
// src.degree | dst.degree; realized by the canonical (minimal) root of the
// source modulus in the destination field
class Embedding {
public:
    Embedding() = default;
    Embedding(FieldCtxPtr src, FieldCtxPtr dst, std::vector<FieldElement> powers)
        : src_(std::move(src)), dst_(std::move(dst)), powers_(std::move(powers)) {}
    const FieldCtxPtr& src() const { return src_; }
    const FieldCtxPtr& dst() const { return dst_; }
    FieldElement operator()(const FieldElement& x) const;

private:
    FieldCtxPtr src_;
    FieldCtxPtr dst_;
    std::vector<FieldElement> powers_; // images of g_src^k, k < src.degree
};

// cached; errors: NotAnExtension if dst is not an extension of src
const Embedding& find_embedding(const FieldCtxPtr& src, const FieldCtxPtr& dst);

// context for F_{p^(degree*d)} plus the injection of ctx into it
std::pair<FieldCtxPtr, Embedding> extend_field(const FieldCtxPtr& ctx, u32 d);

// canonical square root (minimal of the two, canonical element order) when x
// is a square in its own field
std::optional<FieldElement> sqrt(const FieldElement& x);

// move x into the (smaller or equal) canonical context of the given degree;
// returns nothing if x does not lie in that subfield
std::optional<FieldElement> descend(const FieldElement& x, const FieldCtxPtr& small);

} // namespace howe
