#pragma once

#include "howe/field.hpp"

#include <utility>
#include <vector>

namespace howe {

// Dense univariate polynomial over a FieldCtx. Coefficients little-endian,
// leading coefficient nonzero unless the polynomial is zero (empty vector).
class UniPoly {
public:
    UniPoly() = default;
    explicit UniPoly(FieldCtxPtr ctx) : ctx_(std::move(ctx)) {}

    static UniPoly from_coeffs(FieldCtxPtr ctx, std::vector<FieldElement> coeffs);
    static UniPoly from_ints(const FieldCtxPtr& ctx, const std::vector<u64>& ints);
    static UniPoly monomial(const FieldCtxPtr& ctx, u32 deg, const FieldElement& c);

    const FieldCtxPtr& ctx() const { return ctx_; }
    int degree() const { return (int)coeffs_.size() - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    const FieldElement& lc() const { return coeffs_.back(); }
    FieldElement coeff(u32 i) const;
    const std::vector<FieldElement>& coeffs() const { return coeffs_; }

    bool operator==(const UniPoly& o) const;
    bool operator!=(const UniPoly& o) const { return !(*this == o); }

    UniPoly operator+(const UniPoly& o) const;
    UniPoly operator-(const UniPoly& o) const;
    UniPoly operator*(const UniPoly& o) const; // kernel-backed convolution
    UniPoly scaled(const FieldElement& c) const;
    UniPoly monic() const;
    UniPoly derivative() const;
    UniPoly pow(u64 e) const;

    // division with remainder by a nonzero divisor
    std::pair<UniPoly, UniPoly> divrem(const UniPoly& d) const;
    UniPoly operator%(const UniPoly& d) const { return divrem(d).second; }
    UniPoly operator/(const UniPoly& d) const { return divrem(d).first; }

    FieldElement eval(const FieldElement& x) const;

    UniPoly powmod(const BigUInt& e, const UniPoly& mod) const;

    std::string str() const;

private:
    void trim();

    FieldCtxPtr ctx_;
    std::vector<FieldElement> coeffs_;
};

// monic gcd; gcd(f, 0) = monic(f), gcd(0, 0) = 0 (errors: MixedContexts)
UniPoly gcd_monic(const UniPoly& f, const UniPoly& g);

// determinant of the Sylvester matrix, rows of f first (errors: ZeroPolynomial)
FieldElement resultant(const UniPoly& f, const UniPoly& g);

// complete factorization into monic irreducibles with multiplicities;
// square-free / distinct-degree / equal-degree stages, the randomized
// splitting seeded from (global seed, input hash); result sorted canonically
std::vector<std::pair<UniPoly, u32>> factor(const UniPoly& f);

bool is_irreducible(const UniPoly& f);

// distinct roots lying in the polynomial's own field, canonical order
std::vector<FieldElement> roots_in_own_field(const UniPoly& f);

// distinct roots in `target`, which must extend f's field (NotAnExtension)
std::vector<FieldElement> roots_in_field(const UniPoly& f, const FieldCtxPtr& target);

// coefficient-wise application of an embedding
UniPoly embed(const UniPoly& f, const Embedding& e);

} // namespace howe
