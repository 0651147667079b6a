#pragma once

#include "howe/unipoly.hpp"

#include <array>
#include <cstdint>
#include <vector>

namespace howe {

// Sparse multivariate polynomials under pure lexicographic order with
// variable 0 strongest. Fixed capacity of 11 variables covers the largest
// ring used here (7 hyperplane/linear-form parameters + 4 curve coordinates).
inline constexpr u32 kMaxVars = 11;

struct Monomial {
    std::array<std::uint16_t, kMaxVars> e{};

    static Monomial one() { return {}; }
    static Monomial var(u32 i, std::uint16_t k = 1) {
        Monomial m;
        m.e[i] = k;
        return m;
    }

    u32 total_degree() const {
        u32 s = 0;
        for (auto v : e) s += v;
        return s;
    }
    bool is_one() const { return total_degree() == 0; }

    bool operator==(const Monomial& o) const { return e == o.e; }

    // pure lex, variable 0 first
    static bool lex_less(const Monomial& a, const Monomial& b) {
        for (u32 i = 0; i < kMaxVars; ++i)
            if (a.e[i] != b.e[i]) return a.e[i] < b.e[i];
        return false;
    }

    bool divides(const Monomial& o) const {
        for (u32 i = 0; i < kMaxVars; ++i)
            if (e[i] > o.e[i]) return false;
        return true;
    }
    Monomial operator*(const Monomial& o) const {
        Monomial r;
        for (u32 i = 0; i < kMaxVars; ++i) r.e[i] = e[i] + o.e[i];
        return r;
    }
    // assumes o | this
    Monomial operator/(const Monomial& o) const {
        Monomial r;
        for (u32 i = 0; i < kMaxVars; ++i) r.e[i] = e[i] - o.e[i];
        return r;
    }
    static Monomial lcm(const Monomial& a, const Monomial& b) {
        Monomial r;
        for (u32 i = 0; i < kMaxVars; ++i) r.e[i] = std::max(a.e[i], b.e[i]);
        return r;
    }
    static bool coprime(const Monomial& a, const Monomial& b) {
        for (u32 i = 0; i < kMaxVars; ++i)
            if (a.e[i] && b.e[i]) return false;
        return true;
    }
};

struct MTerm {
    Monomial m;
    FieldElement c;
};

class MultiPoly {
public:
    MultiPoly() = default;
    MultiPoly(FieldCtxPtr ctx, u32 nvars) : ctx_(std::move(ctx)), nvars_(nvars) {}

    static MultiPoly zero(const FieldCtxPtr& ctx, u32 nvars) { return {ctx, nvars}; }
    static MultiPoly constant(const FieldCtxPtr& ctx, u32 nvars, const FieldElement& c);
    static MultiPoly variable(const FieldCtxPtr& ctx, u32 nvars, u32 i);
    static MultiPoly from_terms(FieldCtxPtr ctx, u32 nvars, std::vector<MTerm> terms);

    const FieldCtxPtr& ctx() const { return ctx_; }
    u32 nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    const std::vector<MTerm>& terms() const { return terms_; }

    const Monomial& leading_monomial() const { return terms_.front().m; }
    const FieldElement& leading_coeff() const { return terms_.front().c; }
    u32 total_degree() const;
    u32 degree_in(u32 var) const;
    bool uses_var(u32 var) const { return degree_in(var) > 0; }

    bool operator==(const MultiPoly& o) const;

    MultiPoly operator+(const MultiPoly& o) const;
    MultiPoly operator-(const MultiPoly& o) const;
    MultiPoly operator*(const MultiPoly& o) const;
    MultiPoly operator-() const;
    MultiPoly scaled(const FieldElement& c) const;
    MultiPoly monic() const;
    MultiPoly mul_term(const Monomial& m, const FieldElement& c) const;

    FieldElement coeff_of(const Monomial& m) const;

    // full evaluation; coords indexed by variable
    FieldElement eval(const std::vector<FieldElement>& coords) const;
    // substitute one variable by a constant
    MultiPoly eval_var(u32 var, const FieldElement& value) const;
    // simultaneous substitution of every variable by a polynomial
    MultiPoly subst_all(const std::vector<MultiPoly>& images) const;

    // treat as univariate in `var` (all other variables must be absent)
    UniPoly to_unipoly(u32 var) const;
    // coefficient of var^k as a polynomial in the remaining variables
    MultiPoly coeff_of_power(u32 var, u32 k) const;

    std::string str() const;

private:
    void normalize(); // sort descending lex, drop zeros, merge duplicates

    FieldCtxPtr ctx_;
    u32 nvars_ = 0;
    std::vector<MTerm> terms_; // descending lex
};

MultiPoly embed(const MultiPoly& f, const Embedding& e);

// remainder of multivariate division; no term of the result is divisible by
// any basis leading term
MultiPoly normal_form(const MultiPoly& f, const std::vector<MultiPoly>& basis);

// reduced Groebner basis under pure lex (Buchberger, Gebauer-Moeller pair
// elimination, normal selection)
std::vector<MultiPoly> buchberger(const std::vector<MultiPoly>& gens);

// check: every S-polynomial of basis pairs reduces to zero
bool is_groebner_basis(const std::vector<MultiPoly>& basis);

} // namespace howe
