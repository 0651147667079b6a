#pragma once

#include "howe/unipoly.hpp"

namespace howe {

// One supersingular j-invariant with its Legendre parameter and a short
// Weierstrass pair for y^2 = x^3 + A0 x + B0 (all over F_{p^2}).
struct SupersingularEntry {
    FieldElement t0;
    FieldElement j0;
    FieldElement A0;
    FieldElement B0;
};

// H_p(t) = sum_i binom(e,i)^2 t^i with e = (p-1)/2, over the prime field.
// Errors: CompositeOrSmallPrime.
UniPoly hasse_polynomial(u32 p);

// One entry per distinct supersingular j-invariant, deduplicated in canonical
// root order, result sorted by ascending canonical j0. ctx must be F_{p^2}.
std::vector<SupersingularEntry> build_catalog(const FieldCtxPtr& ctx);

// One entry per root of H_p in canonical root order, duplicates kept. This is
// the list the search pairs up: the published curve counts enumerate every
// root's Weierstrass model, not one model per j-invariant.
std::vector<SupersingularEntry> build_weierstrass_list(const FieldCtxPtr& ctx);

// #E(F_q) for y^2 = x^3 + Ax + B over the coefficient field, by brute force.
u64 count_points(const FieldElement& A, const FieldElement& B);

// Supersingularity oracle by point counting: over F_p the count must be
// exactly p+1; for coefficients living in F_{p^2} the count over F_{p^2}
// must be 1 mod p (the trace of Frobenius is divisible by p exactly for
// supersingular curves).
bool supersingular_by_count(const FieldElement& A, const FieldElement& B);

// 1728 * 4A^3 / (4A^3 + 27B^2)
FieldElement j_invariant(const FieldElement& A, const FieldElement& B);

} // namespace howe
