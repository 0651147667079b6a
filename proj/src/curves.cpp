#include "howe/curves.hpp"

#include <algorithm>

namespace howe {

UniPoly hasse_polynomial(u32 p) {
    if (p <= 3 || !is_prime(p))
        throw CompositeOrSmallPrime("hasse_polynomial: need a prime p > 3");
    auto fp = prime_field(p);
    const u32 e = (p - 1) / 2;
    std::vector<FieldElement> coeffs;
    coeffs.reserve(e + 1);
    u32 binom = 1; // binom(e, i) mod p via the multiplicative recurrence
    for (u32 i = 0; i <= e; ++i) {
        coeffs.push_back(fp->from_int((u64)binom * binom % p));
        if (i < e)
            binom = (u32)((u64)binom * ((e - i) % p) % p * mod_inv(i + 1, p) % p);
    }
    return UniPoly::from_coeffs(fp, std::move(coeffs));
}

namespace {

SupersingularEntry entry_for_root(const FieldCtxPtr& ctx, const FieldElement& t0) {
    const FieldElement one = ctx->one();
    FieldElement t2 = t0 * t0;
    FieldElement h = t2 - t0 + one; // t0^2 - t0 + 1
    FieldElement j0 = ctx->from_int(256) * h * h * h *
                      (t2 * (t0 - one) * (t0 - one)).inv();
    FieldElement A0 = -(h * ctx->from_int(3).inv());
    FieldElement B0 = -((ctx->from_int(2) * t2 * t0 - ctx->from_int(3) * t2 -
                         ctx->from_int(3) * t0 + ctx->from_int(2)) *
                        ctx->from_int(27).inv());
    return {t0, j0, A0, B0};
}

} // namespace

std::vector<SupersingularEntry> build_catalog(const FieldCtxPtr& ctx) {
    std::vector<SupersingularEntry> entries;
    for (const auto& en : build_weierstrass_list(ctx)) {
        bool seen = false;
        for (const auto& b : entries) seen = seen || b.j0 == en.j0;
        if (!seen) entries.push_back(en);
    }
    std::sort(entries.begin(), entries.end(),
              [](const SupersingularEntry& a, const SupersingularEntry& b) {
                  return FieldElement::canonical_less(a.j0, b.j0);
              });
    return entries;
}

std::vector<SupersingularEntry> build_weierstrass_list(const FieldCtxPtr& ctx) {
    UniPoly hp = hasse_polynomial(ctx->p());
    std::vector<SupersingularEntry> entries;
    for (const auto& t0 : roots_in_field(hp, ctx)) // canonical root order
        entries.push_back(entry_for_root(ctx, t0));
    return entries;
}

u64 count_points(const FieldElement& A, const FieldElement& B) {
    const auto& ctx = A.ctx();
    const u64 q = ctx->size_u64();
    const u64 half = (q - 1) / 2;
    u64 n = q + 1; // affine sweep plus the point at infinity
    std::int64_t chi_sum = 0;
    for (u64 k = 0; k < q; ++k) {
        FieldElement x = ctx->element_at(k);
        FieldElement v = x * x * x + A * x + B;
        if (v.is_zero()) continue;
        chi_sum += (v.pow(half) == ctx->one()) ? 1 : -1;
    }
    return (u64)((std::int64_t)n + chi_sum);
}

bool supersingular_by_count(const FieldElement& A, const FieldElement& B) {
    const auto& ctx = A.ctx();
    const u32 p = ctx->p();
    auto fp = prime_field(p);
    auto a_down = descend(A, fp);
    auto b_down = descend(B, fp);
    if (a_down && b_down)
        return count_points(*a_down, *b_down) == (u64)p + 1;
    // coefficients genuinely in F_{p^2}: trace divisible by p
    u64 n = count_points(A, B);
    return n % p == 1 % p;
}

FieldElement j_invariant(const FieldElement& A, const FieldElement& B) {
    const auto& ctx = A.ctx();
    FieldElement a3 = ctx->from_int(4) * A * A * A;
    FieldElement disc = a3 + ctx->from_int(27) * B * B;
    return ctx->from_int(1728) * a3 * disc.inv();
}

} // namespace howe
