#include "howe/howe_search.hpp"

#include "howe/worker_pool.hpp"

#include <algorithm>

namespace howe {

bool HoweParams::canonical_less(const HoweParams& a, const HoweParams& b) {
    const FieldElement* xs[] = {&a.A1, &a.B1, &a.A2, &a.B2, &a.lambda, &a.mu, &a.nu};
    const FieldElement* ys[] = {&b.A1, &b.B1, &b.A2, &b.B2, &b.lambda, &b.mu, &b.nu};
    for (int i = 0; i < 7; ++i) {
        if (!(*xs[i] == *ys[i])) return FieldElement::canonical_less(*xs[i], *ys[i]);
    }
    return false;
}

bool HoweParams::operator==(const HoweParams& o) const {
    return A1 == o.A1 && B1 == o.B1 && A2 == o.A2 && B2 == o.B2 &&
           lambda == o.lambda && mu == o.mu && nu == o.nu;
}

UniPoly howe_f1(const HoweParams& hp) {
    const auto& ctx = hp.A1.ctx();
    return UniPoly::from_coeffs(ctx, {hp.B1 * hp.mu * hp.mu * hp.mu,
                                      hp.A1 * hp.mu * hp.mu, ctx->zero(),
                                      ctx->one()});
}

UniPoly howe_f2(const HoweParams& hp) {
    const auto& ctx = hp.A2.ctx();
    UniPoly xl = UniPoly::from_coeffs(ctx, {-hp.lambda, ctx->one()});
    return xl * xl * xl + xl.scaled(hp.A2 * hp.nu * hp.nu) +
           UniPoly::from_coeffs(ctx, {hp.B2 * hp.nu * hp.nu * hp.nu});
}

namespace {

// lambda-roots of gcd(a,b,c,d) for one mu; every lambda when the gcd is 0
std::vector<FieldElement> lambdas_for_mu(const SupersingularEntry& e1,
                                         const SupersingularEntry& e2,
                                         const FieldCtxPtr& ctx,
                                         const FieldElement& mu) {
    CMSymbolic sym = cm_entries_symbolic(
        sextic_symbolic(e1.A0, e1.B0, e2.A0, e2.B0, mu, ctx->one()));
    UniPoly g = gcd_monic(gcd_monic(sym.a, sym.b), gcd_monic(sym.c, sym.d));
    std::vector<FieldElement> out;
    if (g.is_zero()) {
        const u64 q = ctx->size_u64();
        out.reserve(q);
        for (u64 k = 0; k < q; ++k) out.push_back(ctx->element_at(k));
        return out;
    }
    if (g.degree() == 0) return out;
    return roots_in_field(g, ctx);
}

} // namespace

std::vector<std::pair<FieldElement, FieldElement>>
solve_lambda_mu(const SupersingularEntry& e1, const SupersingularEntry& e2,
                const FieldCtxPtr& ctx, unsigned jobs) {
    const u64 q = ctx->size_u64();
    auto per_mu = parallel_map<std::vector<std::pair<FieldElement, FieldElement>>>(
        q - 1, jobs, [&](std::size_t i) {
            FieldElement mu = ctx->element_at(i + 1);
            std::vector<std::pair<FieldElement, FieldElement>> found;
            for (auto& lam : lambdas_for_mu(e1, e2, ctx, mu))
                found.emplace_back(lam, mu);
            return found;
        });
    std::vector<std::pair<FieldElement, FieldElement>> out;
    for (auto& part : per_mu)
        out.insert(out.end(), part.begin(), part.end());
    return out;
}

std::vector<std::pair<FieldElement, FieldElement>>
brute_force_lambda_mu(const SupersingularEntry& e1, const SupersingularEntry& e2,
                      const FieldCtxPtr& ctx) {
    std::vector<std::pair<FieldElement, FieldElement>> out;
    const u64 q = ctx->size_u64();
    for (u64 m = 1; m < q; ++m) {
        FieldElement mu = ctx->element_at(m);
        for (u64 l = 0; l < q; ++l) {
            FieldElement lam = ctx->element_at(l);
            UniPoly f = sextic_scalar(e1.A0, e1.B0, e2.A0, e2.B0, lam, mu, ctx->one());
            if (cm_entries_scalar(f).all_zero()) out.emplace_back(lam, mu);
        }
    }
    return out;
}

bool is_howe_type(const HoweParams& hp) {
    if (hp.mu.is_zero() || hp.nu.is_zero()) return false;
    return !resultant(howe_f1(hp), howe_f2(hp)).is_zero();
}

std::vector<HoweParams> enumerate_howe(u32 p, const SearchOptions& opt) {
    FieldCtxPtr ctx = make_base_field(p);
    auto cat = build_weierstrass_list(ctx);
    const std::size_t n = cat.size();

    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = opt.ordered_pairs ? 0 : i; j < n; ++j)
            pairs.emplace_back(i, j);

    const u64 q = ctx->size_u64();
    const FieldElement one = ctx->one();

    auto tuples_for = [&](std::size_t pair_idx, const FieldElement& mu) {
        const auto& e1 = cat[pairs[pair_idx].first];
        const auto& e2 = cat[pairs[pair_idx].second];
        std::vector<HoweParams> found;
        for (auto& lam : lambdas_for_mu(e1, e2, ctx, mu)) {
            HoweParams hp{e1.A0, e1.B0, e2.A0, e2.B0, lam, mu, one};
            if (is_howe_type(hp)) found.push_back(std::move(hp));
        }
        return found;
    };

    std::vector<HoweParams> all;
    if (opt.early_stop) {
        // canonical scan, first witness wins
        for (std::size_t pi = 0; pi < pairs.size(); ++pi)
            for (u64 m = 1; m < q; ++m) {
                auto found = tuples_for(pi, ctx->element_at(m));
                if (!found.empty()) {
                    std::sort(found.begin(), found.end(), HoweParams::canonical_less);
                    return {found.front()};
                }
            }
        return {};
    }

    const std::size_t items = pairs.size() * (q - 1);
    auto parts = parallel_map<std::vector<HoweParams>>(
        items, opt.jobs, [&](std::size_t item) {
            std::size_t pi = item / (q - 1);
            u64 m = 1 + (item % (q - 1));
            return tuples_for(pi, ctx->element_at(m));
        });
    for (auto& part : parts) all.insert(all.end(), part.begin(), part.end());
    std::sort(all.begin(), all.end(), HoweParams::canonical_less);
    return all;
}

bool validate_howe_params(const HoweParams& hp) {
    const auto& ctx = hp.A1.ctx();
    auto cat = build_weierstrass_list(ctx);
    auto in_catalog = [&](const FieldElement& A, const FieldElement& B) {
        for (const auto& en : cat)
            if (en.A0 == A && en.B0 == B) return true;
        return false;
    };
    if (!in_catalog(hp.A1, hp.B1) || !in_catalog(hp.A2, hp.B2)) return false;
    if (!is_howe_type(hp)) return false;
    UniPoly f = howe_f1(hp) * howe_f2(hp);
    return cm_entries_scalar(f).all_zero();
}

} // namespace howe
