#include "howe/canonical_model.hpp"

namespace howe {

MultiPoly q_form(const HoweParams& hp) {
    const auto& ctx = hp.A1.ctx();
    const FieldElement mu2 = hp.mu * hp.mu, nu2 = hp.nu * hp.nu;
    FieldElement cxx = ctx->from_int(3) * hp.lambda;
    FieldElement cxy = hp.A1 * mu2 - hp.A2 * nu2 -
                       ctx->from_int(3) * hp.lambda * hp.lambda;
    FieldElement cyy = hp.B1 * mu2 * hp.mu - hp.B2 * nu2 * hp.nu +
                       hp.lambda * hp.lambda * hp.lambda + hp.A2 * nu2 * hp.lambda;
    std::vector<MTerm> terms;
    if (!cxx.is_zero()) terms.push_back({Monomial::var(kVarX, 2), cxx});
    if (!cxy.is_zero())
        terms.push_back({Monomial::var(kVarX) * Monomial::var(kVarY), cxy});
    if (!cyy.is_zero()) terms.push_back({Monomial::var(kVarY, 2), cyy});
    return MultiPoly::from_terms(ctx, 4, std::move(terms));
}

CanonicalModel canonical(const HoweParams& hp) {
    if (!is_howe_type(hp)) throw NotHoweType("canonical: parameters not of Howe type");
    const auto& ctx = hp.A1.ctx();
    MultiPoly Q = MultiPoly::from_terms(ctx, 4,
                                        {{Monomial::var(kVarZ, 2), ctx->one()},
                                         {Monomial::var(kVarW, 2), -ctx->one()}});
    Q = Q - q_form(hp);
    const FieldElement mu2 = hp.mu * hp.mu;
    MultiPoly P = MultiPoly::from_terms(
        ctx, 4,
        {{Monomial::var(kVarZ, 2) * Monomial::var(kVarY), ctx->one()},
         {Monomial::var(kVarX, 3), -ctx->one()},
         {Monomial::var(kVarX) * Monomial::var(kVarY, 2), -(hp.A1 * mu2)},
         {Monomial::var(kVarY, 3), -(hp.B1 * mu2 * hp.mu)}});
    return {std::move(Q), std::move(P), hp};
}

} // namespace howe
