#include "howe/elliptic_quotients.hpp"

#include "howe/findings.hpp"

#include <algorithm>
#include <numeric>

namespace howe {

namespace {

// combined ring: 0..6 the parameters a1,a2,a3,b1,b2,b3,b4; 7..10 the
// projective coordinates (x,y,z,w before the change, X,Y,Z,W after)
constexpr u32 kP = 7;

MultiPoly lift_to_combined(const MultiPoly& f) {
    std::vector<MTerm> terms;
    terms.reserve(f.terms().size());
    for (const auto& t : f.terms()) {
        Monomial m;
        for (u32 i = 0; i < 4; ++i) m.e[kP + i] = t.m.e[i];
        terms.push_back({m, t.c});
    }
    return MultiPoly::from_terms(f.ctx(), kMaxVars, std::move(terms));
}

// substitution images of (x,y,z,w) in the combined ring for each case
std::vector<MultiPoly> case_images(const FieldCtxPtr& ctx, char tag) {
    auto var = [&](u32 i) { return MultiPoly::variable(ctx, kMaxVars, i); };
    MultiPoly X = var(kP + 0), Y = var(kP + 1), Z = var(kP + 2), W = var(kP + 3);
    MultiPoly a1 = var(0), a2 = var(1), a3 = var(2);
    switch (tag) {
    case 'A': return {X + a1 * W, Y + a2 * W, Z + a3 * W, W};
    case 'B': return {X + a1 * W, Y + a2 * W, W, Z};
    case 'C': return {X + a1 * W, W, Y, Z};
    case 'D': return {W, X, Y, Z};
    default: throw Error("case_system: unknown case tag");
    }
}

std::vector<MultiPoly> case_pins(const FieldCtxPtr& ctx, char tag) {
    auto var = [&](u32 i) { return MultiPoly::variable(ctx, 7, i); };
    auto one = MultiPoly::constant(ctx, 7, ctx->one());
    switch (tag) {
    case 'A': return {};
    case 'B': return {var(2) - one};
    case 'C': return {var(1) - one, var(2)};
    case 'D': return {var(0) - one, var(1), var(2)};
    default: throw Error("case_system: unknown case tag");
    }
}

MultiPoly to_param_ring(const MultiPoly& f) {
    // f must involve only variables 0..6
    std::vector<MTerm> terms;
    for (const auto& t : f.terms()) {
        for (u32 i = kP; i < kMaxVars; ++i)
            if (t.m.e[i]) throw Error("case_system: stray coordinate variable");
        terms.push_back(t);
    }
    return MultiPoly::from_terms(f.ctx(), 7, std::move(terms));
}

std::array<std::array<FieldElement, 4>, 4>
case_basis(const FieldCtxPtr& ctx, char tag, const FieldElement& a1,
           const FieldElement& a2, const FieldElement& a3) {
    const FieldElement z = ctx->zero(), o = ctx->one();
    switch (tag) {
    case 'A':
        return {{{o, z, z, -a1}, {z, o, z, -a2}, {z, z, o, -a3}, {z, z, z, o}}};
    case 'B':
        return {{{o, z, -a1, z}, {z, o, -a2, z}, {z, z, z, o}, {z, z, o, z}}};
    case 'C':
        return {{{o, -a1, z, z}, {z, z, o, z}, {z, z, z, o}, {z, o, z, z}}};
    default: // 'D'
        return {{{z, o, z, z}, {z, z, o, z}, {z, z, z, o}, {o, z, z, z}}};
    }
}

std::array<FieldElement, 4> case_a_vec(const FieldCtxPtr& ctx, char tag,
                                       const VarietyPoint& pt) {
    FieldElement one = ctx->one(), zero = ctx->zero();
    switch (tag) {
    case 'A': return {pt.coords[0], pt.coords[1], pt.coords[2], one};
    case 'B': return {pt.coords[0], pt.coords[1], one, zero};
    case 'C': return {pt.coords[0], one, zero, zero};
    default: return {one, zero, zero, zero};
    }
}

} // namespace

std::vector<MultiPoly> case_system(const MultiPoly& Q, const MultiPoly& P, char tag) {
    const auto& ctx = Q.ctx();
    MultiPoly q = lift_to_combined(Q), p = lift_to_combined(P);
    auto var = [&](u32 i) { return MultiPoly::variable(ctx, kMaxVars, i); };
    MultiPoly L = var(3) * var(kP + 0) + var(4) * var(kP + 1) +
                  var(5) * var(kP + 2) + var(6) * var(kP + 3);
    MultiPoly R = p - L * q;

    // apply the case's coordinate change
    std::vector<MultiPoly> images;
    for (u32 i = 0; i < kP; ++i) images.push_back(var(i));
    for (auto& im : case_images(ctx, tag)) images.push_back(im);
    R = R.subst_all(images);

    // coefficients of the ten cubic monomials containing W
    std::vector<MultiPoly> gens = case_pins(ctx, tag);
    for (u32 ex = 0; ex <= 3; ++ex)
        for (u32 ey = 0; ey + ex <= 3; ++ey)
            for (u32 ez = 0; ez + ey + ex <= 3; ++ez) {
                u32 ew = 3 - ex - ey - ez;
                if (ew == 0) continue;
                MultiPoly c = R;
                c = c.coeff_of_power(kP + 0, ex);
                c = c.coeff_of_power(kP + 1, ey);
                c = c.coeff_of_power(kP + 2, ez);
                c = c.coeff_of_power(kP + 3, ew);
                gens.push_back(to_param_ring(c));
            }
    return gens;
}

std::pair<std::vector<EllipticQuotient>, FieldCtxPtr>
compute_EQ(const MultiPoly& Q, const MultiPoly& P) {
    const auto& base = Q.ctx();
    struct CasePoints {
        char tag;
        std::vector<VarietyPoint> pts;
        FieldCtxPtr ctx;
    };
    std::vector<CasePoints> solved;
    FieldCtxPtr common = base;
    for (char tag : {'A', 'B', 'C', 'D'}) {
        auto gens = case_system(Q, P, tag);
        auto [pts, K] = solve_zero_dimensional(gens, 7);
        solved.push_back({tag, std::move(pts), K});
    }
    // unify fields (lcm of the per-case levels)
    u32 deg = base->degree();
    for (const auto& cp : solved) deg = std::lcm(deg, cp.ctx->degree());
    common = FieldCtx::get(base->p(), deg);

    std::vector<EllipticQuotient> out;
    for (auto& cp : solved) {
        for (auto& pt : cp.pts) {
            std::vector<FieldElement> coords = pt.coords;
            if (pt.ctx != common) {
                const Embedding& e = find_embedding(pt.ctx, common);
                for (auto& c : coords) c = e(c);
            }
            EllipticQuotient eq;
            eq.ctx = common;
            eq.case_tag = cp.tag;
            VarietyPoint lifted{common, coords};
            eq.a_vec = case_a_vec(common, cp.tag, lifted);
            eq.b_vec = {coords[3], coords[4], coords[5], coords[6]};
            eq.basis = case_basis(common, cp.tag, coords[0], coords[1], coords[2]);

            // rebuild R = P - L*Q over the common field and rewrite it in the
            // new coordinates; every W-term must cancel
            MultiPoly Qc = common == base ? Q : embed(Q, find_embedding(base, common));
            MultiPoly Pc = common == base ? P : embed(P, find_embedding(base, common));
            MultiPoly L = MultiPoly::zero(common, 4);
            for (u32 i = 0; i < 4; ++i)
                L = L + MultiPoly::variable(common, 4, i).scaled(eq.b_vec[i]);
            MultiPoly R = Pc - L * Qc;
            // (x,y,z,w) in terms of (X,Y,Z,W): invert the basis relations,
            // which for these shapes is the same substitution pattern
            std::vector<MultiPoly> imgs;
            {
                auto v = [&](u32 i) { return MultiPoly::variable(common, 4, i); };
                MultiPoly X = v(0), Y = v(1), Z = v(2), W = v(3);
                auto c = [&](const FieldElement& a) {
                    return MultiPoly::constant(common, 4, a);
                };
                switch (cp.tag) {
                case 'A':
                    imgs = {X + c(coords[0]) * W, Y + c(coords[1]) * W,
                            Z + c(coords[2]) * W, W};
                    break;
                case 'B':
                    imgs = {X + c(coords[0]) * W, Y + c(coords[1]) * W, W, Z};
                    break;
                case 'C':
                    imgs = {X + c(coords[0]) * W, W, Y, Z};
                    break;
                default:
                    imgs = {W, X, Y, Z};
                    break;
                }
            }
            MultiPoly Rnew = R.subst_all(imgs);
            bool w_free = true;
            for (const auto& t : Rnew.terms())
                if (t.m.e[3]) w_free = false;
            if (!w_free) {
                report_finding("compute_EQ: W-term survived substitution; point dropped");
                continue;
            }
            if (Rnew.is_zero() || Rnew.total_degree() < 3) {
                report_finding("compute_EQ: degenerate cubic discarded");
                continue;
            }
            eq.cubic = std::move(Rnew);
            out.push_back(std::move(eq));
        }
    }

    // distinct solutions have distinct normalized hyperplanes; enforce it
    for (std::size_t i = 0; i < out.size(); ++i)
        for (std::size_t j = i + 1; j < out.size(); ++j) {
            bool same = true;
            for (u32 k = 0; k < 4; ++k) same = same && out[i].a_vec[k] == out[j].a_vec[k];
            if (same) throw Error("compute_EQ: duplicate hyperplane datum");
        }

    if (common->degree() > base->degree())
        report_finding("compute_EQ: quotient data left the base field (level " +
                       std::to_string(common->degree() / 2) + ")");
    return {std::move(out), common};
}

} // namespace howe
