#include "howe/variety.hpp"

#include <algorithm>
#include <numeric>

namespace howe {

namespace {

bool is_unit_basis(const std::vector<MultiPoly>& basis) {
    return basis.size() == 1 && basis[0].leading_monomial().is_one();
}

// pure power of `var` among leading terms, for the zero-dimension criterion
bool var_bounded(const std::vector<MultiPoly>& basis, u32 var, u32 nvars) {
    for (const auto& g : basis) {
        const Monomial& lt = g.leading_monomial();
        if (!lt.e[var]) continue;
        bool pure = true;
        for (u32 i = 0; i < nvars; ++i)
            if (i != var && lt.e[i]) pure = false;
        if (pure) return true;
    }
    return false;
}

// the reduced lex basis element univariate in `var` (exists for 0-dim ideals)
const MultiPoly* find_eliminant(const std::vector<MultiPoly>& basis, u32 var, u32 nvars) {
    for (const auto& g : basis) {
        bool only_var = true;
        for (const auto& t : g.terms())
            for (u32 i = 0; i < nvars; ++i)
                if (i != var && t.m.e[i]) only_var = false;
        if (only_var && !g.is_zero()) return &g;
    }
    return nullptr;
}

void solve_rec(const std::vector<MultiPoly>& gens, u32 nvars, u32 active,
               const FieldCtxPtr& ctx, std::vector<FieldElement>& partial,
               std::vector<VarietyPoint>& out) {
    std::vector<MultiPoly> basis = buchberger(gens);
    if (basis.empty()) {
        // zero ideal: positive-dimensional unless no variables remain
        if (active > 0)
            throw NotZeroDimensional("solve: zero ideal with free variables");
        // fall through to emit the single (empty-suffix) point
    }
    if (is_unit_basis(basis)) return;
    if (active == 0) {
        VarietyPoint p;
        p.ctx = ctx;
        p.coords.assign(partial.rbegin(), partial.rend());
        out.push_back(std::move(p));
        return;
    }
    const u32 var = active - 1; // least remaining variable under lex
    const MultiPoly* elim = find_eliminant(basis, var, nvars);
    if (!elim)
        throw NotZeroDimensional("solve: no univariate eliminant in least variable");
    UniPoly f = elim->to_unipoly(var);

    for (const auto& [factor_poly, mult] : factor(f)) {
        (void)mult;
        FieldCtxPtr next_ctx = ctx;
        std::vector<FieldElement> roots;
        if (factor_poly.degree() == 1) {
            roots.push_back(-factor_poly.coeff(0));
        } else {
            auto [ext, emb] = extend_field(ctx, (u32)factor_poly.degree());
            (void)emb;
            next_ctx = ext;
            roots = roots_in_field(factor_poly, next_ctx);
        }
        for (const auto& r : roots) {
            std::vector<MultiPoly> next_gens;
            next_gens.reserve(basis.size());
            if (next_ctx == ctx) {
                for (const auto& g : basis) next_gens.push_back(g.eval_var(var, r));
            } else {
                const Embedding& e = find_embedding(ctx, next_ctx);
                for (const auto& g : basis)
                    next_gens.push_back(embed(g, e).eval_var(var, r));
            }
            std::size_t before = partial.size();
            if (next_ctx != ctx) {
                // lift the coordinates fixed so far
                const Embedding& e = find_embedding(ctx, next_ctx);
                for (auto& c : partial) c = e(c);
            }
            partial.push_back(r);
            solve_rec(next_gens, nvars, active - 1, next_ctx, partial, out);
            partial.resize(before);
            if (next_ctx != ctx) {
                // bring them back down for the sibling branches
                for (auto& c : partial) c = *descend(c, ctx);
            }
        }
    }
}

} // namespace

u64 staircase_dimension(const std::vector<MultiPoly>& basis, u32 nvars) {
    // per-variable caps exist for 0-dim ideals; enumerate below them
    std::vector<u32> cap(nvars, 0);
    for (u32 v = 0; v < nvars; ++v) {
        bool found = false;
        for (const auto& g : basis) {
            const Monomial& lt = g.leading_monomial();
            bool pure = lt.e[v] > 0;
            for (u32 i = 0; i < nvars && pure; ++i)
                if (i != v && lt.e[i]) pure = false;
            if (pure) {
                cap[v] = found ? std::min<u32>(cap[v], lt.e[v]) : lt.e[v];
                found = true;
            }
        }
        if (!found) throw NotZeroDimensional("staircase: unbounded variable");
    }
    u64 count = 0;
    Monomial m;
    // odometer over the box, test divisibility by leading terms
    std::vector<u32> idx(nvars, 0);
    for (;;) {
        for (u32 v = 0; v < nvars; ++v) m.e[v] = (std::uint16_t)idx[v];
        bool under = true;
        for (const auto& g : basis)
            if (g.leading_monomial().divides(m)) under = false;
        if (under) ++count;
        u32 v = 0;
        for (; v < nvars; ++v) {
            if (++idx[v] < cap[v]) break;
            idx[v] = 0;
        }
        if (v == nvars) break;
    }
    return count;
}

std::pair<std::vector<VarietyPoint>, FieldCtxPtr>
solve_zero_dimensional(const std::vector<MultiPoly>& gens, u32 nvars) {
    FieldCtxPtr ctx;
    for (const auto& g : gens)
        if (!g.is_zero()) ctx = g.ctx();
    if (!ctx) throw NotZeroDimensional("solve: empty generator set");

    // zero-dimension criterion on the top-level basis
    std::vector<MultiPoly> basis = buchberger(gens);
    if (!is_unit_basis(basis) && !basis.empty())
        for (u32 v = 0; v < nvars; ++v)
            if (!var_bounded(basis, v, nvars))
                throw NotZeroDimensional("solve: variable unbounded in lex basis");

    std::vector<VarietyPoint> pts;
    std::vector<FieldElement> partial;
    solve_rec(basis, nvars, nvars, ctx, partial, pts);
    if (pts.empty()) return {pts, ctx};

    // smallest even-degree canonical field containing every coordinate; the
    // per-branch fields need not be comparable, so coordinates move through
    // the compositum of all of them
    u32 big_deg = ctx->degree();
    u32 lcm_deg = ctx->degree();
    for (auto& p : pts) {
        big_deg = std::lcm(big_deg, p.ctx->degree());
        for (auto& c : p.coords)
            lcm_deg = std::lcm(lcm_deg, c.min_subfield_degree());
    }
    FieldCtxPtr common = FieldCtx::get(ctx->p(), lcm_deg);
    FieldCtxPtr big = FieldCtx::get(ctx->p(), big_deg);
    for (auto& p : pts) {
        if (p.ctx == common) continue;
        std::vector<FieldElement> moved;
        moved.reserve(p.coords.size());
        for (auto& c : p.coords) {
            FieldElement up = p.ctx == big ? c : find_embedding(p.ctx, big)(c);
            auto down = descend(up, common);
            if (!down) throw Error("solve: coordinate descent failed");
            moved.push_back(*down);
        }
        p.coords = std::move(moved);
        p.ctx = common;
    }
    // canonical order by serialized coordinates
    std::sort(pts.begin(), pts.end(), [](const VarietyPoint& a, const VarietyPoint& b) {
        for (std::size_t i = 0; i < a.coords.size(); ++i) {
            if (a.coords[i] != b.coords[i])
                return FieldElement::canonical_less(a.coords[i], b.coords[i]);
        }
        return false;
    });
    return {pts, common};
}

} // namespace howe
