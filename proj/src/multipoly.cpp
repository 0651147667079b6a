#include "howe/multipoly.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace howe {

namespace {
bool term_desc(const MTerm& a, const MTerm& b) {
    return Monomial::lex_less(b.m, a.m);
}
} // namespace

void MultiPoly::normalize() {
    std::sort(terms_.begin(), terms_.end(), term_desc);
    std::vector<MTerm> out;
    out.reserve(terms_.size());
    for (auto& t : terms_) {
        if (!out.empty() && out.back().m == t.m)
            out.back().c = out.back().c + t.c;
        else
            out.push_back(std::move(t));
        if (!out.empty() && out.back().c.is_zero()) out.pop_back();
    }
    terms_ = std::move(out);
}

MultiPoly MultiPoly::constant(const FieldCtxPtr& ctx, u32 nvars, const FieldElement& c) {
    MultiPoly f(ctx, nvars);
    if (!c.is_zero()) f.terms_.push_back({Monomial::one(), c});
    return f;
}

MultiPoly MultiPoly::variable(const FieldCtxPtr& ctx, u32 nvars, u32 i) {
    MultiPoly f(ctx, nvars);
    f.terms_.push_back({Monomial::var(i), ctx->one()});
    return f;
}

MultiPoly MultiPoly::from_terms(FieldCtxPtr ctx, u32 nvars, std::vector<MTerm> terms) {
    MultiPoly f(std::move(ctx), nvars);
    f.terms_ = std::move(terms);
    f.normalize();
    return f;
}

u32 MultiPoly::total_degree() const {
    u32 d = 0;
    for (const auto& t : terms_) d = std::max(d, t.m.total_degree());
    return d;
}

u32 MultiPoly::degree_in(u32 var) const {
    u32 d = 0;
    for (const auto& t : terms_) d = std::max<u32>(d, t.m.e[var]);
    return d;
}

bool MultiPoly::operator==(const MultiPoly& o) const {
    if (ctx_ != o.ctx_ || terms_.size() != o.terms_.size()) return false;
    for (std::size_t i = 0; i < terms_.size(); ++i)
        if (!(terms_[i].m == o.terms_[i].m) || terms_[i].c != o.terms_[i].c)
            return false;
    return true;
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
    if (ctx_ != o.ctx_) throw MixedContexts("multipoly: mixed contexts");
    MultiPoly r(ctx_, nvars_);
    r.terms_.reserve(terms_.size() + o.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < terms_.size() && j < o.terms_.size()) {
        if (terms_[i].m == o.terms_[j].m) {
            FieldElement c = terms_[i].c + o.terms_[j].c;
            if (!c.is_zero()) r.terms_.push_back({terms_[i].m, c});
            ++i, ++j;
        } else if (term_desc(terms_[i], o.terms_[j])) {
            r.terms_.push_back(terms_[i++]);
        } else {
            r.terms_.push_back(o.terms_[j++]);
        }
    }
    while (i < terms_.size()) r.terms_.push_back(terms_[i++]);
    while (j < o.terms_.size()) r.terms_.push_back(o.terms_[j++]);
    return r;
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly r(ctx_, nvars_);
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) r.terms_.push_back({t.m, -t.c});
    return r;
}

MultiPoly MultiPoly::operator-(const MultiPoly& o) const { return *this + (-o); }

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
    if (ctx_ != o.ctx_) throw MixedContexts("multipoly: mixed contexts");
    std::map<Monomial, FieldElement, bool (*)(const Monomial&, const Monomial&)> acc(
        Monomial::lex_less);
    for (const auto& a : terms_)
        for (const auto& b : o.terms_) {
            Monomial m = a.m * b.m;
            FieldElement c = a.c * b.c;
            auto it = acc.find(m);
            if (it == acc.end())
                acc.emplace(m, c);
            else
                it->second = it->second + c;
        }
    MultiPoly r(ctx_, nvars_);
    r.terms_.reserve(acc.size());
    for (auto it = acc.rbegin(); it != acc.rend(); ++it)
        if (!it->second.is_zero()) r.terms_.push_back({it->first, it->second});
    return r;
}

MultiPoly MultiPoly::scaled(const FieldElement& c) const {
    MultiPoly r(ctx_, nvars_);
    if (c.is_zero()) return r;
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) r.terms_.push_back({t.m, t.c * c});
    return r;
}

MultiPoly MultiPoly::monic() const {
    if (is_zero()) return *this;
    return scaled(leading_coeff().inv());
}

MultiPoly MultiPoly::mul_term(const Monomial& m, const FieldElement& c) const {
    MultiPoly r(ctx_, nvars_);
    if (c.is_zero()) return r;
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) r.terms_.push_back({t.m * m, t.c * c});
    return r;
}

FieldElement MultiPoly::coeff_of(const Monomial& m) const {
    for (const auto& t : terms_)
        if (t.m == m) return t.c;
    return ctx_->zero();
}

FieldElement MultiPoly::eval(const std::vector<FieldElement>& coords) const {
    FieldElement acc = ctx_->zero();
    for (const auto& t : terms_) {
        FieldElement v = t.c;
        for (u32 i = 0; i < nvars_; ++i)
            for (u32 k = 0; k < t.m.e[i]; ++k) v = v * coords[i];
        acc = acc + v;
    }
    return acc;
}

MultiPoly MultiPoly::eval_var(u32 var, const FieldElement& value) const {
    std::vector<MTerm> out;
    out.reserve(terms_.size());
    std::vector<FieldElement> pw = {ctx_->one()};
    for (const auto& t : terms_) {
        u32 k = t.m.e[var];
        while (pw.size() <= k) pw.push_back(pw.back() * value);
        Monomial m = t.m;
        m.e[var] = 0;
        out.push_back({m, t.c * pw[k]});
    }
    return from_terms(ctx_, nvars_, std::move(out));
}

MultiPoly MultiPoly::subst_all(const std::vector<MultiPoly>& images) const {
    std::vector<std::vector<MultiPoly>> pw(nvars_); // images[i]^(k+1) caches
    MultiPoly acc = zero(ctx_, nvars_);
    for (const auto& t : terms_) {
        MultiPoly prod = constant(ctx_, nvars_, t.c);
        for (u32 i = 0; i < nvars_; ++i) {
            u32 k = t.m.e[i];
            if (!k) continue;
            auto& cache = pw[i];
            if (cache.empty()) cache.push_back(images[i]);
            while (cache.size() < k) cache.push_back(cache.back() * images[i]);
            prod = prod * cache[k - 1];
        }
        acc = acc + prod;
    }
    return acc;
}

UniPoly MultiPoly::to_unipoly(u32 var) const {
    std::vector<FieldElement> coeffs(degree_in(var) + 1, ctx_->zero());
    for (const auto& t : terms_) {
        for (u32 i = 0; i < nvars_; ++i)
            if (i != var && t.m.e[i])
                throw Error("multipoly: not univariate in the requested variable");
        coeffs[t.m.e[var]] = coeffs[t.m.e[var]] + t.c;
    }
    return UniPoly::from_coeffs(ctx_, std::move(coeffs));
}

MultiPoly MultiPoly::coeff_of_power(u32 var, u32 k) const {
    std::vector<MTerm> out;
    for (const auto& t : terms_) {
        if (t.m.e[var] != k) continue;
        Monomial m = t.m;
        m.e[var] = 0;
        out.push_back({m, t.c});
    }
    return from_terms(ctx_, nvars_, std::move(out));
}

std::string MultiPoly::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& t : terms_) {
        if (!first) os << " + ";
        first = false;
        os << t.c.str();
        for (u32 i = 0; i < nvars_; ++i)
            if (t.m.e[i]) os << "*v" << i << "^" << t.m.e[i];
    }
    return os.str();
}

MultiPoly embed(const MultiPoly& f, const Embedding& e) {
    std::vector<MTerm> out;
    out.reserve(f.terms().size());
    for (const auto& t : f.terms()) out.push_back({t.m, e(t.c)});
    return MultiPoly::from_terms(e.dst(), f.nvars(), std::move(out));
}

// --- division and Buchberger -------------------------------------------------

MultiPoly normal_form(const MultiPoly& f, const std::vector<MultiPoly>& basis) {
    MultiPoly h = f;
    std::vector<MTerm> rterms;
    while (!h.is_zero()) {
        bool reduced = false;
        for (const auto& b : basis) {
            if (b.is_zero()) continue;
            if (b.leading_monomial().divides(h.leading_monomial())) {
                Monomial q = h.leading_monomial() / b.leading_monomial();
                FieldElement c = h.leading_coeff() / b.leading_coeff();
                h = h - b.mul_term(q, c);
                reduced = true;
                break;
            }
        }
        if (!reduced) {
            rterms.push_back(h.terms().front());
            h = h - MultiPoly::from_terms(h.ctx(), h.nvars(), {h.terms().front()});
        }
    }
    return MultiPoly::from_terms(f.ctx(), f.nvars(), std::move(rterms));
}

namespace {

MultiPoly s_poly(const MultiPoly& f, const MultiPoly& g) {
    Monomial l = Monomial::lcm(f.leading_monomial(), g.leading_monomial());
    MultiPoly a = f.mul_term(l / f.leading_monomial(), f.leading_coeff().inv());
    MultiPoly b = g.mul_term(l / g.leading_monomial(), g.leading_coeff().inv());
    return a - b;
}

struct GBPair {
    u32 i, j; // indices into G, i < j
    Monomial lcm;
};

// normal selection under the term order, deterministic tie-break
bool pair_less(const GBPair& a, const GBPair& b) {
    if (!(a.lcm == b.lcm)) return Monomial::lex_less(a.lcm, b.lcm);
    if (a.j != b.j) return a.j < b.j;
    return a.i < b.i;
}

// Gebauer-Moeller update of the pair queue when h joins the basis
void gm_update(std::vector<MultiPoly>& G, std::vector<GBPair>& B, MultiPoly h) {
    const u32 hidx = (u32)G.size();
    const Monomial th = h.leading_monomial();

    std::vector<GBPair> C;
    C.reserve(G.size());
    for (u32 k = 0; k < G.size(); ++k)
        C.push_back({k, hidx, Monomial::lcm(G[k].leading_monomial(), th)});

    std::vector<GBPair> D;
    for (std::size_t n = 0; n < C.size(); ++n) {
        const GBPair& p = C[n];
        bool keep = Monomial::coprime(G[p.i].leading_monomial(), th);
        if (!keep) {
            keep = true;
            for (std::size_t m2 = n + 1; m2 < C.size() && keep; ++m2)
                if (C[m2].lcm.divides(p.lcm) && !(C[m2].lcm == p.lcm)) keep = false;
            for (std::size_t m2 = 0; m2 < D.size() && keep; ++m2)
                if (D[m2].lcm.divides(p.lcm) && !(D[m2].lcm == p.lcm)) keep = false;
        }
        if (keep) D.push_back(p);
    }
    // Buchberger's product criterion
    std::vector<GBPair> E;
    for (const auto& p : D)
        if (!Monomial::coprime(G[p.i].leading_monomial(), th)) E.push_back(p);

    // prune old pairs whose lcm is strictly covered by h
    std::vector<GBPair> kept;
    kept.reserve(B.size());
    for (const auto& p : B) {
        if (!th.divides(p.lcm) ||
            Monomial::lcm(G[p.i].leading_monomial(), th) == p.lcm ||
            Monomial::lcm(G[p.j].leading_monomial(), th) == p.lcm)
            kept.push_back(p);
    }
    B = std::move(kept);
    B.insert(B.end(), E.begin(), E.end());
    G.push_back(std::move(h));
}

} // namespace

std::vector<MultiPoly> buchberger(const std::vector<MultiPoly>& gens) {
    FieldCtxPtr ctx;
    u32 nvars = 0;
    for (const auto& g : gens) {
        if (g.is_zero()) continue;
        if (!ctx) {
            ctx = g.ctx();
            nvars = g.nvars();
        } else if (ctx != g.ctx() || nvars != g.nvars()) {
            throw MixedContexts("buchberger: generators in different rings");
        }
    }
    if (!ctx) return {};

    std::vector<MultiPoly> G;
    std::vector<GBPair> B;
    for (const auto& g : gens) {
        if (g.is_zero()) continue;
        MultiPoly r = normal_form(g, G);
        if (!r.is_zero()) gm_update(G, B, r.monic());
    }
    while (!B.empty()) {
        auto it = std::min_element(B.begin(), B.end(), pair_less);
        GBPair p = *it;
        B.erase(it);
        MultiPoly r = normal_form(s_poly(G[p.i], G[p.j]), G);
        if (!r.is_zero()) gm_update(G, B, r.monic());
    }

    // minimalize: drop elements whose leading term another one divides
    std::vector<MultiPoly> min_basis;
    for (std::size_t i = 0; i < G.size(); ++i) {
        bool redundant = false;
        for (std::size_t j = 0; j < G.size() && !redundant; ++j) {
            if (i == j) continue;
            if (G[j].leading_monomial().divides(G[i].leading_monomial()))
                redundant = !(G[j].leading_monomial() == G[i].leading_monomial()) || j < i;
        }
        if (!redundant) min_basis.push_back(G[i]);
    }
    // auto-reduce tails
    std::vector<MultiPoly> reduced;
    for (std::size_t i = 0; i < min_basis.size(); ++i) {
        std::vector<MultiPoly> others;
        others.reserve(min_basis.size() - 1);
        for (std::size_t j = 0; j < min_basis.size(); ++j)
            if (j != i) others.push_back(min_basis[j]);
        MultiPoly r = normal_form(min_basis[i], others);
        if (!r.is_zero()) reduced.push_back(r.monic());
    }
    std::sort(reduced.begin(), reduced.end(), [](const MultiPoly& a, const MultiPoly& b) {
        return Monomial::lex_less(b.leading_monomial(), a.leading_monomial());
    });
    return reduced;
}

bool is_groebner_basis(const std::vector<MultiPoly>& basis) {
    for (std::size_t i = 0; i < basis.size(); ++i)
        for (std::size_t j = i + 1; j < basis.size(); ++j)
            if (!normal_form(s_poly(basis[i], basis[j]), basis).is_zero())
                return false;
    return true;
}

} // namespace howe
