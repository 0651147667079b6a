#include "howe/unipoly.hpp"

#include "howe/kernels.hpp"
#include "howe/prng.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <mutex>
#include <sstream>

namespace howe {

void UniPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

UniPoly UniPoly::from_coeffs(FieldCtxPtr ctx, std::vector<FieldElement> coeffs) {
    UniPoly f(std::move(ctx));
    for (const auto& c : coeffs)
        if (c.ctx() != f.ctx_)
            throw MixedContexts("unipoly: coefficient from another field");
    f.coeffs_ = std::move(coeffs);
    f.trim();
    return f;
}

UniPoly UniPoly::from_ints(const FieldCtxPtr& ctx, const std::vector<u64>& ints) {
    std::vector<FieldElement> c;
    c.reserve(ints.size());
    for (u64 v : ints) c.push_back(ctx->from_int(v));
    return from_coeffs(ctx, std::move(c));
}

UniPoly UniPoly::monomial(const FieldCtxPtr& ctx, u32 deg, const FieldElement& c) {
    UniPoly f(ctx);
    if (c.is_zero()) return f;
    f.coeffs_.assign(deg, ctx->zero());
    f.coeffs_.push_back(c);
    return f;
}

FieldElement UniPoly::coeff(u32 i) const {
    if (i < coeffs_.size()) return coeffs_[i];
    return ctx_->zero();
}

bool UniPoly::operator==(const UniPoly& o) const {
    return ctx_ == o.ctx_ && coeffs_ == o.coeffs_;
}

UniPoly UniPoly::operator+(const UniPoly& o) const {
    if (ctx_ != o.ctx_) throw MixedContexts("unipoly: mixed contexts");
    UniPoly r(ctx_);
    r.coeffs_.reserve(std::max(coeffs_.size(), o.coeffs_.size()));
    for (std::size_t i = 0; i < std::max(coeffs_.size(), o.coeffs_.size()); ++i)
        r.coeffs_.push_back(coeff(i) + o.coeff(i));
    r.trim();
    return r;
}

UniPoly UniPoly::operator-(const UniPoly& o) const {
    if (ctx_ != o.ctx_) throw MixedContexts("unipoly: mixed contexts");
    UniPoly r(ctx_);
    for (std::size_t i = 0; i < std::max(coeffs_.size(), o.coeffs_.size()); ++i)
        r.coeffs_.push_back(coeff(i) - o.coeff(i));
    r.trim();
    return r;
}

UniPoly UniPoly::operator*(const UniPoly& o) const {
    if (ctx_ != o.ctx_) throw MixedContexts("unipoly: mixed contexts");
    if (is_zero() || o.is_zero()) return UniPoly(ctx_);
    const u32 d = ctx_->degree();
    const u32 p = ctx_->p();
    const std::size_t na = coeffs_.size(), nb = o.coeffs_.size();
    const std::size_t nout = na + nb - 1;

    // component planes, one unreduced u64 accumulator plane per g-degree
    std::vector<std::vector<u32>> ac(d, std::vector<u32>(na)),
        bc(d, std::vector<u32>(nb));
    for (std::size_t i = 0; i < na; ++i)
        for (u32 c = 0; c < d; ++c) ac[c][i] = coeffs_[i].coeff(c);
    for (std::size_t j = 0; j < nb; ++j)
        for (u32 c = 0; c < d; ++c) bc[c][j] = o.coeffs_[j].coeff(c);

    std::vector<std::vector<u64>> acc(2 * d - 1, std::vector<u64>(nout, 0));
    for (u32 i = 0; i < d; ++i)
        for (u32 j = 0; j < d; ++j)
            kern::conv_accum(ac[i].data(), na, bc[j].data(), nb, acc[i + j].data());

    // fold g^(d+k) back into the power basis
    const auto& red = ctx_->reduction_rows();
    UniPoly r(ctx_);
    r.coeffs_.reserve(nout);
    std::vector<u32> tmp(d);
    for (std::size_t s = 0; s < nout; ++s) {
        std::vector<u64> wide(d, 0);
        for (u32 c = 0; c < d; ++c) wide[c] = acc[c][s];
        for (u32 k = 0; k + 1 < d; ++k) {
            u64 t = acc[d + k][s] % p;
            if (!t) continue;
            for (u32 j = 0; j < d; ++j) wide[j] += t * red[k][j];
        }
        for (u32 c = 0; c < d; ++c) tmp[c] = (u32)(wide[c] % p);
        r.coeffs_.push_back(ctx_->from_coeffs(tmp));
    }
    r.trim();
    return r;
}

UniPoly UniPoly::scaled(const FieldElement& c) const {
    UniPoly r(ctx_);
    if (c.is_zero()) return r;
    r.coeffs_.reserve(coeffs_.size());
    for (const auto& a : coeffs_) r.coeffs_.push_back(a * c);
    r.trim();
    return r;
}

UniPoly UniPoly::monic() const {
    if (is_zero()) return *this;
    return scaled(lc().inv());
}

UniPoly UniPoly::derivative() const {
    UniPoly r(ctx_);
    for (std::size_t i = 1; i < coeffs_.size(); ++i)
        r.coeffs_.push_back(coeffs_[i] * ctx_->from_int(i));
    r.trim();
    return r;
}

UniPoly UniPoly::pow(u64 e) const {
    UniPoly r = from_ints(ctx_, {1});
    UniPoly b = *this;
    while (e) {
        if (e & 1) r = r * b;
        if (e >>= 1) b = b * b;
    }
    return r;
}

std::pair<UniPoly, UniPoly> UniPoly::divrem(const UniPoly& d) const {
    if (ctx_ != d.ctx_) throw MixedContexts("unipoly: mixed contexts");
    if (d.is_zero()) throw ZeroPolynomial("unipoly: division by zero polynomial");
    UniPoly q(ctx_), r = *this;
    if (r.degree() < d.degree()) return {q, r};
    q.coeffs_.assign(r.coeffs_.size() - d.coeffs_.size() + 1, ctx_->zero());
    FieldElement lead_inv = d.lc().inv();
    while (!r.is_zero() && r.degree() >= d.degree()) {
        u32 shift = r.degree() - d.degree();
        FieldElement c = r.lc() * lead_inv;
        q.coeffs_[shift] = c;
        for (std::size_t j = 0; j < d.coeffs_.size(); ++j)
            r.coeffs_[shift + j] = r.coeffs_[shift + j] - c * d.coeffs_[j];
        r.trim();
    }
    q.trim();
    return {q, r};
}

FieldElement UniPoly::eval(const FieldElement& x) const {
    FieldElement acc = ctx_->zero();
    for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * x + coeffs_[i];
    return acc;
}

UniPoly UniPoly::powmod(const BigUInt& e, const UniPoly& mod) const {
    UniPoly r = from_ints(ctx_, {1});
    if (e.is_zero()) return r % mod;
    UniPoly b = *this % mod;
    for (std::size_t i = e.bit_length(); i-- > 0;) {
        r = (r * r) % mod;
        if (e.bit(i)) r = (r * b) % mod;
    }
    return r;
}

std::string UniPoly::str() const {
    std::ostringstream os;
    if (is_zero()) return "0";
    for (std::size_t i = coeffs_.size(); i-- > 0;) {
        if (!coeffs_[i].is_zero()) {
            os << coeffs_[i].str() << "*x^" << i;
            if (i) os << " + ";
        }
    }
    return os.str();
}

UniPoly gcd_monic(const UniPoly& f, const UniPoly& g) {
    if (f.ctx() != g.ctx()) throw MixedContexts("gcd: mixed contexts");
    UniPoly a = f, b = g;
    while (!b.is_zero()) {
        UniPoly r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

FieldElement resultant(const UniPoly& f, const UniPoly& g) {
    if (f.ctx() != g.ctx()) throw MixedContexts("resultant: mixed contexts");
    if (f.is_zero() || g.is_zero())
        throw ZeroPolynomial("resultant: zero input");
    const auto& ctx = f.ctx();
    const int m = f.degree(), n = g.degree();
    if (m == 0 && n == 0) return ctx->one();
    const int size = m + n;
    // Sylvester matrix, rows of f first, descending coefficients
    std::vector<std::vector<FieldElement>> a(size, std::vector<FieldElement>(size, ctx->zero()));
    for (int r = 0; r < n; ++r)
        for (int k = 0; k <= m; ++k) a[r][r + k] = f.coeff(m - k);
    for (int r = 0; r < m; ++r)
        for (int k = 0; k <= n; ++k) a[n + r][r + k] = g.coeff(n - k);
    // Gaussian elimination, tracking the determinant
    FieldElement det = ctx->one();
    for (int col = 0; col < size; ++col) {
        int pivot = -1;
        for (int r = col; r < size; ++r)
            if (!a[r][col].is_zero()) {
                pivot = r;
                break;
            }
        if (pivot < 0) return ctx->zero();
        if (pivot != col) {
            std::swap(a[pivot], a[col]);
            det = -det;
        }
        det = det * a[col][col];
        FieldElement inv = a[col][col].inv();
        for (int r = col + 1; r < size; ++r) {
            if (a[r][col].is_zero()) continue;
            FieldElement fac = a[r][col] * inv;
            for (int c = col; c < size; ++c)
                a[r][c] = a[r][c] - fac * a[col][c];
        }
    }
    return det;
}

// --- factorization ----------------------------------------------------------

namespace {

u64 poly_seed(const UniPoly& f) {
    std::vector<u32> bytes;
    bytes.push_back(f.ctx()->p());
    bytes.push_back(f.ctx()->degree());
    for (const auto& c : f.coeffs())
        for (u32 i = 0; i < c.size(); ++i) bytes.push_back(c.coeff(i));
    return derive_seed(bytes.data(), bytes.size() * sizeof(u32));
}

UniPoly random_poly_below(const FieldCtxPtr& ctx, int deg, Prng& rng) {
    std::vector<FieldElement> c;
    for (int i = 0; i < deg; ++i) {
        std::vector<u32> v(ctx->degree());
        for (auto& x : v) x = (u32)rng.below(ctx->p());
        c.push_back(ctx->from_coeffs(v));
    }
    return UniPoly::from_coeffs(ctx, std::move(c));
}

// inverse Frobenius on coefficients: a -> a^(p^(d-1))
FieldElement pth_root(const FieldElement& a) {
    return a.frobenius(a.ctx()->degree() == 1 ? 0 : a.ctx()->degree() - 1);
}

using Factors = std::vector<std::pair<UniPoly, u32>>;

// char-p square-free decomposition of a monic polynomial
void squarefree_decompose(const UniPoly& f, u32 mult, Factors& out) {
    const auto& ctx = f.ctx();
    const u32 p = ctx->p();
    UniPoly fp = f.derivative();
    if (fp.is_zero()) {
        // f = u(x^p); pull out the p-th root and recurse
        std::vector<FieldElement> c;
        for (u32 i = 0; i * p <= (u32)f.degree(); ++i)
            c.push_back(pth_root(f.coeff(i * p)));
        squarefree_decompose(UniPoly::from_coeffs(ctx, std::move(c)), mult * p, out);
        return;
    }
    UniPoly c = gcd_monic(f, fp);
    UniPoly w = (f / c).monic();
    u32 i = 1;
    UniPoly one = UniPoly::from_ints(ctx, {1});
    while (!(w == one)) {
        UniPoly y = gcd_monic(w, c);
        UniPoly z = (w / y).monic();
        if (!(z == one)) out.emplace_back(z, mult * i);
        w = std::move(y);
        c = (c / w).monic();
        ++i;
    }
    if (!(c == one)) {
        std::vector<FieldElement> cc;
        for (u32 k = 0; k * p <= (u32)c.degree(); ++k)
            cc.push_back(pth_root(c.coeff(k * p)));
        squarefree_decompose(UniPoly::from_coeffs(ctx, std::move(cc)), mult * p, out);
    }
}

// split a product of degree-d irreducibles (Cantor-Zassenhaus, odd char)
void equal_degree_split(const UniPoly& f, u32 d, Prng& rng,
                        std::vector<UniPoly>& out) {
    if ((u32)f.degree() == d) {
        out.push_back(f.monic());
        return;
    }
    const auto& ctx = f.ctx();
    BigUInt e = BigUInt::power(ctx->p(), ctx->degree() * d);
    e.sub_small(1);
    e.shr1();
    UniPoly one = UniPoly::from_ints(ctx, {1});
    for (;;) {
        UniPoly r = random_poly_below(ctx, f.degree(), rng);
        if (r.degree() < 1) continue;
        UniPoly h = r.powmod(e, f) - one;
        UniPoly g = gcd_monic(h, f);
        if (g.degree() > 0 && g.degree() < f.degree()) {
            equal_degree_split(g, d, rng, out);
            equal_degree_split((f / g).monic(), d, rng, out);
            return;
        }
    }
}

void distinct_degree_then_split(const UniPoly& f, u32 mult, Prng& rng, Factors& out) {
    const auto& ctx = f.ctx();
    BigUInt q = BigUInt::power(ctx->p(), ctx->degree());
    UniPoly x = UniPoly::from_ints(ctx, {0, 1});
    UniPoly h = x;
    UniPoly rest = f;
    for (u32 k = 1; rest.degree() >= 2 * (int)k; ++k) {
        h = h.powmod(q, rest);
        UniPoly g = gcd_monic(h - x, rest);
        if (g.degree() > 0) {
            std::vector<UniPoly> irr;
            equal_degree_split(g, k, rng, irr);
            for (auto& fi : irr) out.emplace_back(std::move(fi), mult);
            rest = (rest / g).monic();
            h = h % rest;
        }
    }
    if (rest.degree() > 0) out.emplace_back(rest, mult);
}

bool factor_less(const std::pair<UniPoly, u32>& a, const std::pair<UniPoly, u32>& b) {
    if (a.first.degree() != b.first.degree())
        return a.first.degree() < b.first.degree();
    for (int i = a.first.degree(); i >= 0; --i) {
        const FieldElement ca = a.first.coeff(i), cb = b.first.coeff(i);
        if (ca != cb) return FieldElement::canonical_less(ca, cb);
    }
    return a.second < b.second;
}

} // namespace

std::vector<std::pair<UniPoly, u32>> factor(const UniPoly& f) {
    if (f.is_zero()) throw ZeroPolynomial("factor: zero polynomial");
    if (f.degree() == 0) return {};
    Prng rng(poly_seed(f));
    Factors sqf;
    squarefree_decompose(f.monic(), 1, sqf);
    Factors out;
    for (const auto& [g, m] : sqf) distinct_degree_then_split(g, m, rng, out);
    std::sort(out.begin(), out.end(), factor_less);
    return out;
}

bool is_irreducible(const UniPoly& f) {
    if (f.is_zero() || f.degree() == 0) return false;
    if (f.degree() == 1) return true;
    auto fs = factor(f);
    return fs.size() == 1 && fs[0].second == 1;
}

std::vector<FieldElement> roots_in_own_field(const UniPoly& f) {
    if (f.is_zero()) throw ZeroPolynomial("roots: zero polynomial");
    const auto& ctx = f.ctx();
    std::vector<FieldElement> roots;
    if (f.degree() < 1) return roots;
    // product of the distinct linear factors: gcd(f, x^q - x)
    BigUInt q = BigUInt::power(ctx->p(), ctx->degree());
    UniPoly x = UniPoly::from_ints(ctx, {0, 1});
    UniPoly xq = x.powmod(q, f);
    UniPoly lin = gcd_monic(xq - x, f);
    if (lin.degree() < 1) return roots;
    Prng rng(poly_seed(f));
    std::vector<UniPoly> parts;
    equal_degree_split(lin, 1, rng, parts);
    roots.reserve(parts.size());
    for (const auto& l : parts) roots.push_back(-l.coeff(0));
    std::sort(roots.begin(), roots.end(), FieldElement::canonical_less);
    return roots;
}

std::vector<FieldElement> roots_in_field(const UniPoly& f, const FieldCtxPtr& target) {
    if (f.is_zero()) throw ZeroPolynomial("roots: zero polynomial");
    if (target == f.ctx()) return roots_in_own_field(f);
    const Embedding& e = find_embedding(f.ctx(), target);
    return roots_in_own_field(embed(f, e));
}

UniPoly embed(const UniPoly& f, const Embedding& e) {
    std::vector<FieldElement> c;
    c.reserve(f.coeffs().size());
    for (const auto& a : f.coeffs()) c.push_back(e(a));
    return UniPoly::from_coeffs(e.dst(), std::move(c));
}

// --- tower operations needing root extraction --------------------------------

const Embedding& find_embedding(const FieldCtxPtr& src, const FieldCtxPtr& dst) {
    if (src->p() != dst->p() || dst->degree() % src->degree() != 0)
        throw NotAnExtension("find_embedding: target does not extend source");

    static std::mutex mu;
    static std::map<std::tuple<u32, u32, u32>, Embedding> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_tuple(src->p(), src->degree(), dst->degree());
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;

    std::vector<FieldElement> powers;
    if (src == dst) {
        FieldElement g = src->generator(), acc = src->one();
        for (u32 k = 0; k < src->degree(); ++k) {
            powers.push_back(acc);
            acc = acc * g;
        }
    } else {
        // canonical root of the source modulus in the destination field
        std::vector<FieldElement> mod_lift;
        for (u32 c : src->modulus()) mod_lift.push_back(dst->from_int(c));
        UniPoly m = UniPoly::from_coeffs(dst, std::move(mod_lift));
        auto roots = roots_in_own_field(m);
        if (roots.empty())
            throw Error("find_embedding: source modulus has no root in target");
        FieldElement r = roots.front(), acc = dst->one();
        for (u32 k = 0; k < src->degree(); ++k) {
            powers.push_back(acc);
            acc = acc * r;
        }
    }
    auto [pos, inserted] = cache.emplace(key, Embedding(src, dst, std::move(powers)));
    (void)inserted;
    return pos->second;
}

std::pair<FieldCtxPtr, Embedding> extend_field(const FieldCtxPtr& ctx, u32 d) {
    if (d == 0) throw Error("extend_field: d must be positive");
    FieldCtxPtr target = FieldCtx::get(ctx->p(), ctx->degree() * d);
    return {target, find_embedding(ctx, target)};
}

std::optional<FieldElement> descend(const FieldElement& x, const FieldCtxPtr& small) {
    const auto& big = x.ctx();
    if (small == big) return x;
    const Embedding& e = find_embedding(small, big);
    const u32 p = big->p();
    const u32 rows = big->degree(), cols = small->degree();
    // solve  sum_k y_k * emb(g^k) = x  over F_p
    std::vector<std::vector<u32>> m(rows, std::vector<u32>(cols + 1, 0));
    for (u32 k = 0; k < cols; ++k) {
        std::vector<u32> v(cols, 0);
        v[k] = 1;
        FieldElement img = e(small->from_coeffs(v));
        for (u32 r = 0; r < rows; ++r) m[r][k] = img.coeff(r);
    }
    for (u32 r = 0; r < rows; ++r) m[r][cols] = x.coeff(r);
    // Gaussian elimination
    u32 rank = 0;
    std::vector<int> pivot_col(rows, -1);
    for (u32 c = 0; c < cols && rank < rows; ++c) {
        u32 pr = rank;
        while (pr < rows && m[pr][c] == 0) ++pr;
        if (pr == rows) continue;
        std::swap(m[pr], m[rank]);
        u32 inv = mod_inv(m[rank][c], p);
        for (u32 j = c; j <= cols; ++j) m[rank][j] = (u32)((u64)m[rank][j] * inv % p);
        for (u32 r = 0; r < rows; ++r) {
            if (r == rank || m[r][c] == 0) continue;
            u64 f = m[r][c];
            for (u32 j = c; j <= cols; ++j)
                m[r][j] = (u32)((m[r][j] + (p - (u32)((f * m[rank][j]) % p))) % p);
        }
        pivot_col[rank] = (int)c;
        ++rank;
    }
    for (u32 r = rank; r < rows; ++r)
        if (m[r][cols] != 0) return std::nullopt; // inconsistent: not in subfield
    std::vector<u32> y(cols, 0);
    for (u32 r = 0; r < rank; ++r)
        if (pivot_col[r] >= 0) y[pivot_col[r]] = m[r][cols];
    return small->from_coeffs(y);
}

} // namespace howe
