#include "howe/field.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <mutex>
#include <sstream>

namespace howe {

bool is_prime(u64 n) {
    if (n < 2) return false;
    for (u64 d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

u64 mod_pow(u64 base, u64 exp, u64 mod) {
    u64 r = 1 % mod;
    base %= mod;
    while (exp) {
        if (exp & 1) r = (unsigned __int128)r * base % mod;
        base = (unsigned __int128)base * base % mod;
        exp >>= 1;
    }
    return r;
}

u32 mod_inv(u32 a, u32 p) {
    // extended Euclid
    std::int64_t t = 0, new_t = 1;
    std::int64_t r = p, new_r = a % p;
    while (new_r != 0) {
        std::int64_t q = r / new_r;
        std::swap(t -= q * new_t, new_t);
        std::swap(r -= q * new_r, new_r);
    }
    assert(r == 1 && "mod_inv of non-unit");
    if (t < 0) t += p;
    return (u32)t;
}

// --- raw F_p[x] helpers for modulus construction ----------------------------

namespace {

using RawPoly = std::vector<u32>; // little-endian

void raw_trim(RawPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

RawPoly raw_mulmod(const RawPoly& a, const RawPoly& b, const RawPoly& f, u32 p) {
    if (a.empty() || b.empty()) return {};
    std::vector<u64> wide(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            wide[i + j] += (u64)a[i] * b[j];
    RawPoly r(wide.size());
    for (std::size_t i = 0; i < wide.size(); ++i) r[i] = (u32)(wide[i] % p);
    // reduce mod monic f
    const std::size_t d = f.size() - 1;
    for (std::size_t i = r.size(); i-- > d;) {
        u32 c = r[i];
        if (!c) continue;
        r[i] = 0;
        for (std::size_t j = 0; j < d; ++j) {
            u64 v = (u64)c * (p - f[j] % p);
            r[i - d + j] = (u32)((r[i - d + j] + v) % p);
        }
    }
    r.resize(d);
    raw_trim(r);
    return r;
}

RawPoly raw_powmod(RawPoly base, u64 e, const RawPoly& f, u32 p) {
    RawPoly r = {1};
    while (e) {
        if (e & 1) r = raw_mulmod(r, base, f, p);
        base = raw_mulmod(base, base, f, p);
        e >>= 1;
    }
    return r;
}

RawPoly raw_gcd(RawPoly a, RawPoly b, u32 p) {
    raw_trim(a);
    raw_trim(b);
    while (!b.empty()) {
        // a mod b
        u32 lead_inv = mod_inv(b.back(), p);
        while (a.size() >= b.size() && !a.empty()) {
            u32 c = (u32)((u64)a.back() * lead_inv % p);
            std::size_t shift = a.size() - b.size();
            for (std::size_t j = 0; j < b.size(); ++j) {
                u64 v = (u64)c * b[j] % p;
                a[shift + j] = (u32)((a[shift + j] + p - v) % p);
            }
            raw_trim(a);
        }
        std::swap(a, b);
    }
    return a;
}

bool raw_irreducible(const RawPoly& f, u32 p) {
    const std::size_t d = f.size() - 1;
    if (d == 1) return true;
    RawPoly x = {0, 1};
    // y_k = x^(p^k) mod f by iterated p-th powering
    std::vector<RawPoly> frob(d + 1);
    frob[0] = x;
    for (std::size_t k = 1; k <= d; ++k)
        frob[k] = raw_powmod(frob[k - 1], p, f, p);
    if (frob[d] != x) return false;
    for (std::size_t r = 2; r <= d; ++r) {
        if (d % r != 0 || !is_prime(r)) continue;
        RawPoly diff = frob[d / r];
        if (diff.size() < 2) diff.resize(2, 0);
        diff[1] = (diff[1] + p - 1) % p;
        raw_trim(diff);
        RawPoly g = raw_gcd(diff, f, p);
        if (g.size() != 1) return false;
    }
    return true;
}

} // namespace

// --- FieldCtx ---------------------------------------------------------------

FieldCtx::FieldCtx(u32 p, u32 degree, std::vector<u32> modulus)
    : p_(p), degree_(degree), modulus_(std::move(modulus)) {
    // g^(d+k) mod modulus, k = 0 .. d-2
    if (degree_ >= 2) {
        std::vector<u32> cur(degree_);
        for (u32 j = 0; j < degree_; ++j) cur[j] = (p_ - modulus_[j] % p_) % p_;
        red_.push_back(cur);
        for (u32 k = 1; k + 1 < degree_; ++k) {
            std::vector<u32> next(degree_, 0);
            u32 top = cur[degree_ - 1];
            for (u32 j = 0; j + 1 < degree_; ++j) next[j + 1] = cur[j];
            if (top)
                for (u32 j = 0; j < degree_; ++j)
                    next[j] = (u32)((next[j] + (u64)top * red_[0][j]) % p_);
            red_.push_back(next);
            cur = next;
        }
    }
    size_ = 1;
    size_fits_ = true;
    for (u32 i = 0; i < degree_; ++i) {
        if (size_ > UINT64_MAX / p_) {
            size_fits_ = false;
            break;
        }
        size_ *= p_;
    }
}

FieldCtxPtr FieldCtx::get(u32 p, u32 degree) {
    if (!is_prime(p)) throw CompositeOrSmallPrime("field: p must be prime");
    if (degree == 0) throw Error("field: degree must be positive");
    if (p >= (1u << 21)) throw Error("field: p too large for kernel arithmetic");

    static std::mutex mu;
    static std::map<std::pair<u32, u32>, FieldCtxPtr> registry;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_pair(p, degree);
    auto it = registry.find(key);
    if (it != registry.end()) return it->second;

    // deterministic scan: tuple (c_{d-1}, ..., c_0), constant term fastest
    std::vector<u32> mod(degree + 1, 0);
    mod[degree] = 1;
    for (u64 k = 0;; ++k) {
        u64 t = k;
        for (u32 i = 0; i < degree; ++i) {
            mod[i] = (u32)(t % p);
            t /= p;
        }
        if (t) throw Error("field: no irreducible modulus found"); // unreachable
        if (raw_irreducible(mod, p)) break;
    }
    auto ctx = FieldCtxPtr(new FieldCtx(p, degree, mod));
    registry.emplace(key, ctx);
    return ctx;
}

u32 FieldCtx::level() const {
    if (degree_ % 2 != 0) throw Error("field: level undefined for odd degree");
    return degree_ / 2;
}

u64 FieldCtx::size_u64() const {
    if (!size_fits_) throw Error("field: size exceeds 64 bits");
    return size_;
}

FieldElement FieldCtx::zero() const {
    return FieldElement(shared_from_this(), SmallVecU32(degree_));
}

FieldElement FieldCtx::one() const { return from_int(1); }

FieldElement FieldCtx::from_int(u64 v) const {
    SmallVecU32 c(degree_);
    c[0] = (u32)(v % p_);
    return FieldElement(shared_from_this(), std::move(c));
}

FieldElement FieldCtx::from_coeffs(const std::vector<u32>& coeffs) const {
    if (coeffs.size() != degree_)
        throw Error("field: coefficient count mismatch");
    SmallVecU32 c(degree_);
    for (u32 i = 0; i < degree_; ++i) c[i] = coeffs[i] % p_;
    return FieldElement(shared_from_this(), std::move(c));
}

FieldElement FieldCtx::generator() const {
    SmallVecU32 c(degree_);
    if (degree_ >= 2)
        c[1] = 1;
    return FieldElement(shared_from_this(), std::move(c));
}

FieldElement FieldCtx::element_at(u64 k) const {
    SmallVecU32 c(degree_);
    for (u32 i = 0; i < degree_; ++i) {
        c[i] = (u32)(k % p_);
        k /= p_;
    }
    return FieldElement(shared_from_this(), std::move(c));
}

void FieldCtx::raw_mul(const u32* a, const u32* b, u32* out) const {
    const u32 d = degree_;
    if (d == 1) {
        out[0] = (u32)((u64)a[0] * b[0] % p_);
        return;
    }
    u64 wide[2 * SmallVecU32::kInline];
    std::vector<u64> heap;
    u64* w = wide;
    if (2 * d - 1 > 2 * SmallVecU32::kInline) {
        heap.assign(2 * d - 1, 0);
        w = heap.data();
    } else {
        std::fill(w, w + 2 * d - 1, 0);
    }
    for (u32 i = 0; i < d; ++i) {
        if (!a[i]) continue;
        for (u32 j = 0; j < d; ++j) w[i + j] += (u64)a[i] * b[j];
    }
    for (u32 k = 0; k + 1 < d; ++k) {
        u64 t = w[d + k] % p_;
        if (!t) continue;
        const auto& row = red_[k];
        for (u32 j = 0; j < d; ++j) w[j] += t * row[j];
    }
    for (u32 j = 0; j < d; ++j) out[j] = (u32)(w[j] % p_);
}

std::string FieldCtx::describe() const {
    std::ostringstream os;
    os << "GF(" << p_;
    if (degree_ > 1) os << "^" << degree_;
    os << ")";
    return os.str();
}

// --- FieldElement -----------------------------------------------------------

void FieldElement::require_same_ctx(const FieldElement& a, const FieldElement& b) {
    if (a.ctx_ != b.ctx_)
        throw MixedContexts("field: elements from different contexts");
}

bool FieldElement::is_zero() const {
    for (u32 i = 0; i < coeffs_.size(); ++i)
        if (coeffs_[i]) return false;
    return true;
}

bool FieldElement::operator==(const FieldElement& o) const {
    return ctx_ == o.ctx_ && coeffs_ == o.coeffs_;
}

FieldElement FieldElement::operator+(const FieldElement& o) const {
    require_same_ctx(*this, o);
    const u32 p = ctx_->p();
    SmallVecU32 c(coeffs_.size());
    for (u32 i = 0; i < coeffs_.size(); ++i) {
        u32 s = coeffs_[i] + o.coeffs_[i];
        c[i] = s >= p ? s - p : s;
    }
    return FieldElement(ctx_, std::move(c));
}

FieldElement FieldElement::operator-(const FieldElement& o) const {
    require_same_ctx(*this, o);
    const u32 p = ctx_->p();
    SmallVecU32 c(coeffs_.size());
    for (u32 i = 0; i < coeffs_.size(); ++i) {
        u32 s = coeffs_[i] + p - o.coeffs_[i];
        c[i] = s >= p ? s - p : s;
    }
    return FieldElement(ctx_, std::move(c));
}

FieldElement FieldElement::operator-() const {
    const u32 p = ctx_->p();
    SmallVecU32 c(coeffs_.size());
    for (u32 i = 0; i < coeffs_.size(); ++i)
        c[i] = coeffs_[i] ? p - coeffs_[i] : 0;
    return FieldElement(ctx_, std::move(c));
}

FieldElement FieldElement::operator*(const FieldElement& o) const {
    require_same_ctx(*this, o);
    SmallVecU32 c(coeffs_.size());
    ctx_->raw_mul(coeffs_.data(), o.coeffs_.data(), c.data());
    return FieldElement(ctx_, std::move(c));
}

FieldElement FieldElement::inv() const {
    if (is_zero()) throw Error("field: inverse of zero");
    const u32 p = ctx_->p();
    // extended Euclid over F_p[x] against the modulus
    RawPoly r0(ctx_->modulus().begin(), ctx_->modulus().end());
    RawPoly r1(coeffs_.data(), coeffs_.data() + coeffs_.size());
    raw_trim(r1);
    RawPoly t0, t1 = {1};
    while (!r1.empty()) {
        // quotient of r0 by r1
        RawPoly q;
        u32 lead_inv = mod_inv(r1.back(), p);
        RawPoly rem = r0;
        while (rem.size() >= r1.size() && !rem.empty()) {
            u32 c = (u32)((u64)rem.back() * lead_inv % p);
            std::size_t shift = rem.size() - r1.size();
            if (q.size() < shift + 1) q.resize(shift + 1, 0);
            q[shift] = c;
            for (std::size_t j = 0; j < r1.size(); ++j) {
                u64 v = (u64)c * r1[j] % p;
                rem[shift + j] = (u32)((rem[shift + j] + p - v) % p);
            }
            raw_trim(rem);
        }
        // (t0, t1) <- (t1, t0 - q*t1)
        RawPoly qt1;
        if (!q.empty() && !t1.empty()) {
            qt1.assign(q.size() + t1.size() - 1, 0);
            for (std::size_t i = 0; i < q.size(); ++i)
                for (std::size_t j = 0; j < t1.size(); ++j)
                    qt1[i + j] = (u32)((qt1[i + j] + (u64)q[i] * t1[j]) % p);
        }
        RawPoly nt = t0;
        if (nt.size() < qt1.size()) nt.resize(qt1.size(), 0);
        for (std::size_t i = 0; i < qt1.size(); ++i)
            nt[i] = (nt[i] + p - qt1[i]) % p;
        raw_trim(nt);
        t0 = std::move(t1);
        t1 = std::move(nt);
        r0 = std::move(r1);
        r1 = std::move(rem);
    }
    // r0 is the gcd (a nonzero constant since modulus is irreducible)
    u32 scale = mod_inv(r0[0], p);
    SmallVecU32 c(coeffs_.size());
    for (std::size_t i = 0; i < t0.size() && i < c.size(); ++i)
        c[i] = (u32)((u64)t0[i] * scale % p);
    return FieldElement(ctx_, std::move(c));
}

FieldElement FieldElement::pow(u64 e) const {
    FieldElement r = ctx_->one();
    FieldElement b = *this;
    while (e) {
        if (e & 1) r = r * b;
        b = b * b;
        e >>= 1;
    }
    return r;
}

FieldElement FieldElement::pow(const BigUInt& e) const {
    FieldElement r = ctx_->one();
    if (e.is_zero()) return r;
    for (std::size_t i = e.bit_length(); i-- > 0;) {
        r = r * r;
        if (e.bit(i)) r = r * *this;
    }
    return r;
}

FieldElement FieldElement::frobenius(u64 k) const {
    const u32 d = ctx_->degree();
    k %= d;
    FieldElement r = *this;
    for (u64 i = 0; i < k; ++i) r = r.pow((u64)ctx_->p());
    return r;
}

bool FieldElement::in_subfield(u32 m) const { return frobenius(m) == *this; }

u32 FieldElement::min_subfield_degree() const {
    const u32 d = ctx_->degree();
    for (u32 m = 1; m <= d; ++m)
        if (d % m == 0 && in_subfield(m)) return m;
    return d;
}

std::vector<u32> FieldElement::to_coeffs() const {
    return std::vector<u32>(coeffs_.data(), coeffs_.data() + coeffs_.size());
}

std::string FieldElement::str() const {
    std::ostringstream os;
    os << "[";
    for (u32 i = 0; i < coeffs_.size(); ++i) {
        if (i) os << ",";
        os << coeffs_[i];
    }
    os << "]";
    return os.str();
}

bool FieldElement::canonical_less(const FieldElement& a, const FieldElement& b) {
    require_same_ctx(a, b);
    for (u32 i = a.coeffs_.size(); i-- > 0;) {
        if (a.coeffs_[i] != b.coeffs_[i]) return a.coeffs_[i] < b.coeffs_[i];
    }
    return false;
}

// --- tower entry points -----------------------------------------------------

FieldCtxPtr make_base_field(u32 p) {
    if (p <= 3 || !is_prime(p))
        throw CompositeOrSmallPrime("make_base_field: need a prime p > 3");
    return FieldCtx::get(p, 2);
}

FieldCtxPtr prime_field(u32 p) { return FieldCtx::get(p, 1); }

FieldElement Embedding::operator()(const FieldElement& x) const {
    if (x.ctx() != src_) throw MixedContexts("embedding: wrong source context");
    FieldElement acc = dst_->zero();
    for (u32 k = 0; k < src_->degree(); ++k) {
        if (!x.coeff(k)) continue;
        acc = acc + powers_[k] * dst_->from_int(x.coeff(k));
    }
    return acc;
}

std::optional<FieldElement> sqrt(const FieldElement& x) {
    if (x.is_zero()) return x;
    const auto& ctx = x.ctx();
    BigUInt q1 = BigUInt::power(ctx->p(), ctx->degree());
    q1.sub_small(1);
    BigUInt half = q1;
    half.shr1();
    if (x.pow(half) != ctx->one()) return std::nullopt;

    BigUInt t = q1;
    unsigned s = 0;
    while (!t.bit(0)) {
        t.shr1();
        ++s;
    }
    // deterministic non-residue: first in canonical order
    FieldElement z = ctx->one();
    for (u64 k = 2;; ++k) {
        z = ctx->element_at(k);
        if (!z.is_zero() && z.pow(half) != ctx->one()) break;
    }
    BigUInt tp1h = t; // (t+1)/2 = (t>>1)+1 for odd t
    tp1h.shr1();
    FieldElement r = x.pow(tp1h) * x; // x^((t+1)/2)
    FieldElement c = z.pow(t);
    FieldElement u = x.pow(t);
    unsigned m = s;
    while (u != ctx->one()) {
        FieldElement v = u;
        unsigned i = 0;
        while (v != ctx->one()) {
            v = v * v;
            ++i;
        }
        FieldElement b = c;
        for (unsigned j = 0; j + i + 1 < m; ++j) b = b * b;
        m = i;
        c = b * b;
        u = u * c;
        r = r * b;
    }
    FieldElement neg = -r;
    return FieldElement::canonical_less(neg, r) ? neg : r;
}

} // namespace howe
