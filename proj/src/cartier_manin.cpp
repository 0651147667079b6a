#include "howe/cartier_manin.hpp"

#include "howe/kernels.hpp"

namespace howe {

UniPoly sextic_scalar(const FieldElement& A1, const FieldElement& B1,
                      const FieldElement& A2, const FieldElement& B2,
                      const FieldElement& lambda, const FieldElement& mu,
                      const FieldElement& nu) {
    if (mu.is_zero() || nu.is_zero())
        throw DegenerateParams("sextic: mu and nu must be nonzero");
    const auto& ctx = A1.ctx();
    UniPoly x = UniPoly::from_ints(ctx, {0, 1});
    UniPoly f1 = UniPoly::from_coeffs(
        ctx, {B1 * mu * mu * mu, A1 * mu * mu, ctx->zero(), ctx->one()});
    UniPoly xl = x - UniPoly::from_coeffs(ctx, {lambda});
    UniPoly f2 = xl * xl * xl + xl.scaled(A2 * nu * nu) +
                 UniPoly::from_coeffs(ctx, {B2 * nu * nu * nu});
    return f1 * f2;
}

std::vector<UniPoly> sextic_symbolic(const FieldElement& A1, const FieldElement& B1,
                                     const FieldElement& A2, const FieldElement& B2,
                                     const FieldElement& mu, const FieldElement& nu) {
    if (mu.is_zero() || nu.is_zero())
        throw DegenerateParams("sextic: mu and nu must be nonzero");
    const auto& ctx = A1.ctx();
    auto c = [&](const FieldElement& v) { return UniPoly::from_coeffs(ctx, {v}); };
    const FieldElement n2 = A2 * nu * nu, n3 = B2 * nu * nu * nu;
    // f2 = (x-l)^3 + n2 (x-l) + n3, coefficients as polynomials in l
    std::vector<UniPoly> f2 = {
        // x^0: -l^3 - n2 l + n3
        UniPoly::from_coeffs(ctx, {n3, -n2, ctx->zero(), -ctx->one()}),
        // x^1: 3 l^2 + n2
        UniPoly::from_coeffs(ctx, {n2, ctx->zero(), ctx->from_int(3)}),
        // x^2: -3 l
        UniPoly::from_coeffs(ctx, {ctx->zero(), -ctx->from_int(3)}),
        // x^3: 1
        c(ctx->one()),
    };
    // f1 has constant lambda-coefficients
    std::vector<UniPoly> f1 = {c(B1 * mu * mu * mu), c(A1 * mu * mu), c(ctx->zero()),
                               c(ctx->one())};
    // product over x with lambda-polynomial coefficients
    std::vector<UniPoly> out(7, UniPoly(ctx));
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) out[i + j] = out[i + j] + f1[i] * f2[j];
    return out;
}

// --- dense bivariate powering backed by the convolution kernels --------------

namespace {

// x-major planes of prime-field components; plane[c][ix*nl + il]
struct Bivar {
    FieldCtxPtr ctx;
    u32 nx = 0, nl = 0;
    std::vector<std::vector<u32>> comp;

    bool is_zero() const { return nx == 0; }
};

Bivar bivar_from_xmajor(const FieldCtxPtr& ctx, const std::vector<UniPoly>& f_by_x) {
    Bivar b;
    b.ctx = ctx;
    u32 nx = (u32)f_by_x.size();
    while (nx && f_by_x[nx - 1].is_zero()) --nx;
    u32 nl = 0;
    for (u32 i = 0; i < nx; ++i) nl = std::max<u32>(nl, f_by_x[i].degree() + 1);
    if (!nx || !nl) return b;
    b.nx = nx;
    b.nl = nl;
    const u32 d = ctx->degree();
    b.comp.assign(d, std::vector<u32>(nx * nl, 0));
    for (u32 ix = 0; ix < nx; ++ix) {
        const UniPoly& row = f_by_x[ix];
        for (int il = 0; il <= row.degree(); ++il) {
            FieldElement v = row.coeff(il);
            for (u32 c = 0; c < d; ++c) b.comp[c][ix * nl + il] = v.coeff(c);
        }
    }
    return b;
}

std::vector<UniPoly> bivar_to_xmajor(const Bivar& b) {
    const auto& ctx = b.ctx;
    const u32 d = ctx->degree();
    std::vector<UniPoly> out;
    out.reserve(b.nx);
    std::vector<u32> tmp(d);
    for (u32 ix = 0; ix < b.nx; ++ix) {
        std::vector<FieldElement> coeffs;
        coeffs.reserve(b.nl);
        for (u32 il = 0; il < b.nl; ++il) {
            for (u32 c = 0; c < d; ++c) tmp[c] = b.comp[c][ix * b.nl + il];
            coeffs.push_back(ctx->from_coeffs(tmp));
        }
        out.push_back(UniPoly::from_coeffs(ctx, std::move(coeffs)));
    }
    return out;
}

Bivar bivar_mul(const Bivar& a, const Bivar& b) {
    Bivar r;
    r.ctx = a.ctx;
    if (a.is_zero() || b.is_zero()) return r;
    const u32 d = a.ctx->degree();
    const u32 p = a.ctx->p();
    const u32 nx = a.nx + b.nx - 1;
    const u32 nl = a.nl + b.nl - 1;

    std::vector<std::vector<u64>> acc(2 * d - 1, std::vector<u64>(nx * nl, 0));
    for (u32 ca = 0; ca < d; ++ca)
        for (u32 cb = 0; cb < d; ++cb) {
            auto& plane = acc[ca + cb];
            const auto& pa = a.comp[ca];
            const auto& pb = b.comp[cb];
            for (u32 i = 0; i < a.nx; ++i)
                for (u32 j = 0; j < b.nx; ++j)
                    kern::conv_accum(pa.data() + i * a.nl, a.nl,
                                     pb.data() + j * b.nl, b.nl,
                                     plane.data() + (u64)(i + j) * nl);
        }

    r.nx = nx;
    r.nl = nl;
    r.comp.assign(d, std::vector<u32>(nx * nl, 0));
    const auto& red = a.ctx->reduction_rows();
    for (u64 cell = 0; cell < (u64)nx * nl; ++cell) {
        u64 wide[2 * SmallVecU32::kInline] = {};
        for (u32 c = 0; c < d; ++c) wide[c] = acc[c][cell];
        for (u32 k = 0; k + 1 < d; ++k) {
            u64 t = acc[d + k][cell] % p;
            if (!t) continue;
            for (u32 j = 0; j < d; ++j) wide[j] += t * red[k][j];
        }
        for (u32 c = 0; c < d; ++c) r.comp[c][cell] = (u32)(wide[c] % p);
    }
    return r;
}

Bivar bivar_pow(const Bivar& base, u32 e) {
    Bivar r = base; // e >= 1 in all callers
    u32 msb = 31 - __builtin_clz(e);
    for (u32 bit = msb; bit-- > 0;) {
        r = bivar_mul(r, r);
        if (e & (1u << bit)) r = bivar_mul(r, base);
    }
    return r;
}

} // namespace

std::vector<FieldElement> gamma_coeffs(const UniPoly& f, const std::vector<u32>& targets) {
    const u32 p = f.ctx()->p();
    UniPoly fe = f.pow((p - 1) / 2);
    std::vector<FieldElement> out;
    out.reserve(targets.size());
    for (u32 t : targets) out.push_back(fe.coeff(t));
    return out;
}

std::vector<UniPoly> gamma_coeffs_symbolic(const std::vector<UniPoly>& f_by_x,
                                           const std::vector<u32>& targets) {
    FieldCtxPtr ctx;
    for (const auto& c : f_by_x)
        if (c.ctx()) ctx = c.ctx();
    const u32 p = ctx->p();
    const u32 e = (p - 1) / 2;
    Bivar b = bivar_from_xmajor(ctx, f_by_x);
    Bivar pw = bivar_pow(b, e);
    auto rows = bivar_to_xmajor(pw);
    std::vector<UniPoly> out;
    out.reserve(targets.size());
    for (u32 t : targets)
        out.push_back(t < rows.size() ? rows[t] : UniPoly(ctx));
    return out;
}

CMScalar cm_entries_scalar(const UniPoly& f) {
    const u32 p = f.ctx()->p();
    auto g = gamma_coeffs(f, {p - 1, 2 * p - 1, p - 2, 2 * p - 2});
    return {g[0], g[1], g[2], g[3]};
}

CMSymbolic cm_entries_symbolic(const std::vector<UniPoly>& f_by_x) {
    FieldCtxPtr ctx;
    for (const auto& c : f_by_x)
        if (c.ctx()) ctx = c.ctx();
    const u32 p = ctx->p();
    auto g = gamma_coeffs_symbolic(f_by_x, {p - 1, 2 * p - 1, p - 2, 2 * p - 2});
    return {g[0], g[1], g[2], g[3]};
}

CMScalar cm_specialize(const CMSymbolic& sym, const FieldElement& lambda) {
    return {sym.a.eval(lambda), sym.b.eval(lambda), sym.c.eval(lambda),
            sym.d.eval(lambda)};
}

} // namespace howe
