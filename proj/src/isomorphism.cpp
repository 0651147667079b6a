#include "howe/isomorphism.hpp"

#include "howe/findings.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace howe {

namespace {

using Vec4 = std::array<FieldElement, 4>;
using Mat4 = std::array<Vec4, 4>;

bool vec_is_zero(const Vec4& v) {
    return v[0].is_zero() && v[1].is_zero() && v[2].is_zero() && v[3].is_zero();
}

// row-reduce a copy; returns rank
u32 rank_of(std::vector<Vec4> rows) {
    u32 rank = 0;
    for (u32 col = 0; col < 4 && rank < rows.size(); ++col) {
        u32 pivot = rank;
        while (pivot < rows.size() && rows[pivot][col].is_zero()) ++pivot;
        if (pivot == rows.size()) continue;
        std::swap(rows[pivot], rows[rank]);
        FieldElement pivot_inv = rows[rank][col].inv();
        for (u32 r = 0; r < rows.size(); ++r) {
            if (r == rank || rows[r][col].is_zero()) continue;
            FieldElement f = rows[r][col] * pivot_inv;
            for (u32 c = 0; c < 4; ++c) rows[r][c] = rows[r][c] - f * rows[rank][c];
        }
        ++rank;
    }
    return rank;
}

// deterministic basis of {x : a1.x = 0, a2.x = 0} (dimension 2 expected)
std::pair<Vec4, Vec4> null_space2(const FieldCtxPtr& K, const Vec4& a1, const Vec4& a2) {
    std::vector<Vec4> rows = {a1, a2};
    // RREF
    std::vector<int> pivot_col;
    u32 rank = 0;
    for (u32 col = 0; col < 4 && rank < 2; ++col) {
        u32 pr = rank;
        while (pr < 2 && rows[pr][col].is_zero()) ++pr;
        if (pr == 2) continue;
        std::swap(rows[pr], rows[rank]);
        FieldElement inv = rows[rank][col].inv();
        for (u32 c = 0; c < 4; ++c) rows[rank][c] = rows[rank][c] * inv;
        for (u32 r = 0; r < 2; ++r) {
            if (r == rank || rows[r][col].is_zero()) continue;
            FieldElement f = rows[r][col];
            for (u32 c = 0; c < 4; ++c) rows[r][c] = rows[r][c] - f * rows[rank][c];
        }
        pivot_col.push_back((int)col);
        ++rank;
    }
    if (rank != 2) throw Error("null_space2: hyperplane data not independent");
    std::vector<Vec4> basis;
    for (u32 f = 0; f < 4; ++f) {
        if (std::find(pivot_col.begin(), pivot_col.end(), (int)f) != pivot_col.end())
            continue;
        Vec4 v = {K->zero(), K->zero(), K->zero(), K->zero()};
        v[f] = K->one();
        for (u32 r = 0; r < rank; ++r) v[pivot_col[r]] = -rows[r][f];
        basis.push_back(v);
    }
    return {basis[0], basis[1]};
}

Mat4 invert4(const FieldCtxPtr& K, const Mat4& m) {
    std::array<std::array<FieldElement, 8>, 4> a;
    for (u32 r = 0; r < 4; ++r) {
        for (u32 c = 0; c < 4; ++c) {
            a[r][c] = m[r][c];
            a[r][4 + c] = c == r ? K->one() : K->zero();
        }
    }
    for (u32 col = 0; col < 4; ++col) {
        u32 pr = col;
        while (pr < 4 && a[pr][col].is_zero()) ++pr;
        if (pr == 4) throw Error("invert4: singular matrix");
        std::swap(a[pr], a[col]);
        FieldElement inv = a[col][col].inv();
        for (u32 c = 0; c < 8; ++c) a[col][c] = a[col][c] * inv;
        for (u32 r = 0; r < 4; ++r) {
            if (r == col || a[r][col].is_zero()) continue;
            FieldElement f = a[r][col];
            for (u32 c = 0; c < 8; ++c) a[r][c] = a[r][c] - f * a[col][c];
        }
    }
    Mat4 out;
    for (u32 r = 0; r < 4; ++r)
        for (u32 c = 0; c < 4; ++c) out[r][c] = a[r][4 + c];
    return out;
}

// columns x1,x2,z,w -> matrix; linear forms (x1_,x2_,z_,W_) = (x,y,z,w) * M
Mat4 columns(const Vec4& c0, const Vec4& c1, const Vec4& c2, const Vec4& c3) {
    Mat4 m;
    for (u32 r = 0; r < 4; ++r) m[r] = {c0[r], c1[r], c2[r], c3[r]};
    return m;
}

MultiPoly lin_comb(const FieldCtxPtr& K, const Vec4& coeffs) {
    MultiPoly f = MultiPoly::zero(K, 4);
    for (u32 i = 0; i < 4; ++i)
        if (!coeffs[i].is_zero())
            f = f + MultiPoly::variable(K, 4, i).scaled(coeffs[i]);
    return f;
}

// substitute (x,y,z,w) = (n0,n1,n2,n3) * Minv into f, where n1 may be pinned
// to the constant 1 (dehomogenization); result lives in the same 4-var ring
MultiPoly change_coords(const MultiPoly& f, const FieldCtxPtr& K, const Mat4& minv,
                        bool pin_second) {
    std::vector<MultiPoly> images;
    for (u32 k = 0; k < 4; ++k) {
        MultiPoly img = MultiPoly::zero(K, 4);
        for (u32 n = 0; n < 4; ++n) {
            if (minv[n][k].is_zero()) continue;
            MultiPoly base = (pin_second && n == 1)
                                 ? MultiPoly::constant(K, 4, K->one())
                                 : MultiPoly::variable(K, 4, n);
            img = img + base.scaled(minv[n][k]);
        }
        images.push_back(img);
    }
    return f.subst_all(images);
}

// R = P - L.Q as a quadratic in the z-slot (variable index 2) after the
// coordinate change; returns the degree observed
u32 z_degree(const MultiPoly& changed) {
    return changed.degree_in(2);
}

} // namespace

bool RamTuple::canonical_less(const RamTuple& a, const RamTuple& b) {
    for (u32 i = 0; i < 6; ++i)
        if (a.roots[i] != b.roots[i])
            return FieldElement::canonical_less(a.roots[i], b.roots[i]);
    return false;
}

std::optional<AdmissiblePair> admissible_data(const MultiPoly& Q, const MultiPoly& P,
                                              const EllipticQuotient& U1,
                                              const EllipticQuotient& U2) {
    const FieldCtxPtr& K = U1.ctx;
    if (U2.ctx != K) throw MixedContexts("admissible_data: quotients in different fields");
    MultiPoly QK = Q.ctx() == K ? Q : embed(Q, find_embedding(Q.ctx(), K));
    MultiPoly PK = P.ctx() == K ? P : embed(P, find_embedding(P.ctx(), K));

    auto [x1, x2] = null_space2(K, U1.a_vec, U2.a_vec);

    MultiPoly R[2] = {PK - lin_comb(K, U1.b_vec) * QK, PK - lin_comb(K, U2.b_vec) * QK};
    const EllipticQuotient* us[2] = {&U1, &U2};

    Vec4 zsel[2], wsel[2];
    for (int i = 0; i < 2; ++i) {
        bool found = false;
        for (u32 j = 0; j < 3 && !found; ++j) {
            const Vec4& cand = us[i]->basis[j];
            if (rank_of({x1, x2, cand}) == 3) {
                zsel[i] = cand;
                found = true;
            }
        }
        if (!found) throw Error("admissible_data: quotient basis degenerate");
        wsel[i] = us[i]->basis[3];
        // admissibility: R_i quadratic in its z-coordinate
        Mat4 minv = invert4(K, columns(x1, x2, zsel[i], wsel[i]));
        MultiPoly changed = change_coords(R[i], K, minv, false);
        if (changed.degree_in(3) != 0)
            throw Error("admissible_data: W-term survived the coordinate change");
        if (z_degree(changed) != 2) return std::nullopt;
    }

    Vec4 y;
    for (u32 k = 0; k < 4; ++k) y[k] = U1.b_vec[k] - U2.b_vec[k];
    if (vec_is_zero(y))
        throw DegenerateGeometry("admissible_data: the two linear forms coincide");

    Vec4 xv;
    if (rank_of({x1, y}) == 2)
        xv = x1;
    else if (rank_of({x2, y}) == 2)
        xv = x2;
    else
        throw Error("admissible_data: no independent direction in the base plane");

    AdmissiblePair pkg;
    pkg.R1 = R[0];
    pkg.R2 = R[1];
    pkg.y_vec = y;
    pkg.x_vec = xv;
    pkg.z_vec[0] = zsel[0];
    pkg.z_vec[1] = zsel[1];
    pkg.w_vec[0] = wsel[0];
    pkg.w_vec[1] = wsel[1];
    return pkg;
}

std::pair<std::vector<RamTuple>, FieldCtxPtr>
compute_VH(const MultiPoly& Q, const MultiPoly& P,
           const std::vector<EllipticQuotient>& eq) {
    if (eq.empty()) throw Error("compute_VH: empty EQ set");
    const FieldCtxPtr K = eq.front().ctx;

    struct Raw {
        FieldCtxPtr ctx;
        std::array<FieldElement, 6> roots;
        u32 i, j;
    };
    std::vector<Raw> raw;

    for (u32 i = 0; i < eq.size(); ++i)
        for (u32 j = 0; j < eq.size(); ++j) {
            if (i == j) continue;
            std::optional<AdmissiblePair> pkg;
            try {
                pkg = admissible_data(Q, P, eq[i], eq[j]);
            } catch (const DegenerateGeometry&) {
                report_finding("compute_VH: degenerate pair skipped (L1 = L2)");
                continue;
            }
            if (!pkg) continue;

            UniPoly disc[2] = {UniPoly(K), UniPoly(K)};
            bool ok = true;
            for (int side = 0; side < 2 && ok; ++side) {
                Mat4 minv = invert4(
                    K, columns(pkg->x_vec, pkg->y_vec, pkg->z_vec[side], pkg->w_vec[side]));
                MultiPoly S = change_coords(side == 0 ? pkg->R1 : pkg->R2, K, minv, true);
                if (S.degree_in(3) != 0 || S.degree_in(1) != 0)
                    throw Error("compute_VH: unexpected variable after dehomogenization");
                UniPoly q2 = S.coeff_of_power(2, 2).to_unipoly(0);
                UniPoly q1 = S.coeff_of_power(2, 1).to_unipoly(0);
                UniPoly q0 = S.coeff_of_power(2, 0).to_unipoly(0);
                UniPoly D = q1 * q1 - UniPoly::from_ints(K, {4}) * q2 * q0;
                if (D.degree() != 3 || gcd_monic(D, D.derivative()).degree() != 0) {
                    report_finding("compute_VH: degenerate discriminant skipped");
                    ok = false;
                    break;
                }
                disc[side] = D;
            }
            if (!ok) continue;

            // splitting field of both discriminants over K
            u32 ext = 1;
            for (int side = 0; side < 2; ++side)
                for (const auto& [f, m] : factor(disc[side])) {
                    (void)m;
                    ext = std::lcm<u32>(ext, (u32)f.degree());
                }
            FieldCtxPtr Kp = K;
            if (ext > 1) Kp = extend_field(K, ext).first;
            std::array<FieldElement, 6> roots = {Kp->zero(), Kp->zero(), Kp->zero(),
                                                 Kp->zero(), Kp->zero(), Kp->zero()};
            for (int side = 0; side < 2; ++side) {
                auto rs = roots_in_field(disc[side], Kp);
                if (rs.size() != 3) throw Error("compute_VH: cubic failed to split");
                for (int k = 0; k < 3; ++k) roots[3 * side + k] = rs[k];
            }
            raw.push_back({Kp, roots, i, j});
        }

    // one common field for every tuple
    u32 deg = K->degree();
    for (const auto& r : raw) deg = std::lcm(deg, r.ctx->degree());
    FieldCtxPtr common = FieldCtx::get(K->p(), deg);

    std::vector<RamTuple> out;
    for (auto& r : raw) {
        RamTuple t;
        t.ctx = common;
        t.src_i = r.i;
        t.src_j = r.j;
        if (r.ctx == common) {
            t.roots = r.roots;
        } else {
            const Embedding& e = find_embedding(r.ctx, common);
            for (int k = 0; k < 6; ++k) t.roots[k] = e(r.roots[k]);
        }
        // canonicalize: sort each triple, then order the two triples
        std::sort(t.roots.begin(), t.roots.begin() + 3, FieldElement::canonical_less);
        std::sort(t.roots.begin() + 3, t.roots.end(), FieldElement::canonical_less);
        bool swap_triples = false;
        for (int k = 0; k < 3; ++k) {
            if (t.roots[k] != t.roots[3 + k]) {
                swap_triples = FieldElement::canonical_less(t.roots[3 + k], t.roots[k]);
                break;
            }
        }
        if (swap_triples) {
            for (int k = 0; k < 3; ++k) std::swap(t.roots[k], t.roots[3 + k]);
            std::swap(t.src_i, t.src_j);
        }
        out.push_back(std::move(t));
    }
    std::sort(out.begin(), out.end(), RamTuple::canonical_less);
    out.erase(std::unique(out.begin(), out.end(),
                          [](const RamTuple& a, const RamTuple& b) {
                              return a.roots == b.roots;
                          }),
              out.end());
    return {std::move(out), common};
}

bool rank_test(const RamTuple& v0, const RamTuple& v) {
    if (v0.ctx != v.ctx) throw MixedContexts("rank_test: tuples in different fields");
    static const int perms[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2},
                                    {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
    const auto& t = v0.roots;
    std::array<FieldElement, 6> x;
    for (int swap_halves = 0; swap_halves < 2; ++swap_halves) {
        for (const auto& sig : perms)
            for (const auto& tau : perms) {
                for (int k = 0; k < 3; ++k) {
                    x[k] = v.roots[swap_halves ? 3 + sig[k] : sig[k]];
                    x[3 + k] = v.roots[swap_halves ? tau[k] : 3 + tau[k]];
                }
                // rank <= 2 of [x; t; 1]  <=>  the points (x_k, t_k) are collinear
                int k0 = -1;
                for (int k = 1; k < 6; ++k)
                    if (x[k] != x[0] || t[k] != t[0]) {
                        k0 = k;
                        break;
                    }
                if (k0 < 0) return true; // all columns equal
                FieldElement dx = x[k0] - x[0], dt = t[k0] - t[0];
                bool line = true;
                for (int k = 1; k < 6 && line; ++k) {
                    if (k == k0) continue;
                    FieldElement cross = (x[k] - x[0]) * dt - (t[k] - t[0]) * dx;
                    line = cross.is_zero();
                }
                if (line) return true;
            }
    }
    return false;
}

CurveRecord build_record(const HoweParams& hp) {
    CanonicalModel m = canonical(hp);
    auto [eq, K] = compute_EQ(m.Q, m.P);
    auto [vh, Kp] = compute_VH(m.Q, m.P, eq);
    return {hp, std::move(vh), Kp};
}

IsoClassification classify(const std::vector<CurveRecord>& records) {
    const std::size_t n = records.size();
    for (const auto& r : records)
        if (r.vh.empty())
            throw EmptyVH("classify: record with no ramification tuple");

    std::vector<u32> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<u32(u32)> find = [&](u32 a) {
        while (parent[a] != a) a = parent[a] = parent[parent[a]];
        return a;
    };

    auto iso = [&](const CurveRecord& rep, const CurveRecord& cand) {
        // reference tuple fixed on the representative side
        const RamTuple& t0 = rep.vh.front();
        u32 deg = std::lcm(rep.field->degree(), cand.field->degree());
        FieldCtxPtr common = FieldCtx::get(rep.field->p(), deg);
        RamTuple ref;
        ref.ctx = common;
        if (rep.field == common) {
            ref.roots = t0.roots;
        } else {
            const Embedding& e = find_embedding(rep.field, common);
            for (int k = 0; k < 6; ++k) ref.roots[k] = e(t0.roots[k]);
        }
        const u32 conj = common->level(); // Gal(common / F_{p^2})
        for (const auto& v : cand.vh) {
            RamTuple w;
            w.ctx = common;
            if (cand.field == common) {
                w.roots = v.roots;
            } else {
                const Embedding& e = find_embedding(cand.field, common);
                for (int k = 0; k < 6; ++k) w.roots[k] = e(v.roots[k]);
            }
            for (u32 j = 0; j < conj; ++j) {
                if (j) {
                    for (int k = 0; k < 6; ++k) w.roots[k] = w.roots[k].frobenius(2);
                }
                if (rank_test(ref, w)) return true;
            }
        }
        return false;
    };

    std::vector<u32> reps; // current class representatives (record indices)
    std::vector<u32> size_of(n, 1);
    for (u32 r = 0; r < n; ++r) {
        // smallest class first so frequent classes match early
        std::vector<u32> order = reps;
        std::stable_sort(order.begin(), order.end(), [&](u32 a, u32 b) {
            return size_of[find(a)] < size_of[find(b)];
        });
        bool merged = false;
        for (u32 rep : order) {
            if (iso(records[rep], records[r])) {
                u32 ra = find(rep), rb = find(r);
                if (ra != rb) {
                    u32 lo = std::min(ra, rb), hi = std::max(ra, rb);
                    parent[hi] = lo;
                    size_of[lo] += size_of[hi];
                }
                merged = true;
                break;
            }
        }
        if (!merged) reps.push_back(r);
    }

    IsoClassification out;
    out.class_of.assign(n, 0);
    std::vector<int> class_id(n, -1);
    for (u32 r = 0; r < n; ++r) {
        u32 root = find(r);
        if (class_id[root] < 0) {
            class_id[root] = (int)out.representatives.size();
            out.representatives.push_back(root);
        }
        out.class_of[r] = (u32)class_id[root];
    }
    return out;
}

} // namespace howe
