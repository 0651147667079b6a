#include <doctest.h>

#include "howe/cartier_manin.hpp"
#include "howe/curves.hpp"

#include <set>

using namespace howe;

TEST_SUITE_BEGIN("curves");

TEST_CASE("hasse polynomial small cases") {
    CHECK(hasse_polynomial(5) == UniPoly::from_ints(prime_field(5), {1, 4, 1}));
    CHECK(hasse_polynomial(7) == UniPoly::from_ints(prime_field(7), {1, 2, 2, 1}));
    CHECK(hasse_polynomial(11) ==
          UniPoly::from_ints(prime_field(11), {1, 3, 1, 1, 3, 1}));
    CHECK_THROWS_AS(hasse_polynomial(9), CompositeOrSmallPrime);
    CHECK_THROWS_AS(hasse_polynomial(3), CompositeOrSmallPrime);
}

TEST_CASE("hasse polynomial is squarefree and splits over F_p^2") {
    for (u32 p : {5u, 7u, 11u, 13u, 17u, 19u, 23u}) {
        UniPoly hp = hasse_polynomial(p);
        CHECK(gcd_monic(hp, hp.derivative()).degree() == 0);
        auto roots = roots_in_field(hp, make_base_field(p));
        CHECK((int)roots.size() == hp.degree());
    }
}

TEST_CASE("catalog sizes at small primes") {
    auto J = [](u32 p) {
        auto cat = build_catalog(make_base_field(p));
        return cat.size();
    };
    CHECK(J(5) == 1);
    CHECK(J(11) == 2);
    CHECK(J(13) == 1);

    auto f25 = make_base_field(5);
    auto cat5 = build_catalog(f25);
    CHECK(cat5[0].j0 == f25->zero());
    auto f121 = make_base_field(11);
    auto cat11 = build_catalog(f121);
    CHECK(cat11[0].j0 == f121->zero());
    CHECK(cat11[1].j0 == f121->one()); // 1728 mod 11
}

TEST_CASE("catalog entries define supersingular curves") {
    for (u32 p : {5u, 7u, 11u, 13u, 17u}) {
        auto ctx = make_base_field(p);
        for (const auto& en : build_catalog(ctx)) {
            CHECK(supersingular_by_count(en.A0, en.B0));
            CHECK(j_invariant(en.A0, en.B0) == en.j0);
            // Weierstrass model is nonsingular
            FieldElement disc = ctx->from_int(4) * en.A0 * en.A0 * en.A0 +
                                ctx->from_int(27) * en.B0 * en.B0;
            CHECK(!disc.is_zero());
        }
    }
}

TEST_CASE("catalog agrees with a brute-force Legendre sweep") {
    for (u32 p : {5u, 7u, 11u, 13u, 17u, 19u, 23u, 29u, 31u}) {
        auto ctx = make_base_field(p);
        UniPoly hp = embed(hasse_polynomial(p), find_embedding(prime_field(p), ctx));
        std::set<std::vector<u32>> js;
        const FieldElement one = ctx->one();
        for (u64 k = 0; k < ctx->size_u64(); ++k) {
            FieldElement t = ctx->element_at(k);
            if (t.is_zero() || t == one) continue;
            if (!hp.eval(t).is_zero()) continue;
            FieldElement h = t * t - t + one;
            FieldElement j = ctx->from_int(256) * h * h * h *
                             (t * t * (t - one) * (t - one)).inv();
            js.insert(j.to_coeffs());
        }
        CHECK(js.size() == build_catalog(ctx).size());
    }
}

TEST_CASE("legendre curve of a catalog root has vanishing Hasse-Witt entry") {
    for (u32 p : {5u, 11u, 13u}) {
        auto ctx = make_base_field(p);
        for (const auto& en : build_catalog(ctx)) {
            UniPoly x = UniPoly::from_ints(ctx, {0, 1});
            UniPoly f = x * (x - UniPoly::from_ints(ctx, {1})) *
                        (x - UniPoly::from_coeffs(ctx, {en.t0}));
            auto g = gamma_coeffs(f, {p - 1});
            CHECK(g[0].is_zero());
        }
    }
}

TEST_SUITE_END();
