#include <doctest.h>

#include "howe/prng.hpp"
#include "howe/unipoly.hpp"

#include <map>
#include <string>

using namespace howe;

namespace {

UniPoly random_poly(const FieldCtxPtr& ctx, int deg, Prng& rng) {
    std::vector<FieldElement> c;
    for (int i = 0; i <= deg; ++i) c.push_back(ctx->element_at(rng.below(ctx->size_u64())));
    if (c.back().is_zero()) c.back() = ctx->one();
    return UniPoly::from_coeffs(ctx, std::move(c));
}

UniPoly random_monic_irreducible(const FieldCtxPtr& ctx, int deg, Prng& rng) {
    for (;;) {
        UniPoly f = random_poly(ctx, deg, rng).monic();
        if (f.degree() == deg && is_irreducible(f)) return f;
    }
}

} // namespace

TEST_SUITE_BEGIN("unipoly");

TEST_CASE("gcd basics") {
    auto f25 = make_base_field(5);
    UniPoly a = UniPoly::from_ints(f25, {4, 0, 1}); // x^2 - 1
    UniPoly b = UniPoly::from_ints(f25, {4, 1});    // x - 1
    CHECK(gcd_monic(a, b) == b);
    UniPoly f = UniPoly::from_ints(f25, {0, 3, 2});
    CHECK(gcd_monic(f, UniPoly(f25)) == f.monic());
    CHECK(gcd_monic(UniPoly(f25), UniPoly(f25)).is_zero());
    CHECK_THROWS_AS(gcd_monic(a, UniPoly::from_ints(make_base_field(7), {1})), MixedContexts);
}

TEST_CASE("gcd of constructed products") {
    auto f25 = make_base_field(5);
    Prng rng(100);
    for (int trial = 0; trial < 200; ++trial) {
        UniPoly h = random_poly(f25, 1 + (int)rng.below(6), rng).monic();
        UniPoly u = random_poly(f25, 1 + (int)rng.below(7), rng);
        UniPoly v = random_poly(f25, 1 + (int)rng.below(7), rng);
        if (gcd_monic(u, v).degree() != 0) continue;
        CHECK(gcd_monic(h * u, h * v) == h);
    }
}

TEST_CASE("resultant") {
    auto f25 = make_base_field(5);
    UniPoly x2 = UniPoly::from_ints(f25, {0, 0, 1});
    UniPoly xp1 = UniPoly::from_ints(f25, {1, 1});
    CHECK(resultant(x2, xp1) == f25->one());
    UniPoly f = UniPoly::from_ints(f25, {1, 2, 3, 1});
    CHECK(resultant(f, f).is_zero());
    CHECK_THROWS_AS(resultant(f, UniPoly(f25)), ZeroPolynomial);

    SUBCASE("coprime cubics have nonzero resultant") {
        Prng rng(200);
        for (int trial = 0; trial < 200; ++trial) {
            UniPoly a = random_poly(f25, 3, rng);
            UniPoly b = random_poly(f25, 3, rng);
            bool coprime = gcd_monic(a, b).degree() == 0;
            CHECK(resultant(a, b).is_zero() == !coprime);
        }
    }
}

TEST_CASE("resultant vanishes iff gcd is nontrivial") {
    auto f49 = make_base_field(7);
    Prng rng(300);
    for (int trial = 0; trial < 500; ++trial) {
        UniPoly a = random_poly(f49, 1 + (int)rng.below(10), rng);
        UniPoly b = random_poly(f49, 1 + (int)rng.below(10), rng);
        bool shared = gcd_monic(a, b).degree() >= 1;
        CHECK(resultant(a, b).is_zero() == shared);
    }
}

TEST_CASE("factor examples") {
    auto f25 = make_base_field(5);

    SUBCASE("x^4 - 1 over F_5 splits into the fourth roots of unity") {
        UniPoly f = UniPoly::from_ints(f25, {4, 0, 0, 0, 1});
        auto fs = factor(f);
        REQUIRE(fs.size() == 4);
        for (const auto& [q, m] : fs) {
            CHECK(q.degree() == 1);
            CHECK(m == 1);
        }
    }
    SUBCASE("the canonical irreducible stays irreducible") {
        UniPoly f = UniPoly::from_ints(f25, {2, 0, 1}); // x^2 + 2 over F_25: splits!
        // over F_25 the base-field modulus has roots; use the prime field instead
        auto f5 = prime_field(5);
        UniPoly g = UniPoly::from_ints(f5, {2, 0, 1});
        auto fs = factor(g);
        REQUIRE(fs.size() == 1);
        CHECK(fs[0].first == g);
        CHECK(fs[0].second == 1);
        CHECK(is_irreducible(g));
        (void)f;
    }
}

TEST_CASE("factor reassembly on random products") {
    auto f25 = make_base_field(5);
    Prng rng(400);
    for (int trial = 0; trial < 100; ++trial) {
        int nfac = 1 + (int)rng.below(5);
        UniPoly prod = UniPoly::from_ints(f25, {1});
        std::map<std::string, u32> truth;
        for (int i = 0; i < nfac; ++i) {
            UniPoly q = random_monic_irreducible(f25, 1 + (int)rng.below(3), rng);
            u32 mult = 1 + (u32)rng.below(3);
            truth[q.str()] += mult;
            for (u32 k = 0; k < mult; ++k) prod = prod * q;
        }
        FieldElement scale = f25->element_at(1 + rng.below(24));
        prod = prod.scaled(scale);

        auto fs = factor(prod);
        UniPoly re = UniPoly::from_ints(f25, {1}).scaled(prod.lc());
        std::map<std::string, u32> got;
        for (const auto& [q, m] : fs) {
            got[q.str()] += m;
            for (u32 k = 0; k < m; ++k) re = re * q;
        }
        CHECK(re == prod);
        CHECK(got == truth);
    }
}

TEST_CASE("factor determinism") {
    auto f49 = make_base_field(7);
    Prng rng(500);
    UniPoly f = random_poly(f49, 12, rng);
    set_global_seed(123);
    auto a = factor(f);
    set_global_seed(123);
    auto b = factor(f);
    set_global_seed(0);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].first == b[i].first);
        CHECK(a[i].second == b[i].second);
    }
}

TEST_CASE("roots_in_field") {
    auto f5 = prime_field(5);
    auto f25 = make_base_field(5);

    SUBCASE("x^2 - 4 over F_5") {
        UniPoly f = UniPoly::from_ints(f5, {1, 0, 1}); // x^2 + 1 = x^2 - 4
        auto roots = roots_in_field(f, f5);
        REQUIRE(roots.size() == 2);
        CHECK(roots[0] == f5->from_int(2));
        CHECK(roots[1] == f5->from_int(3));
    }
    SUBCASE("x^2 + 2 has no roots in F_5 but two in F_25") {
        UniPoly f = UniPoly::from_ints(f5, {2, 0, 1});
        CHECK(roots_in_field(f, f5).empty());
        auto roots = roots_in_field(f, f25);
        CHECK(roots.size() == 2);
        for (const auto& r : roots) CHECK(r * r == f25->from_int(3));
    }
    SUBCASE("roots lift along embeddings") {
        Prng rng(600);
        auto [f625, emb] = extend_field(f25, 2);
        for (int trial = 0; trial < 20; ++trial) {
            UniPoly f = random_poly(f25, 2 + (int)rng.below(5), rng);
            auto small = roots_in_field(f, f25);
            auto big = roots_in_field(f, f625);
            // every small root appears among the big ones after embedding
            for (const auto& r : small) {
                bool found = false;
                for (const auto& s : big) found = found || s == emb(r);
                CHECK(found);
            }
            CHECK(big.size() >= small.size());
        }
    }
    SUBCASE("target must extend the coefficient field") {
        UniPoly f = UniPoly::from_ints(f25, {1, 1});
        CHECK_THROWS_AS(roots_in_field(f, make_base_field(7)), NotAnExtension);
    }
}

TEST_CASE("pow and divrem consistency") {
    auto f25 = make_base_field(5);
    Prng rng(700);
    for (int trial = 0; trial < 50; ++trial) {
        UniPoly a = random_poly(f25, 1 + (int)rng.below(8), rng);
        UniPoly b = random_poly(f25, 1 + (int)rng.below(5), rng);
        auto [q, r] = a.divrem(b);
        CHECK(q * b + r == a);
        CHECK(r.degree() < b.degree());
    }
}

TEST_SUITE_END();
