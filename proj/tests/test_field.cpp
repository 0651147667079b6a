#include <doctest.h>

#include "howe/field.hpp"
#include "howe/prng.hpp"
#include "howe/unipoly.hpp"

using namespace howe;

TEST_SUITE_BEGIN("field");

TEST_CASE("canonical moduli for small base fields") {
    auto f25 = make_base_field(5);
    CHECK(f25->modulus() == std::vector<u32>{2, 0, 1}); // x^2 + 2
    auto f49 = make_base_field(7);
    CHECK(f49->modulus() == std::vector<u32>{1, 0, 1}); // x^2 + 1
    CHECK_THROWS_AS(make_base_field(4), CompositeOrSmallPrime);
    CHECK_THROWS_AS(make_base_field(3), CompositeOrSmallPrime);
}

TEST_CASE("modulus choice is deterministic") {
    auto a = FieldCtx::get(11, 4);
    auto b = FieldCtx::get(11, 4);
    CHECK(a == b); // interned
    CHECK(a->modulus() == b->modulus());
}

TEST_CASE("field axioms on random samples") {
    for (auto ctx : {make_base_field(5), make_base_field(7), FieldCtx::get(5, 4)}) {
        Prng rng(derive_seed(ctx->degree()));
        const u64 n = ctx->size_u64();
        for (int i = 0; i < 1000; ++i) {
            FieldElement u = ctx->element_at(rng.below(n));
            FieldElement v = ctx->element_at(rng.below(n));
            FieldElement w = ctx->element_at(rng.below(n));
            CHECK((u + v) + w == u + (v + w));
            CHECK(u * (v + w) == u * v + u * w);
            CHECK(u * v == v * u);
            if (!u.is_zero()) CHECK(u * u.inv() == ctx->one());
        }
    }
}

TEST_CASE("frobenius") {
    auto f25 = make_base_field(5);
    FieldElement g = f25->generator();

    SUBCASE("prime subfield is fixed") {
        for (u64 v = 0; v < 5; ++v)
            for (u64 k = 0; k < 4; ++k)
                CHECK(f25->from_int(v).frobenius(k) == f25->from_int(v));
    }
    SUBCASE("full orbit returns") {
        Prng rng(3);
        for (int i = 0; i < 50; ++i) {
            FieldElement x = f25->element_at(rng.below(25));
            CHECK(x.frobenius(2) == x);
        }
    }
    SUBCASE("g^5 = 4g in F_25") {
        CHECK(g.frobenius(1) == g * f25->from_int(4));
    }
    SUBCASE("ring homomorphism fixing exactly F_p") {
        Prng rng(4);
        for (int i = 0; i < 200; ++i) {
            FieldElement u = f25->element_at(rng.below(25));
            FieldElement v = f25->element_at(rng.below(25));
            CHECK((u + v).frobenius(1) == u.frobenius(1) + v.frobenius(1));
            CHECK((u * v).frobenius(1) == u.frobenius(1) * v.frobenius(1));
            bool fixed = u.frobenius(1) == u;
            bool in_fp = u.coeff(1) == 0;
            CHECK(fixed == in_fp);
        }
    }
}

TEST_CASE("extend_field and embeddings") {
    auto f25 = make_base_field(5);

    SUBCASE("d = 1 is the identity") {
        auto [ctx, emb] = extend_field(f25, 1);
        CHECK(ctx == f25);
        FieldElement g = f25->generator();
        CHECK(emb(g) == g);
    }
    SUBCASE("embedding into F_5^4 maps g to a root of x^2 + 2") {
        auto [f625, emb] = extend_field(f25, 2);
        CHECK(f625->degree() == 4);
        FieldElement img = emb(f25->generator());
        CHECK(img * img == f625->from_int(3)); // -2 mod 5
    }
    SUBCASE("embedding is a field map") {
        auto [f625, emb] = extend_field(f25, 2);
        Prng rng(11);
        for (int i = 0; i < 100; ++i) {
            FieldElement u = f25->element_at(rng.below(25));
            FieldElement v = f25->element_at(rng.below(25));
            CHECK(emb(u * v) == emb(u) * emb(v));
            CHECK(emb(u + v) == emb(u) + emb(v));
        }
    }
    SUBCASE("descend returns to the subfield") {
        auto [f625, emb] = extend_field(f25, 2);
        Prng rng(12);
        for (int i = 0; i < 50; ++i) {
            FieldElement u = f25->element_at(rng.below(25));
            auto back = descend(emb(u), f25);
            REQUIRE(back.has_value());
            CHECK(*back == u);
        }
        // an element generating the big field has no preimage
        auto none = descend(f625->generator(), f25);
        CHECK(!none.has_value());
    }
}

TEST_CASE("sqrt") {
    auto f5 = prime_field(5);
    auto f25 = make_base_field(5);

    CHECK(*sqrt(f5->zero()) == f5->zero());
    CHECK(*sqrt(f5->from_int(4)) == f5->from_int(2)); // canonical min of {2,3}
    CHECK(!sqrt(f5->from_int(3)).has_value());
    // 3 becomes a square after extension to F_25
    auto r = sqrt(f25->from_int(3));
    REQUIRE(r.has_value());
    CHECK(*r * *r == f25->from_int(3));

    Prng rng(5);
    for (int i = 0; i < 100; ++i) {
        FieldElement x = f25->element_at(rng.below(25));
        FieldElement sq = x * x;
        auto root = sqrt(sq);
        REQUIRE(root.has_value());
        CHECK(*root * *root == sq);
    }
}

TEST_CASE("canonical element order matches element_at") {
    auto f25 = make_base_field(5);
    for (u64 k = 0; k + 1 < 25; ++k)
        CHECK(FieldElement::canonical_less(f25->element_at(k), f25->element_at(k + 1)));
}

TEST_SUITE_END();
