#include <doctest.h>

#include "howe/howe_search.hpp"
#include "howe/prng.hpp"

#include <set>

using namespace howe;

namespace {

std::set<std::pair<std::vector<u32>, std::vector<u32>>>
as_set(const std::vector<std::pair<FieldElement, FieldElement>>& v) {
    std::set<std::pair<std::vector<u32>, std::vector<u32>>> s;
    for (const auto& [a, b] : v) s.emplace(a.to_coeffs(), b.to_coeffs());
    return s;
}

} // namespace

TEST_SUITE_BEGIN("howe_search");

TEST_CASE("gcd-based solve equals brute force on every pair, p = 5 and 11") {
    for (u32 p : {5u, 11u}) {
        auto ctx = make_base_field(p);
        auto list = build_weierstrass_list(ctx);
        for (std::size_t i = 0; i < list.size(); ++i)
            for (std::size_t j = i; j < list.size(); ++j) {
                auto fast = as_set(solve_lambda_mu(list[i], list[j], ctx, 1));
                auto brute = as_set(brute_force_lambda_mu(list[i], list[j], ctx));
                CHECK(fast == brute);
            }
    }
}

TEST_CASE("identically vanishing entries admit every lambda") {
    // A = B = 0 makes all four entries the zero polynomial for every mu
    auto ctx = make_base_field(5);
    SupersingularEntry degenerate{ctx->zero(), ctx->zero(), ctx->zero(), ctx->zero()};
    auto sols = solve_lambda_mu(degenerate, degenerate, ctx, 1);
    const u64 q = ctx->size_u64();
    CHECK(sols.size() == q * (q - 1)); // every lambda for every nonzero mu
    for (const auto& [lam, mu] : sols) {
        (void)lam;
        CHECK(!mu.is_zero());
    }
}

TEST_CASE("is_howe_type") {
    auto ctx = make_base_field(5);
    auto cat = build_catalog(ctx);
    FieldElement one = ctx->one(), zero = ctx->zero();

    SUBCASE("identical cubics are rejected") {
        HoweParams hp{cat[0].A0, cat[0].B0, cat[0].A0, cat[0].B0,
                      zero,      one,       one};
        CHECK(!is_howe_type(hp)); // f1 = f2
    }
    SUBCASE("mu = 0 is rejected") {
        HoweParams hp{cat[0].A0, cat[0].B0, cat[0].A0, cat[0].B0,
                      zero,      zero,      one};
        CHECK(!is_howe_type(hp));
    }
    SUBCASE("a p=5 witness passes") {
        SearchOptions opt;
        auto h5 = enumerate_howe(5, opt);
        REQUIRE(!h5.empty());
        CHECK(is_howe_type(h5.front()));
    }
}

TEST_CASE("enumerate reproduces the published counts at small p") {
    SearchOptions opt;
    CHECK(enumerate_howe(5, opt).size() == 9);
    CHECK(enumerate_howe(7, opt).size() == 0);
    CHECK(enumerate_howe(11, opt).size() == 87);
    CHECK_THROWS_AS(enumerate_howe(4, opt), CompositeOrSmallPrime);
}

TEST_CASE("every output tuple re-validates") {
    SearchOptions opt;
    for (u32 p : {5u, 11u}) {
        for (const auto& hp : enumerate_howe(p, opt)) {
            CHECK(validate_howe_params(hp));
            CHECK(hp.nu == hp.nu.ctx()->one());
        }
    }
}

TEST_CASE("output independent of worker count") {
    SearchOptions one_job, four_jobs;
    four_jobs.jobs = 4;
    auto a = enumerate_howe(11, one_job);
    auto b = enumerate_howe(11, four_jobs);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) CHECK(a[i] == b[i]);
}

TEST_CASE("early stop returns a single witness") {
    SearchOptions opt;
    opt.early_stop = true;
    auto w = enumerate_howe(11, opt);
    REQUIRE(w.size() == 1);
    CHECK(validate_howe_params(w.front()));
    CHECK(enumerate_howe(7, opt).empty());
}

TEST_SUITE_END();
