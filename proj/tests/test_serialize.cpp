#include <doctest.h>

#include "howe/serialize.hpp"

#include <sstream>

using namespace howe;

TEST_SUITE_BEGIN("serialize");

TEST_CASE("round-trip of a full p=11 parameter file") {
    SearchOptions opt;
    auto h11 = enumerate_howe(11, opt);
    REQUIRE(h11.size() == 87);
    RunHeader h{"howe_params", 11, 0, false};
    std::ostringstream os;
    write_params_file(os, h, h11);
    std::istringstream is(os.str());
    auto [h2, tuples] = read_params_file(is);
    CHECK(h2.p == 11);
    CHECK(h2.seed == 0);
    REQUIRE(tuples.size() == 87);
    for (std::size_t i = 0; i < tuples.size(); ++i) CHECK(tuples[i] == h11[i]);
    // serialization is stable byte for byte
    std::ostringstream os2;
    write_params_file(os2, h2, tuples);
    CHECK(os.str() == os2.str());
}

TEST_CASE("schema violations are rejected") {
    SUBCASE("wrong version") {
        std::istringstream is(
            R"({"schema":"howe-ssp/0","kind":"howe_params","p":5,"seed":0,)"
            R"("options":{"ordered_pairs":false},"field":{"p":5,"level":1,"modulus":[2,0,1]}})"
            "\n");
        CHECK_THROWS_AS(read_params_file(is), SchemaMismatch);
    }
    SUBCASE("wrong modulus header") {
        std::istringstream is(
            R"({"schema":"howe-ssp/1","kind":"howe_params","p":5,"seed":0,)"
            R"("options":{"ordered_pairs":false},"field":{"p":5,"level":1,"modulus":[1,0,1]}})"
            "\n");
        CHECK_THROWS_AS(read_params_file(is), SchemaMismatch);
    }
    SUBCASE("residue out of range") {
        auto f25 = make_base_field(5);
        RunHeader h{"howe_params", 5, 0, false};
        std::ostringstream os;
        os << header_line(h, f25) << "\n";
        os << R"({"A1":[9,0],"B1":[0,0],"A2":[0,0],"B2":[0,0],"lambda":[0,0],"mu":[1,0],"nu":[1,0]})"
           << "\n";
        std::istringstream is(os.str());
        CHECK_THROWS_AS(read_params_file(is), SchemaMismatch);
    }
}

TEST_CASE("empty payload is a valid file") {
    SearchOptions opt;
    auto h7 = enumerate_howe(7, opt);
    CHECK(h7.empty());
    RunHeader h{"howe_params", 7, 0, false};
    std::ostringstream os;
    write_params_file(os, h, h7);
    std::istringstream is(os.str());
    auto [h2, tuples] = read_params_file(is);
    CHECK(h2.p == 7);
    CHECK(tuples.empty());
}

TEST_SUITE_END();
