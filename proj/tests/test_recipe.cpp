#include <doctest.h>

#include "zdbkit/recipe.hpp"
#include "zdbkit/zdb.hpp"

using namespace zdbkit;

TEST_SUITE("recipe") {

TEST_CASE("parse / serialize round trip") {
    const std::string text = R"({
        "field": {"p": 3, "s": 6, "k": 2, "modulus": [2, 2, 1, 0, 2, 0, 1]},
        "e": 4, "r": 2, "u": 1,
        "d_logs": [4, 8],
        "g_logs": [0, 91],
        "outputs": ["spectrum", "fhs"]
    })";
    Recipe r = parse_recipe_json(text);
    CHECK(r.p == 3);
    CHECK(r.s == 6);
    CHECK(r.k == 2);
    CHECK(r.e == 4);
    CHECK(r.d_logs == std::vector<std::int64_t>{4, 8});
    REQUIRE(r.g_logs.has_value());
    CHECK(r.outputs.count("fhs") == 1);

    Recipe again = parse_recipe_json(recipe_to_json(r));
    CHECK(again.p == r.p);
    CHECK(again.modulus == r.modulus);
    CHECK(again.d_logs == r.d_logs);
    CHECK(again.g_logs == r.g_logs);
    CHECK(again.outputs == r.outputs);
}

TEST_CASE("schema violations") {
    CHECK_THROWS_AS(parse_recipe_json("not json"), SchemaError);
    CHECK_THROWS_AS(parse_recipe_json("[]"), SchemaError);
    CHECK_THROWS_AS(parse_recipe_json(R"({"field": {"p": 3, "s": 3, "k": 1}})"), SchemaError);
    CHECK_THROWS_AS(
        parse_recipe_json(R"({"field": {"p": 3, "s": 3, "k": 1}, "d_logs": "zzz"})"), SchemaError);
    CHECK_THROWS_AS(parse_recipe_json(
                        R"({"field": {"p": 3, "s": 3, "k": 1}, "d_logs": [0], "outputs": ["bogus"]})"),
                    SchemaError);
    CHECK_THROWS_AS(parse_recipe_json(
                        R"({"field": {"p": 3, "s": 3, "k": 1}, "d_logs": [0], "v": 2})"),
                    SchemaError);
}

TEST_CASE("run_recipe constructs and verifies") {
    Recipe r;
    r.p = 3;
    r.s = 3;
    r.k = 1;
    r.modulus = std::vector<int>{1, 2, 0, 1};
    r.e = 2;
    r.r = 1;
    r.u = 1;
    r.d_logs = {0, 2};
    ConstructionRun run = run_recipe(r);
    CHECK(run.functions.size() == 1);
    CHECK(run.expected_lambda == 8);
    CHECK(*is_zdb(run.functions[0]).lambda == 8);

    SUBCASE("provenance reproduces the value tables bit-exactly") {
        Recipe embedded = parse_recipe_json(run.functions[0].provenance);
        ConstructionRun rerun = run_recipe(embedded);
        CHECK(rerun.functions[0].values == run.functions[0].values);
    }
    SUBCASE("a violating weight vector fails verification only under force") {
        Recipe bad = r;
        bad.d_logs = {0, 1};
        CHECK_THROWS_AS(run_recipe(bad), PreconditionError); // condition (ii)
        RunOptions forced;
        forced.force = true;
        CHECK_THROWS_AS(run_recipe(bad, forced), VerificationError); // not ZDB
        forced.verify = false;
        ConstructionRun built = run_recipe(bad, forced);
        CHECK(built.functions.size() == 1);
    }
}

TEST_CASE("run_recipe interleaving path") {
    Recipe r;
    r.p = 3;
    r.s = 3;
    r.k = 1;
    r.modulus = std::vector<int>{1, 2, 0, 1};
    r.e = 2;
    r.r = 2;
    r.u = 1;
    r.d_logs = {0};
    r.g_logs = std::vector<std::int64_t>{0, 13};
    r.interleave_k = 2;
    ConstructionRun run = run_recipe(r);
    REQUIRE(run.interleaved.has_value());
    CHECK(run.interleaved->n == 26);
    CHECK(run.expected_lambda == 8);
    CHECK(*is_zdb(*run.interleaved).lambda == 8);
}

} // TEST_SUITE
