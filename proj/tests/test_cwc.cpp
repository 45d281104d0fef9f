#include <doctest.h>

#include "zdbkit/construct.hpp"
#include "zdbkit/cwc.hpp"

using namespace zdbkit;

namespace {

ZdbFunction trace_zdb(const FieldTable& f) {
    ZdbFunction g;
    g.n = f.order();
    g.codomain = Codomain::base_field(f);
    for (std::int64_t t = 0; t < g.n; ++t)
        g.values.push_back(f.base_index(f.trace(f.from_log(t))));
    g.onto = true;
    return g;
}

} // namespace

TEST_SUITE("cwc") {

TEST_CASE("minimum distance scan") {
    SUBCASE("two identical words have distance 0") {
        std::vector<std::vector<std::int32_t>> words{{1, 2, 3}, {1, 2, 3}};
        CHECK(min_distance(words) == 0);
    }
    SUBCASE("pair cap is enforced unless sampling is allowed") {
        std::vector<std::vector<std::int32_t>> words{{0, 1}, {1, 0}, {1, 1}};
        CHECK_THROWS_WITH_AS(min_distance(words, 2), doctest::Contains("cap"), PreconditionError);
        CHECK(min_distance(words, 2, 0, /*allow_sampling=*/true, 1) >= 1);
        CHECK(min_distance(words) == 1);
    }
    SUBCASE("fewer than two codewords cannot have a distance") {
        std::vector<std::vector<std::int32_t>> one{{0, 1}};
        CHECK_THROWS_AS(min_distance(one), PreconditionError);
    }
}

TEST_CASE("the (26, 26, 18, 18)_3 code from the trace function") {
    FieldTable f = build_field(3, 3, 1, std::vector<int>{1, 2, 0, 1});
    ZdbFunction zdb = trace_zdb(f);
    ConstantWeightCode code = build_cwc({zdb});
    CHECK(code.n == 26);
    CHECK(code.N == 26);
    CHECK(code.d == 18);
    CHECK(code.w == 18);
    CHECK(code.ell == 3);

    SUBCASE("FVS bound is met with exact rational equality") {
        FvsResult fvs = fvs_bound(code.n, code.d, code.w, code.ell, code.N);
        REQUIRE(fvs.applicable);
        CHECK(fvs.bound == Rational(26, 1));
        CHECK(fvs.optimal);
    }
    SUBCASE("distance identity against the correlation route") {
        // dist(shift_j(f), shift_j'(f)) = n - N_0(j - j')
        auto n0 = zero_difference_counts(zdb);
        for (std::int64_t j = 1; j < 5; ++j) {
            std::int64_t coincidences = 0;
            for (std::int64_t t = 0; t < code.n; ++t)
                coincidences += code.codewords[0][static_cast<std::size_t>(t)] ==
                                code.codewords[static_cast<std::size_t>(j)][static_cast<std::size_t>(t)];
            CHECK(coincidences == n0[static_cast<std::size_t>(j - 1)]);
        }
    }
}

TEST_CASE("vector-valued alphabet: the (26, 26, 24, 24)_9 code") {
    FieldTable f = build_field(3, 3, 1, std::vector<int>{1, 2, 0, 1});
    CosetSystem cs = build_cosets(f, 2, 1);
    ConstructionParams p;
    p.field = &f;
    p.cosets = &cs;
    p.u = 1;
    p.d = {f.one(), f.from_log(2)};
    p.a_vec = std::vector<Fe>{f.one(), f.theta()};
    ZdbFunction g = construct_vector_zdb(p);
    ConstantWeightCode code = build_cwc({g});
    CHECK(code.n == 26);
    CHECK(code.N == 26);
    CHECK(code.w == 24); // n minus the zero-tuple preimage (q^(m-v)-1)/r = 2
    CHECK(code.d == 24);
    CHECK(code.ell == 9);
    FvsResult fvs = fvs_bound(code.n, code.d, code.w, code.ell, code.N);
    REQUIRE(fvs.applicable);
    CHECK(fvs.bound == Rational(26, 1)); // 4992/192 exactly
    CHECK(fvs.optimal);
}

TEST_CASE("duplicate and uneven codewords are refused") {
    SUBCASE("constant function duplicates every shift") {
        ZdbFunction f;
        f.n = 6;
        f.codomain = Codomain::integers_mod(3);
        f.values.assign(6, 1);
        CHECK_THROWS_WITH_AS(build_cwc({f}), doctest::Contains("duplicate"), VerificationError);
    }
    SUBCASE("weight variation across members is caught") {
        ZdbFunction a;
        a.n = 4;
        a.codomain = Codomain::integers_mod(3);
        a.values = {0, 1, 2, 1};
        ZdbFunction b = a;
        b.values = {0, 0, 1, 2}; // weight 2 vs 3
        CHECK_THROWS_WITH_AS(build_cwc({a, b}), doctest::Contains("weight"), VerificationError);
    }
}

TEST_CASE("FVS bound arithmetic") {
    SUBCASE("exact rational values for the worked codes") {
        FvsResult big = fvs_bound(364, 324, 324, 9, 728);
        REQUIRE(big.applicable);
        CHECK(big.bound == Rational(728, 1));
        CHECK(big.optimal);
    }
    SUBCASE("weight zero degenerates to the single zero word") {
        FvsResult r = fvs_bound(10, 4, 0, 3, 1);
        REQUIRE(r.applicable);
        CHECK(r.bound == Rational(1, 1));
        CHECK(r.optimal);
    }
    SUBCASE("positivity guard reports inapplicable instead of erroring") {
        FvsResult r = fvs_bound(10, 2, 8, 3, 5);
        CHECK_FALSE(r.applicable);
    }
}

} // TEST_SUITE
