#include <doctest.h>

#include <algorithm>
#include <random>

#include "zdbkit/construct.hpp"
#include "zdbkit/zdb.hpp"

using namespace zdbkit;

namespace {

ZdbFunction trace_function(const FieldTable& f) {
    ZdbFunction g;
    g.n = f.order();
    g.codomain = Codomain::base_field(f);
    for (std::int64_t t = 0; t < g.n; ++t)
        g.values.push_back(f.base_index(f.trace(f.from_log(t))));
    g.onto = true;
    return g;
}

} // namespace

TEST_SUITE("zdb") {

TEST_CASE("constant function: every difference is zero") {
    ZdbFunction f;
    f.n = 10;
    f.codomain = Codomain::integers_mod(3);
    f.values.assign(10, 0);
    auto chk = is_zdb(f);
    REQUIRE(chk.ok());
    CHECK(*chk.lambda == 10);
    auto spec = difference_spectrum(f);
    for (std::int64_t a = 1; a < 10; ++a) CHECK(spec.at(a, 0) == 10);
}

TEST_CASE("identity map on Z_n concentrates N_b(a) at b = a") {
    ZdbFunction f;
    f.n = 5;
    f.codomain = Codomain::integers_mod(5);
    for (std::int64_t t = 0; t < 5; ++t) f.values.push_back(static_cast<std::int32_t>(t));
    auto spec = difference_spectrum(f);
    for (std::int64_t a = 1; a < 5; ++a)
        for (std::int64_t b = 0; b < 5; ++b) CHECK(spec.at(a, b) == (a == b ? 5 : 0));
    auto chk = is_zdb(f);
    REQUIRE(chk.ok());
    CHECK(*chk.lambda == 0); // injective
    auto ids = sum_identities_check(f, 0);
    CHECK(ids.pass); // all tau_i = 1, sum of squares = n
    CHECK(ids.sum_tau_sq == 5);
}

TEST_CASE("the trace sequence over GF(27)/GF(3) is a (26, 3, 8)-ZDB function") {
    FieldTable field = build_field(3, 3, 1, std::vector<int>{1, 2, 0, 1});
    ZdbFunction f = trace_function(field);
    auto chk = is_zdb(f);
    REQUIRE(chk.ok());
    CHECK(*chk.lambda == 8);

    SUBCASE("preimage identities") {
        auto ids = sum_identities_check(f, 8);
        CHECK(ids.pass);
        CHECK(ids.sum_tau == 26);
        CHECK(ids.sum_tau_sq == 226);
    }
    SUBCASE("partitioned difference family round trip") {
        PdfFamily pdf = to_pdf(f);
        std::vector<std::int64_t> sizes = pdf.block_sizes;
        std::sort(sizes.begin(), sizes.end());
        CHECK(sizes == std::vector<std::int64_t>{8, 9, 9});
        auto pchk = verify_pdf(pdf);
        REQUIRE(pchk.ok());
        CHECK(*pchk.lambda == 8);
    }
    SUBCASE("preimage sizes sit inside the bound interval") {
        auto pb = preimage_size_bounds(26, 3, 8);
        CHECK(pb.special == PreimageCase::DifferenceBalanced);
        CHECK(pb.lo == doctest::Approx(8.0));
        CHECK(pb.hi == doctest::Approx(28.0 / 3.0));
        for (std::int64_t tau : to_pdf(f).block_sizes) {
            CHECK(tau >= pb.lo);
            CHECK(tau <= pb.hi);
        }
    }
}

TEST_CASE("lambda lower bound values") {
    CHECK(lambda_lower_bound(26, 3).bound == 8);
    CHECK(lambda_lower_bound(364, 9).bound == 40);
    CHECK(lambda_lower_bound(7, 7).bound == 0);
    CHECK(lambda_lower_bound(1, 1).bound == 0);

    auto lb = lambda_lower_bound(26, 3);
    CHECK(lb.exact); // 24*25 / 75 = 8 exactly
    CHECK(lb.k == 8);
    CHECK(lb.eps == 2);
    CHECK_THROWS_AS(lambda_lower_bound(3, 5), PreconditionError);
}

TEST_CASE("preimage bound special cases") {
    SUBCASE("perfect nonlinear lambda = n/ell") {
        auto pb = preimage_size_bounds(9, 3, 3);
        CHECK(pb.special == PreimageCase::PerfectNonlinear);
        CHECK(pb.lo == doctest::Approx((9.0 - 2 * 3.0) / 3.0));
        CHECK(pb.hi == doctest::Approx((9.0 + 2 * 3.0) / 3.0));
    }
    SUBCASE("inconsistent parameters have a negative discriminant") {
        CHECK_THROWS_AS(preimage_size_bounds(26, 3, 0), PreconditionError);
    }
}

TEST_CASE("verify_pdf rejects non-partitions and refutes non-constant families") {
    PdfFamily overlap{4, {{0, 1}, {1, 2}, {3}}, {}, {}};
    CHECK_THROWS_WITH_AS(verify_pdf(overlap), doctest::Contains("overlap"), PreconditionError);
    PdfFamily gap{4, {{0, 1}, {3}}, {}, {}};
    CHECK_THROWS_WITH_AS(verify_pdf(gap), doctest::Contains("cover"), PreconditionError);

    PdfFamily uneven{4, {{0, 1}, {2}, {3}}, {}, {}};
    auto chk = verify_pdf(uneven);
    CHECK_FALSE(chk.ok());
    CHECK(chk.witness_g == 2); // difference 2 never occurs inside a block
    CHECK(chk.witness_count == 0);
    CHECK(chk.reference_count == 1);

    PdfFamily singletons{5, {{0}, {1}, {2}, {3}, {4}}, {}, {}};
    auto schk = verify_pdf(singletons);
    REQUIRE(schk.ok());
    CHECK(*schk.lambda == 0);
}

TEST_CASE("multiplicative presentation adds the zero point to the zero column only") {
    FieldTable field = build_field(3, 3, 1, std::vector<int>{1, 2, 0, 1});
    ZdbFunction f = trace_function(field);
    auto add = difference_spectrum(f);
    auto mult = multiplicative_spectrum(f, true);
    for (std::int64_t a = 1; a < f.n; ++a)
        for (std::int64_t b = 0; b < 3; ++b)
            CHECK(mult.at(a, b) == add.at(a, b) + (b == add.zero_index ? 1 : 0));
    CHECK(*mult.lambda == 9);
}

TEST_CASE("property: spectrum rows sum to n and PDF equivalence on random tables") {
    std::mt19937_64 rng(2024);
    for (int round = 0; round < 25; ++round) {
        ZdbFunction f;
        f.n = 2 + static_cast<std::int64_t>(rng() % 40);
        std::int64_t ell = 2 + static_cast<std::int64_t>(rng() % 5);
        f.codomain = Codomain::integers_mod(ell);
        for (std::int64_t t = 0; t < f.n; ++t)
            f.values.push_back(static_cast<std::int32_t>(rng() % static_cast<std::uint64_t>(ell)));

        auto spec = difference_spectrum(f);
        for (std::int64_t a = 1; a < f.n; ++a) {
            std::int64_t sum = 0;
            for (std::int64_t b = 0; b < ell; ++b) sum += spec.at(a, b);
            REQUIRE(sum == f.n);
        }

        // zero-difference balance of f and of its preimage family agree
        auto zchk = is_zdb(f);
        auto pchk = verify_pdf(to_pdf(f));
        REQUIRE(zchk.ok() == pchk.ok());
        if (zchk.ok()) REQUIRE(*zchk.lambda == *pchk.lambda);
    }
}

} // TEST_SUITE
