#include <doctest.h>

#include <numeric>
#include <set>

#include "zdbkit/construct.hpp"
#include "zdbkit/recipe.hpp"

using namespace zdbkit;

namespace {

struct Ex1 {
    FieldTable field = build_field(3, 3, 1, std::vector<int>{1, 2, 0, 1});
    CosetSystem cosets = build_cosets(field, 2, 1);
    ConstructionParams params(std::vector<Fe> d) {
        ConstructionParams p;
        p.field = &field;
        p.cosets = &cosets;
        p.u = 1;
        p.d = std::move(d);
        return p;
    }
};

struct Ex2 {
    FieldTable field = build_field(3, 6, 2, std::vector<int>{2, 2, 1, 0, 2, 0, 1});
    CosetSystem cosets = build_cosets(field, 4, 2);
    ConstructionParams params(std::vector<Fe> d) {
        ConstructionParams p;
        p.field = &field;
        p.cosets = &cosets;
        p.u = 1;
        p.d = std::move(d);
        return p;
    }
};

} // namespace

TEST_SUITE("construct") {

TEST_CASE("condition (i)") {
    Ex1 ex;
    SUBCASE("u = 1 always holds") {
        auto res = check_condition_i(ex.params({ex.field.one(), ex.field.from_log(2)}));
        CHECK(res.ok);
    }
    SUBCASE("congruence scan agrees with direct enumeration of C_0 (u = 2)") {
        ConstructionParams p = ex.params({ex.field.one(), ex.field.from_log(2)});
        p.u = 2;
        auto res = check_condition_i(p);
        // oracle: count x in C_0 with x^u = 1, x != 1 by walking the coset
        std::int64_t bad = 0;
        for (std::int64_t j = 1; j < ex.field.order() / ex.cosets.e(); ++j) {
            Fe x = ex.field.from_log(j * ex.cosets.e());
            if (ex.field.pow(x, p.u) == ex.field.one()) ++bad;
        }
        CHECK(res.ok == (bad == 0));
        CHECK(res.ok);
    }
    SUBCASE("forced congruence e*u = q^m - 1 fails with witness j = 1") {
        FieldTable f5 = build_field(5, 1, 1);
        CosetSystem cs = build_cosets(f5, 2, 1);
        ConstructionParams p;
        p.field = &f5;
        p.cosets = &cs;
        p.u = 2;
        p.d = {f5.one(), f5.one()};
        auto res = check_condition_i(p);
        CHECK_FALSE(res.ok);
        CHECK(res.witness_j == 1);
    }
}

TEST_CASE("condition (ii)") {
    SUBCASE("l = 1 is vacuous") {
        FieldTable f = build_field(3, 3, 1, std::vector<int>{1, 2, 0, 1});
        CosetSystem cs = build_cosets(f, 2, 2);
        ConstructionParams p;
        p.field = &f;
        p.cosets = &cs;
        p.u = 1;
        p.d = {f.one()};
        CHECK(check_condition_ii(p).ok);
    }
    SUBCASE("worked pairs") {
        Ex1 ex1;
        CHECK(check_condition_ii(ex1.params({ex1.field.one(), ex1.field.from_log(2)})).ok);
        auto bad = check_condition_ii(ex1.params({ex1.field.one(), ex1.field.theta()}));
        CHECK_FALSE(bad.ok);
        CHECK(bad.witness_k == 1);

        Ex2 ex2;
        CHECK(check_condition_ii(ex2.params({ex2.field.from_log(4), ex2.field.from_log(8)})).ok);
    }
    SUBCASE("theta^(r j) weights with u = 1 on GF(121), e = l = 5") {
        FieldTable f = build_field(11, 2, 1);
        CosetSystem cs = build_cosets(f, 5, 1);
        ConstructionParams p;
        p.field = &f;
        p.cosets = &cs;
        p.u = 1;
        for (int j = 0; j < 5; ++j) p.d.push_back(f.from_log(j));
        CHECK(check_condition_ii(p).ok);
    }
    SUBCASE("zero weight is rejected") {
        Ex1 ex;
        CHECK_THROWS_WITH_AS(check_condition_ii(ex.params({ex.field.one(), ex.field.zero()})),
                             doctest::Contains("d_i = 0"), PreconditionError);
    }
}

TEST_CASE("construct_zdb on the worked instances") {
    Ex1 ex;
    ZdbFunction f = construct_zdb(ex.params({ex.field.one(), ex.field.from_log(2)}));
    CHECK(f.n == 26);
    CHECK(f.ell() == 3);
    CHECK(f.onto);
    auto chk = is_zdb(f);
    REQUIRE(chk.ok());
    CHECK(*chk.lambda == 8);

    SUBCASE("l = 1 trace subcase lambda = (q^(m-1)-1)/r") {
        FieldTable f27 = build_field(3, 3, 1, std::vector<int>{1, 2, 0, 1});
        CosetSystem cs = build_cosets(f27, 2, 2);
        ConstructionParams p;
        p.field = &f27;
        p.cosets = &cs;
        p.u = 1;
        p.d = {f27.one()};
        ZdbFunction g = construct_zdb(p);
        CHECK(g.n == 13);
        CHECK(*is_zdb(g).lambda == 4);
    }
    SUBCASE("a violating weight vector is rejected, and force builds a refutable table") {
        auto p = ex.params({ex.field.one(), ex.field.theta()});
        CHECK_THROWS_WITH_AS(construct_zdb(p), doctest::Contains("condition (ii)"),
                             PreconditionError);
        p.force = true;
        ZdbFunction g = construct_zdb(p);
        auto c = is_zdb(g);
        CHECK_FALSE(c.ok()); // sufficiency refuted empirically on this instance
        CHECK(c.witness_shift > 0);
    }
}

TEST_CASE("special case I (squares/nonsquares)") {
    FieldTable f = build_field(3, 3, 1, std::vector<int>{1, 2, 0, 1});
    SUBCASE("equal weights reduce to the trace function, difference balanced") {
        Sc1Result res = construct_sc1(f, f.one(), f.one());
        CHECK(res.difference_balanced);
        CHECK(*res.additive.lambda == 8);
    }
    SUBCASE("worked weights are not difference balanced") {
        Sc1Result res = construct_sc1(f, f.one(), f.from_log(2));
        CHECK_FALSE(res.difference_balanced);
        CHECK(*res.multiplicative.lambda == 9);
        // q - 1 preimage sets of size q^(m-1) and one of size q^(m-1) - 1
        auto pdf = to_pdf(res.f);
        std::vector<std::int64_t> sizes = pdf.block_sizes;
        std::sort(sizes.begin(), sizes.end());
        CHECK(sizes == std::vector<std::int64_t>{8, 9, 9});
    }
    SUBCASE("preconditions") {
        FieldTable f4 = build_field(2, 2, 2);
        CHECK_THROWS_WITH_AS(construct_sc1(f4, f4.one(), f4.one()), doctest::Contains("odd"),
                             PreconditionError);
        FieldTable f9 = build_field(3, 2, 1);
        CHECK_THROWS_WITH_AS(construct_sc1(f9, f9.one(), f9.one()), doctest::Contains("m must"),
                             PreconditionError);
        CHECK_THROWS_WITH_AS(construct_sc1(f, f.one(), f.theta()), doctest::Contains("square"),
                             PreconditionError);
    }
}

TEST_CASE("special case II reproduces the worked parameters") {
    Ex2 ex;
    ZdbFunction f = construct_sc2(ex.field, ex.cosets, {ex.field.from_log(4), ex.field.from_log(8)});
    CHECK(f.n == 364);
    CHECK(f.ell() == 9);
    CHECK(*is_zdb(f).lambda == 40);
}

TEST_CASE("sets of ZDB functions") {
    Ex2 ex;
    ConstructionParams p = ex.params({ex.field.from_log(4), ex.field.from_log(8)});
    p.g = std::vector<Fe>{ex.field.one(), ex.field.from_log(91)};
    auto set = construct_zdb_set(p);
    REQUIRE(set.size() == 2);
    for (const auto& fi : set) CHECK(*is_zdb(fi).lambda == 40);
    auto ids = sum_identities_check(set[0], 40);
    CHECK(ids.pass);
    CHECK(ids.sum_tau_sq == 14884); // 364 + 40 * 363
    for (int i = 0; i < 2; ++i) {
        auto counts = cross_zero_counts(set[static_cast<std::size_t>(i)],
                                        set[static_cast<std::size_t>(1 - i)]);
        for (std::int64_t c : counts) REQUIRE(c == 40); // includes the a = 0 shift
    }

    SUBCASE("default transversal is the alpha powers") {
        ConstructionParams q = ex.params({ex.field.from_log(4), ex.field.from_log(8)});
        auto dset = construct_zdb_set(q);
        CHECK(dset.size() == 2);
        // alpha^1 = theta^91, so the default second member matches the explicit one
        CHECK(dset[1].values == set[1].values);
    }
    SUBCASE("weights outside D_0 are rejected") {
        ConstructionParams q = ex.params({ex.field.theta(), ex.field.from_log(8)});
        CHECK_THROWS_WITH_AS(construct_zdb_set(q), doctest::Contains("not in D_0"),
                             PreconditionError);
    }
    SUBCASE("non-transversal g is rejected") {
        ConstructionParams q = ex.params({ex.field.from_log(4), ex.field.from_log(8)});
        q.g = std::vector<Fe>{ex.field.one(), ex.field.from_log(2)};
        CHECK_THROWS_WITH_AS(construct_zdb_set(q), doctest::Contains("transversal"),
                             PreconditionError);
    }
    SUBCASE("r = 1 yields a singleton set") {
        Ex1 ex1;
        auto single = construct_zdb_set(ex1.params({ex1.field.one(), ex1.field.from_log(2)}));
        CHECK(single.size() == 1);
    }
}

TEST_CASE("linear independence over the base field") {
    FieldTable f = build_field(3, 3, 1, std::vector<int>{1, 2, 0, 1});
    CHECK(check_linear_independence(f, {f.one(), f.theta()}));
    CHECK(check_linear_independence(f, {f.one(), f.theta(), f.from_log(2)}));
    // alpha = theta^13 lies in GF(3), so (theta, alpha*theta) is dependent
    CHECK_FALSE(check_linear_independence(f, {f.theta(), f.from_log(14)}));
    CHECK_FALSE(check_linear_independence(f, {f.zero(), f.one()}));

    SUBCASE("rank path on GF(3^9)/GF(3) agrees") {
        FieldTable big = build_field(3, 9, 1); // q^v = 3^9 > 10^4 forces the rank route
        std::vector<Fe> basis;
        for (int i = 0; i < 9; ++i) basis.push_back(big.from_log(i));
        CHECK(check_linear_independence(big, basis));
        std::vector<Fe> dep = basis;
        dep[8] = big.add(big.one(), big.theta()); // 1 + theta repeats a combination
        CHECK_FALSE(check_linear_independence(big, dep));
    }
}

TEST_CASE("vector-valued construction") {
    Ex1 ex;
    ConstructionParams p = ex.params({ex.field.one(), ex.field.from_log(2)});

    SUBCASE("v = 1 with a = (1) reproduces the scalar table") {
        ZdbFunction scalar = construct_zdb(p);
        auto q = p;
        q.a_vec = std::vector<Fe>{ex.field.one()};
        ZdbFunction lifted = construct_vector_zdb(q);
        CHECK(lifted.values == scalar.values);
    }
    SUBCASE("(26, 9, 2) for v = 2") {
        auto q = p;
        q.a_vec = std::vector<Fe>{ex.field.one(), ex.field.theta()};
        ZdbFunction f = construct_vector_zdb(q);
        CHECK(f.ell() == 9);
        CHECK(*is_zdb(f).lambda == 2);
        // first component projects back to the scalar table
        ZdbFunction scalar = construct_zdb(p);
        for (std::size_t t = 0; t < f.values.size(); ++t)
            CHECK(f.values[t] % 3 == scalar.values[t]);
    }
    SUBCASE("v = m gives lambda = 0") {
        auto q = p;
        q.a_vec = std::vector<Fe>{ex.field.one(), ex.field.theta(), ex.field.from_log(2)};
        ZdbFunction f = construct_vector_zdb(q);
        CHECK(f.ell() == 27);
        CHECK(*is_zdb(f).lambda == 0);
        CHECK_FALSE(f.onto); // 26 values cannot cover 27 symbols
    }
    SUBCASE("dependent or oversized a-vectors are rejected") {
        auto q = p;
        q.a_vec = std::vector<Fe>{ex.field.theta(), ex.field.from_log(14)};
        CHECK_THROWS_WITH_AS(construct_vector_zdb(q), doctest::Contains("dependent"),
                             PreconditionError);
        q.a_vec = std::vector<Fe>{ex.field.one(), ex.field.theta(), ex.field.from_log(2),
                                  ex.field.from_log(3)};
        CHECK_THROWS_WITH_AS(construct_vector_zdb(q), doctest::Contains("exceeds m"),
                             PreconditionError);
    }
}

TEST_CASE("vector-valued sets") {
    Ex2 ex;
    ConstructionParams p = ex.params({ex.field.from_log(4), ex.field.from_log(8)});
    p.a_vec = std::vector<Fe>{ex.field.one(), ex.field.theta()};
    auto set = construct_vector_zdb_set(p);
    REQUIRE(set.size() == 2);
    for (const auto& fi : set) {
        CHECK(fi.ell() == 81);
        CHECK(*is_zdb(fi).lambda == 4);
    }
    auto counts = cross_zero_counts(set[0], set[1]);
    for (std::int64_t c : counts) REQUIRE(c == 4);

    SUBCASE("v = 1 reduces to the scalar set") {
        auto q = p;
        q.a_vec = std::vector<Fe>{ex.field.one()};
        auto vset = construct_vector_zdb_set(q);
        auto sset = construct_zdb_set(ex.params({ex.field.from_log(4), ex.field.from_log(8)}));
        REQUIRE(vset.size() == sset.size());
        for (std::size_t i = 0; i < vset.size(); ++i) CHECK(vset[i].values == sset[i].values);
    }
}

TEST_CASE("interleaving") {
    FieldTable f = build_field(3, 3, 1, std::vector<int>{1, 2, 0, 1});
    CosetSystem cs = build_cosets(f, 2, 2); // l = 1, n = 13
    ConstructionParams p;
    p.field = &f;
    p.cosets = &cs;
    p.u = 1;
    p.d = {f.one()};
    auto set = construct_zdb_set(p);
    REQUIRE(set.size() == 2);

    SUBCASE("k = 1 returns the single input unchanged") {
        ZdbFunction one = interleave({set[0]}, 1);
        CHECK(one.values == set[0].values);
    }
    SUBCASE("k = 2 with gcd(2, 13) = 1 gives a (26, 3, 8) function") {
        ZdbFunction g = interleave(set, 2);
        CHECK(g.n == 26);
        CHECK(*is_zdb(g).lambda == 8);
    }
    SUBCASE("gcd violation is rejected") {
        Ex2 ex2;
        ConstructionParams q = ex2.params({ex2.field.from_log(4), ex2.field.from_log(8)});
        auto pair = construct_zdb_set(q); // n = 364, gcd(2, 364) = 2
        CHECK_THROWS_WITH_AS(interleave(pair, 2), doctest::Contains("gcd"), PreconditionError);
    }
    SUBCASE("set size must equal k") {
        CHECK_THROWS_WITH_AS(interleave(set, 3), doctest::Contains("exactly k"), PreconditionError);
    }
}

TEST_CASE("characteristic-2 and higher-index instances") {
    SUBCASE("GF(16)/GF(4), e = l = 3, r = 1: lambda = 3") {
        FieldTable f = build_field(2, 4, 2);
        CHECK(f.spec().modulus == std::vector<int>{1, 1, 0, 0, 1});
        CosetSystem cs = build_cosets(f, 3, 1);
        std::vector<std::vector<Fe>> weights;
        enumerate_valid_weight_vectors(f, cs, 1, WeightStrategy::AllInD0, 3,
                                       [&](const std::vector<Fe>& d) {
                                           weights.push_back(d);
                                           return true;
                                       });
        weights.push_back({f.one(), f.one(), f.one()}); // the all-equal subcase
        for (const auto& d : weights) {
            ConstructionParams p;
            p.field = &f;
            p.cosets = &cs;
            p.u = 1;
            p.d = d;
            ZdbFunction g = construct_zdb(p);
            CHECK(g.n == 15);
            auto chk = is_zdb(g);
            REQUIRE(chk.ok());
            CHECK(*chk.lambda == 3);
        }
    }
    SUBCASE("GF(49), e = r = 3, l = 1: lambda = 2") {
        FieldTable f = build_field(7, 2, 1);
        CosetSystem cs = build_cosets(f, 3, 3);
        ConstructionParams p;
        p.field = &f;
        p.cosets = &cs;
        p.u = 1;
        p.d = {f.from_log(3)};
        ZdbFunction g = construct_zdb(p);
        CHECK(g.n == 16);
        CHECK(*is_zdb(g).lambda == 2);
    }
}

TEST_CASE("weight vector enumeration") {
    SUBCASE("full count on GF(27), e = 2, l = 2: l! |C_0|^l = 338") {
        Ex1 ex;
        std::int64_t count = 0;
        enumerate_valid_weight_vectors(ex.field, ex.cosets, 1, WeightStrategy::AllInD0,
                                       UINT64_MAX, [&](const std::vector<Fe>&) {
                                           ++count;
                                           return true;
                                       });
        CHECK(count == 338);
    }
    SUBCASE("full count on GF(3^6)/GF(9), e = 4, l = 2: 2 * 182^2 = 66248") {
        Ex2 ex;
        std::int64_t count = 0;
        enumerate_valid_weight_vectors(ex.field, ex.cosets, 1, WeightStrategy::AllInD0,
                                       UINT64_MAX, [&](const std::vector<Fe>&) {
                                           ++count;
                                           return true;
                                       });
        CHECK(count == 66248);
    }
    SUBCASE("every streamed vector re-passes condition (ii)") {
        Ex2 ex;
        std::vector<std::vector<Fe>> sample;
        enumerate_valid_weight_vectors(ex.field, ex.cosets, 1, WeightStrategy::AllInD0, 40,
                                       [&](const std::vector<Fe>& d) {
                                           sample.push_back(d);
                                           return true;
                                       });
        CHECK(sample.size() == 40);
        for (const auto& d : sample) {
            ConstructionParams p = ex.params(d);
            REQUIRE(check_condition_ii(p).ok);
        }
    }
    SUBCASE("mixed strategy places r - 1 entries outside D_0") {
        Ex2 ex;
        std::vector<std::vector<Fe>> sample;
        enumerate_valid_weight_vectors(ex.field, ex.cosets, 1, WeightStrategy::TransversalMix, 25,
                                       [&](const std::vector<Fe>& d) {
                                           sample.push_back(d);
                                           return true;
                                       });
        CHECK(sample.size() == 25);
        for (const auto& d : sample) {
            int outside = 0;
            for (const Fe& di : d) outside += ex.cosets.d_index(di) != 0;
            CHECK(outside == 1); // r - 1 = 1
            ConstructionParams p = ex.params(d);
            REQUIRE(check_condition_ii(p).ok);
        }
    }
}

} // TEST_SUITE
