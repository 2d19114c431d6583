#include <doctest.h>

#include "hypertrees/kpolynomial.hpp"

using namespace hypertrees;

TEST_CASE("newton interpolation") {
    // P(k) = 3k + 1 through (0,1), (1,4), (2,7)
    auto poly = interpolate_polynomial({{0, 1}, {1, 4}, {2, 7}});
    REQUIRE(poly.size() == 2);
    CHECK(poly[0] == 1);
    CHECK(poly[1] == 3);
    CHECK(eval_polynomial(poly, Rational(-1)) == -2);

    auto constant = interpolate_polynomial({{1, 5}, {2, 5}, {3, 5}});
    REQUIRE(constant.size() == 1);
    CHECK(constant[0] == 5);
}

TEST_CASE("plain chain polynomial for n = 2 and n = 3") {
    PosetCache cache;
    KPolynomial kp2 = character_polynomial(2, ChainVariant::Plain, false, cache);
    for (const Partition& lambda : partitions_of(2)) {
        auto it = kp2.polys.find({lambda, 0});
        REQUIRE(it != kp2.polys.end());
        CHECK(it->second == std::vector<Rational>{Rational(1)});
    }

    KPolynomial kp3 = character_polynomial(3, ChainVariant::Plain, false, cache);
    auto id = kp3.polys.at({{1, 1, 1}, 0});
    REQUIRE(id.size() == 2);
    CHECK(id[0] == 1);
    CHECK(id[1] == 3);                                     // P(k) = 3k + 1
    CHECK(eval_polynomial(id, Rational(-1)) == -2);        // (-1)^3 (3-1)^(3-2)
    CHECK(kp3.degree_bound == 1);                          // n - 2
}

TEST_CASE("P_n(-1) equals (-1)^n (n-1)^(n-2) for n = 2..5") {
    PosetCache cache;
    for (int n = 2; n <= 5; ++n) {
        KPolynomial kp = character_polynomial(n, ChainVariant::Plain, false, cache);
        Rational value = eval_polynomial(kp.polys.at({Partition(n, 1), 0}), Rational(-1));
        Rational expect = (n % 2 == 0) ? 1 : -1;
        for (int i = 0; i < n - 2; ++i) expect *= (n - 1);
        CHECK(value == expect);
    }
}

TEST_CASE("interpolated slices at k = 0 recover the counted series") {
    PosetCache cache;
    // plain k = 0 is directly countable; the interpolation must agree
    for (int n = 1; n <= 4; ++n) {
        KPolynomial kp = character_polynomial(n, ChainVariant::Plain, false, cache);
        CycleIndex direct =
            cycle_index_from_counts({n, 0, ChainVariant::Plain, false}, 5, cache);
        CHECK(evaluate_at(kp, 0, 5) == direct);
    }
    // min-rooted k = 0 interpolates to the pointed-set series
    CycleIndex perm = named_series(SeriesTag::Perm, 4);
    CycleIndex assembled = interpolated_series(ChainVariant::MinRooted, 0, false, 4, cache);
    CHECK(assembled == perm);
}

TEST_CASE("weighted polynomials specialize to unweighted at t = 1") {
    PosetCache cache;
    for (int n = 2; n <= 4; ++n) {
        for (ChainVariant v : {ChainVariant::Plain, ChainVariant::MinRooted,
                               ChainVariant::MaxEdgePointed}) {
            KPolynomial weighted = character_polynomial(n, v, true, cache);
            KPolynomial plain = character_polynomial(n, v, false, cache);
            for (int k0 : {-1, 0})
                CHECK(evaluate_at(weighted, k0, n).at_t1() == evaluate_at(plain, k0, n));
        }
    }
}

TEST_CASE("enumerated series match the named k = 0 values") {
    PosetCache cache;
    CHECK(enumerated_series(ChainVariant::Plain, 0, false, 5, cache) ==
          named_series(SeriesTag::Comm, 5));
    // weighted: Comm - p1 + p1/t
    CycleIndex p1 = CycleIndex::p(5, 1);
    CHECK(enumerated_series(ChainVariant::Plain, 0, true, 5, cache) ==
          named_series(SeriesTag::Comm, 5) - p1 + p1.scaled(1, -1));
}
