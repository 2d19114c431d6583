#include <doctest.h>

#include "hypertrees/homology.hpp"

using namespace hypertrees;

TEST_CASE("chain complex shapes for small n") {
    PosetCache cache;

    // n = 3: three proper elements, no higher chains
    ChainComplex c3 = build_chain_complex(3, cache);
    CHECK(c3.dim(-1) == 1);
    CHECK(c3.dim(0) == 3);
    CHECK(c3.dim(1) == 0);

    // n = 2: empty proper part, only the augmentation survives
    ChainComplex c2 = build_chain_complex(2, cache);
    CHECK(c2.dim(-1) == 1);
    CHECK(c2.dim(0) == 0);
    auto dims2 = homology_dimensions(c2);
    CHECK(dims2 == std::map<int, int>{{-1, 1}});

    CHECK_THROWS_AS(build_chain_complex(1, cache), DomainError);
}

TEST_CASE("the boundary squares to zero (n <= 4, both sign conventions)") {
    PosetCache cache;
    for (int n = 3; n <= 4; ++n) {
        CHECK(boundary_squares_to_zero(build_chain_complex(n, cache, false)));
        CHECK(boundary_squares_to_zero(build_chain_complex(n, cache, true)));
    }
}

TEST_CASE("homology is concentrated with dimension (n-1)^(n-2)") {
    PosetCache cache;
    for (int n = 3; n <= 5; ++n) {
        auto dims = homology_dimensions(build_chain_complex(n, cache));
        REQUIRE(dims.size() == 1);
        int expected = 1;
        for (int i = 0; i < n - 2; ++i) expected *= (n - 1);
        CHECK(dims.at(n - 3) == expected);
    }
}

TEST_CASE("ranks are independent of the boundary sign convention (n = 3)") {
    PosetCache cache;
    auto forward = homology_dimensions(build_chain_complex(3, cache, false));
    auto reversed = homology_dimensions(build_chain_complex(3, cache, true));
    CHECK(forward == reversed);
}

TEST_CASE("lefschetz characters on the n = 3 classes") {
    PosetCache cache;
    CHECK(lefschetz_character(3, {1, 1, 1}, cache) == 2);
    CHECK(lefschetz_character(3, {2, 1}, cache) == 0);
    CHECK(lefschetz_character(3, {3}, cache) == -1);
    // the identity class equals the homology dimension
    CHECK(lefschetz_character(4, {1, 1, 1, 1}, cache) == 9);
    CHECK(lefschetz_character(5, {1, 1, 1, 1, 1}, cache) == 64);
}

TEST_CASE("lefschetz equals the matrix-level homology trace (n = 3, 4)") {
    PosetCache cache;
    for (int n = 3; n <= 4; ++n) {
        for (const Partition& lambda : partitions_of(n)) {
            Rational traced = homology_trace_from_matrices(n, n - 3, lambda, cache);
            CHECK(traced == Rational(lefschetz_character(n, lambda, cache)));
        }
    }
}

TEST_CASE("whitney dimensions") {
    PosetCache cache;
    CHECK(whitney_dimensions(3, cache) == std::map<int, int>{{1, 3}});
    auto w4 = whitney_dimensions(4, cache);
    CHECK(w4.at(1) == 12);  // rank-1 elements have empty open intervals
    CHECK(w4.at(2) == 20);  // sum of H~_0 over the 16 trees' intervals
}
