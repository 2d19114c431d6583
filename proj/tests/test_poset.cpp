#include <doctest.h>

#include "hypertrees/chains.hpp"
#include "hypertrees/poset.hpp"

using namespace hypertrees;

TEST_CASE("the order relation on small examples") {
    Hypertree s = Hypertree::single_edge(4);
    Hypertree t = parse_hypertree("{1,2,4};{2,3}");
    CHECK(leq(s, s));
    CHECK(leq(s, t));
    CHECK_FALSE(leq(t, s));

    Hypertree a = parse_hypertree("{1,2};{2,3}");
    Hypertree b = parse_hypertree("{1,2};{1,3}");
    CHECK_FALSE(leq(a, b));
    CHECK_FALSE(leq(b, a));

    CHECK_THROWS_AS(leq(Hypertree::single_edge(3), Hypertree::single_edge(4)), DomainError);
}

TEST_CASE("poset axioms hold exhaustively for n <= 4") {
    PosetCache cache;
    for (int n = 2; n <= 4; ++n) {
        const HypertreePoset& p = cache.poset(n, 1);
        int size = p.size();
        for (int i = 0; i < size; ++i) CHECK(p.leq(i, i));
        for (int i = 0; i < size; ++i)
            for (int j = 0; j < size; ++j) {
                if (i != j && p.leq(i, j)) CHECK_FALSE(p.leq(j, i));
                for (int k = 0; k < size; ++k)
                    if (p.leq(i, j) && p.leq(j, k)) CHECK(p.leq(i, k));
            }
        // unique minimum: the single-edge hypertree
        int min = p.minimum();
        CHECK(p.element(min) == Hypertree::single_edge(n));
        for (int j = 0; j < size; ++j) CHECK(p.leq(min, j));
    }
}

TEST_CASE("cover relations increase the rank by exactly one") {
    PosetCache cache;
    CHECK(cache.poset(2, 1).cover_relations().empty());
    CHECK(cache.poset(3, 1).cover_relations().size() == 3);
    for (int n = 3; n <= 5; ++n) {
        const HypertreePoset& p = cache.poset(n, 1);
        for (const auto& [child, parent] : p.cover_relations())
            CHECK(p.rank(parent) == p.rank(child) + 1);
    }
    // every maximal chain of HT_4 runs through ranks 0,1,2
    const HypertreePoset& p4 = cache.poset(4, 1);
    for (int i = 0; i < p4.size(); ++i) CHECK((p4.rank(i) >= 0 && p4.rank(i) <= 2));
}

TEST_CASE("mobius function of the bounded poset") {
    PosetCache cache;
    CHECK(mobius_top(2, cache) == -1);
    CHECK(mobius_top(3, cache) == 2);
    CHECK(mobius_top(4, cache) == -9);
    for (int n = 3; n <= 5; ++n) {
        std::int64_t expected = 1;
        for (int i = 0; i < n - 2; ++i) expected *= (n - 1);
        std::int64_t mu = mobius_top(n, cache);
        CHECK((mu == expected || mu == -expected));
    }
    CHECK_THROWS_AS(mobius_top(1, cache), DomainError);
}

TEST_CASE("fixed subposets pick out exactly the invariant hypertrees") {
    PosetCache cache;
    for (int n = 3; n <= 5; ++n) {
        for (const Partition& lambda : partitions_of(n)) {
            const FixedSubposet& sub = cache.fixed(n, 1, lambda);
            Perm sigma = representative_of(lambda);
            std::size_t direct = 0;
            for (const Hypertree& t : cache.poset(n, 1).elements())
                if (fixed_by(t, sigma)) ++direct;
            CHECK(sub.elems.size() == direct);
            // the single-edge tree is always fixed
            CHECK(sub.min_index >= 0);
        }
    }
}
