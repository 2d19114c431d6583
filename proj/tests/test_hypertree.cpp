#include <doctest.h>

#include <random>
#include <set>

#include "hypertrees/enumerate.hpp"
#include "hypertrees/hypertree.hpp"
#include "oracles.hpp"

using namespace hypertrees;

TEST_CASE("hypertree validation on the named examples") {
    CHECK(is_hypertree(make_hypergraph(2, {{1, 2}})));

    // seven-vertex hypergraph with several walks from 4 to 2
    Hypergraph bad = make_hypergraph(7, {{4, 7}, {6, 7}, {1, 2, 5, 6}, {1, 2, 3}});
    CHECK_FALSE(is_hypertree(bad));

    CHECK_FALSE(is_hypertree(make_hypergraph(3, {{1, 2}, {2, 3}, {1, 3}})));

    // the one-vertex hypertree has no edges
    CHECK(is_hypertree(make_hypergraph(1, {})));
    CHECK_FALSE(is_hypertree(make_hypergraph(2, {})));

    // paper's four-vertex example
    CHECK(is_hypertree(make_hypergraph(4, {{1, 2, 4}, {2, 3}})));
}

TEST_CASE("malformed hypergraphs are rejected, not reported false") {
    CHECK_THROWS_AS(make_hypergraph(3, {{1}}), DomainError);
    CHECK_THROWS_AS(make_hypergraph(3, {{1, 4}}), DomainError);
    CHECK_THROWS_AS(make_hypergraph(3, {{1, 2}, {2, 1}}), DomainError);
    CHECK_THROWS_AS(make_hypergraph(3, {{1, 1, 2}}), DomainError);
    CHECK_THROWS_AS(make_hypergraph(0, {}), DomainError);
}

TEST_CASE("canonical form is stable under re-serialization") {
    Hypergraph hg = make_hypergraph(4, {{3, 2}, {4, 2, 1}});
    CHECK(encode(hg) == "{1,2,4};{2,3}");
    CHECK(parse_hypergraph(encode(hg)) == hg);
}

TEST_CASE("enumeration counts 1, 1, 4, 29 and matches the exhaustive filter") {
    const int expected[] = {0, 1, 1, 4, 29};
    for (int n = 1; n <= 4; ++n) {
        auto fast = enumerate_hypertrees(n);
        auto slow = testing::all_hypergraphs_filter(n);
        REQUIRE(static_cast<int>(fast.size()) == expected[n]);
        REQUIRE(fast.size() == slow.size());
        for (std::size_t i = 0; i < fast.size(); ++i) CHECK(fast[i].graph() == slow[i]);
    }
}

TEST_CASE("enumeration is duplicate-free, satisfies the edge-size identity, "
          "and is closed under the symmetric group") {
    for (int n = 1; n <= 5; ++n) {
        auto trees = enumerate_hypertrees(n);
        std::set<Hypertree> unique(trees.begin(), trees.end());
        CHECK(unique.size() == trees.size());
        for (const Hypertree& t : trees) {
            int total = 0;
            for (const Edge& e : t.edges()) total += static_cast<int>(e.size()) - 1;
            CHECK(total == n - 1);
        }
        for (const Partition& lambda : partitions_of(n)) {
            Perm sigma = representative_of(lambda);
            for (const Hypertree& t : trees)
                CHECK(unique.count(apply_permutation(t, sigma)) == 1);
        }
    }
}

TEST_CASE("enumeration bound is enforced") {
    CHECK_THROWS_AS(enumerate_hypertrees(8, 1, 7), ResourceLimitError);
    CHECK_THROWS_AS(enumerate_hypertrees(0), DomainError);
}

TEST_CASE("pointed enumeration counts") {
    CHECK(enumerate_pointed(2, PointedVariant::EdgePointed).size() == 1);
    CHECK(enumerate_pointed(3, PointedVariant::Rooted).size() == 12);
    // dissymmetry count identity at the structure level
    for (int n = 2; n <= 5; ++n) {
        auto plain = enumerate_hypertrees(n);
        auto pa = enumerate_pointed(n, PointedVariant::EdgePointedRooted);
        auto p = enumerate_pointed(n, PointedVariant::Rooted);
        auto a = enumerate_pointed(n, PointedVariant::EdgePointed);
        CHECK(plain.size() + pa.size() == p.size() + a.size());
        CHECK(p.size() == n * plain.size());
    }
}

TEST_CASE("hollow structures have the gap in exactly one edge") {
    auto hollows = enumerate_pointed(4, PointedVariant::Hollow);
    for (const PointedHypertree& h : hollows) {
        int gap_edges = 0;
        for (const Edge& e : h.tree.edges())
            if (e.front() == 0) ++gap_edges;
        CHECK(gap_edges == 1);
        CHECK(h.tree.first_label() == 0);
    }
    CHECK_THROWS_AS(enumerate_pointed(1, PointedVariant::Hollow), DomainError);
}

TEST_CASE("permutation action is a group action and respects validity") {
    auto trees = enumerate_hypertrees(4);
    auto parts = partitions_of(4);
    std::mt19937 rng(20240817);
    for (int trial = 0; trial < 50; ++trial) {
        Perm a = representative_of(parts[rng() % parts.size()]);
        Perm b = representative_of(parts[rng() % parts.size()]);
        std::shuffle(a.begin(), a.end(), rng);  // arbitrary permutations, not just reps
        std::shuffle(b.begin(), b.end(), rng);
        const Hypertree& t = trees[rng() % trees.size()];
        CHECK(apply_permutation(apply_permutation(t, b), a) ==
              apply_permutation(t, compose(a, b)));
        CHECK(is_hypertree(apply_permutation(t, a).graph()));
    }
}

TEST_CASE("identity fixes everything; a single edge is fixed by every permutation") {
    Hypertree t = Hypertree::single_edge(4);
    for (const Partition& lambda : partitions_of(4))
        CHECK(fixed_by(t, representative_of(lambda)));
    Hypertree path = parse_hypertree("{1,2};{2,3}");
    CHECK(apply_permutation(path, {3, 2, 1}) == path);          // (1 3)
    CHECK(apply_permutation(path, {2, 1, 3}) ==                 // (1 2)
          parse_hypertree("{1,2};{1,3}"));
}

TEST_CASE("pointing constructors enforce their invariants") {
    Hypertree t = parse_hypertree("{1,2,4};{2,3}");
    CHECK_THROWS_AS(make_rooted(t, 5), DomainError);
    CHECK_THROWS_AS(make_edge_pointed(t, 2), DomainError);
    CHECK_THROWS_AS(make_edge_pointed_rooted(t, 1, 4), DomainError);  // 4 not in {2,3}
    CHECK_THROWS_AS(make_hollow(t), DomainError);                     // no gap label
    CHECK_THROWS_AS(make_edge_pointed_rooted(Hypertree::single_edge(1), 0, 1), DomainError);
}

TEST_CASE("pointed codec round-trips bit-exactly") {
    std::vector<std::string> encodings;
    for (const auto& p : enumerate_pointed(4, PointedVariant::Rooted))
        encodings.push_back(encode(p));
    for (const auto& p : enumerate_pointed(4, PointedVariant::EdgePointedRooted))
        encodings.push_back(encode(p));
    for (const auto& p : enumerate_pointed(4, PointedVariant::Hollow))
        encodings.push_back(encode(p));
    for (const std::string& s : encodings) CHECK(encode(parse_pointed(s)) == s);

    CHECK(encode(make_rooted(parse_hypertree("{1,2};{2,3}"), 2)) == "{1,2};{2,3}@root=2");
    // plain round trip across all sizes, including the edgeless singleton
    for (int n = 1; n <= 5; ++n)
        for (const Hypertree& t : enumerate_hypertrees(n))
            CHECK(parse_hypertree(encode(t)) == t);
}
