#include <doctest.h>

#include "hypertrees/dissymmetry.hpp"
#include "hypertrees/enumerate.hpp"

using namespace hypertrees;

TEST_CASE("phi on the base cases") {
    // single edge: the center is the edge (case A)
    PointedHypertree a = dissymmetry_phi(Hypertree::single_edge(2));
    CHECK(a.kind == PointingKind::EdgePointed);
    CHECK(a.edge_index == 0);

    // path 1-2-3: vertex center 2 (case A)
    PointedHypertree b = dissymmetry_phi(parse_hypertree("{1,2};{2,3}"));
    CHECK(b.kind == PointingKind::Root);
    CHECK(b.root == 2);
}

TEST_CASE("phi and psi are mutually inverse on all structures up to n = 5") {
    for (int n = 2; n <= 5; ++n) {
        std::size_t to_pointed = 0;
        for (const Hypertree& t : enumerate_hypertrees(n)) {
            PointedHypertree image = dissymmetry_phi(t);
            CHECK(image.kind != PointingKind::EdgePointedRooted);
            PlainOrEpr back = dissymmetry_psi(image);
            REQUIRE(std::holds_alternative<Hypertree>(back));
            CHECK(std::get<Hypertree>(back) == t);
            ++to_pointed;
        }
        for (const PointedHypertree& t :
             enumerate_pointed(n, PointedVariant::EdgePointedRooted)) {
            PointedHypertree image = dissymmetry_phi(t);
            PlainOrEpr back = dissymmetry_psi(image);
            REQUIRE(std::holds_alternative<PointedHypertree>(back));
            CHECK(std::get<PointedHypertree>(back) == t);
            ++to_pointed;
        }

        // the other direction: psi then phi on H^p + H^a
        std::size_t from_pointed = 0;
        for (const PointedHypertree& y : enumerate_pointed(n, PointedVariant::Rooted)) {
            CHECK(dissymmetry_phi(dissymmetry_psi(y)) == y);
            ++from_pointed;
        }
        for (const PointedHypertree& y : enumerate_pointed(n, PointedVariant::EdgePointed)) {
            CHECK(dissymmetry_phi(dissymmetry_psi(y)) == y);
            ++from_pointed;
        }
        CHECK(to_pointed == from_pointed);  // the bijection forces the count identity
    }
}

TEST_CASE("phi rejects foreign pointings") {
    PointedHypertree rooted = make_rooted(parse_hypertree("{1,2};{2,3}"), 1);
    CHECK_THROWS_AS(dissymmetry_phi(PlainOrEpr{rooted}), DomainError);
    PointedHypertree hollow =
        make_hollow(Hypertree(make_hypergraph(3, {{0, 1}, {1, 2}}, 0)));
    CHECK_THROWS_AS(dissymmetry_psi(hollow), DomainError);
}
