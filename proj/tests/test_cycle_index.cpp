#include <doctest.h>

#include <random>

#include "hypertrees/cycle_index.hpp"

using namespace hypertrees;

namespace {

constexpr int N = 7;

CycleIndex random_series(std::mt19937& rng, int trunc, int max_terms, bool with_t = false) {
    std::uniform_int_distribution<int> deg(1, trunc);
    std::uniform_int_distribution<int> coef(-4, 4);
    std::uniform_int_distribution<int> den(1, 3);
    std::uniform_int_distribution<int> tpow(0, 2);
    CycleIndex z(trunc);
    for (int i = 0; i < max_terms; ++i) {
        int remaining = deg(rng);
        Partition lambda;
        while (remaining > 0) {
            std::uniform_int_distribution<int> part(1, remaining);
            int p = part(rng);
            lambda.push_back(p);
            remaining -= p;
        }
        z.add_term(lambda, with_t ? tpow(rng) : 0, Rational(coef(rng), den(rng)));
    }
    return z;
}

CycleIndex random_inner(std::mt19937& rng, int trunc) {
    // no constant term, as plethysm requires
    CycleIndex z = random_series(rng, trunc, 4, true);
    CycleIndex out(trunc);
    for (const auto& [key, c] : z.terms())
        if (!key.first.empty()) out.add_term(key.first, key.second, c);
    out.add_term({1}, 0, 1);  // keep it nondegenerate
    return out;
}

}  // namespace

TEST_CASE("ring laws on random series") {
    std::mt19937 rng(7);
    CycleIndex zero = CycleIndex::zero(5);
    for (int trial = 0; trial < 30; ++trial) {
        CycleIndex f = random_series(rng, 5, 5, true);
        CycleIndex g = random_series(rng, 5, 5, true);
        CycleIndex h = random_series(rng, 5, 5, true);
        CHECK(f + zero == f);
        CHECK(f + g == g + f);
        CHECK(f * g == g * f);
        CHECK((f + g) * h == f * h + g * h);
        CHECK((f * g) * h == f * (g * h));
        CHECK(f - f == zero);
    }
    CHECK(CycleIndex::p(5, 1) * CycleIndex::p(5, 1) ==
          CycleIndex::monomial(5, {1, 1}, 0, 1));
}

TEST_CASE("degree mismatch is a domain error") {
    CHECK_THROWS_AS(CycleIndex::p(5, 1) + CycleIndex::p(6, 1), DomainError);
    CHECK_THROWS_AS(plethysm(CycleIndex::p(5, 1), CycleIndex::p(6, 1)), DomainError);
}

TEST_CASE("plethysm unit laws and Adams composition") {
    std::mt19937 rng(11);
    CycleIndex p1 = CycleIndex::p(5, 1);
    for (int trial = 0; trial < 20; ++trial) {
        CycleIndex f = random_series(rng, 5, 5, true);
        CycleIndex g = random_inner(rng, 5);
        CHECK(plethysm(p1, g) == g);
        CHECK(plethysm(f, p1) == f);
    }
    CHECK(plethysm(CycleIndex::p(6, 2), CycleIndex::p(6, 3)) == CycleIndex::p(6, 6));
    CHECK_THROWS_AS(plethysm(CycleIndex::p(5, 1), CycleIndex::constant(5, 1)), DomainError);
}

TEST_CASE("plethysm associativity and product rule on random samples") {
    std::mt19937 rng(13);
    // (f . g) . h = f . (g . h), and composition distributes over + and *
    for (int trial = 0; trial < 12; ++trial) {
        CycleIndex f = random_series(rng, 5, 4, true);
        CycleIndex g = random_inner(rng, 5);
        CycleIndex h = random_inner(rng, 5);
        CHECK(plethysm(plethysm(f, g), h) == plethysm(f, plethysm(g, h)));
        CycleIndex f2 = random_series(rng, 5, 4, true);
        CHECK(plethysm(f * f2, h) == plethysm(f, h) * plethysm(f2, h));
        CHECK(plethysm(f + f2, h) == plethysm(f, h) + plethysm(f2, h));
    }
}

TEST_CASE("suspension") {
    CycleIndex p1 = CycleIndex::p(N, 1);
    CycleIndex p2 = CycleIndex::p(N, 2);
    CHECK(suspension(p1, true) == p1);
    CHECK(suspension(p2, true) == p2.scaled(1, +1));
    std::mt19937 rng(17);
    for (int trial = 0; trial < 20; ++trial) {
        CycleIndex f = random_series(rng, 5, 5);
        CHECK(suspension(suspension(f, false), false) == f);
    }
    // Sigma_t of a bare constant would need t^-2
    CycleIndex bad = CycleIndex::monomial(5, {}, -1, 1);
    CHECK_THROWS_AS(suspension(bad, true), DomainError);
}

TEST_CASE("derivative in p1") {
    CycleIndex p1 = CycleIndex::p(N, 1);
    CHECK(partial_p1(p1 * p1) == p1.scaled(2));
    CHECK(partial_p1(CycleIndex::p(N, 2)) == CycleIndex::zero(N));
    // p1 d(Comm)/dp1 = Perm
    CycleIndex comm = named_series(SeriesTag::Comm, N);
    CHECK(p1 * partial_p1(comm) == named_series(SeriesTag::Perm, N));
}

TEST_CASE("plethystic inverse") {
    CycleIndex p1 = CycleIndex::p(N, 1);
    CHECK(plethystic_inverse(p1) == p1);

    CycleIndex comm = named_series(SeriesTag::Comm, N);
    CycleIndex sigma_lie = named_series(SeriesTag::SigmaLie, N);
    CHECK(plethysm(comm, sigma_lie) == p1);
    CHECK(plethysm(sigma_lie, comm) == p1);

    CycleIndex swt = named_series(SeriesTag::SigmaWt, N);
    CycleIndex defining = p1 + (named_series(SeriesTag::Perm, N) - p1).scaled(1, +1);
    CHECK(plethysm(defining, swt) == p1);
    CHECK(plethysm(swt, defining) == p1);

    CHECK_THROWS_AS(plethystic_inverse(CycleIndex::p(N, 2)), DomainError);
    CHECK_THROWS_AS(plethystic_inverse(p1.scaled(2)), DomainError);
}

TEST_CASE("named series low-degree values") {
    CycleIndex prelie = named_series(SeriesTag::PreLie, N);
    CHECK(prelie.homogeneous_part(2) == CycleIndex::monomial(N, {1, 1}, 0, 1));
    CycleIndex expect3 = CycleIndex::monomial(N, {1, 1, 1}, 0, Rational(3, 2)) +
                         CycleIndex::monomial(N, {2, 1}, 0, Rational(1, 2));
    CHECK(prelie.homogeneous_part(3) == expect3);

    // PreLie dimensions are n^(n-1)
    for (int n = 1; n <= N; ++n) {
        Rational dim = extract_character(prelie, Partition(n, 1)).at(0);
        Rational expect = 1;
        for (int i = 0; i < n - 1; ++i) expect *= n;
        CHECK(dim == expect);
    }

    // Koszul dual pair
    CHECK(plethysm(named_series(SeriesTag::SigmaPreLie, N),
                   named_series(SeriesTag::Perm, N)) == CycleIndex::p(N, 1));
    CHECK(named_series(SeriesTag::SigmaW, N) == named_series(SeriesTag::SigmaPreLie, N));

    // anticyclic M: integer characters, dimension (n-1)^(n-2), zero at n=1
    CycleIndex m = named_series(SeriesTag::M, N);
    CHECK(m.homogeneous_part(1).is_zero());
    for (int n = 2; n <= N; ++n) {
        Rational dim = extract_character(m, Partition(n, 1)).at(0);
        Rational expect = 1;
        for (int i = 0; i < n - 2; ++i) expect *= (n - 1);
        CHECK(dim == expect);
        for (const Partition& lambda : partitions_of(n)) {
            Rational chi = extract_character(m, lambda).at(0);
            CHECK(boost::multiprecision::denominator(chi) == 1);
        }
    }
}

TEST_CASE("extract_character basics") {
    CycleIndex comm = named_series(SeriesTag::Comm, N);
    for (int n = 1; n <= N; ++n)
        for (const Partition& lambda : partitions_of(n))
            CHECK(extract_character(comm, lambda).at(0) == 1);
    CycleIndex perm = named_series(SeriesTag::Perm, N);
    for (int n = 1; n <= N; ++n)
        CHECK(extract_character(perm, Partition(n, 1)).at(0) == n);
}

TEST_CASE("egf specialization") {
    auto comm_egf = egf(named_series(SeriesTag::Comm, N));
    for (int n = 1; n <= N; ++n) CHECK(comm_egf[n].at(0) == 1);  // e^x - 1

    auto sp = egf(named_series(SeriesTag::SigmaPreLie, N));
    for (int n = 1; n <= N; ++n) {
        Rational expect = (n % 2 == 1) ? 1 : -1;
        for (int i = 0; i < n - 1; ++i) expect *= n;
        CHECK(sp[n].at(0) == expect);
    }
}

TEST_CASE("HAL methods agree and satisfy the multiplied closed form") {
    int deg = 6;
    for (SeriesTag tag : {SeriesTag::HALpA, SeriesTag::HALA, SeriesTag::HALp, SeriesTag::HAL})
        CHECK(hal_series(tag, deg, HalMethod::FixedPoint) ==
              hal_series(tag, deg, HalMethod::ClosedForm));

    // t HALpA + SigmaW_t = p1
    CycleIndex p1 = CycleIndex::p(deg, 1);
    CycleIndex swt = named_series(SeriesTag::SigmaWt, deg);
    CHECK(hal_series(SeriesTag::HALpA, deg, HalMethod::ClosedForm).scaled(1, +1) + swt == p1);
    // HAL = HALp + HALA - HALpA
    CHECK(named_series(SeriesTag::HAL, deg) ==
          named_series(SeriesTag::HALp, deg) + named_series(SeriesTag::HALA, deg) -
              named_series(SeriesTag::HALpA, deg));
}

TEST_CASE("series text and JSON round-trips are exact") {
    std::mt19937 rng(23);
    for (int trial = 0; trial < 20; ++trial) {
        CycleIndex z = random_series(rng, 6, 8, true);
        CHECK(from_text(to_text(z), 6) == z);
        CHECK(from_json(to_json(z), 6) == z);
    }
    for (const std::string& name : all_series_names()) {
        CycleIndex z = named_series(series_tag_from_name(name), 5);
        CHECK(from_text(to_text(z), 5) == z);
        CHECK(from_json(to_json(z), 5) == z);
    }
    CHECK(to_text(CycleIndex::zero(4)) == "0");
    CHECK(from_text("0", 4) == CycleIndex::zero(4));
    CHECK_THROWS_AS(series_tag_from_name("NotASeries"), DomainError);
}

TEST_CASE("t = 1 specialization collapses weighted identities to unweighted ones") {
    int deg = 5;
    CycleIndex swt = named_series(SeriesTag::SigmaWt, deg);
    CHECK(swt.at_t1() == named_series(SeriesTag::SigmaPreLie, deg));
    // SigmaW_t at t = 1 is the inverse of Perm = SigmaPreLie
}
