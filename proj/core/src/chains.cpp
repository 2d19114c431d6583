#include "hypertrees/chains.hpp"

#include <algorithm>
#include <array>
#include <bit>

namespace hypertrees {

bool is_hollow_variant(ChainVariant v) {
    return v == ChainVariant::HollowMin || v == ChainVariant::HollowMinSingleEdge;
}

bool is_pointed_variant(ChainVariant v) { return v != ChainVariant::Plain; }

std::string variant_name(ChainVariant v) {
    switch (v) {
        case ChainVariant::Plain: return "plain";
        case ChainVariant::MinRooted: return "min-rooted";
        case ChainVariant::MinEdgePointed: return "min-edge-pointed";
        case ChainVariant::MinEdgePointedRooted: return "min-edge-pointed-rooted";
        case ChainVariant::MaxEdgePointed: return "max-edge-pointed";
        case ChainVariant::MaxEdgePointedRooted: return "max-edge-pointed-rooted";
        case ChainVariant::HollowMin: return "hollow-min";
        case ChainVariant::HollowMinSingleEdge: return "hollow-min-single-edge";
    }
    return "?";
}

namespace {

int gap_edge_count(const Hypertree& t) {
    int c = 0;
    for (const Edge& e : t.edges())
        if (!e.empty() && e.front() == 0) ++c;
    return c;
}

// Flat per-element accumulator: exponents -1..MaxExp-2 (ranks stay below
// n-1 at desk scale, so the fixed span is plenty).
constexpr int kExpSpan = 10;
using ExpVec = std::array<long long, kExpSpan>;

// u^T Z^(k-1) v over the subposet, v already weighted.
WeightedCount zeta_power_sum(const FixedSubposet& sub, int k,
                             const std::vector<std::int64_t>& u, std::vector<ExpVec> v) {
    int size = sub.size();
    std::vector<ExpVec> next(size);
    for (int step = 0; step < k - 1; ++step) {
        for (int x = 0; x < size; ++x) {
            ExpVec acc{};
            const auto& row = sub.up[x];
            for (int w = 0; w < sub.words; ++w) {
                std::uint64_t bits = row[w];
                while (bits) {
                    int b = std::countr_zero(bits);
                    bits &= bits - 1;
                    const ExpVec& src = v[(w << 6) + b];
                    for (int e = 0; e < kExpSpan; ++e) acc[e] += src[e];
                }
            }
            next[x] = acc;
        }
        std::swap(v, next);
    }
    ExpVec sum{};
    for (int x = 0; x < size; ++x) {
        if (u[x] == 0) continue;
        for (int e = 0; e < kExpSpan; ++e)
            sum[e] = checked_add(sum[e], checked_mul(u[x], v[x][e]));
    }
    WeightedCount total;
    for (int e = 0; e < kExpSpan; ++e)
        if (sum[e] != 0) total.add(e - 1, sum[e]);
    return total;
}

}  // namespace

WeightedCount count_large_chains(const ChainSpec& spec, const Perm& sigma, PosetCache& cache) {
    if (spec.n < 1) throw DomainError("count_large_chains: n >= 1 required");
    if (spec.k < 0) throw DomainError("count_large_chains: k >= 0 required");
    if (static_cast<int>(sigma.size()) != spec.n)
        throw DomainError("count_large_chains: permutation size mismatch");
    if (spec.k == 0 && is_pointed_variant(spec.variant))
        throw DomainError("pointed chain variants need k >= 1 (no empty-chain pointing)");

    bool hollow = is_hollow_variant(spec.variant);
    int first_label = hollow ? 0 : 1;
    int vertices = hollow ? spec.n + 1 : spec.n;
    const FixedSubposet& sub = cache.fixed(vertices, first_label, cycle_type_of(sigma));
    int size = sub.size();

    if (spec.k == 0) {
        // the empty chain; its weight is the rank of the poset minimum
        int exp = spec.weighted ? (vertices == 1 ? -1 : 0) : 0;
        return WeightedCount::monomial(exp, 1);
    }

    std::vector<std::int64_t> u(size, 1);
    for (int x = 0; x < size; ++x) {
        const Hypertree& t = sub.elems[x];
        switch (spec.variant) {
            case ChainVariant::Plain:
            case ChainVariant::MaxEdgePointed:
            case ChainVariant::MaxEdgePointedRooted:
                break;
            case ChainVariant::MinRooted:
                u[x] = fixed_points(sigma);
                break;
            case ChainVariant::MinEdgePointed:
                u[x] = fixed_edge_count(t, sigma);
                break;
            case ChainVariant::MinEdgePointedRooted:
                u[x] = fixed_edge_root_count(t, sigma);
                break;
            case ChainVariant::HollowMin:
                u[x] = gap_edge_count(t) == 1 ? 1 : 0;
                break;
            case ChainVariant::HollowMinSingleEdge:
                u[x] = t.edge_count() == 1 ? 1 : 0;
                break;
        }
    }

    std::vector<ExpVec> v(size);
    for (int y = 0; y < size; ++y) {
        std::int64_t mult = 1;
        const Hypertree& t = sub.elems[y];
        if (spec.variant == ChainVariant::MaxEdgePointed) mult = fixed_edge_count(t, sigma);
        if (spec.variant == ChainVariant::MaxEdgePointedRooted)
            mult = fixed_edge_root_count(t, sigma);
        int exp = spec.weighted ? sub.rank[y] : 0;
        if (exp + 1 < 0 || exp + 1 >= kExpSpan)
            throw ResourceLimitError("weight exponent outside the supported span");
        v[y] = ExpVec{};
        v[y][exp + 1] = mult;
    }

    return zeta_power_sum(sub, spec.k, u, std::move(v));
}

std::int64_t count_strict_chains(int n, int m, const Perm& sigma, PosetCache& cache) {
    if (m <= -1) return m == -1 ? 1 : 0;
    const FixedSubposet& sub = cache.fixed(n, 1, cycle_type_of(sigma));
    int size = sub.size();
    // strict chains avoid the poset minimum (and the formal top, which is
    // not an element anyway)
    std::vector<std::int64_t> v(size, 1);
    if (sub.min_index >= 0) v[sub.min_index] = 0;
    for (int step = 0; step < m; ++step) {
        std::vector<std::int64_t> next(size, 0);
        for (int x = 0; x < size; ++x) {
            if (x == sub.min_index) continue;
            std::int64_t acc = 0;
            const auto& row = sub.up[x];
            for (int w = 0; w < sub.words; ++w) {
                std::uint64_t bits = row[w];
                while (bits) {
                    int b = std::countr_zero(bits);
                    bits &= bits - 1;
                    int y = (w << 6) + b;
                    if (y != x) acc = checked_add(acc, v[y]);
                }
            }
            next[x] = acc;
        }
        v = std::move(next);
    }
    std::int64_t total = 0;
    for (int x = 0; x < size; ++x)
        if (x != sub.min_index) total = checked_add(total, v[x]);
    return total;
}

std::int64_t mobius_top(int n, PosetCache& cache) {
    if (n < 2) throw DomainError("mobius_top: n >= 2 required");
    return cache.poset(n, 1).mobius_top();
}

}  // namespace hypertrees
