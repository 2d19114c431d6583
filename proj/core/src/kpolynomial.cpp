#include "hypertrees/kpolynomial.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace hypertrees {

std::vector<Rational> interpolate_polynomial(const std::vector<std::pair<int, Rational>>& pts) {
    // Newton's divided differences, then expansion into the monomial basis.
    std::size_t n = pts.size();
    std::vector<Rational> diffs(n);
    for (std::size_t i = 0; i < n; ++i) diffs[i] = pts[i].second;
    for (std::size_t level = 1; level < n; ++level)
        for (std::size_t i = n - 1; i >= level; --i) {
            diffs[i] = (diffs[i] - diffs[i - 1]) /
                       Rational(pts[i].first - pts[i - level].first);
            if (i == level) break;
        }
    std::vector<Rational> coeffs{diffs.empty() ? Rational(0) : diffs[0]};
    std::vector<Rational> basis{Rational(1)};  // prod (x - x_j), ascending coeffs
    for (std::size_t level = 1; level < n; ++level) {
        // basis *= (x - x_{level-1})
        std::vector<Rational> next(basis.size() + 1, Rational(0));
        Rational shift(-pts[level - 1].first);
        for (std::size_t i = 0; i < basis.size(); ++i) {
            next[i] += basis[i] * shift;
            next[i + 1] += basis[i];
        }
        basis = std::move(next);
        if (coeffs.size() < basis.size()) coeffs.resize(basis.size(), Rational(0));
        for (std::size_t i = 0; i < basis.size(); ++i) coeffs[i] += diffs[level] * basis[i];
    }
    while (coeffs.size() > 1 && coeffs.back() == 0) coeffs.pop_back();
    return coeffs;
}

Rational eval_polynomial(const std::vector<Rational>& coeffs, const Rational& x) {
    Rational acc(0);
    for (std::size_t i = coeffs.size(); i-- > 0;) acc = acc * x + coeffs[i];
    return acc;
}

KPolynomial character_polynomial(int n, ChainVariant variant, bool weighted,
                                 PosetCache& cache) {
    KPolynomial kp;
    kp.n = n;
    kp.variant = variant;
    kp.weighted = weighted;
    kp.degree_bound = variant == ChainVariant::Plain ? std::max(n - 2, 0) : std::max(n - 1, 0);

    int k_lo = variant == ChainVariant::Plain ? 0 : 1;
    int k_hi = n + 1;
    int k_guard = n + 2;

    for (const Partition& lambda : partitions_of(n)) {
        Perm sigma = representative_of(lambda);
        std::map<int, std::vector<std::pair<int, Rational>>> samples;  // tpow -> points
        std::set<int> exps;
        std::vector<WeightedCount> counted;
        for (int k = k_lo; k <= k_guard; ++k) {
            ChainSpec spec{n, k, variant, weighted};
            counted.push_back(count_large_chains(spec, sigma, cache));
            for (const auto& [e, v] : counted.back().coefficients()) exps.insert(e);
        }
        if (exps.empty()) exps.insert(0);
        for (int e : exps) {
            std::vector<std::pair<int, Rational>> pts;
            for (int k = k_lo; k <= k_hi; ++k)
                pts.emplace_back(k, Rational(counted[k - k_lo].at(e)));
            std::vector<Rational> poly = interpolate_polynomial(pts);
            // out-of-sample guard: a mismatch is a counting bug, not data
            Rational predicted = eval_polynomial(poly, Rational(k_guard));
            Rational actual(counted[k_guard - k_lo].at(e));
            if (predicted != actual) {
                std::ostringstream os;
                os << "interpolation instability: n=" << n << " variant="
                   << variant_name(variant) << " class=" << partition_label(lambda)
                   << " t^" << e << " at k=" << k_guard << ": fitted " << predicted
                   << " vs counted " << actual;
                throw std::logic_error(os.str());
            }
            if (static_cast<int>(poly.size()) - 1 > kp.degree_bound) {
                std::ostringstream os;
                os << "character polynomial degree " << poly.size() - 1
                   << " exceeds bound " << kp.degree_bound << " (n=" << n
                   << ", variant=" << variant_name(variant) << ")";
                throw std::logic_error(os.str());
            }
            if (!(poly.size() == 1 && poly[0] == 0)) kp.polys[{lambda, e}] = std::move(poly);
        }
    }
    return kp;
}

CycleIndex evaluate_at(const KPolynomial& kp, int k0, int truncation) {
    CycleIndex slice(truncation);
    for (const auto& [key, poly] : kp.polys) {
        Rational value = eval_polynomial(poly, Rational(k0));
        if (value == 0) continue;
        slice.add_term(key.first, key.second, value / Rational(z_of(key.first)));
    }
    return slice;
}

CycleIndex cycle_index_from_counts(const ChainSpec& spec, int truncation, PosetCache& cache) {
    CycleIndex slice(truncation);
    for (const Partition& lambda : partitions_of(spec.n)) {
        Perm sigma = representative_of(lambda);
        WeightedCount count = count_large_chains(spec, sigma, cache);
        for (const auto& [e, v] : count.coefficients())
            slice.add_term(lambda, e, Rational(v) / Rational(z_of(lambda)));
    }
    return slice;
}

CycleIndex enumerated_series(ChainVariant variant, int k, bool weighted, int truncation,
                             PosetCache& cache) {
    CycleIndex total(truncation);
    for (int n = 1; n <= truncation; ++n) {
        if (k == 0 && is_pointed_variant(variant)) break;
        total += cycle_index_from_counts(ChainSpec{n, k, variant, weighted}, truncation, cache);
    }
    return total;
}

CycleIndex interpolated_series(ChainVariant variant, int k0, bool weighted, int truncation,
                               PosetCache& cache) {
    CycleIndex total(truncation);
    for (int n = 1; n <= truncation; ++n) {
        KPolynomial kp = character_polynomial(n, variant, weighted, cache);
        total += evaluate_at(kp, k0, truncation);
    }
    return total;
}

}  // namespace hypertrees
