#pragma once

#include <cstdint>
#include <string>

#include "hypertrees/laurent.hpp"
#include "hypertrees/partitions.hpp"
#include "hypertrees/poset.hpp"

namespace hypertrees {

/// Which pointing decorates a large chain. Min* variants decorate the chain
/// minimum, Max* variants the maximum. Hollow variants live in the poset on
/// {gap, 1..n} (n permutable labels plus the gap); the hollow condition
/// constrains only the chain minimum.
enum class ChainVariant {
    Plain,
    MinRooted,
    MinEdgePointed,
    MinEdgePointedRooted,
    MaxEdgePointed,
    MaxEdgePointedRooted,
    HollowMin,
    HollowMinSingleEdge,
};

bool is_hollow_variant(ChainVariant v);
bool is_pointed_variant(ChainVariant v);  // requires k >= 1
std::string variant_name(ChainVariant v);

struct ChainSpec {
    int n = 1;  // permutable labels (hollow posets add the gap on top)
    int k = 0;  // chain length
    ChainVariant variant = ChainVariant::Plain;
    bool weighted = false;
};

/// Number of large k-chains of the given variant fixed by sigma, counted by
/// zeta-matrix powers over the sigma-fixed subposet. If weighted, each chain
/// contributes t^{rank of its maximum}; the empty chain (k = 0, Plain only)
/// contributes t^{rank of the poset minimum}.
WeightedCount count_large_chains(const ChainSpec& spec, const Perm& sigma, PosetCache& cache);

/// Number of sigma-fixed strict (m+1)-chains of non-minimum elements of
/// HT_n (m = -1 counts the empty chain once).
std::int64_t count_strict_chains(int n, int m, const Perm& sigma, PosetCache& cache);

/// mu(0^, 1^) of the hypertree poset with a formal top, n >= 2.
std::int64_t mobius_top(int n, PosetCache& cache);

}  // namespace hypertrees
