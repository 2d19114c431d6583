#pragma once

#include <vector>

#include "hypertrees/hypertree.hpp"

namespace hypertrees {

enum class PointedVariant { Rooted, EdgePointed, EdgePointedRooted, Hollow };

/// All hypertrees on labels first_label..first_label+n-1, canonical,
/// duplicate-free, in deterministic (sorted) order. Grows structures by
/// attaching edges at one existing vertex; partial states are deduplicated.
/// Throws ResourceLimitError above max_n.
std::vector<Hypertree> enumerate_hypertrees(int n, int first_label = 1, int max_n = 7);

/// All pointed hypertrees of the given variant on n vertices. For Hollow the
/// structures live on {0 (gap), 1..n-1}. EdgePointedRooted requires n >= 2.
std::vector<PointedHypertree> enumerate_pointed(int n, PointedVariant variant, int max_n = 7);

}  // namespace hypertrees
