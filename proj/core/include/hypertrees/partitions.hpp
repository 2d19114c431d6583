#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "hypertrees/numeric.hpp"

namespace hypertrees {

/// Integer partition, parts sorted descending. Indexes conjugacy classes of
/// the symmetric group.
using Partition = std::vector<int>;

/// A permutation of {1..n} stored as the image table: img[i-1] = sigma(i).
using Perm = std::vector<int>;

/// All partitions of n, in a fixed deterministic order (descending lex).
std::vector<Partition> partitions_of(int n);

/// z_lambda = prod_i i^{m_i} m_i!, the centralizer order of the class.
std::int64_t z_of(const Partition& lambda);

/// Number of parts equal to 1 (fixed points of any permutation in the class).
int fixed_points_of(const Partition& lambda);

/// Canonical representative: consecutive cycles (1..l1)(l1+1..l1+l2)...
Perm representative_of(const Partition& lambda);

/// Cycle type of an arbitrary permutation of {1..n}.
Partition cycle_type_of(const Perm& sigma);

Perm identity_perm(int n);
Perm compose(const Perm& a, const Perm& b);  // (a*b)(i) = a(b(i))

/// Class label used in CSV output, e.g. "3+1+1".
std::string partition_label(const Partition& lambda);

/// binom(k, i) for integer k (possibly negative), i >= 0, exact.
Rational binomial(const Rational& k, int i);

inline std::int64_t factorial(int n) {
    std::int64_t f = 1;
    for (int i = 2; i <= n; ++i) f = checked_mul(f, i);
    return f;
}

}  // namespace hypertrees
