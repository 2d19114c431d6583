#pragma once

#include <utility>
#include <vector>

#include "hypertrees/numeric.hpp"

namespace hypertrees {

/// Sparse integer matrix stored column-wise: columns[j] = {(row, value)}.
struct SparseIntMatrix {
    int rows = 0;
    int cols = 0;
    std::vector<std::vector<std::pair<int, int>>> columns;
};

/// Exact rank over Q via sparse fraction-free elimination.
int sparse_rank(const SparseIntMatrix& m);

/// Dense exact matrix over Q, row major.
using RationalMatrix = std::vector<std::vector<Rational>>;

/// Reduced row echelon form in place; returns pivot column indices.
std::vector<int> rref(RationalMatrix& m);

/// Basis of the null space of m (as column vectors of length cols).
std::vector<std::vector<Rational>> kernel_basis(const RationalMatrix& m);

/// Solve A x = b for one consistent system; A given column-wise as a list of
/// basis vectors. Throws DomainError if inconsistent.
std::vector<Rational> solve_in_span(const std::vector<std::vector<Rational>>& basis,
                                    const std::vector<Rational>& b);

}  // namespace hypertrees
