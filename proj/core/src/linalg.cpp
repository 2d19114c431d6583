#include "hypertrees/linalg.hpp"

#include <algorithm>
#include <map>

namespace hypertrees {

namespace {

using SparseRow = std::map<int, Rational>;

// Eliminates row against the recorded pivots, in column order.
void reduce_row(SparseRow& row, const std::map<int, SparseRow>& pivots) {
    for (auto it = row.begin(); it != row.end();) {
        int pcol = it->first;
        auto pivot = pivots.find(pcol);
        if (pivot == pivots.end()) {
            ++it;
            continue;
        }
        Rational factor = it->second;  // pivot rows are normalized to lead 1
        for (const auto& [col, val] : pivot->second) {
            auto at = row.find(col);
            if (at == row.end()) {
                row.emplace(col, -factor * val);
            } else {
                at->second -= factor * val;
                if (at->second == 0) row.erase(at);
            }
        }
        it = row.upper_bound(pcol);
    }
}

}  // namespace

int sparse_rank(const SparseIntMatrix& m) {
    // Row-by-row incremental elimination over Q. The matrix is transposed
    // when that makes the outer loop shorter.
    std::vector<SparseRow> rows;
    if (m.rows <= m.cols) {
        rows.resize(m.rows);
        for (int j = 0; j < m.cols; ++j)
            for (const auto& [i, v] : m.columns[j]) rows[i][j] = Rational(v);
    } else {
        rows.resize(m.cols);
        for (int j = 0; j < m.cols; ++j)
            for (const auto& [i, v] : m.columns[j]) rows[j][i] = Rational(v);
    }

    std::map<int, SparseRow> pivots;
    for (SparseRow& row : rows) {
        reduce_row(row, pivots);
        if (row.empty()) continue;
        Rational lead = row.begin()->second;
        for (auto& [col, val] : row) val /= lead;
        pivots.emplace(row.begin()->first, std::move(row));
    }
    return static_cast<int>(pivots.size());
}

std::vector<int> rref(RationalMatrix& m) {
    std::vector<int> pivot_cols;
    if (m.empty()) return pivot_cols;
    int rows = static_cast<int>(m.size());
    int cols = static_cast<int>(m[0].size());
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int pivot = -1;
        for (int i = r; i < rows; ++i)
            if (m[i][c] != 0) {
                pivot = i;
                break;
            }
        if (pivot < 0) continue;
        std::swap(m[r], m[pivot]);
        Rational lead = m[r][c];
        for (int j = c; j < cols; ++j) m[r][j] /= lead;
        for (int i = 0; i < rows; ++i) {
            if (i == r || m[i][c] == 0) continue;
            Rational f = m[i][c];
            for (int j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
        }
        pivot_cols.push_back(c);
        ++r;
    }
    return pivot_cols;
}

std::vector<std::vector<Rational>> kernel_basis(const RationalMatrix& m) {
    if (m.empty()) return {};
    RationalMatrix work = m;
    std::vector<int> pivots = rref(work);
    int cols = static_cast<int>(m[0].size());
    std::vector<bool> is_pivot(cols, false);
    for (int c : pivots) is_pivot[c] = true;

    std::vector<std::vector<Rational>> basis;
    for (int free = 0; free < cols; ++free) {
        if (is_pivot[free]) continue;
        std::vector<Rational> v(cols, Rational(0));
        v[free] = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -work[r][free];
        basis.push_back(std::move(v));
    }
    return basis;
}

std::vector<Rational> solve_in_span(const std::vector<std::vector<Rational>>& basis,
                                    const std::vector<Rational>& b) {
    int dim = static_cast<int>(b.size());
    int k = static_cast<int>(basis.size());
    // Augmented [basis | b], rref, read the coordinates.
    RationalMatrix aug(dim, std::vector<Rational>(k + 1, Rational(0)));
    for (int j = 0; j < k; ++j)
        for (int i = 0; i < dim; ++i) aug[i][j] = basis[j][i];
    for (int i = 0; i < dim; ++i) aug[i][k] = b[i];
    std::vector<int> pivots = rref(aug);
    std::vector<Rational> x(k, Rational(0));
    for (std::size_t r = 0; r < pivots.size(); ++r) {
        if (pivots[r] == k) throw DomainError("solve_in_span: vector not in span");
        x[pivots[r]] = aug[r][k];
    }
    return x;
}

}  // namespace hypertrees
