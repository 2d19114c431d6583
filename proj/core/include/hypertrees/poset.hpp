#pragma once

#include <cstdint>
#include <memory>
#include <mutex>
#include <string>
#include <utility>
#include <vector>

#include "hypertrees/enumerate.hpp"
#include "hypertrees/hypertree.hpp"

namespace hypertrees {

/// S <= T iff each edge of S is the union of the T-edges it contains.
bool leq(const Hypertree& s, const Hypertree& t);

/// Poset of all hypertrees on a fixed label set, ordered by edge refinement.
/// Elements are stored in canonical sorted order; the order relation is
/// materialized as bitset rows. Immutable once built.
class HypertreePoset {
public:
    /// first_label = 1 for ordinary posets; 0 for the gap-labelled poset on
    /// {0 (gap), 1..n-1}.
    static HypertreePoset build(int n, int first_label = 1, int max_n = 7);

    int size() const { return static_cast<int>(elems_.size()); }
    int vertex_count() const { return n_; }
    const std::vector<Hypertree>& elements() const { return elems_; }
    const Hypertree& element(int i) const { return elems_[i]; }
    int rank(int i) const { return elems_[i].rank(); }

    /// Index of the unique minimum (the single-edge hypertree for n >= 2,
    /// the edgeless one for n = 1).
    int minimum() const { return min_index_; }

    bool leq(int i, int j) const {
        return (up_[i][static_cast<std::size_t>(j) >> 6] >> (j & 63)) & 1u;
    }

    int index_of(const Hypertree& t) const;  // -1 if absent

    /// All cover pairs (x, y) with x covered by y, lexicographic by index.
    std::vector<std::pair<int, int>> cover_relations() const;

    /// Mobius function mu(0^, x) for every element, by the standard recursion.
    std::vector<std::int64_t> mobius_from_bottom() const;

    /// mu(0^, 1^) where 1^ is the formal top above all elements.
    std::int64_t mobius_top() const;

private:
    int n_ = 0;
    int first_label_ = 1;
    int min_index_ = -1;
    std::vector<Hypertree> elems_;
    std::vector<std::vector<std::uint64_t>> up_;  // row i: bitset of {j : i <= j}
};

/// The sigma-fixed subposet used for equivariant chain counting: elements
/// fixed by sigma, with ranks and the order restricted to them.
struct FixedSubposet {
    std::vector<Hypertree> elems;
    std::vector<int> rank;
    std::vector<std::vector<std::uint64_t>> up;  // bitset rows as above
    int min_index = -1;
    int words = 0;

    int size() const { return static_cast<int>(elems.size()); }
    bool leq(int i, int j) const {
        return (up[i][static_cast<std::size_t>(j) >> 6] >> (j & 63)) & 1u;
    }
};

FixedSubposet fixed_subposet(const HypertreePoset& poset, const Perm& sigma);

/// Shared cache of posets and fixed subposets, safe for concurrent use.
class PosetCache {
public:
    explicit PosetCache(int max_n = 7) : max_n_(max_n) {}

    const HypertreePoset& poset(int n, int first_label = 1);
    const FixedSubposet& fixed(int n, int first_label, const Partition& lambda);

private:
    int max_n_;
    std::mutex mu_;
    std::vector<std::pair<std::pair<int, int>, std::unique_ptr<HypertreePoset>>> posets_;
    std::vector<std::pair<std::tuple<int, int, Partition>, std::unique_ptr<FixedSubposet>>> fixed_;
};

}  // namespace hypertrees
