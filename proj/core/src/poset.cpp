#include "hypertrees/poset.hpp"

#include <algorithm>
#include <cstring>

namespace hypertrees {

namespace {

// Vertex-subset bitmasks of the edges, for fast containment tests.
std::vector<std::uint32_t> edge_masks(const Hypertree& t) {
    std::vector<std::uint32_t> masks;
    masks.reserve(t.edges().size());
    for (const Edge& e : t.edges()) {
        std::uint32_t m = 0;
        for (int v : e) m |= 1u << (v - t.first_label());
        masks.push_back(m);
    }
    return masks;
}

bool leq_masks(const std::vector<std::uint32_t>& s, const std::vector<std::uint32_t>& t) {
    // s <= t iff every t-edge lies inside an s-edge and the contained
    // t-edges cover each s-edge exactly. Two edges of a hypertree share at
    // most one vertex, so the covering s-edge of a t-edge is unique.
    std::vector<std::uint32_t> covered(s.size(), 0);
    for (std::uint32_t te : t) {
        bool placed = false;
        for (std::size_t i = 0; i < s.size(); ++i) {
            if ((te & ~s[i]) == 0) {
                covered[i] |= te;
                placed = true;
                break;
            }
        }
        if (!placed) return false;
    }
    for (std::size_t i = 0; i < s.size(); ++i)
        if (covered[i] != s[i]) return false;
    return true;
}

std::vector<std::vector<std::uint64_t>> order_rows(const std::vector<Hypertree>& elems) {
    int size = static_cast<int>(elems.size());
    int words = (size + 63) / 64;
    std::vector<std::vector<std::uint32_t>> masks;
    masks.reserve(elems.size());
    for (const Hypertree& t : elems) masks.push_back(edge_masks(t));

    std::vector<std::vector<std::uint64_t>> up(size, std::vector<std::uint64_t>(words, 0));
    for (int i = 0; i < size; ++i) {
        int ri = elems[i].rank();
        for (int j = 0; j < size; ++j) {
            // refinement strictly increases the edge count, so only
            // higher-rank elements can sit above i
            if (i != j && elems[j].rank() <= ri) continue;
            if (i == j || leq_masks(masks[i], masks[j]))
                up[i][static_cast<std::size_t>(j) >> 6] |= 1ull << (j & 63);
        }
    }
    return up;
}

}  // namespace

bool leq(const Hypertree& s, const Hypertree& t) {
    if (s.vertex_count() != t.vertex_count() || s.first_label() != t.first_label())
        throw DomainError("leq: hypertrees on different vertex sets");
    if (s.graph() == t.graph()) return true;
    return leq_masks(edge_masks(s), edge_masks(t));
}

HypertreePoset HypertreePoset::build(int n, int first_label, int max_n) {
    HypertreePoset p;
    p.n_ = n;
    p.first_label_ = first_label;
    p.elems_ = enumerate_hypertrees(n, first_label, max_n);
    p.up_ = order_rows(p.elems_);
    for (int i = 0; i < p.size(); ++i)
        if (p.elems_[i].rank() == (n == 1 ? -1 : 0)) p.min_index_ = i;
    return p;
}

int HypertreePoset::index_of(const Hypertree& t) const {
    auto it = std::lower_bound(elems_.begin(), elems_.end(), t);
    if (it == elems_.end() || !(*it == t)) return -1;
    return static_cast<int>(it - elems_.begin());
}

std::vector<std::pair<int, int>> HypertreePoset::cover_relations() const {
    // Any strict intermediary has rank strictly between the endpoints, so
    // the search can be restricted to that band.
    std::vector<std::pair<int, int>> covers;
    for (int i = 0; i < size(); ++i) {
        for (int j = 0; j < size(); ++j) {
            if (i == j || !leq(i, j)) continue;
            bool is_cover = true;
            for (int k = 0; k < size() && is_cover; ++k) {
                if (k == i || k == j) continue;
                if (rank(k) <= rank(i) || rank(k) >= rank(j)) continue;
                if (leq(i, k) && leq(k, j)) is_cover = false;
            }
            if (is_cover) covers.emplace_back(i, j);
        }
    }
    return covers;
}

std::vector<std::int64_t> HypertreePoset::mobius_from_bottom() const {
    // mu(0^, x) by the defining recursion, elements scanned by rank.
    std::vector<int> order(size());
    for (int i = 0; i < size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return elems_[a].rank() < elems_[b].rank(); });
    std::vector<std::int64_t> mu(size(), 0);
    for (int idx : order) {
        if (idx == min_index_) {
            mu[idx] = 1;
            continue;
        }
        std::int64_t s = 0;
        for (int y = 0; y < size(); ++y)
            if (y != idx && leq(y, idx)) s = checked_add(s, mu[y]);
        mu[idx] = -s;
    }
    return mu;
}

std::int64_t HypertreePoset::mobius_top() const {
    std::int64_t s = 0;
    for (std::int64_t m : mobius_from_bottom()) s = checked_add(s, m);
    return -s;
}

FixedSubposet fixed_subposet(const HypertreePoset& poset, const Perm& sigma) {
    FixedSubposet sub;
    for (const Hypertree& t : poset.elements())
        if (fixed_by(t, sigma)) sub.elems.push_back(t);
    int size = static_cast<int>(sub.elems.size());
    sub.words = (size + 63) / 64;
    sub.rank.resize(size);
    for (int i = 0; i < size; ++i) sub.rank[i] = sub.elems[i].rank();
    sub.up = order_rows(sub.elems);
    for (int i = 0; i < size; ++i)
        if (sub.rank[i] == (poset.vertex_count() == 1 ? -1 : 0)) sub.min_index = i;
    return sub;
}

const HypertreePoset& PosetCache::poset(int n, int first_label) {
    std::lock_guard<std::mutex> lock(mu_);
    for (const auto& [key, value] : posets_)
        if (key == std::make_pair(n, first_label)) return *value;
    auto built = std::make_unique<HypertreePoset>(HypertreePoset::build(n, first_label, max_n_));
    posets_.emplace_back(std::make_pair(n, first_label), std::move(built));
    return *posets_.back().second;
}

const FixedSubposet& PosetCache::fixed(int n, int first_label, const Partition& lambda) {
    {
        std::lock_guard<std::mutex> lock(mu_);
        for (const auto& [key, value] : fixed_)
            if (key == std::make_tuple(n, first_label, lambda)) return *value;
    }
    const HypertreePoset& base = poset(n, first_label);
    auto sub = std::make_unique<FixedSubposet>(fixed_subposet(base, representative_of(lambda)));
    std::lock_guard<std::mutex> lock(mu_);
    for (const auto& [key, value] : fixed_)  // re-check after re-locking
        if (key == std::make_tuple(n, first_label, lambda)) return *value;
    fixed_.emplace_back(std::make_tuple(n, first_label, lambda), std::move(sub));
    return *fixed_.back().second;
}

}  // namespace hypertrees
