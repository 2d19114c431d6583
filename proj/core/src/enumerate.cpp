#include "hypertrees/enumerate.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace hypertrees {

namespace {

// Partial state: a hypertree on a subset of the labels (always containing
// the first label). Growing = attaching a new edge at one existing vertex,
// the new edge's other vertices taken from the unused labels. Every
// hypertree arises this way; states are deduplicated structurally.
struct Grower {
    int n;
    int first_label;
    std::set<std::vector<Edge>> seen;
    std::vector<Hypertree> out;

    void run() {
        std::vector<Edge> none;
        if (n == 1) {
            out.emplace_back(make_hypergraph(1, {}, first_label));
            return;
        }
        grow(none, 1u);  // mask bit i = label first_label + i used
    }

    void grow(const std::vector<Edge>& edges, unsigned used) {
        if (!seen.insert(edges).second) return;
        if (used == (1u << n) - 1) {
            if (!edges.empty()) out.emplace_back(make_hypergraph(n, edges, first_label));
            if (n > 1) return;  // complete; larger states impossible
        }
        // candidate attachment points: used vertices; new edge = {v} + S,
        // S a nonempty subset of the unused labels
        unsigned unused = ~used & ((1u << n) - 1);
        if (unused == 0) return;
        std::vector<int> unused_labels;
        for (int i = 0; i < n; ++i)
            if (unused & (1u << i)) unused_labels.push_back(i);
        int m = static_cast<int>(unused_labels.size());
        for (int v = 0; v < n; ++v) {
            if (!(used & (1u << v))) continue;
            for (unsigned pick = 1; pick < (1u << m); ++pick) {
                Edge e{v + first_label};
                unsigned new_used = used;
                for (int b = 0; b < m; ++b)
                    if (pick & (1u << b)) {
                        e.push_back(unused_labels[b] + first_label);
                        new_used |= 1u << unused_labels[b];
                    }
                std::sort(e.begin(), e.end());
                std::vector<Edge> next = edges;
                next.push_back(std::move(e));
                std::sort(next.begin(), next.end());
                grow(next, new_used);
            }
        }
    }
};

}  // namespace

std::vector<Hypertree> enumerate_hypertrees(int n, int first_label, int max_n) {
    if (n < 1) throw DomainError("enumerate_hypertrees: n must be >= 1");
    if (n > max_n)
        throw ResourceLimitError("enumerate_hypertrees: n exceeds the configured bound");
    Grower grower{n, first_label, {}, {}};
    grower.run();
    std::sort(grower.out.begin(), grower.out.end());
    return grower.out;
}

std::vector<PointedHypertree> enumerate_pointed(int n, PointedVariant variant, int max_n) {
    std::vector<PointedHypertree> out;
    switch (variant) {
        case PointedVariant::Rooted:
            for (const Hypertree& t : enumerate_hypertrees(n, 1, max_n))
                for (int v = 1; v <= n; ++v) out.push_back(make_rooted(t, v));
            break;
        case PointedVariant::EdgePointed:
            for (const Hypertree& t : enumerate_hypertrees(n, 1, max_n))
                for (int ei = 0; ei < t.edge_count(); ++ei)
                    out.push_back(make_edge_pointed(t, ei));
            break;
        case PointedVariant::EdgePointedRooted:
            if (n < 2) throw DomainError("edge-pointed rooted needs n >= 2");
            for (const Hypertree& t : enumerate_hypertrees(n, 1, max_n))
                for (int ei = 0; ei < t.edge_count(); ++ei)
                    for (int v : t.edges()[ei])
                        out.push_back(make_edge_pointed_rooted(t, ei, v));
            break;
        case PointedVariant::Hollow:
            if (n < 2) throw DomainError("hollow structures need n >= 2");
            for (const Hypertree& t : enumerate_hypertrees(n, 0, max_n)) {
                int gap_edges = 0;
                for (const Edge& e : t.edges())
                    if (std::binary_search(e.begin(), e.end(), 0)) ++gap_edges;
                if (gap_edges == 1) out.push_back(make_hollow(t));
            }
            break;
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace hypertrees
