#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hypertrees/numeric.hpp"
#include "hypertrees/partitions.hpp"

namespace hypertrees {

/// An edge is a sorted list of vertex labels (cardinality >= 2).
using Edge = std::vector<int>;

/// Hypergraph on a contiguous label range. Ordinary structures live on
/// labels 1..n; hollow structures live on 0..n-1 with 0 as the gap.
/// Canonical form: every edge sorted ascending, edges sorted by
/// (minimum label, then lexicographically).
struct Hypergraph {
    int n = 0;            // number of vertices
    int first_label = 1;  // 1 for ordinary structures, 0 when a gap is present
    std::vector<Edge> edges;

    int last_label() const { return first_label + n - 1; }
    bool operator==(const Hypergraph&) const = default;
    bool operator<(const Hypergraph& o) const {
        if (n != o.n) return n < o.n;
        if (first_label != o.first_label) return first_label < o.first_label;
        return edges < o.edges;
    }
};

/// Sorts edges and edge lists into canonical form. Throws DomainError on
/// labels out of range, edges of cardinality < 2, or duplicate edges.
Hypergraph make_hypergraph(int n, std::vector<Edge> edges, int first_label = 1);

/// True iff the hypergraph is a hypertree: connected, and the walk with
/// distinct edges between any two vertices is unique. The one-vertex,
/// zero-edge hypergraph is a hypertree.
bool is_hypertree(const Hypergraph& hg);

/// A validated hypertree. Construction checks is_hypertree.
class Hypertree {
public:
    explicit Hypertree(Hypergraph hg);
    static Hypertree single_edge(int n, int first_label = 1);

    const Hypergraph& graph() const { return g_; }
    int vertex_count() const { return g_.n; }
    int first_label() const { return g_.first_label; }
    int edge_count() const { return static_cast<int>(g_.edges.size()); }
    const std::vector<Edge>& edges() const { return g_.edges; }

    /// Poset rank: number of edges minus one (-1 for the one-vertex tree).
    int rank() const { return edge_count() - 1; }

    bool operator==(const Hypertree&) const = default;
    bool operator<(const Hypertree& o) const { return g_ < o.g_; }

private:
    Hypergraph g_;
};

enum class PointingKind { Root, EdgePointed, EdgePointedRooted, Hollow };

/// Hypertree with a pointing. For Hollow the tree itself lives on labels
/// 0..n-1 and the gap (label 0) must belong to exactly one edge.
struct PointedHypertree {
    Hypertree tree;
    PointingKind kind;
    int root = -1;        // Root / EdgePointedRooted
    int edge_index = -1;  // EdgePointed / EdgePointedRooted

    bool operator==(const PointedHypertree&) const = default;
    bool operator<(const PointedHypertree& o) const {
        if (!(tree == o.tree)) return tree < o.tree;
        if (kind != o.kind) return kind < o.kind;
        if (edge_index != o.edge_index) return edge_index < o.edge_index;
        return root < o.root;
    }
};

PointedHypertree make_rooted(Hypertree t, int root);
PointedHypertree make_edge_pointed(Hypertree t, int edge_index);
PointedHypertree make_edge_pointed_rooted(Hypertree t, int edge_index, int root);
PointedHypertree make_hollow(Hypertree t);

/// sigma acts on labels 1..m (m = number of permutable labels). The gap
/// label 0 is never relabelled. Result is re-canonicalized.
Hypergraph apply_permutation(const Hypergraph& hg, const Perm& sigma);
Hypertree apply_permutation(const Hypertree& t, const Perm& sigma);
PointedHypertree apply_permutation(const PointedHypertree& p, const Perm& sigma);

bool fixed_by(const Hypertree& t, const Perm& sigma);

/// Number of edges of t fixed setwise by sigma.
int fixed_edge_count(const Hypertree& t, const Perm& sigma);
/// Number of pairs (edge e fixed setwise, vertex v in e with sigma(v)=v).
int fixed_edge_root_count(const Hypertree& t, const Perm& sigma);
/// Number of labels fixed by sigma.
int fixed_points(const Perm& sigma);

// --- text codec -----------------------------------------------------------
//
// Edges joined by ";", each "{a,b,...}" ascending: "{1,2,4};{2,3}".
// Pointings are appended: "@root=2", "@edge=0" (index into the canonical
// edge list), "@gap=0". The one-vertex hypertree prints as "{1}"-free empty
// edge list, i.e. the empty string. Round trips are bit-exact.

std::string encode(const Hypergraph& hg);
std::string encode(const Hypertree& t);
std::string encode(const PointedHypertree& p);

Hypergraph parse_hypergraph(const std::string& text);
Hypertree parse_hypertree(const std::string& text);
PointedHypertree parse_pointed(const std::string& text);

}  // namespace hypertrees
