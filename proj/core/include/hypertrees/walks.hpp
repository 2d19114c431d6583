#pragma once

#include <string>
#include <vector>

#include "hypertrees/hypertree.hpp"

namespace hypertrees {

/// A node of the vertex/edge incidence tree of a hypertree.
struct Node {
    bool is_edge = false;
    int id = 0;  // vertex label, or index into the canonical edge list

    bool operator==(const Node&) const = default;
    bool operator<(const Node& o) const {
        if (is_edge != o.is_edge) return is_edge < o.is_edge;
        return id < o.id;
    }
};

inline Node vertex_node(int label) { return {false, label}; }
inline Node edge_node(int index) { return {true, index}; }

/// Alternating sequence of vertices and edges. length() counts every entry,
/// matching "the number of edges and vertices in the walk".
struct Walk {
    std::vector<Node> nodes;
    int length() const { return static_cast<int>(nodes.size()); }
    bool operator==(const Walk&) const = default;
};

/// The unique minimal walk from a vertex-or-edge to a vertex. Throws
/// DomainError if either endpoint is not in the hypertree.
Walk minimal_walk(const Hypertree& t, Node start, int end_vertex);

/// Unique minimal walk between two incidence-tree nodes (either kind).
Walk minimal_walk(const Hypertree& t, Node start, Node end);

/// Eccentricity: maximal length of the minimal walk from x to a vertex.
int eccentricity(const Hypertree& t, Node x);

/// The unique vertex or edge of minimal eccentricity.
Node center(const Hypertree& t);

std::string node_str(const Hypertree& t, Node x);

}  // namespace hypertrees
