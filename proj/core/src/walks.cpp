#include "hypertrees/walks.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

namespace hypertrees {

namespace {

// Incidence-tree adjacency: node ids 0..n-1 are vertices (by label offset),
// n..n+E-1 are edges. Walks in the hypertree are exactly paths here.
struct Incidence {
    const Hypergraph& g;
    std::vector<std::vector<int>> adj;

    explicit Incidence(const Hypergraph& hg) : g(hg) {
        adj.assign(static_cast<std::size_t>(hg.n) + hg.edges.size(), {});
        for (std::size_t ei = 0; ei < hg.edges.size(); ++ei) {
            int en = hg.n + static_cast<int>(ei);
            for (int v : hg.edges[ei]) {
                int vn = v - hg.first_label;
                adj[vn].push_back(en);
                adj[en].push_back(vn);
            }
        }
    }

    int id(Node x) const {
        if (x.is_edge) {
            if (x.id < 0 || x.id >= static_cast<int>(g.edges.size()))
                throw DomainError("edge index out of range");
            return g.n + x.id;
        }
        int off = x.id - g.first_label;
        if (off < 0 || off >= g.n) throw DomainError("vertex label out of range");
        return off;
    }

    Node node(int id) const {
        if (id < g.n) return vertex_node(id + g.first_label);
        return edge_node(id - g.n);
    }
};

Walk path_between(const Incidence& inc, int from, int to) {
    std::vector<int> parent(inc.adj.size(), -2);
    std::deque<int> queue{from};
    parent[from] = -1;
    while (!queue.empty()) {
        int u = queue.front();
        queue.pop_front();
        if (u == to) break;
        for (int w : inc.adj[u]) {
            if (parent[w] == -2) {
                parent[w] = u;
                queue.push_back(w);
            }
        }
    }
    if (parent[to] == -2) throw DomainError("endpoints not connected");
    Walk walk;
    for (int u = to; u != -1; u = parent[u]) walk.nodes.push_back(inc.node(u));
    std::reverse(walk.nodes.begin(), walk.nodes.end());
    return walk;
}

}  // namespace

Walk minimal_walk(const Hypertree& t, Node start, Node end) {
    Incidence inc(t.graph());
    return path_between(inc, inc.id(start), inc.id(end));
}

Walk minimal_walk(const Hypertree& t, Node start, int end_vertex) {
    return minimal_walk(t, start, vertex_node(end_vertex));
}

int eccentricity(const Hypertree& t, Node x) {
    Incidence inc(t.graph());
    int from = inc.id(x);
    // Single BFS; depth in the incidence tree + 1 = walk length.
    std::vector<int> dist(inc.adj.size(), -1);
    std::deque<int> queue{from};
    dist[from] = 1;
    int worst = 1;
    while (!queue.empty()) {
        int u = queue.front();
        queue.pop_front();
        if (u < t.graph().n) worst = std::max(worst, dist[u]);
        for (int w : inc.adj[u])
            if (dist[w] == -1) {
                dist[w] = dist[u] + 1;
                queue.push_back(w);
            }
    }
    return worst;
}

Node center(const Hypertree& t) {
    const Hypergraph& g = t.graph();
    Node best = vertex_node(g.first_label);
    int best_ecc = eccentricity(t, best);
    for (int v = g.first_label + 1; v <= g.last_label(); ++v) {
        int e = eccentricity(t, vertex_node(v));
        if (e < best_ecc) {
            best = vertex_node(v);
            best_ecc = e;
        }
    }
    for (int ei = 0; ei < t.edge_count(); ++ei) {
        int e = eccentricity(t, edge_node(ei));
        if (e < best_ecc) {
            best = edge_node(ei);
            best_ecc = e;
        }
    }
    return best;
}

std::string node_str(const Hypertree& t, Node x) {
    std::ostringstream os;
    if (x.is_edge) {
        os << "edge#" << x.id << "={";
        const Edge& e = t.edges()[x.id];
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (i) os << ',';
            os << e[i];
        }
        os << '}';
    } else {
        os << "vertex " << x.id;
    }
    return os.str();
}

}  // namespace hypertrees
