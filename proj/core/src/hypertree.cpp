#include "hypertrees/hypertree.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace hypertrees {

namespace {

void canonicalize(Hypergraph& hg) {
    for (Edge& e : hg.edges) std::sort(e.begin(), e.end());
    std::sort(hg.edges.begin(), hg.edges.end());
}

void check_structure(const Hypergraph& hg) {
    if (hg.n < 1) throw DomainError("hypergraph needs at least one vertex");
    if (hg.first_label != 0 && hg.first_label != 1)
        throw DomainError("labels must start at 0 (gap) or 1");
    std::set<Edge> seen;
    for (const Edge& e : hg.edges) {
        if (e.size() < 2) throw DomainError("edge of cardinality < 2");
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] < hg.first_label || e[i] > hg.last_label())
                throw DomainError("edge label out of range");
            if (i > 0 && e[i] == e[i - 1]) throw DomainError("repeated vertex in edge");
        }
        if (!seen.insert(e).second) throw DomainError("duplicate edge");
    }
}

}  // namespace

Hypergraph make_hypergraph(int n, std::vector<Edge> edges, int first_label) {
    Hypergraph hg{n, first_label, std::move(edges)};
    canonicalize(hg);
    check_structure(hg);
    return hg;
}

bool is_hypertree(const Hypergraph& hg) {
    check_structure(hg);
    if (hg.n == 1) return hg.edges.empty();
    // The vertex/edge incidence graph must be a tree: connected with
    // #incidences = (#vertices + #edges) - 1. Tree-ness of the incidence
    // graph is exactly uniqueness of distinct-edge walks.
    std::size_t incidences = 0;
    for (const Edge& e : hg.edges) incidences += e.size();
    std::size_t nodes = static_cast<std::size_t>(hg.n) + hg.edges.size();
    if (incidences + 1 != nodes) return false;

    if (hg.edges.empty()) return false;
    std::vector<std::vector<int>> edges_at(hg.n);  // vertex offset -> edge ids
    for (std::size_t ei = 0; ei < hg.edges.size(); ++ei)
        for (int v : hg.edges[ei]) edges_at[v - hg.first_label].push_back(static_cast<int>(ei));

    std::vector<bool> v_seen(hg.n, false), e_seen(hg.edges.size(), false);
    std::vector<int> stack{0};
    v_seen[0] = true;
    int reached = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int ei : edges_at[v]) {
            if (e_seen[ei]) continue;
            e_seen[ei] = true;
            for (int w : hg.edges[ei]) {
                int wo = w - hg.first_label;
                if (!v_seen[wo]) {
                    v_seen[wo] = true;
                    ++reached;
                    stack.push_back(wo);
                }
            }
        }
    }
    return reached == hg.n;
}

Hypertree::Hypertree(Hypergraph hg) : g_(std::move(hg)) {
    canonicalize(g_);
    if (!is_hypertree(g_)) throw DomainError("not a hypertree: " + encode(g_));
}

Hypertree Hypertree::single_edge(int n, int first_label) {
    if (n == 1) return Hypertree(make_hypergraph(1, {}, first_label));
    Edge e(n);
    for (int i = 0; i < n; ++i) e[i] = first_label + i;
    return Hypertree(make_hypergraph(n, {e}, first_label));
}

namespace {

int gap_edge_count(const Hypertree& t) {
    int c = 0;
    for (const Edge& e : t.edges())
        if (std::binary_search(e.begin(), e.end(), 0)) ++c;
    return c;
}

}  // namespace

PointedHypertree make_rooted(Hypertree t, int root) {
    if (root < t.first_label() + (t.first_label() == 0 ? 1 : 0) || root > t.graph().last_label())
        throw DomainError("root out of range");
    return PointedHypertree{std::move(t), PointingKind::Root, root, -1};
}

PointedHypertree make_edge_pointed(Hypertree t, int edge_index) {
    if (edge_index < 0 || edge_index >= t.edge_count())
        throw DomainError("pointed edge index out of range");
    return PointedHypertree{std::move(t), PointingKind::EdgePointed, -1, edge_index};
}

PointedHypertree make_edge_pointed_rooted(Hypertree t, int edge_index, int root) {
    if (t.vertex_count() < 2) throw DomainError("edge-pointed rooted needs n >= 2");
    if (edge_index < 0 || edge_index >= t.edge_count())
        throw DomainError("pointed edge index out of range");
    const Edge& e = t.edges()[edge_index];
    if (!std::binary_search(e.begin(), e.end(), root))
        throw DomainError("root must lie in the pointed edge");
    return PointedHypertree{std::move(t), PointingKind::EdgePointedRooted, root, edge_index};
}

PointedHypertree make_hollow(Hypertree t) {
    if (t.first_label() != 0) throw DomainError("hollow structure must carry the gap label 0");
    if (gap_edge_count(t) != 1) throw DomainError("gap must belong to exactly one edge");
    return PointedHypertree{std::move(t), PointingKind::Hollow, -1, -1};
}

Hypergraph apply_permutation(const Hypergraph& hg, const Perm& sigma) {
    int permutable = hg.n - (hg.first_label == 0 ? 1 : 0);
    if (static_cast<int>(sigma.size()) != permutable)
        throw DomainError("permutation size mismatch");
    Hypergraph out = hg;
    for (Edge& e : out.edges)
        for (int& v : e)
            if (v != 0) v = sigma[v - 1];
    canonicalize(out);
    return out;
}

Hypertree apply_permutation(const Hypertree& t, const Perm& sigma) {
    return Hypertree(apply_permutation(t.graph(), sigma));
}

PointedHypertree apply_permutation(const PointedHypertree& p, const Perm& sigma) {
    Hypertree moved = apply_permutation(p.tree, sigma);
    switch (p.kind) {
        case PointingKind::Root:
            return make_rooted(std::move(moved), sigma[p.root - 1]);
        case PointingKind::Hollow:
            return make_hollow(std::move(moved));
        case PointingKind::EdgePointed:
        case PointingKind::EdgePointedRooted: {
            Edge image = p.tree.edges()[p.edge_index];
            for (int& v : image)
                if (v != 0) v = sigma[v - 1];
            std::sort(image.begin(), image.end());
            const auto& edges = moved.edges();
            auto it = std::find(edges.begin(), edges.end(), image);
            int idx = static_cast<int>(it - edges.begin());
            if (p.kind == PointingKind::EdgePointed)
                return make_edge_pointed(std::move(moved), idx);
            return make_edge_pointed_rooted(std::move(moved), idx, sigma[p.root - 1]);
        }
    }
    throw DomainError("unknown pointing kind");
}

bool fixed_by(const Hypertree& t, const Perm& sigma) {
    return apply_permutation(t.graph(), sigma).edges == t.graph().edges;
}

int fixed_edge_count(const Hypertree& t, const Perm& sigma) {
    int c = 0;
    for (const Edge& e : t.edges()) {
        Edge image = e;
        for (int& v : image)
            if (v != 0) v = sigma[v - 1];
        std::sort(image.begin(), image.end());
        if (image == e) ++c;
    }
    return c;
}

int fixed_edge_root_count(const Hypertree& t, const Perm& sigma) {
    int c = 0;
    for (const Edge& e : t.edges()) {
        Edge image = e;
        for (int& v : image)
            if (v != 0) v = sigma[v - 1];
        std::sort(image.begin(), image.end());
        if (image != e) continue;
        for (int v : e)
            if (v != 0 && sigma[v - 1] == v) ++c;
    }
    return c;
}

int fixed_points(const Perm& sigma) {
    int c = 0;
    for (std::size_t i = 0; i < sigma.size(); ++i)
        if (sigma[i] == static_cast<int>(i) + 1) ++c;
    return c;
}

// --- codec ------------------------------------------------------------------

std::string encode(const Hypergraph& hg) {
    std::ostringstream os;
    for (std::size_t i = 0; i < hg.edges.size(); ++i) {
        if (i) os << ';';
        os << '{';
        for (std::size_t j = 0; j < hg.edges[i].size(); ++j) {
            if (j) os << ',';
            os << hg.edges[i][j];
        }
        os << '}';
    }
    return os.str();
}

std::string encode(const Hypertree& t) { return encode(t.graph()); }

std::string encode(const PointedHypertree& p) {
    std::string s = encode(p.tree);
    switch (p.kind) {
        case PointingKind::Root:
            return s + "@root=" + std::to_string(p.root);
        case PointingKind::EdgePointed:
            return s + "@edge=" + std::to_string(p.edge_index);
        case PointingKind::EdgePointedRooted:
            return s + "@edge=" + std::to_string(p.edge_index) +
                   "@root=" + std::to_string(p.root);
        case PointingKind::Hollow:
            return s + "@gap=0";
    }
    throw DomainError("unknown pointing kind");
}

namespace {

// Parses the edge list part; the vertex set is reconstructed from labels:
// with a 0 label the structure is gap-labelled on 0..max, otherwise 1..max.
Hypergraph parse_edges(const std::string& text) {
    std::vector<Edge> edges;
    bool saw_zero = false;
    int max_label = 0;
    std::size_t i = 0;
    while (i < text.size()) {
        if (text[i] != '{') throw DomainError("expected '{' in hypertree encoding");
        std::size_t close = text.find('}', i);
        if (close == std::string::npos) throw DomainError("unterminated edge");
        Edge e;
        std::size_t j = i + 1;
        while (j < close) {
            std::size_t comma = text.find(',', j);
            if (comma == std::string::npos || comma > close) comma = close;
            int v = std::stoi(text.substr(j, comma - j));
            if (v == 0) saw_zero = true;
            max_label = std::max(max_label, v);
            e.push_back(v);
            j = comma + 1;
        }
        edges.push_back(std::move(e));
        i = close + 1;
        if (i < text.size()) {
            if (text[i] != ';') throw DomainError("expected ';' between edges");
            ++i;
        }
    }
    int first = saw_zero ? 0 : 1;
    int n = edges.empty() ? 1 : max_label - first + 1;
    return make_hypergraph(n, std::move(edges), first);
}

}  // namespace

Hypergraph parse_hypergraph(const std::string& text) {
    std::size_t at = text.find('@');
    if (at != std::string::npos) throw DomainError("unexpected pointing suffix");
    return parse_edges(text);
}

Hypertree parse_hypertree(const std::string& text) {
    return Hypertree(parse_hypergraph(text));
}

PointedHypertree parse_pointed(const std::string& text) {
    std::size_t at = text.find('@');
    if (at == std::string::npos) throw DomainError("missing pointing suffix");
    Hypertree t(parse_edges(text.substr(0, at)));
    int root = -1, edge_index = -1;
    bool gap = false;
    std::size_t i = at;
    while (i < text.size()) {
        std::size_t next = text.find('@', i + 1);
        std::string part = text.substr(i + 1, next == std::string::npos ? std::string::npos
                                                                        : next - i - 1);
        std::size_t eq = part.find('=');
        if (eq == std::string::npos) throw DomainError("malformed pointing: " + part);
        std::string key = part.substr(0, eq);
        int value = std::stoi(part.substr(eq + 1));
        if (key == "root") root = value;
        else if (key == "edge") edge_index = value;
        else if (key == "gap") {
            if (value != 0) throw DomainError("gap is always vertex 0");
            gap = true;
        } else throw DomainError("unknown pointing key: " + key);
        i = next == std::string::npos ? text.size() : next;
    }
    if (gap) {
        if (root >= 0 || edge_index >= 0) throw DomainError("gap excludes other pointings");
        return make_hollow(std::move(t));
    }
    if (root >= 0 && edge_index >= 0) return make_edge_pointed_rooted(std::move(t), edge_index, root);
    if (root >= 0) return make_rooted(std::move(t), root);
    if (edge_index >= 0) return make_edge_pointed(std::move(t), edge_index);
    throw DomainError("empty pointing suffix");
}

}  // namespace hypertrees
