#include "hypertrees/dissymmetry.hpp"

namespace hypertrees {

PointedHypertree dissymmetry_phi(const PlainOrEpr& x) {
    if (std::holds_alternative<Hypertree>(x)) {
        // case A: point the center
        const Hypertree& t = std::get<Hypertree>(x);
        Node c = center(t);
        if (c.is_edge) return make_edge_pointed(t, c.id);
        return make_rooted(t, c.id);
    }
    const PointedHypertree& p = std::get<PointedHypertree>(x);
    if (p.kind != PointingKind::EdgePointedRooted)
        throw DomainError("phi expects a plain or edge-pointed rooted hypertree");
    // cases B, C, D: forget whichever pointing is nearest to the center.
    // Distances to the root and to the pointed edge differ by parity, so
    // there is no tie; center == root or == edge are the distance-1 cases.
    const Hypertree& t = p.tree;
    Node c = center(t);
    int d_root = minimal_walk(t, c, vertex_node(p.root)).length();
    int d_edge = minimal_walk(t, c, edge_node(p.edge_index)).length();
    if (d_root < d_edge) return make_edge_pointed(t, p.edge_index);
    return make_rooted(t, p.root);
}

PlainOrEpr dissymmetry_psi(const PointedHypertree& y) {
    const Hypertree& t = y.tree;
    Node c = center(t);
    if (y.kind == PointingKind::EdgePointed) {
        if (c == edge_node(y.edge_index)) return t;  // converse of A
        // Root the vertex of the pointed edge nearest to the center: the
        // node just before the edge on the walk from the center.
        Walk w = minimal_walk(t, c, edge_node(y.edge_index));
        Node v = w.nodes[w.nodes.size() - 2];
        return make_edge_pointed_rooted(t, y.edge_index, v.id);
    }
    if (y.kind == PointingKind::Root) {
        if (c == vertex_node(y.root)) return t;  // converse of A
        // Point the edge containing the root nearest to the center.
        Walk w = minimal_walk(t, c, vertex_node(y.root));
        Node e = w.nodes[w.nodes.size() - 2];
        return make_edge_pointed_rooted(t, e.id, y.root);
    }
    throw DomainError("psi expects a rooted or edge-pointed hypertree");
}

}  // namespace hypertrees
