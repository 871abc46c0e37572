#include "treecompat/elig.hpp"

namespace treecompat {

Elig build_elig(const DisplayGraph& d) {
    Elig e;
    e.display = d;
    e.graph = line_graph(d.graph);
    e.display_edge.resize(e.graph.num_vertices());
    e.vertex_tree.resize(e.graph.num_vertices());
    for (const Edge& de : d.graph.edges()) {
        VertexId v = e.graph.vertex(d.graph.edge_name(de));
        e.display_edge[v] = de;
        e.vertex_of[de] = v;
        e.vertex_tree[v] = d.tree_of_edge(de);
    }
    return e;
}

std::set<VertexId> k_hat(const Elig& e, VertexId display_vertex) {
    if (display_vertex < 0 || display_vertex >= e.display.graph.num_vertices())
        throw std::out_of_range("unknown display vertex");
    std::set<VertexId> out;
    for (VertexId w : e.display.graph.neighbors(display_vertex))
        out.insert(e.vertex_of.at(make_edge(display_vertex, w)));
    return out;
}

bool is_legal_separator(const Elig& e, const std::set<VertexId>& f) {
    for (auto it = f.begin(); it != f.end(); ++it) {
        for (auto jt = std::next(it); jt != f.end(); ++jt) {
            if (e.vertex_tree.at(*it) != e.vertex_tree.at(*jt)) continue;
            const Edge& a = e.display_edge.at(*it);
            const Edge& b = e.display_edge.at(*jt);
            bool share = a.first == b.first || a.first == b.second ||
                         a.second == b.first || a.second == b.second;
            if (!share) return false;
        }
    }
    return true;
}

bool is_restricted_triangulation(const Elig& e, const FillEdgeSet& h) {
    if (!(h.base == e.graph))
        throw std::invalid_argument("fill set base is not this ELIG");
    for (const Edge& fe : h.fill) {
        if (e.vertex_tree.at(fe.first) == e.vertex_tree.at(fe.second)) return false;
    }
    return is_chordal(h.filled()).chordal;
}

}  // namespace treecompat
