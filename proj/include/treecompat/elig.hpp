#pragma once

#include <map>
#include <set>
#include <vector>

#include "treecompat/display.hpp"
#include "treecompat/graph.hpp"

namespace treecompat {

// Edge label intersection graph: the line graph of the display graph.
// Every vertex carries the display edge it stands for, so an edge set of
// the display graph and a vertex set of the ELIG are the same object under
// separator_view.
struct Elig {
    DisplayGraph display;
    Graph graph;
    std::vector<Edge> display_edge;       // ELIG vertex -> display edge
    std::map<Edge, VertexId> vertex_of;   // display edge -> ELIG vertex
    std::vector<int> vertex_tree;         // ELIG vertex -> tree index

    std::string to_dot() const { return graph.to_dot("elig"); }
};

Elig build_elig(const DisplayGraph& d);

// All ELIG vertices whose display edge contains u. Always a clique.
std::set<VertexId> k_hat(const Elig& e, VertexId display_vertex);

// For every tree, the members of f from that tree pairwise intersect.
bool is_legal_separator(const Elig& e, const std::set<VertexId>& f);

// Chordal after fill, and no fill edge joins two vertices of one tree.
bool is_restricted_triangulation(const Elig& e, const FillEdgeSet& h);

}  // namespace treecompat
