#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "treecompat/graph.hpp"
#include "treecompat/phylo.hpp"

namespace treecompat {

// Union of a profile's trees with leaves of equal label identified.
// Internal vertices are named "<tree>.<k>" (both 1-based), leaves by label.
struct DisplayGraph {
    Profile profile;
    Graph graph;
    std::set<VertexId> leaf_vertices;
    std::set<VertexId> internal_vertices;
    std::map<Edge, int> edge_tree;     // every display edge -> source tree index
    std::set<Edge> internal_edges;     // both endpoints internal

    bool is_leaf(VertexId v) const { return leaf_vertices.count(v) > 0; }
    bool is_internal_edge(const Edge& e) const { return internal_edges.count(e) > 0; }
    int tree_of_edge(const Edge& e) const { return edge_tree.at(e); }

    // Display id of a tree-local vertex.
    VertexId display_vertex(int tree_index, int tree_vertex) const;

    std::string to_dot() const;
};

DisplayGraph build_display_graph(const Profile& p);

// Maximal sub-profiles whose display graphs are connected, ordered by
// smallest tree index.
std::vector<Profile> partition_profile(const Profile& p);

std::set<std::string> leaves_of_subgraph(const DisplayGraph& d,
                                         const std::set<VertexId>& component);

}  // namespace treecompat
