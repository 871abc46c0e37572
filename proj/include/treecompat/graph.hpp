#pragma once

#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace treecompat {

using VertexId = int;

// Unordered edge, stored with first < second.
using Edge = std::pair<VertexId, VertexId>;

inline Edge make_edge(VertexId a, VertexId b) {
    if (a == b) throw std::invalid_argument("loop edge");
    return a < b ? Edge{a, b} : Edge{b, a};
}

struct budget_exceeded : std::runtime_error {
    explicit budget_exceeded(const std::string& what) : std::runtime_error(what) {}
};

// Simple undirected graph. Vertices are interned names; ids are dense and
// assigned in insertion order, so construction order determines all ids.
class Graph {
public:
    VertexId add_vertex(const std::string& name);
    void add_edge(VertexId a, VertexId b);
    void add_edge(const std::string& a, const std::string& b);

    int num_vertices() const { return static_cast<int>(names_.size()); }
    int num_edges() const { return static_cast<int>(edges_.size()); }

    const std::string& name(VertexId v) const { return names_.at(v); }
    std::optional<VertexId> find_vertex(const std::string& name) const;
    VertexId vertex(const std::string& name) const;

    bool has_edge(VertexId a, VertexId b) const;
    const std::set<VertexId>& neighbors(VertexId v) const { return adj_.at(v); }
    const std::set<Edge>& edges() const { return edges_; }
    int degree(VertexId v) const { return static_cast<int>(adj_.at(v).size()); }

    std::string edge_name(const Edge& e) const;

    // Connected components as sorted vertex lists, ordered by smallest member.
    std::vector<std::vector<VertexId>> components() const;
    bool connected() const;

    // Paper semantics: G-F keeps all vertices, G-U drops vertices and
    // incident edges. Vertex deletion renames nothing; surviving vertices
    // keep their names but are re-interned in the result.
    Graph delete_edges(const std::set<Edge>& f) const;
    Graph delete_vertices(const std::set<VertexId>& u) const;

    // Components of this graph after removing the edge set f (vertex ids of
    // this graph; no re-interning).
    std::vector<std::vector<VertexId>> components_without_edges(const std::set<Edge>& f) const;
    std::vector<std::vector<VertexId>> components_without_vertices(const std::set<VertexId>& u) const;

    // Adds all missing pairs inside every family. Idempotent.
    Graph saturate(const std::vector<std::set<VertexId>>& families) const;

    std::string to_dot(const std::string& graph_name = "G") const;

    bool operator==(const Graph& other) const {
        return names_ == other.names_ && edges_ == other.edges_;
    }

private:
    std::vector<std::string> names_;
    std::map<std::string, VertexId> ids_;
    std::vector<std::set<VertexId>> adj_;
    std::set<Edge> edges_;
};

// Vertices of the line graph are the edges of g, interned in edge-set order
// under their "{u,v}" names; adjacency is edge intersection.
Graph line_graph(const Graph& g);

struct ChordalityResult {
    bool chordal = false;
    // Perfect elimination ordering when chordal.
    std::vector<VertexId> elimination_order;
    // A chordless cycle of length >= 4 otherwise.
    std::vector<VertexId> chordless_cycle;
};

ChordalityResult is_chordal(const Graph& g);

// Bron-Kerbosch with pivoting. Throws budget_exceeded past max_steps calls.
std::vector<std::set<VertexId>> maximal_cliques(const Graph& g, long max_steps = 1000000);

struct FillEdgeSet {
    Graph base;
    std::set<Edge> fill;   // disjoint from base.edges()

    Graph filled() const;
};

}  // namespace treecompat
