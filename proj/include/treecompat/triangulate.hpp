#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "treecompat/cuts.hpp"
#include "treecompat/display.hpp"
#include "treecompat/graph.hpp"

namespace treecompat {

// Vertex-separator pair built from a cut: x \ y and y \ x sit in the two
// components of G(P)-F and pair up along unreplaced internal edges.
struct DfPair {
    EdgeCut cut;
    std::set<VertexId> x, y;
    // (x_i, y_i) with {x_i, y_i} an internal edge, x_i on the A side;
    // ordered by (tree, edge).
    std::vector<std::pair<VertexId, VertexId>> pairs;

    std::set<VertexId> f_union() const;
    std::set<VertexId> f_intersection() const;
};

struct LegalTriangulation {
    FillEdgeSet fill;                                  // over the display graph
    std::vector<DfPair> df_pairs;                      // in processing order
    std::vector<std::vector<std::set<VertexId>>> of;   // O_F per pair
};

// The fixed processing order: by (size, lexicographic edge list).
std::vector<EdgeCut> triangulation_order(const std::vector<EdgeCut>& cuts);

// The endpoint-replacement procedure, cut by cut. `cuts` must be a minimal
// complete set of pairwise parallel legal minimal cuts in the order to
// process.
std::vector<DfPair> construct_df_pairs(const DisplayGraph& d,
                                       const std::vector<EdgeCut>& cuts);

// The interpolation family {x_1..x_j, y_j..y_m, z_1..z_p} for j in [m].
std::vector<std::set<VertexId>> of_families(const DfPair& p);

struct TriangulationDiagnostics {
    bool ok = true;
    std::vector<std::string> failures;
};

// Chordality, LT2 over fill edges, LT1 over maximal cliques.
TriangulationDiagnostics verify_legal_triangulation(const DisplayGraph& d,
                                                    const FillEdgeSet& h);

// Assembles G' from the pair/family cliques plus leaf-neighborhood cliques
// and verifies it (chordality, LT1, LT2, and the forbidden-edge and
// induced-subgraph invariants). A verification failure is an internal
// error.
LegalTriangulation build_legal_triangulation(const DisplayGraph& d,
                                             const std::vector<EdgeCut>& cuts);

// The unique pair whose sets separate e's endpoints; asserts uniqueness.
std::optional<size_t> differentiating_cut(const std::vector<DfPair>& pairs,
                                          const Edge& e);

std::string triangulation_to_dot(const DisplayGraph& d, const LegalTriangulation& t);
std::string fill_edges_to_json(const DisplayGraph& d, const LegalTriangulation& t);

}  // namespace treecompat
