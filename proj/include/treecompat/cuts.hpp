#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "treecompat/display.hpp"
#include "treecompat/elig.hpp"
#include "treecompat/graph.hpp"

namespace treecompat {

// A set of display-graph edges. The same set doubles as an ELIG vertex set
// via separator_view.
using EdgeCut = std::set<Edge>;

struct CutCertificate {
    std::vector<EdgeCut> cuts;
    // internal display edge -> index of the cut containing it as its tree's
    // sole edge
    std::map<Edge, size_t> coverage;
};

struct CutSearchOptions {
    int max_vertices = 24;       // cap for cut enumeration
    long max_steps = 10000000;   // enumeration step budget
};

// Exactly 2 components after removal, every cut edge spanning them.
bool is_minimal_cut(const DisplayGraph& d, const EdgeCut& f);

// LC1: per tree, edges in f share a common vertex. LC2: every component of
// G-F contains at least one edge.
bool is_legal_cut(const DisplayGraph& d, const EdgeCut& f);

// The definition tested in both directions (see notes in the solver).
bool are_parallel_cuts(const DisplayGraph& d, const EdgeCut& f1, const EdgeCut& f2);

// All legal minimal cuts, via connected bipartitions (A, V \ A) with both
// sides connected.
std::vector<EdgeCut> enumerate_legal_minimal_cuts(const DisplayGraph& d,
                                                  const CutSearchOptions& opts = {});

struct SolveResult {
    std::optional<CutCertificate> certificate;
    // On failure: internal edges with no usable cut (empty candidate list),
    // or the edge where the parallel assignment search gave out.
    std::vector<Edge> blocking_edges;
};

// Decision procedure: a certificate exists iff the profile is compatible.
SolveResult find_complete_parallel_set(const DisplayGraph& d,
                                       const CutSearchOptions& opts = {});

// Greedily drops cuts, largest first, while completeness holds.
CutCertificate minimalize_complete_set(const DisplayGraph& d, const CutCertificate& c);

// Completeness: every internal edge of every tree is some cut's sole edge
// of its tree.
bool is_complete_set(const DisplayGraph& d, const std::vector<EdgeCut>& cuts);

// The identity re-interpretation between display edge sets and ELIG vertex
// sets.
std::set<VertexId> separator_view(const Elig& e, const EdgeCut& f);
EdgeCut cut_view(const Elig& e, const std::set<VertexId>& vertices);

// Minimal separator test via full components.
bool is_minimal_separator(const Graph& g, const std::set<VertexId>& u);

bool are_parallel_separators(const Graph& g, const std::set<VertexId>& u1,
                             const std::set<VertexId>& u2);

// Brute-force subset scan; test/oracle grade. The parallel variant uses
// OpenMP over the subset range and must agree with the serial one.
std::vector<std::set<VertexId>> enumerate_minimal_separators_serial(const Graph& g,
                                                                    int max_vertices = 22);
std::vector<std::set<VertexId>> enumerate_minimal_separators(const Graph& g,
                                                             int max_vertices = 22);

// Greedy maximal extension preserving pairwise parallelism. Every added
// separator is checked legal; a violation is a logic error.
std::vector<std::set<VertexId>> maximal_parallel_extension(
    const Elig& e, const std::vector<std::set<VertexId>>& seps, int max_vertices = 22);

// Certificate JSON: {"cuts": [[["1.1","1.2"], ...], ...],
//                    "coverage": {"{1.1,1.2}": 0, ...}}
std::string certificate_to_json(const DisplayGraph& d, const CutCertificate& c);
CutCertificate certificate_from_json(const DisplayGraph& d, const std::string& json_text);

struct CertificateCheck {
    bool valid = false;
    std::string failure;  // first failing condition, empty when valid
};

CertificateCheck validate_certificate(const DisplayGraph& d, const CutCertificate& c);

}  // namespace treecompat
