#pragma once

#include <optional>
#include <set>
#include <vector>

#include "treecompat/graph.hpp"
#include "treecompat/phylo.hpp"

namespace treecompat {

struct OracleBudget {
    int max_labels = 7;
    long max_topologies = 1000000;
};

struct OracleResult {
    bool compatible = false;
    std::optional<PhyloTree> supertree;  // a binary witness when compatible
};

// Ground truth by exhaustion: walks all unrooted binary topologies on the
// union label set (sequential leaf insertion) and returns the first that
// displays every input tree. Binary enumeration suffices because display
// is preserved under refinement.
OracleResult brute_force_compatible(const Profile& p, const OracleBudget& b = {});
OracleResult brute_force_compatible_serial(const Profile& p, const OracleBudget& b = {});

// Definition-level subset scans, independent of the cuts module's
// criteria: minimality is checked by single-element removals.
std::vector<std::set<Edge>> brute_force_minimal_cuts(const Graph& g,
                                                     int max_vertices = 16);
std::vector<std::set<VertexId>> brute_force_minimal_separators(const Graph& g,
                                                               int max_vertices = 14);

// All unrooted binary topologies over the given labels.
std::vector<PhyloTree> enumerate_binary_topologies(const std::set<std::string>& labels,
                                                   long max_topologies = 1000000);

}  // namespace treecompat
