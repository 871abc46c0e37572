#pragma once

#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace treecompat {

struct parse_error : std::runtime_error {
    size_t position;
    parse_error(const std::string& what, size_t pos)
        : std::runtime_error(what + " (at position " + std::to_string(pos) + ")"),
          position(pos) {}
};

// Unrooted phylogenetic tree. Vertices are 0..n-1; degree-1 vertices carry
// labels, internal vertices never do. Normalized: no unlabeled degree-2
// vertex. A single labeled vertex (leaf-only tree) is allowed.
class PhyloTree {
public:
    static PhyloTree from_adjacency(std::vector<std::set<int>> adj,
                                    std::map<int, std::string> leaf_label);

    int num_vertices() const { return static_cast<int>(adj_.size()); }
    int num_edges() const;
    const std::set<int>& neighbors(int v) const { return adj_.at(v); }
    bool is_leaf(int v) const { return leaf_label_.count(v) > 0; }
    const std::string& label(int v) const { return leaf_label_.at(v); }
    int leaf_with_label(const std::string& label) const;
    std::set<std::string> labels() const;
    int num_leaves() const { return static_cast<int>(leaf_label_.size()); }

    std::vector<std::pair<int, int>> edges() const;          // first < second
    std::vector<std::pair<int, int>> internal_edges() const;  // both ends internal

    // Labels reachable from `side` in the tree with edge {a,b} removed,
    // starting on the `side` endpoint.
    std::set<std::string> labels_on_side(int a, int b, int side) const;

private:
    std::vector<std::set<int>> adj_;
    std::map<int, std::string> leaf_label_;
    std::map<std::string, int> label_vertex_;
};

using Profile = std::vector<PhyloTree>;

// Parses one `;`-terminated Newick statement. Branch lengths and internal
// node names are accepted and dropped; the result is unrooted and
// normalized (degree-2 suppression).
PhyloTree parse_newick(const std::string& text);

// One tree per line or `;`-separated.
Profile parse_profile(const std::string& text);

// Canonical serialization: rooted at the neighbor of the smallest leaf
// label, children ordered by smallest leaf label in their subtree.
std::string serialize_newick(const PhyloTree& tree);

bool tree_isomorphic(const PhyloTree& t1, const PhyloTree& t2);

}  // namespace treecompat
