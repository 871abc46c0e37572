#pragma once

#include <set>
#include <string>
#include <vector>

#include "treecompat/cuts.hpp"
#include "treecompat/display.hpp"
#include "treecompat/phylo.hpp"

namespace treecompat {

// Bipartition of a label set, normalized so side_a holds the smallest label.
struct Split {
    std::set<std::string> side_a;
    std::set<std::string> side_b;

    static Split make(std::set<std::string> x, std::set<std::string> y);
    std::set<std::string> universe() const;
    std::string to_string() const;  // "a b c | d e f g"

    auto operator<=>(const Split&) const = default;
};

struct incompatible_splits : std::runtime_error {
    Split first, second;
    incompatible_splits(const Split& a, const Split& b)
        : std::runtime_error("incompatible splits: " + a.to_string() + " vs " +
                             b.to_string()),
          first(a),
          second(b) {}
};

// Labels of the two components of T minus an internal edge.
Split split_of_tree_edge(const PhyloTree& t, int a, int b);

// One split per internal edge.
std::set<Split> splits_of_tree(const PhyloTree& t);

// Labels of the two components of G(P)-F; legality guarantees both sides
// are nonempty.
Split split_of_cut(const DisplayGraph& d, const EdgeCut& f);

// The four-intersection rule.
bool splits_compatible(const Split& s1, const Split& s2);

// Star refinement, smallest side first. The result realizes exactly the
// given splits. Throws incompatible_splits naming an offending pair.
PhyloTree build_tree_from_splits(const std::set<std::string>& labels,
                                 const std::set<Split>& splits);

// S|Y: minimal subtree spanning Y with degree-2 vertices suppressed.
PhyloTree restrict_tree(const PhyloTree& s, const std::set<std::string>& y);

// S displays T iff the splits of T are among the splits of S restricted to
// T's labels.
bool displays(const PhyloTree& s, const PhyloTree& t);

// Compose split_of_cut over the certificate and build the supertree; the
// result is checked to display every input tree.
PhyloTree supertree_from_certificate(const DisplayGraph& d, const CutCertificate& c);

}  // namespace treecompat
