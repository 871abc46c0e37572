#pragma once
// Shared fixtures: the Fig-style worked profile (two trees on a..g), cut
// builders by vertex name, and seeded random generators.

#include <random>
#include <set>
#include <string>
#include <vector>

#include "treecompat/cuts.hpp"
#include "treecompat/display.hpp"
#include "treecompat/phylo.hpp"

namespace testsup {

using namespace treecompat;

// Tree 1: internal vertices 1.1 (a,b,c), 1.2 (f), 1.3 (d,e).
// Tree 2: internal vertices 2.1 (a,b), 2.2 (c), 2.3 (d,e), 2.4 (f,g).
inline const char* kTree1 = "(a,b,c,(f,(d,e)));";
inline const char* kTree2 = "(a,b,(c,(d,e,(f,g))));";

inline Profile worked_profile() {
    return parse_profile(std::string(kTree1) + "\n" + kTree2 + "\n");
}

inline DisplayGraph worked_display() { return build_display_graph(worked_profile()); }

inline Edge edge(const Graph& g, const std::string& a, const std::string& b) {
    return make_edge(g.vertex(a), g.vertex(b));
}

inline EdgeCut named_cut(const Graph& g,
                         std::vector<std::pair<std::string, std::string>> edges) {
    EdgeCut f;
    for (const auto& [a, b] : edges) f.insert(edge(g, a, b));
    return f;
}

// The four certificate cuts of the worked example.
inline EdgeCut cut_f1(const DisplayGraph& d) {
    return named_cut(d.graph, {{"1.1", "1.2"}, {"2.2", "2.3"}});
}
inline EdgeCut cut_f2(const DisplayGraph& d) {
    return named_cut(d.graph, {{"1.2", "1.3"}, {"2.3", "2.4"}, {"2.2", "2.3"}});
}
inline EdgeCut cut_f3(const DisplayGraph& d) {
    return named_cut(d.graph, {{"2.1", "2.2"}, {"1.1", "1.2"}, {"1.1", "c"}});
}
inline EdgeCut cut_f4(const DisplayGraph& d) {
    return named_cut(d.graph, {{"2.3", "2.4"}, {"1.2", "f"}});
}

inline std::vector<EdgeCut> worked_cuts(const DisplayGraph& d) {
    return {cut_f1(d), cut_f2(d), cut_f3(d), cut_f4(d)};
}

inline std::set<std::string> label_range(int n) {
    std::set<std::string> out;
    for (int i = 0; i < n; ++i) out.insert(std::string(1, static_cast<char>('a' + i)));
    return out;
}

// Uniform-ish random unrooted binary tree by random leaf insertion.
inline PhyloTree random_binary_tree(const std::set<std::string>& labels,
                                    std::mt19937& rng) {
    std::vector<std::string> order(labels.begin(), labels.end());
    std::shuffle(order.begin(), order.end(), rng);
    std::vector<std::set<int>> adj;
    std::map<int, std::string> leaf;
    auto add = [&] {
        adj.emplace_back();
        return static_cast<int>(adj.size()) - 1;
    };
    auto link = [&](int a, int b) {
        adj[a].insert(b);
        adj[b].insert(a);
    };
    int a = add();
    leaf[a] = order[0];
    if (order.size() == 1) return PhyloTree::from_adjacency(adj, leaf);
    int b = add();
    leaf[b] = order[1];
    link(a, b);
    for (size_t i = 2; i < order.size(); ++i) {
        std::vector<std::pair<int, int>> edges;
        for (int v = 0; v < static_cast<int>(adj.size()); ++v)
            for (int w : adj[v])
                if (v < w) edges.emplace_back(v, w);
        auto [u, v] =
            edges[std::uniform_int_distribution<size_t>(0, edges.size() - 1)(rng)];
        int mid = add(), l = add();
        leaf[l] = order[i];
        adj[u].erase(v);
        adj[v].erase(u);
        link(u, mid);
        link(mid, v);
        link(mid, l);
    }
    return PhyloTree::from_adjacency(adj, leaf);
}

// 2-3 trees over overlapping random label subsets of a..{max_labels}; the
// display graph is connected (trees share at least one label chain) often
// enough for the suites; callers filter as needed.
inline Profile random_profile(std::mt19937& rng, int max_labels = 8, int max_trees = 3) {
    std::uniform_int_distribution<int> nlabels(4, max_labels);
    std::uniform_int_distribution<int> ntrees(2, max_trees);
    std::set<std::string> universe = label_range(nlabels(rng));
    Profile p;
    int k = ntrees(rng);
    for (int i = 0; i < k; ++i) {
        std::vector<std::string> pool(universe.begin(), universe.end());
        std::shuffle(pool.begin(), pool.end(), rng);
        std::uniform_int_distribution<size_t> sz(3, pool.size());
        std::set<std::string> chosen(pool.begin(), pool.begin() + sz(rng));
        p.push_back(random_binary_tree(chosen, rng));
    }
    return p;
}

// Variant restricted to connected display graphs.
inline Profile random_connected_profile(std::mt19937& rng, int max_labels = 8,
                                        int max_trees = 3) {
    for (;;) {
        Profile p = random_profile(rng, max_labels, max_trees);
        if (partition_profile(p).size() == 1) return p;
    }
}

}  // namespace testsup
