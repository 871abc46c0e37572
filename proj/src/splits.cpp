#include "treecompat/splits.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <sstream>

namespace treecompat {

Split Split::make(std::set<std::string> x, std::set<std::string> y) {
    if (x.empty() || y.empty()) throw std::invalid_argument("split side is empty");
    for (const std::string& l : x)
        if (y.count(l)) throw std::invalid_argument("split sides overlap on " + l);
    Split s;
    if (*x.begin() < *y.begin()) {
        s.side_a = std::move(x);
        s.side_b = std::move(y);
    } else {
        s.side_a = std::move(y);
        s.side_b = std::move(x);
    }
    return s;
}

std::set<std::string> Split::universe() const {
    std::set<std::string> out = side_a;
    out.insert(side_b.begin(), side_b.end());
    return out;
}

std::string Split::to_string() const {
    std::ostringstream os;
    bool first = true;
    for (const std::string& l : side_a) {
        if (!first) os << ' ';
        os << l;
        first = false;
    }
    os << " |";
    for (const std::string& l : side_b) os << ' ' << l;
    return os.str();
}

Split split_of_tree_edge(const PhyloTree& t, int a, int b) {
    if (t.is_leaf(a) || t.is_leaf(b))
        throw std::invalid_argument("split_of_tree_edge requires an internal edge");
    return Split::make(t.labels_on_side(a, b, a), t.labels_on_side(a, b, b));
}

std::set<Split> splits_of_tree(const PhyloTree& t) {
    std::set<Split> out;
    for (const auto& [a, b] : t.internal_edges())
        out.insert(split_of_tree_edge(t, a, b));
    return out;
}

Split split_of_cut(const DisplayGraph& d, const EdgeCut& f) {
    if (!is_minimal_cut(d, f) || !is_legal_cut(d, f))
        throw std::invalid_argument("split_of_cut requires a legal minimal cut");
    auto comps = d.graph.components_without_edges(f);
    std::set<VertexId> c0(comps[0].begin(), comps[0].end());
    std::set<VertexId> c1(comps[1].begin(), comps[1].end());
    return Split::make(leaves_of_subgraph(d, c0), leaves_of_subgraph(d, c1));
}

bool splits_compatible(const Split& s1, const Split& s2) {
    auto disjoint = [](const std::set<std::string>& a, const std::set<std::string>& b) {
        for (const std::string& l : a)
            if (b.count(l)) return false;
        return true;
    };
    return disjoint(s1.side_a, s2.side_a) || disjoint(s1.side_a, s2.side_b) ||
           disjoint(s1.side_b, s2.side_a) || disjoint(s1.side_b, s2.side_b);
}

namespace {

struct BuildState {
    std::vector<std::set<int>> adj;
    std::map<int, std::string> leaf_label;

    int new_vertex() {
        adj.emplace_back();
        return static_cast<int>(adj.size()) - 1;
    }
    void link(int a, int b) {
        adj[a].insert(b);
        adj[b].insert(a);
    }
    void unlink(int a, int b) {
        adj[a].erase(b);
        adj[b].erase(a);
    }
};

[[noreturn]] void report_incompatible(const std::set<Split>& splits, const Split& bad) {
    for (const Split& other : splits)
        if (!(other == bad) && !splits_compatible(other, bad))
            throw incompatible_splits(other, bad);
    // The conflict involves more than one earlier split at once; the
    // Splits Equivalence Theorem rules that out for pairwise-compatible
    // input, so reaching here means the caller skipped the pairwise check.
    throw std::logic_error("split insertion failed without an incompatible pair: " +
                           bad.to_string());
}

}  // namespace

PhyloTree build_tree_from_splits(const std::set<std::string>& labels,
                                 const std::set<Split>& splits) {
    if (labels.empty()) throw std::invalid_argument("empty label set");
    for (const Split& s : splits) {
        if (s.universe() != labels)
            throw std::invalid_argument("split over wrong label universe: " +
                                        s.to_string());
        if (s.side_a.size() < 2 || s.side_b.size() < 2)
            throw std::invalid_argument(
                "trivial split cannot be realized by an internal edge: " +
                s.to_string());
    }
    for (auto it = splits.begin(); it != splits.end(); ++it)
        for (auto jt = std::next(it); jt != splits.end(); ++jt)
            if (!splits_compatible(*it, *jt)) throw incompatible_splits(*it, *jt);

    BuildState st;
    if (labels.size() == 1) {
        int v = st.new_vertex();
        st.leaf_label[v] = *labels.begin();
        return PhyloTree::from_adjacency(st.adj, st.leaf_label);
    }
    if (labels.size() == 2) {
        int a = st.new_vertex(), b = st.new_vertex();
        st.leaf_label[a] = *labels.begin();
        st.leaf_label[b] = *std::next(labels.begin());
        st.link(a, b);
        return PhyloTree::from_adjacency(st.adj, st.leaf_label);
    }

    // Star on the labels; root at the smallest leaf for subtree bookkeeping.
    int center = st.new_vertex();
    std::map<std::string, int> leaf_of;
    for (const std::string& l : labels) {
        int v = st.new_vertex();
        st.leaf_label[v] = l;
        leaf_of[l] = v;
        st.link(center, v);
    }
    int root = leaf_of[*labels.begin()];

    std::vector<Split> order(splits.begin(), splits.end());
    std::sort(order.begin(), order.end(), [](const Split& a, const Split& b) {
        size_t sa = std::min(a.side_a.size(), a.side_b.size());
        size_t sb = std::min(b.side_a.size(), b.side_b.size());
        return std::tie(sa, a) < std::tie(sb, b);
    });

    for (const Split& s : order) {
        const std::set<std::string>& side =
            s.side_a.count(st.leaf_label[root]) ? s.side_b : s.side_a;

        // Leaf sets below each vertex under the current rooting.
        int n = static_cast<int>(st.adj.size());
        std::vector<std::set<std::string>> down(n);
        std::vector<int> parent(n, -1);
        std::function<void(int, int)> dfs = [&](int v, int par) {
            parent[v] = par;
            if (st.leaf_label.count(v)) down[v].insert(st.leaf_label[v]);
            for (int w : st.adj[v]) {
                if (w == par) continue;
                dfs(w, v);
                down[v].insert(down[w].begin(), down[w].end());
            }
        };
        dfs(root, -1);

        // Deepest vertex whose leaf set covers the side.
        int host = root;
        bool descended = true;
        while (descended) {
            descended = false;
            for (int w : st.adj[host]) {
                if (w == parent[host]) continue;
                if (std::includes(down[w].begin(), down[w].end(), side.begin(),
                                  side.end())) {
                    host = w;
                    descended = true;
                    break;
                }
            }
        }
        if (st.leaf_label.count(host)) report_incompatible(splits, s);

        std::vector<int> moved;
        std::set<std::string> gathered;
        for (int w : st.adj[host]) {
            if (w == parent[host]) continue;
            bool any = false;
            for (const std::string& l : down[w])
                if (side.count(l)) {
                    any = true;
                    break;
                }
            if (!any) continue;
            if (!std::includes(side.begin(), side.end(), down[w].begin(), down[w].end()))
                report_incompatible(splits, s);
            moved.push_back(w);
            gathered.insert(down[w].begin(), down[w].end());
        }
        if (gathered != side) report_incompatible(splits, s);
        size_t children = st.adj[host].size() - (parent[host] == -1 ? 0 : 1);
        if (moved.size() < 2 || moved.size() == children) {
            // A duplicate realization; impossible for a set of distinct
            // compatible non-trivial splits.
            throw std::logic_error("split already realized: " + s.to_string());
        }
        int fresh = st.new_vertex();
        for (int w : moved) {
            st.unlink(host, w);
            st.link(fresh, w);
        }
        st.link(host, fresh);
    }
    return PhyloTree::from_adjacency(st.adj, st.leaf_label);
}

PhyloTree restrict_tree(const PhyloTree& s, const std::set<std::string>& y) {
    if (y.empty()) throw std::invalid_argument("empty restriction set");
    auto have = s.labels();
    for (const std::string& l : y)
        if (!have.count(l)) throw std::out_of_range("unknown label: " + l);

    int n = s.num_vertices();
    std::vector<std::set<int>> adj(n);
    std::map<int, std::string> labels;
    for (int v = 0; v < n; ++v) {
        adj[v] = s.neighbors(v);
        if (s.is_leaf(v) && y.count(s.label(v))) labels[v] = s.label(v);
    }
    std::vector<bool> alive(n, true);
    bool changed = true;
    while (changed) {
        changed = false;
        for (int v = 0; v < n; ++v) {
            if (!alive[v] || labels.count(v)) continue;
            if (adj[v].size() <= 1) {
                for (int w : adj[v]) adj[w].erase(v);
                adj[v].clear();
                alive[v] = false;
                changed = true;
            } else if (adj[v].size() == 2) {
                int a = *adj[v].begin();
                int b = *std::next(adj[v].begin());
                adj[a].erase(v);
                adj[b].erase(v);
                adj[a].insert(b);
                adj[b].insert(a);
                adj[v].clear();
                alive[v] = false;
                changed = true;
            }
        }
    }
    std::vector<int> remap(n, -1);
    int next = 0;
    for (int v = 0; v < n; ++v)
        if (alive[v]) remap[v] = next++;
    std::vector<std::set<int>> cadj(next);
    std::map<int, std::string> clabels;
    for (int v = 0; v < n; ++v) {
        if (!alive[v]) continue;
        for (int w : adj[v]) cadj[remap[v]].insert(remap[w]);
        auto it = labels.find(v);
        if (it != labels.end()) clabels[remap[v]] = it->second;
    }
    return PhyloTree::from_adjacency(std::move(cadj), std::move(clabels));
}

bool displays(const PhyloTree& s, const PhyloTree& t) {
    auto super = s.labels();
    for (const std::string& l : t.labels())
        if (!super.count(l))
            throw std::invalid_argument("label " + l + " missing from the supertree");
    PhyloTree restricted = restrict_tree(s, t.labels());
    std::set<Split> have = splits_of_tree(restricted);
    for (const Split& want : splits_of_tree(t))
        if (!have.count(want)) return false;
    return true;
}

PhyloTree supertree_from_certificate(const DisplayGraph& d, const CutCertificate& c) {
    std::set<std::string> labels;
    for (VertexId v : d.leaf_vertices) labels.insert(d.graph.name(v));
    std::set<Split> splits;
    for (const EdgeCut& f : c.cuts) {
        Split s = split_of_cut(d, f);
        // A trivial side is displayed by every tree; it cannot be realized
        // by an internal edge, so it contributes nothing to the supertree.
        if (s.side_a.size() < 2 || s.side_b.size() < 2) continue;
        splits.insert(std::move(s));
    }
    PhyloTree supertree = build_tree_from_splits(labels, splits);
    for (const PhyloTree& t : d.profile) {
        if (!displays(supertree, t))
            throw std::logic_error(
                "certificate supertree fails to display an input tree: " +
                serialize_newick(t));
    }
    return supertree;
}

}  // namespace treecompat
