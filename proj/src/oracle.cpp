#include "treecompat/oracle.hpp"

#include <algorithm>
#include <cstdint>
#include <deque>
#include <functional>

#include "treecompat/splits.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace treecompat {

namespace {

struct GrowingTree {
    std::vector<std::set<int>> adj;
    std::map<int, std::string> labels;

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
    std::vector<std::pair<int, int>> edges() const {
        std::vector<std::pair<int, int>> out;
        for (int v = 0; v < static_cast<int>(adj.size()); ++v)
            for (int w : adj[v])
                if (v < w) out.emplace_back(v, w);
        return out;
    }
};

void grow(GrowingTree& t, const std::vector<std::string>& remaining, size_t next,
          std::vector<PhyloTree>& out, long max_topologies) {
    if (next == remaining.size()) {
        if (static_cast<long>(out.size()) >= max_topologies)
            throw budget_exceeded("topology budget exceeded (" +
                                  std::to_string(max_topologies) + ")");
        out.push_back(PhyloTree::from_adjacency(t.adj, t.labels));
        return;
    }
    // Attach the next leaf to every existing edge in turn.
    for (const auto& [a, b] : t.edges()) {
        int mid = t.new_vertex();
        int leaf = t.new_vertex();
        t.labels[leaf] = remaining[next];
        t.unlink(a, b);
        t.link(a, mid);
        t.link(mid, b);
        t.link(mid, leaf);
        grow(t, remaining, next + 1, out, max_topologies);
        t.unlink(a, mid);
        t.unlink(mid, b);
        t.unlink(mid, leaf);
        t.link(a, b);
        t.labels.erase(leaf);
        t.adj.pop_back();
        t.adj.pop_back();
    }
}

}  // namespace

std::vector<PhyloTree> enumerate_binary_topologies(const std::set<std::string>& labels,
                                                   long max_topologies) {
    std::vector<std::string> ordered(labels.begin(), labels.end());
    if (ordered.empty()) throw std::invalid_argument("no labels");
    std::vector<PhyloTree> out;
    GrowingTree t;
    if (ordered.size() == 1) {
        int v = t.new_vertex();
        t.labels[v] = ordered[0];
        out.push_back(PhyloTree::from_adjacency(t.adj, t.labels));
        return out;
    }
    int a = t.new_vertex(), b = t.new_vertex();
    t.labels[a] = ordered[0];
    t.labels[b] = ordered[1];
    t.link(a, b);
    grow(t, ordered, 2, out, max_topologies);
    return out;
}

namespace {

std::set<std::string> profile_labels(const Profile& p) {
    std::set<std::string> out;
    for (const PhyloTree& t : p) {
        auto l = t.labels();
        out.insert(l.begin(), l.end());
    }
    return out;
}

bool displays_all(const PhyloTree& s, const Profile& p) {
    for (const PhyloTree& t : p)
        if (!displays(s, t)) return false;
    return true;
}

}  // namespace

OracleResult brute_force_compatible_serial(const Profile& p, const OracleBudget& b) {
    auto labels = profile_labels(p);
    if (static_cast<int>(labels.size()) > b.max_labels)
        throw budget_exceeded("profile has " + std::to_string(labels.size()) +
                              " labels, above the oracle cap of " +
                              std::to_string(b.max_labels));
    OracleResult result;
    for (const PhyloTree& candidate : enumerate_binary_topologies(labels, b.max_topologies)) {
        if (displays_all(candidate, p)) {
            result.compatible = true;
            result.supertree = candidate;
            return result;
        }
    }
    return result;
}

OracleResult brute_force_compatible(const Profile& p, const OracleBudget& b) {
    auto labels = profile_labels(p);
    if (static_cast<int>(labels.size()) > b.max_labels)
        throw budget_exceeded("profile has " + std::to_string(labels.size()) +
                              " labels, above the oracle cap of " +
                              std::to_string(b.max_labels));
    std::vector<PhyloTree> topologies =
        enumerate_binary_topologies(labels, b.max_topologies);
    OracleResult result;
#ifdef _OPENMP
    // First hit in enumeration order, to match the serial reference.
    int64_t winner = -1;
#pragma omp parallel for schedule(dynamic, 8)
    for (int64_t i = 0; i < static_cast<int64_t>(topologies.size()); ++i) {
        int64_t seen;
#pragma omp atomic read
        seen = winner;
        if (seen != -1) continue;
        if (displays_all(topologies[i], p)) {
#pragma omp critical
            if (winner == -1 || i < winner) winner = i;
        }
    }
    if (winner != -1) {
        result.compatible = true;
        result.supertree = topologies[winner];
    }
#else
    for (const PhyloTree& candidate : topologies) {
        if (displays_all(candidate, p)) {
            result.compatible = true;
            result.supertree = candidate;
            break;
        }
    }
#endif
    return result;
}

namespace {

// Vertex connectivity with an edge subset removed, over small graphs.
bool connected_without(const std::vector<std::pair<int, int>>& edges, int n,
                       uint32_t removed_mask) {
    if (n <= 1) return true;
    std::vector<std::vector<int>> adj(n);
    for (size_t i = 0; i < edges.size(); ++i) {
        if (removed_mask & (1u << i)) continue;
        adj[edges[i].first].push_back(edges[i].second);
        adj[edges[i].second].push_back(edges[i].first);
    }
    std::vector<bool> seen(n, false);
    std::deque<int> queue{0};
    seen[0] = true;
    int reached = 0;
    while (!queue.empty()) {
        int v = queue.front();
        queue.pop_front();
        ++reached;
        for (int w : adj[v])
            if (!seen[w]) {
                seen[w] = true;
                queue.push_back(w);
            }
    }
    return reached == n;
}

}  // namespace

std::vector<std::set<Edge>> brute_force_minimal_cuts(const Graph& g, int max_vertices) {
    if (g.num_vertices() > max_vertices)
        throw budget_exceeded("graph above the brute-force cut cap of " +
                              std::to_string(max_vertices));
    std::vector<std::pair<int, int>> edges(g.edges().begin(), g.edges().end());
    if (edges.size() > 24) throw budget_exceeded("too many edges for subset scan");
    int n = g.num_vertices();
    std::vector<std::set<Edge>> out;
    uint32_t limit = 1u << edges.size();
    for (uint32_t mask = 1; mask < limit; ++mask) {
        if (connected_without(edges, n, mask)) continue;
        bool minimal = true;
        for (size_t i = 0; i < edges.size() && minimal; ++i)
            if ((mask & (1u << i)) && !connected_without(edges, n, mask & ~(1u << i)))
                minimal = false;
        if (!minimal) continue;
        std::set<Edge> cut;
        for (size_t i = 0; i < edges.size(); ++i)
            if (mask & (1u << i)) cut.insert(make_edge(edges[i].first, edges[i].second));
        out.push_back(std::move(cut));
    }
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

std::vector<int> vertex_component_ids(const Graph& g, const std::set<VertexId>& removed) {
    auto comps = g.components_without_vertices(removed);
    std::vector<int> idx(g.num_vertices(), -1);
    for (size_t c = 0; c < comps.size(); ++c)
        for (VertexId v : comps[c]) idx[v] = static_cast<int>(c);
    return idx;
}

}  // namespace

std::vector<std::set<VertexId>> brute_force_minimal_separators(const Graph& g,
                                                               int max_vertices) {
    int n = g.num_vertices();
    if (n > max_vertices)
        throw budget_exceeded("graph above the brute-force separator cap of " +
                              std::to_string(max_vertices));
    std::vector<std::set<VertexId>> out;
    uint32_t limit = 1u << n;
    for (uint32_t mask = 1; mask + 1 < limit; ++mask) {
        std::set<VertexId> u;
        for (int v = 0; v < n; ++v)
            if (mask & (1u << v)) u.insert(v);
        std::vector<int> with_u = vertex_component_ids(g, u);

        // Components of G-(U \ {x}) for each x, for the minimality check.
        std::vector<std::vector<int>> without_one;
        for (VertexId x : u) {
            std::set<VertexId> smaller = u;
            smaller.erase(x);
            without_one.push_back(vertex_component_ids(g, smaller));
        }

        bool minimal = false;
        for (int a = 0; a < n && !minimal; ++a) {
            if (u.count(a)) continue;
            for (int b = a + 1; b < n && !minimal; ++b) {
                if (u.count(b) || g.has_edge(a, b)) continue;
                if (with_u[a] == with_u[b]) continue;
                bool every_subset_fails = true;
                for (const auto& idx : without_one)
                    if (idx[a] != idx[b]) {
                        every_subset_fails = false;
                        break;
                    }
                if (every_subset_fails) minimal = true;
            }
        }
        if (minimal) out.push_back(std::move(u));
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace treecompat
