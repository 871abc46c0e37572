#include "treecompat/cuts.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <sstream>

#include "json.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace treecompat {

namespace {

std::vector<int> component_index(const std::vector<std::vector<VertexId>>& comps, int n) {
    std::vector<int> idx(n, -1);
    for (size_t c = 0; c < comps.size(); ++c)
        for (VertexId v : comps[c]) idx[v] = static_cast<int>(c);
    return idx;
}

// Edges of the given tree inside f.
std::vector<Edge> tree_edges_in(const DisplayGraph& d, const EdgeCut& f, int tree) {
    std::vector<Edge> out;
    for (const Edge& e : f)
        if (d.tree_of_edge(e) == tree) out.push_back(e);
    return out;
}

}  // namespace

bool is_minimal_cut(const DisplayGraph& d, const EdgeCut& f) {
    if (f.empty()) return false;
    auto comps = d.graph.components_without_edges(f);
    if (comps.size() != 2) return false;
    auto idx = component_index(comps, d.graph.num_vertices());
    for (const Edge& e : f)
        if (idx[e.first] == idx[e.second]) return false;
    return true;
}

bool is_legal_cut(const DisplayGraph& d, const EdgeCut& f) {
    // LC1
    std::map<int, std::vector<Edge>> per_tree;
    for (const Edge& e : f) per_tree[d.tree_of_edge(e)].push_back(e);
    for (const auto& [tree, edges] : per_tree) {
        if (edges.size() < 2) continue;
        std::set<VertexId> common{edges[0].first, edges[0].second};
        for (size_t i = 1; i < edges.size() && !common.empty(); ++i) {
            std::set<VertexId> next;
            if (common.count(edges[i].first)) next.insert(edges[i].first);
            if (common.count(edges[i].second)) next.insert(edges[i].second);
            common = std::move(next);
        }
        if (common.empty()) return false;
    }
    // LC2
    auto comps = d.graph.components_without_edges(f);
    auto idx = component_index(comps, d.graph.num_vertices());
    std::vector<bool> has_edge(comps.size(), false);
    for (const Edge& e : d.graph.edges()) {
        if (f.count(e)) continue;
        has_edge[idx[e.first]] = true;
    }
    for (bool h : has_edge)
        if (!h) return false;
    return true;
}

namespace {

// One direction of the definition: at most one component of G-f1 contains
// an edge of f2.
bool parallel_one_way(const DisplayGraph& d, const EdgeCut& f1, const EdgeCut& f2) {
    auto comps = d.graph.components_without_edges(f1);
    auto idx = component_index(comps, d.graph.num_vertices());
    int seen = -1;
    for (const Edge& e : f2) {
        if (f1.count(e)) continue;
        int c = idx[e.first];  // endpoints agree: e survives in G-f1
        if (seen == -1) {
            seen = c;
        } else if (seen != c) {
            return false;
        }
    }
    return true;
}

}  // namespace

bool are_parallel_cuts(const DisplayGraph& d, const EdgeCut& f1, const EdgeCut& f2) {
    return parallel_one_way(d, f1, f2) && parallel_one_way(d, f2, f1);
}

namespace {

// Connected vertex subsets containing vertex 0, enumerated once each via
// the smallest-extension scheme.
void enumerate_connected_subsets(const Graph& g,
                                 const std::function<void(const std::set<VertexId>&)>& emit,
                                 long max_steps) {
    long steps = 0;
    std::set<VertexId> subset{0};
    std::function<void(std::set<VertexId>&, std::set<VertexId>)> extend =
        [&](std::set<VertexId>& s, std::set<VertexId> forbidden) {
            if (++steps > max_steps)
                throw budget_exceeded("cut enumeration budget exceeded (" +
                                      std::to_string(max_steps) + " steps)");
            emit(s);
            std::vector<VertexId> candidates;
            for (VertexId v : s)
                for (VertexId w : g.neighbors(v))
                    if (!s.count(w) && !forbidden.count(w)) candidates.push_back(w);
            std::sort(candidates.begin(), candidates.end());
            candidates.erase(std::unique(candidates.begin(), candidates.end()),
                             candidates.end());
            for (VertexId v : candidates) {
                s.insert(v);
                extend(s, forbidden);
                s.erase(v);
                forbidden.insert(v);
            }
        };
    extend(subset, {});
}

}  // namespace

std::vector<EdgeCut> enumerate_legal_minimal_cuts(const DisplayGraph& d,
                                                  const CutSearchOptions& opts) {
    const Graph& g = d.graph;
    if (g.num_vertices() > opts.max_vertices)
        throw budget_exceeded("graph has " + std::to_string(g.num_vertices()) +
                              " vertices, above the cut enumeration cap of " +
                              std::to_string(opts.max_vertices));
    if (!g.connected())
        throw std::invalid_argument("display graph is not connected");
    std::set<EdgeCut> found;
    enumerate_connected_subsets(
        g,
        [&](const std::set<VertexId>& side) {
            if (static_cast<int>(side.size()) == g.num_vertices()) return;
            // Complement must be connected.
            std::set<VertexId> side_set(side.begin(), side.end());
            auto comps = g.components_without_vertices(side_set);
            if (comps.size() != 1) return;
            EdgeCut boundary;
            for (const Edge& e : g.edges()) {
                bool a = side.count(e.first) > 0, b = side.count(e.second) > 0;
                if (a != b) boundary.insert(e);
            }
            if (is_legal_cut(d, boundary)) found.insert(std::move(boundary));
        },
        opts.max_steps);
    return {found.begin(), found.end()};
}

bool is_complete_set(const DisplayGraph& d, const std::vector<EdgeCut>& cuts) {
    for (const Edge& e : d.internal_edges) {
        int tree = d.tree_of_edge(e);
        bool covered = false;
        for (const EdgeCut& f : cuts) {
            auto in_tree = tree_edges_in(d, f, tree);
            if (in_tree.size() == 1 && in_tree[0] == e) {
                covered = true;
                break;
            }
        }
        if (!covered) return false;
    }
    return true;
}

SolveResult find_complete_parallel_set(const DisplayGraph& d,
                                       const CutSearchOptions& opts) {
    SolveResult result;
    std::vector<EdgeCut> cuts = enumerate_legal_minimal_cuts(d, opts);

    std::vector<Edge> internal(d.internal_edges.begin(), d.internal_edges.end());
    std::map<Edge, std::vector<int>> candidates;
    for (const Edge& e : internal) {
        int tree = d.tree_of_edge(e);
        for (size_t i = 0; i < cuts.size(); ++i) {
            auto in_tree = tree_edges_in(d, cuts[i], tree);
            if (in_tree.size() == 1 && in_tree[0] == e)
                candidates[e].push_back(static_cast<int>(i));
        }
        if (candidates[e].empty()) result.blocking_edges.push_back(e);
    }
    if (!result.blocking_edges.empty()) return result;

    // Fail-first: fewest candidates first.
    std::sort(internal.begin(), internal.end(), [&](const Edge& a, const Edge& b) {
        return std::make_pair(candidates[a].size(), a) <
               std::make_pair(candidates[b].size(), b);
    });

    // Lazy pairwise parallelism memo.
    std::vector<std::vector<signed char>> memo(cuts.size(),
                                               std::vector<signed char>(cuts.size(), -1));
    auto parallel = [&](int i, int j) {
        if (i == j) return true;
        signed char& m = memo[i][j];
        if (m < 0) {
            bool p = are_parallel_cuts(d, cuts[i], cuts[j]);
            m = p ? 1 : 0;
            memo[j][i] = m;
        }
        return m == 1;
    };

    std::vector<int> chosen;
    std::map<Edge, int> assignment;
    size_t deepest = 0;
    std::function<bool(size_t)> search = [&](size_t k) {
        deepest = std::max(deepest, k);
        if (k == internal.size()) return true;
        const Edge& e = internal[k];
        for (int c : candidates[e]) {
            bool compatible = true;
            for (int x : chosen)
                if (!parallel(c, x)) {
                    compatible = false;
                    break;
                }
            if (!compatible) continue;
            bool added = std::find(chosen.begin(), chosen.end(), c) == chosen.end();
            if (added) chosen.push_back(c);
            assignment[e] = c;
            if (search(k + 1)) return true;
            if (added) chosen.pop_back();
        }
        return false;
    };

    if (!search(0)) {
        result.blocking_edges.push_back(internal[std::min(deepest, internal.size() - 1)]);
        return result;
    }

    CutCertificate cert;
    std::vector<int> used = chosen;
    std::sort(used.begin(), used.end(),
              [&](int a, int b) { return cuts[a] < cuts[b]; });
    std::map<int, size_t> position;
    for (size_t i = 0; i < used.size(); ++i) {
        position[used[i]] = i;
        cert.cuts.push_back(cuts[used[i]]);
    }
    for (const auto& [e, c] : assignment) cert.coverage[e] = position[c];
    result.certificate = std::move(cert);
    return result;
}

CutCertificate minimalize_complete_set(const DisplayGraph& d, const CutCertificate& c) {
    std::vector<EdgeCut> cuts = c.cuts;
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

    // Drop order: largest first, ties lexicographic.
    bool dropped = true;
    while (dropped) {
        dropped = false;
        std::vector<size_t> order(cuts.size());
        for (size_t i = 0; i < cuts.size(); ++i) order[i] = i;
        std::sort(order.begin(), order.end(), [&](size_t a, size_t b) {
            if (cuts[a].size() != cuts[b].size()) return cuts[a].size() > cuts[b].size();
            return cuts[a] < cuts[b];
        });
        for (size_t i : order) {
            std::vector<EdgeCut> rest;
            for (size_t j = 0; j < cuts.size(); ++j)
                if (j != i) rest.push_back(cuts[j]);
            if (is_complete_set(d, rest)) {
                cuts = std::move(rest);
                dropped = true;
                break;
            }
        }
    }

    CutCertificate out;
    out.cuts = cuts;
    for (const Edge& e : d.internal_edges) {
        int tree = d.tree_of_edge(e);
        for (size_t i = 0; i < cuts.size(); ++i) {
            auto in_tree = tree_edges_in(d, cuts[i], tree);
            if (in_tree.size() == 1 && in_tree[0] == e) {
                out.coverage[e] = i;
                break;
            }
        }
    }
    return out;
}

std::set<VertexId> separator_view(const Elig& e, const EdgeCut& f) {
    std::set<VertexId> out;
    for (const Edge& de : f) out.insert(e.vertex_of.at(de));
    return out;
}

EdgeCut cut_view(const Elig& e, const std::set<VertexId>& vertices) {
    EdgeCut out;
    for (VertexId v : vertices) out.insert(e.display_edge.at(v));
    return out;
}

bool is_minimal_separator(const Graph& g, const std::set<VertexId>& u) {
    if (u.empty()) return false;
    auto comps = g.components_without_vertices(u);
    int full = 0;
    for (const auto& comp : comps) {
        std::set<VertexId> members(comp.begin(), comp.end());
        bool is_full = true;
        for (VertexId s : u) {
            bool touches = false;
            for (VertexId w : g.neighbors(s))
                if (members.count(w)) {
                    touches = true;
                    break;
                }
            if (!touches) {
                is_full = false;
                break;
            }
        }
        if (is_full && ++full >= 2) return true;
    }
    return false;
}

namespace {

bool separators_parallel_one_way(const Graph& g, const std::set<VertexId>& u1,
                                 const std::set<VertexId>& u2) {
    auto comps = g.components_without_vertices(u1);
    int seen = -1;
    for (size_t c = 0; c < comps.size(); ++c) {
        bool touches = false;
        for (VertexId v : comps[c])
            if (u2.count(v)) {
                touches = true;
                break;
            }
        if (!touches) continue;
        if (seen == -1)
            seen = static_cast<int>(c);
        else
            return false;
    }
    return true;
}

}  // namespace

bool are_parallel_separators(const Graph& g, const std::set<VertexId>& u1,
                             const std::set<VertexId>& u2) {
    return separators_parallel_one_way(g, u1, u2) &&
           separators_parallel_one_way(g, u2, u1);
}

namespace {

// Bitmask full-component test over <= 32 vertices.
bool minimal_separator_mask(int n, const std::vector<uint32_t>& nbr, uint32_t mask) {
    if (mask == 0) return false;
    uint32_t all = (n == 32) ? ~0u : ((1u << n) - 1);
    uint32_t rest = all & ~mask;
    int full = 0;
    uint32_t unseen = rest;
    while (unseen) {
        uint32_t comp = unseen & (~unseen + 1);  // lowest set bit
        uint32_t frontier = comp;
        while (frontier) {
            uint32_t next = 0;
            uint32_t f = frontier;
            while (f) {
                int v = __builtin_ctz(f);
                f &= f - 1;
                next |= nbr[v] & rest & ~comp;
            }
            comp |= next;
            frontier = next;
        }
        unseen &= ~comp;
        bool is_full = true;
        uint32_t m = mask;
        while (m) {
            int s = __builtin_ctz(m);
            m &= m - 1;
            if ((nbr[s] & comp) == 0) {
                is_full = false;
                break;
            }
        }
        if (is_full && ++full >= 2) return true;
    }
    return false;
}

std::vector<uint32_t> neighbor_masks(const Graph& g) {
    std::vector<uint32_t> nbr(g.num_vertices(), 0);
    for (int v = 0; v < g.num_vertices(); ++v)
        for (VertexId w : g.neighbors(v)) nbr[v] |= 1u << w;
    return nbr;
}

std::set<VertexId> mask_to_set(uint32_t mask) {
    std::set<VertexId> out;
    while (mask) {
        out.insert(__builtin_ctz(mask));
        mask &= mask - 1;
    }
    return out;
}

}  // namespace

std::vector<std::set<VertexId>> enumerate_minimal_separators_serial(const Graph& g,
                                                                    int max_vertices) {
    int n = g.num_vertices();
    if (n > max_vertices || n > 31)
        throw budget_exceeded("graph has " + std::to_string(n) +
                              " vertices, above the separator enumeration cap of " +
                              std::to_string(std::min(max_vertices, 31)));
    auto nbr = neighbor_masks(g);
    std::vector<std::set<VertexId>> out;
    uint32_t limit = 1u << n;
    for (uint32_t mask = 1; mask + 1 < limit; ++mask)
        if (minimal_separator_mask(n, nbr, mask)) out.push_back(mask_to_set(mask));
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::set<VertexId>> enumerate_minimal_separators(const Graph& g,
                                                             int max_vertices) {
    int n = g.num_vertices();
    if (n > max_vertices || n > 31)
        throw budget_exceeded("graph has " + std::to_string(n) +
                              " vertices, above the separator enumeration cap of " +
                              std::to_string(std::min(max_vertices, 31)));
    auto nbr = neighbor_masks(g);
    uint32_t limit = 1u << n;
    std::vector<std::set<VertexId>> out;
#ifdef _OPENMP
#pragma omp parallel
    {
        std::vector<std::set<VertexId>> local;
#pragma omp for schedule(static)
        for (int64_t mask = 1; mask < static_cast<int64_t>(limit) - 1; ++mask)
            if (minimal_separator_mask(n, nbr, static_cast<uint32_t>(mask)))
                local.push_back(mask_to_set(static_cast<uint32_t>(mask)));
#pragma omp critical
        out.insert(out.end(), local.begin(), local.end());
    }
#else
    for (uint32_t mask = 1; mask + 1 < limit; ++mask)
        if (minimal_separator_mask(n, nbr, mask)) out.push_back(mask_to_set(mask));
#endif
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::set<VertexId>> maximal_parallel_extension(
    const Elig& e, const std::vector<std::set<VertexId>>& seps, int max_vertices) {
    std::vector<std::set<VertexId>> result = seps;
    auto all = enumerate_minimal_separators(e.graph, max_vertices);
    std::set<std::set<VertexId>> have(seps.begin(), seps.end());
    for (const auto& candidate : all) {
        if (have.count(candidate)) continue;
        bool ok = true;
        for (const auto& member : result)
            if (!are_parallel_separators(e.graph, candidate, member)) {
                ok = false;
                break;
            }
        if (!ok) continue;
        if (!is_legal_separator(e, candidate))
            throw std::logic_error(
                "parallel extension produced an illegal separator; this "
                "contradicts the transfer lemma and indicates a bug");
        result.push_back(candidate);
        have.insert(candidate);
    }
    return result;
}

std::string certificate_to_json(const DisplayGraph& d, const CutCertificate& c) {
    nlohmann::json j;
    j["cuts"] = nlohmann::json::array();
    for (const EdgeCut& f : c.cuts) {
        nlohmann::json cut = nlohmann::json::array();
        std::vector<std::pair<std::string, std::string>> edges;
        for (const Edge& e : f) {
            std::string a = d.graph.name(e.first), b = d.graph.name(e.second);
            if (b < a) std::swap(a, b);
            edges.emplace_back(a, b);
        }
        std::sort(edges.begin(), edges.end());
        for (const auto& [a, b] : edges) cut.push_back({a, b});
        j["cuts"].push_back(cut);
    }
    nlohmann::json cov = nlohmann::json::object();
    for (const auto& [e, idx] : c.coverage) cov[d.graph.edge_name(e)] = idx;
    j["coverage"] = cov;
    return j.dump(2) + "\n";
}

CutCertificate certificate_from_json(const DisplayGraph& d, const std::string& json_text) {
    nlohmann::json j = nlohmann::json::parse(json_text);
    CutCertificate cert;
    std::map<std::string, Edge> by_name;
    for (const Edge& e : d.graph.edges()) by_name[d.graph.edge_name(e)] = e;
    for (const auto& cut : j.at("cuts")) {
        EdgeCut f;
        for (const auto& pair : cut) {
            if (!pair.is_array() || pair.size() != 2)
                throw std::invalid_argument("certificate edge must be a name pair");
            VertexId a = d.graph.vertex(pair[0].get<std::string>());
            VertexId b = d.graph.vertex(pair[1].get<std::string>());
            Edge e = make_edge(a, b);
            if (!d.edge_tree.count(e))
                throw std::invalid_argument("certificate names a non-edge: " +
                                            d.graph.edge_name(e));
            f.insert(e);
        }
        cert.cuts.push_back(std::move(f));
    }
    if (j.contains("coverage")) {
        for (const auto& [name, idx] : j.at("coverage").items()) {
            auto it = by_name.find(name);
            if (it == by_name.end())
                throw std::invalid_argument("coverage names unknown edge: " + name);
            size_t i = idx.get<size_t>();
            if (i >= cert.cuts.size())
                throw std::invalid_argument("coverage index out of range");
            cert.coverage[it->second] = i;
        }
    }
    return cert;
}

CertificateCheck validate_certificate(const DisplayGraph& d, const CutCertificate& c) {
    CertificateCheck check;
    for (size_t i = 0; i < c.cuts.size(); ++i) {
        if (!is_minimal_cut(d, c.cuts[i])) {
            check.failure = "cut " + std::to_string(i) + " is not a minimal cut";
            return check;
        }
        if (!is_legal_cut(d, c.cuts[i])) {
            check.failure = "cut " + std::to_string(i) + " is not legal";
            return check;
        }
    }
    for (size_t i = 0; i < c.cuts.size(); ++i)
        for (size_t j = i + 1; j < c.cuts.size(); ++j)
            if (!are_parallel_cuts(d, c.cuts[i], c.cuts[j])) {
                check.failure = "cuts " + std::to_string(i) + " and " +
                                std::to_string(j) + " are not parallel";
                return check;
            }
    for (const Edge& e : d.internal_edges) {
        int tree = d.tree_of_edge(e);
        bool covered = false;
        for (const EdgeCut& f : c.cuts) {
            auto in_tree = tree_edges_in(d, f, tree);
            if (in_tree.size() == 1 && in_tree[0] == e) {
                covered = true;
                break;
            }
        }
        if (!covered) {
            check.failure = "internal edge " + d.graph.edge_name(e) + " is uncovered";
            return check;
        }
    }
    check.valid = true;
    return check;
}

}  // namespace treecompat
