#include "treecompat/triangulate.hpp"

#include <algorithm>
#include <sstream>

#include "json.hpp"

namespace treecompat {

std::set<VertexId> DfPair::f_union() const {
    std::set<VertexId> out = x;
    out.insert(y.begin(), y.end());
    return out;
}

std::set<VertexId> DfPair::f_intersection() const {
    std::set<VertexId> out;
    for (VertexId v : x)
        if (y.count(v)) out.insert(v);
    return out;
}

std::vector<EdgeCut> triangulation_order(const std::vector<EdgeCut>& cuts) {
    std::vector<EdgeCut> out = cuts;
    std::sort(out.begin(), out.end(), [](const EdgeCut& a, const EdgeCut& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    });
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

namespace {

std::vector<int> comp_index_of(const DisplayGraph& d, const EdgeCut& f,
                               std::vector<std::vector<VertexId>>& comps) {
    comps = d.graph.components_without_edges(f);
    std::vector<int> idx(d.graph.num_vertices(), -1);
    for (size_t c = 0; c < comps.size(); ++c)
        for (VertexId v : comps[c]) idx[v] = static_cast<int>(c);
    return idx;
}

// Sole edge of its tree within f.
bool sole_tree_edge(const DisplayGraph& d, const EdgeCut& f, const Edge& e) {
    int tree = d.tree_of_edge(e);
    for (const Edge& other : f)
        if (!(other == e) && d.tree_of_edge(other) == tree) return false;
    return true;
}

}  // namespace

std::vector<DfPair> construct_df_pairs(const DisplayGraph& d,
                                       const std::vector<EdgeCut>& cuts) {
    std::vector<DfPair> done;  // the paper's W, in processing order
    for (const EdgeCut& f : cuts) {
        DfPair p;
        p.cut = f;
        std::vector<std::vector<VertexId>> comps;
        std::vector<int> idx = comp_index_of(d, f, comps);
        if (comps.size() != 2)
            throw std::invalid_argument("cut does not split the display graph in two");

        // Internal edges that are their tree's sole contribution to f,
        // ordered by (tree, edge).
        std::vector<Edge> sole_internal;
        for (const Edge& e : f)
            if (d.is_internal_edge(e) && sole_tree_edge(d, f, e))
                sole_internal.push_back(e);
        std::sort(sole_internal.begin(), sole_internal.end(),
                  [&](const Edge& a, const Edge& b) {
                      return std::make_pair(d.tree_of_edge(a), a) <
                             std::make_pair(d.tree_of_edge(b), b);
                  });

        int side_a = -1;  // component index backing the x set
        for (const Edge& e : sole_internal) {
            VertexId u = e.first, v = e.second;
            if (side_a == -1) side_a = idx[u];
            VertexId in_a = (idx[u] == side_a) ? u : v;
            VertexId in_b = (idx[u] == side_a) ? v : u;
            if (idx[in_a] == idx[in_b])
                throw std::logic_error("cut edge endpoints in one component");

            // Endpoint replacement against earlier pairs, in W order.
            VertexId rep_x = in_a, rep_y = in_b;
            bool replaced = false;
            for (const DfPair& earlier : done) {
                bool u_in_x = earlier.x.count(in_a) && !earlier.y.count(in_a);
                bool u_in_y = earlier.y.count(in_a) && !earlier.x.count(in_a);
                bool v_in_x = earlier.x.count(in_b) && !earlier.y.count(in_b);
                bool v_in_y = earlier.y.count(in_b) && !earlier.x.count(in_b);
                if (!((u_in_x && v_in_y) || (u_in_y && v_in_x))) continue;

                // The unique component of G-I meeting F.
                std::vector<std::vector<VertexId>> icomps;
                std::vector<int> iidx = comp_index_of(d, earlier.cut, icomps);
                int q = -1;
                for (const Edge& fe : f) {
                    if (earlier.cut.count(fe)) continue;
                    int c = iidx[fe.first];
                    if (q == -1)
                        q = c;
                    else if (q != c)
                        throw std::logic_error(
                            "cut meets two components of an earlier cut; the "
                            "set is not pairwise parallel");
                }
                if (q == -1) throw std::logic_error("cut is a subset of an earlier cut");
                VertexId inside = (iidx[u] == q) ? u : v;
                if (iidx[inside] != q)
                    throw std::logic_error("neither endpoint lies in the meeting component");
                rep_x = rep_y = inside;
                replaced = true;
            }
            p.x.insert(rep_x);
            p.y.insert(rep_y);
            if (!replaced) p.pairs.emplace_back(rep_x, rep_y);
        }

        // Non-internal sole-tree edges contribute their internal endpoint
        // to both sides.
        for (const Edge& e : f) {
            if (d.is_internal_edge(e) || !sole_tree_edge(d, f, e)) continue;
            VertexId internal = -1;
            if (!d.is_leaf(e.first)) internal = e.first;
            if (!d.is_leaf(e.second)) internal = e.second;
            if (internal == -1) continue;  // leaf-leaf edge of a two-leaf tree
            p.x.insert(internal);
            p.y.insert(internal);
        }

        // Trees with several edges in f contribute the shared endpoint.
        std::map<int, std::vector<Edge>> per_tree;
        for (const Edge& e : f) per_tree[d.tree_of_edge(e)].push_back(e);
        for (const auto& [tree, edges] : per_tree) {
            if (edges.size() < 2) continue;
            std::set<VertexId> common{edges[0].first, edges[0].second};
            for (size_t i = 1; i < edges.size(); ++i) {
                std::set<VertexId> next;
                if (common.count(edges[i].first)) next.insert(edges[i].first);
                if (common.count(edges[i].second)) next.insert(edges[i].second);
                common = std::move(next);
            }
            if (common.size() != 1)
                throw std::logic_error("LC1 violated inside the pair construction");
            p.x.insert(*common.begin());
            p.y.insert(*common.begin());
        }

        if (p.pairs.empty())
            throw std::logic_error(
                "cut differentiates no internal edge; the complete set is "
                "not minimal");
        done.push_back(std::move(p));
    }
    return done;
}

std::vector<std::set<VertexId>> of_families(const DfPair& p) {
    if (p.pairs.empty()) throw std::logic_error("pair with m = 0");
    std::set<VertexId> shared = p.f_intersection();
    size_t m = p.pairs.size();
    std::vector<std::set<VertexId>> out;
    for (size_t j = 1; j <= m; ++j) {
        std::set<VertexId> family = shared;
        for (size_t i = 0; i < j; ++i) family.insert(p.pairs[i].first);
        for (size_t i = j - 1; i < m; ++i) family.insert(p.pairs[i].second);
        out.push_back(std::move(family));
    }
    return out;
}

TriangulationDiagnostics verify_legal_triangulation(const DisplayGraph& d,
                                                    const FillEdgeSet& h) {
    TriangulationDiagnostics diag;
    if (!(h.base == d.graph))
        throw std::invalid_argument("fill set base is not this display graph");
    Graph filled = h.filled();

    auto chord = is_chordal(filled);
    if (!chord.chordal) {
        std::ostringstream os;
        os << "not chordal; chordless cycle:";
        for (VertexId v : chord.chordless_cycle) os << ' ' << filled.name(v);
        diag.ok = false;
        diag.failures.push_back(os.str());
    }

    for (const Edge& e : h.fill) {
        if (d.is_leaf(e.first) || d.is_leaf(e.second)) {
            diag.ok = false;
            diag.failures.push_back("LT2: fill edge " + d.graph.edge_name(e) +
                                    " touches a leaf");
        }
    }

    // LT1 on maximal cliques; a violating clique extends to a violating
    // maximal clique.
    for (const auto& clique : maximal_cliques(filled)) {
        int original = 0;
        bool internal = false;
        std::vector<std::string> members;
        for (auto it = clique.begin(); it != clique.end(); ++it)
            for (auto jt = std::next(it); jt != clique.end(); ++jt) {
                Edge e = make_edge(*it, *jt);
                if (!d.edge_tree.count(e)) continue;
                ++original;
                if (d.is_internal_edge(e)) internal = true;
            }
        if (internal && original >= 2) {
            std::ostringstream os;
            os << "LT1: clique {";
            bool first = true;
            for (VertexId v : clique) {
                if (!first) os << ',';
                os << filled.name(v);
                first = false;
            }
            os << "} holds an internal edge and another original edge";
            diag.ok = false;
            diag.failures.push_back(os.str());
        }
    }
    return diag;
}

namespace {

void check_forbidden_edges(const DisplayGraph& d, const Graph& filled,
                           const DfPair& p, TriangulationDiagnostics& diag) {
    std::vector<std::vector<VertexId>> comps;
    std::vector<int> idx = comp_index_of(d, p.cut, comps);
    std::set<VertexId> shared = p.f_intersection();
    int side_a = idx[p.pairs[0].first];
    auto forbidden = [&](VertexId u, VertexId v) {
        bool u_in_a = idx[u] == side_a, v_in_a = idx[v] == side_a;
        if (u_in_a == v_in_a) return false;
        VertexId a = u_in_a ? u : v;
        VertexId b = u_in_a ? v : u;
        if (!shared.count(a) && !p.y.count(b)) return true;  // A\Fcap to B\Y
        if (!shared.count(b) && !p.x.count(a)) return true;  // B\Fcap to A\X
        return false;
    };
    for (const Edge& e : filled.edges()) {
        if (forbidden(e.first, e.second)) {
            diag.ok = false;
            diag.failures.push_back("forbidden edge " + filled.edge_name(e) +
                                    " across cut " + "(pair invariant)");
        }
    }
}

void check_induced_union(const DisplayGraph& d, const Graph& filled,
                         const DfPair& p, TriangulationDiagnostics& diag) {
    std::set<VertexId> keep = p.f_union();
    std::set<VertexId> drop;
    for (int v = 0; v < filled.num_vertices(); ++v)
        if (!keep.count(v)) drop.insert(v);
    Graph induced = filled.delete_vertices(drop);
    if (!is_chordal(induced).chordal) {
        diag.ok = false;
        diag.failures.push_back("induced subgraph on a pair's vertex union is not chordal");
    }
    for (const auto& clique : maximal_cliques(induced)) {
        int original = 0;
        bool internal = false;
        for (auto it = clique.begin(); it != clique.end(); ++it)
            for (auto jt = std::next(it); jt != clique.end(); ++jt) {
                VertexId a = d.graph.vertex(induced.name(*it));
                VertexId b = d.graph.vertex(induced.name(*jt));
                Edge e = make_edge(a, b);
                if (!d.edge_tree.count(e)) continue;
                ++original;
                if (d.is_internal_edge(e)) internal = true;
            }
        if (internal && original >= 2) {
            diag.ok = false;
            diag.failures.push_back("illegal clique inside a pair's vertex union");
        }
    }
}

}  // namespace

LegalTriangulation build_legal_triangulation(const DisplayGraph& d,
                                             const std::vector<EdgeCut>& cuts) {
    LegalTriangulation t;
    std::vector<EdgeCut> ordered = triangulation_order(cuts);
    t.df_pairs = construct_df_pairs(d, ordered);

    Graph filled = d.graph;
    for (const DfPair& p : t.df_pairs) {
        std::vector<std::set<VertexId>> families{p.x, p.y};
        auto of = of_families(p);
        t.of.push_back(of);
        families.insert(families.end(), of.begin(), of.end());
        filled = filled.saturate(families);
    }
    for (VertexId leaf : d.leaf_vertices)
        filled = filled.saturate({d.graph.neighbors(leaf)});

    for (const Edge& e : filled.edges())
        if (!d.edge_tree.count(e)) t.fill.fill.insert(e);
    t.fill.base = d.graph;

    TriangulationDiagnostics diag = verify_legal_triangulation(d, t.fill);
    for (const DfPair& p : t.df_pairs) {
        check_forbidden_edges(d, filled, p, diag);
        check_induced_union(d, filled, p, diag);
    }
    if (!diag.ok) {
        std::ostringstream os;
        os << "triangulation verification failed (internal error):";
        for (const auto& f : diag.failures) os << "\n  " << f;
        throw std::logic_error(os.str());
    }
    return t;
}

std::optional<size_t> differentiating_cut(const std::vector<DfPair>& pairs,
                                          const Edge& e) {
    std::optional<size_t> found;
    for (size_t i = 0; i < pairs.size(); ++i) {
        const DfPair& p = pairs[i];
        bool a_x = p.x.count(e.first) && !p.y.count(e.first);
        bool a_y = p.y.count(e.first) && !p.x.count(e.first);
        bool b_x = p.x.count(e.second) && !p.y.count(e.second);
        bool b_y = p.y.count(e.second) && !p.x.count(e.second);
        if ((a_x && b_y) || (a_y && b_x)) {
            if (found)
                throw std::logic_error("edge has two differentiating cuts");
            found = i;
        }
    }
    return found;
}

std::string triangulation_to_dot(const DisplayGraph& d, const LegalTriangulation& t) {
    std::ostringstream os;
    os << "graph triangulation {\n";
    std::vector<std::string> names;
    for (int v = 0; v < d.graph.num_vertices(); ++v) names.push_back(d.graph.name(v));
    std::sort(names.begin(), names.end());
    for (const auto& n : names) os << "  \"" << n << "\";\n";
    std::vector<std::tuple<std::string, std::string, bool>> lines;
    for (const Edge& e : d.graph.edges()) {
        std::string a = d.graph.name(e.first), b = d.graph.name(e.second);
        if (b < a) std::swap(a, b);
        lines.emplace_back(a, b, false);
    }
    for (const Edge& e : t.fill.fill) {
        std::string a = d.graph.name(e.first), b = d.graph.name(e.second);
        if (b < a) std::swap(a, b);
        lines.emplace_back(a, b, true);
    }
    std::sort(lines.begin(), lines.end());
    for (const auto& [a, b, is_fill] : lines) {
        os << "  \"" << a << "\" -- \"" << b << "\"";
        if (is_fill) os << " [style=dashed]";
        os << ";\n";
    }
    os << "}\n";
    return os.str();
}

std::string fill_edges_to_json(const DisplayGraph& d, const LegalTriangulation& t) {
    nlohmann::json j;
    j["fill_edges"] = nlohmann::json::array();
    std::vector<std::pair<std::string, std::string>> edges;
    for (const Edge& e : t.fill.fill) {
        std::string a = d.graph.name(e.first), b = d.graph.name(e.second);
        if (b < a) std::swap(a, b);
        edges.emplace_back(a, b);
    }
    std::sort(edges.begin(), edges.end());
    for (const auto& [a, b] : edges) j["fill_edges"].push_back({a, b});
    return j.dump(2) + "\n";
}

}  // namespace treecompat
