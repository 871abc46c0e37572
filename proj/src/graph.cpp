#include "treecompat/graph.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

namespace treecompat {

VertexId Graph::add_vertex(const std::string& name) {
    auto it = ids_.find(name);
    if (it != ids_.end()) return it->second;
    VertexId id = static_cast<VertexId>(names_.size());
    names_.push_back(name);
    ids_.emplace(name, id);
    adj_.emplace_back();
    return id;
}

void Graph::add_edge(VertexId a, VertexId b) {
    if (a < 0 || b < 0 || a >= num_vertices() || b >= num_vertices())
        throw std::out_of_range("unknown vertex id");
    Edge e = make_edge(a, b);
    edges_.insert(e);
    adj_[a].insert(b);
    adj_[b].insert(a);
}

void Graph::add_edge(const std::string& a, const std::string& b) {
    add_edge(add_vertex(a), add_vertex(b));
}

std::optional<VertexId> Graph::find_vertex(const std::string& name) const {
    auto it = ids_.find(name);
    if (it == ids_.end()) return std::nullopt;
    return it->second;
}

VertexId Graph::vertex(const std::string& name) const {
    auto v = find_vertex(name);
    if (!v) throw std::out_of_range("unknown vertex: " + name);
    return *v;
}

bool Graph::has_edge(VertexId a, VertexId b) const {
    if (a == b) return false;
    return edges_.count(make_edge(a, b)) > 0;
}

std::string Graph::edge_name(const Edge& e) const {
    const std::string& a = name(e.first);
    const std::string& b = name(e.second);
    if (a < b) return "{" + a + "," + b + "}";
    return "{" + b + "," + a + "}";
}

static std::vector<std::vector<VertexId>> flood_components(
    int n, const std::vector<std::set<VertexId>>& adj,
    const std::vector<bool>& present) {
    std::vector<std::vector<VertexId>> out;
    std::vector<bool> seen(n, false);
    for (int s = 0; s < n; ++s) {
        if (!present[s] || seen[s]) continue;
        std::vector<VertexId> block;
        std::deque<VertexId> queue{s};
        seen[s] = true;
        while (!queue.empty()) {
            VertexId v = queue.front();
            queue.pop_front();
            block.push_back(v);
            for (VertexId w : adj[v]) {
                if (present[w] && !seen[w]) {
                    seen[w] = true;
                    queue.push_back(w);
                }
            }
        }
        std::sort(block.begin(), block.end());
        out.push_back(std::move(block));
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::vector<VertexId>> Graph::components() const {
    std::vector<bool> present(num_vertices(), true);
    return flood_components(num_vertices(), adj_, present);
}

bool Graph::connected() const {
    return components().size() <= 1;
}

std::vector<std::vector<VertexId>> Graph::components_without_edges(
    const std::set<Edge>& f) const {
    for (const Edge& e : f)
        if (!edges_.count(e)) throw std::out_of_range("unknown edge " + edge_name(e));
    std::vector<std::set<VertexId>> adj = adj_;
    for (const Edge& e : f) {
        adj[e.first].erase(e.second);
        adj[e.second].erase(e.first);
    }
    std::vector<bool> present(num_vertices(), true);
    return flood_components(num_vertices(), adj, present);
}

std::vector<std::vector<VertexId>> Graph::components_without_vertices(
    const std::set<VertexId>& u) const {
    std::vector<bool> present(num_vertices(), true);
    for (VertexId v : u) {
        if (v < 0 || v >= num_vertices()) throw std::out_of_range("unknown vertex id");
        present[v] = false;
    }
    return flood_components(num_vertices(), adj_, present);
}

Graph Graph::delete_edges(const std::set<Edge>& f) const {
    for (const Edge& e : f)
        if (!edges_.count(e)) throw std::out_of_range("unknown edge " + edge_name(e));
    Graph out;
    for (const std::string& n : names_) out.add_vertex(n);
    for (const Edge& e : edges_)
        if (!f.count(e)) out.add_edge(e.first, e.second);
    return out;
}

Graph Graph::delete_vertices(const std::set<VertexId>& u) const {
    for (VertexId v : u)
        if (v < 0 || v >= num_vertices()) throw std::out_of_range("unknown vertex id");
    Graph out;
    for (int v = 0; v < num_vertices(); ++v)
        if (!u.count(v)) out.add_vertex(names_[v]);
    for (const Edge& e : edges_)
        if (!u.count(e.first) && !u.count(e.second))
            out.add_edge(names_[e.first], names_[e.second]);
    return out;
}

Graph Graph::saturate(const std::vector<std::set<VertexId>>& families) const {
    Graph out = *this;
    for (const auto& family : families) {
        for (VertexId v : family)
            if (v < 0 || v >= num_vertices())
                throw std::out_of_range("family contains unknown vertex id");
        for (auto it = family.begin(); it != family.end(); ++it)
            for (auto jt = std::next(it); jt != family.end(); ++jt)
                out.add_edge(*it, *jt);
    }
    return out;
}

std::string Graph::to_dot(const std::string& graph_name) const {
    std::ostringstream os;
    os << "graph " << graph_name << " {\n";
    std::vector<std::string> sorted_names = names_;
    std::sort(sorted_names.begin(), sorted_names.end());
    for (const std::string& n : sorted_names) os << "  \"" << n << "\";\n";
    std::vector<std::pair<std::string, std::string>> lines;
    for (const Edge& e : edges_) {
        std::string a = names_[e.first], b = names_[e.second];
        if (b < a) std::swap(a, b);
        lines.emplace_back(a, b);
    }
    std::sort(lines.begin(), lines.end());
    for (const auto& [a, b] : lines) os << "  \"" << a << "\" -- \"" << b << "\";\n";
    os << "}\n";
    return os.str();
}

Graph line_graph(const Graph& g) {
    Graph out;
    std::map<Edge, VertexId> ids;
    for (const Edge& e : g.edges())
        ids[e] = out.add_vertex(g.edge_name(e));
    for (const Edge& e : g.edges()) {
        for (const Edge& f : g.edges()) {
            if (!(e < f)) continue;
            if (e.first == f.first || e.first == f.second ||
                e.second == f.first || e.second == f.second)
                out.add_edge(ids[e], ids[f]);
        }
    }
    return out;
}

// Maximum cardinality search; returns vertices in reverse elimination order.
static std::vector<VertexId> mcs_order(const Graph& g) {
    int n = g.num_vertices();
    std::vector<int> weight(n, 0);
    std::vector<bool> numbered(n, false);
    std::vector<VertexId> order;
    for (int step = 0; step < n; ++step) {
        int best = -1;
        for (int v = 0; v < n; ++v)
            if (!numbered[v] && (best == -1 || weight[v] > weight[best])) best = v;
        numbered[best] = true;
        order.push_back(best);
        for (VertexId w : g.neighbors(best))
            if (!numbered[w]) ++weight[w];
    }
    return order;
}

// Shortest induced x..y path avoiding N[v] \ {x,y}; closing through v gives a
// chordless cycle.
static std::vector<VertexId> chordless_cycle_through(const Graph& g, VertexId v,
                                                     VertexId x, VertexId y) {
    int n = g.num_vertices();
    std::vector<bool> allowed(n, true);
    allowed[v] = false;
    for (VertexId w : g.neighbors(v)) allowed[w] = false;
    allowed[x] = allowed[y] = true;
    std::vector<int> prev(n, -1);
    std::deque<VertexId> queue{x};
    std::vector<bool> seen(n, false);
    seen[x] = true;
    while (!queue.empty()) {
        VertexId u = queue.front();
        queue.pop_front();
        if (u == y) break;
        for (VertexId w : g.neighbors(u)) {
            if (allowed[w] && !seen[w]) {
                seen[w] = true;
                prev[w] = u;
                queue.push_back(w);
            }
        }
    }
    if (!seen[y]) return {};
    std::vector<VertexId> cycle{v};
    for (VertexId u = y; u != -1; u = prev[u]) cycle.push_back(u);
    std::reverse(cycle.begin() + 1, cycle.end());
    return cycle;  // v, x, ..., y
}

static std::vector<VertexId> find_chordless_cycle(const Graph& g) {
    int n = g.num_vertices();
    for (VertexId v = 0; v < n; ++v) {
        const auto& nb = g.neighbors(v);
        for (auto it = nb.begin(); it != nb.end(); ++it) {
            for (auto jt = std::next(it); jt != nb.end(); ++jt) {
                if (g.has_edge(*it, *jt)) continue;
                auto cycle = chordless_cycle_through(g, v, *it, *jt);
                if (cycle.size() >= 4) return cycle;
            }
        }
    }
    return {};
}

ChordalityResult is_chordal(const Graph& g) {
    ChordalityResult result;
    int n = g.num_vertices();
    std::vector<VertexId> order = mcs_order(g);
    std::vector<int> position(n, -1);
    for (int i = 0; i < n; ++i) position[order[i]] = i;
    for (int i = n - 1; i >= 0; --i) {
        VertexId v = order[i];
        // Earlier-numbered neighbors must form a clique.
        std::vector<VertexId> earlier;
        for (VertexId w : g.neighbors(v))
            if (position[w] < i) earlier.push_back(w);
        for (size_t a = 0; a < earlier.size(); ++a) {
            for (size_t b = a + 1; b < earlier.size(); ++b) {
                if (!g.has_edge(earlier[a], earlier[b])) {
                    result.chordal = false;
                    result.chordless_cycle = find_chordless_cycle(g);
                    return result;
                }
            }
        }
    }
    result.chordal = true;
    result.elimination_order.assign(order.rbegin(), order.rend());
    return result;
}

static void bron_kerbosch(const Graph& g, std::set<VertexId>& r,
                          std::set<VertexId> p, std::set<VertexId> x,
                          std::vector<std::set<VertexId>>& out,
                          long& steps, long max_steps) {
    if (++steps > max_steps)
        throw budget_exceeded("maximal_cliques budget exceeded (" +
                              std::to_string(max_steps) + " steps)");
    if (p.empty() && x.empty()) {
        out.push_back(r);
        return;
    }
    // Pivot with most neighbors in p.
    VertexId pivot = -1;
    size_t best = 0;
    for (const auto& cand_set : {p, x}) {
        for (VertexId u : cand_set) {
            size_t cnt = 0;
            for (VertexId w : g.neighbors(u))
                if (p.count(w)) ++cnt;
            if (pivot == -1 || cnt > best) {
                pivot = u;
                best = cnt;
            }
        }
    }
    std::vector<VertexId> candidates;
    for (VertexId v : p)
        if (pivot == -1 || !g.neighbors(pivot).count(v)) candidates.push_back(v);
    for (VertexId v : candidates) {
        std::set<VertexId> np, nx;
        for (VertexId w : g.neighbors(v)) {
            if (p.count(w)) np.insert(w);
            if (x.count(w)) nx.insert(w);
        }
        r.insert(v);
        bron_kerbosch(g, r, std::move(np), std::move(nx), out, steps, max_steps);
        r.erase(v);
        p.erase(v);
        x.insert(v);
    }
}

std::vector<std::set<VertexId>> maximal_cliques(const Graph& g, long max_steps) {
    std::vector<std::set<VertexId>> out;
    std::set<VertexId> r, p, x;
    for (int v = 0; v < g.num_vertices(); ++v) p.insert(v);
    long steps = 0;
    bron_kerbosch(g, r, std::move(p), std::move(x), out, steps, max_steps);
    std::sort(out.begin(), out.end());
    return out;
}

Graph FillEdgeSet::filled() const {
    Graph out = base;
    for (const Edge& e : fill) out.add_edge(e.first, e.second);
    return out;
}

}  // namespace treecompat
