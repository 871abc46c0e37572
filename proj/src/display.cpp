#include "treecompat/display.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>
#include <tuple>

namespace treecompat {

VertexId DisplayGraph::display_vertex(int tree_index, int tree_vertex) const {
    const PhyloTree& t = profile.at(tree_index);
    if (t.is_leaf(tree_vertex)) return graph.vertex(t.label(tree_vertex));
    // Internal name: tree index plus rank of the vertex among the tree's
    // internal vertices, both 1-based.
    int rank = 0;
    for (int v = 0; v <= tree_vertex; ++v)
        if (!t.is_leaf(v)) ++rank;
    return graph.vertex(std::to_string(tree_index + 1) + "." + std::to_string(rank));
}

DisplayGraph build_display_graph(const Profile& p) {
    if (p.empty()) throw std::invalid_argument("empty profile");
    DisplayGraph d;
    d.profile = p;
    for (size_t ti = 0; ti < p.size(); ++ti) {
        const PhyloTree& t = p[ti];
        int internal_rank = 0;
        std::vector<VertexId> ids(t.num_vertices());
        for (int v = 0; v < t.num_vertices(); ++v) {
            if (t.is_leaf(v)) {
                ids[v] = d.graph.add_vertex(t.label(v));
                d.leaf_vertices.insert(ids[v]);
            } else {
                ++internal_rank;
                ids[v] = d.graph.add_vertex(std::to_string(ti + 1) + "." +
                                            std::to_string(internal_rank));
                d.internal_vertices.insert(ids[v]);
            }
        }
        for (const auto& [a, b] : t.edges()) {
            Edge e = make_edge(ids[a], ids[b]);
            if (d.edge_tree.count(e))
                throw std::logic_error("duplicate edge across trees: " + d.graph.edge_name(e));
            d.graph.add_edge(e.first, e.second);
            d.edge_tree[e] = static_cast<int>(ti);
            if (!t.is_leaf(a) && !t.is_leaf(b)) d.internal_edges.insert(e);
        }
    }
    return d;
}

std::vector<Profile> partition_profile(const Profile& p) {
    int k = static_cast<int>(p.size());
    std::vector<int> parent(k);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    std::map<std::string, int> owner;
    for (int i = 0; i < k; ++i) {
        for (const std::string& label : p[i].labels()) {
            auto [it, inserted] = owner.emplace(label, i);
            if (!inserted) parent[find(i)] = find(it->second);
        }
    }
    std::map<int, Profile> blocks;
    for (int i = 0; i < k; ++i) blocks[find(i)].push_back(p[i]);
    std::vector<Profile> out;
    for (auto& [root, block] : blocks) out.push_back(std::move(block));
    return out;
}

std::set<std::string> leaves_of_subgraph(const DisplayGraph& d,
                                         const std::set<VertexId>& component) {
    std::set<std::string> out;
    for (VertexId v : component) {
        if (v < 0 || v >= d.graph.num_vertices())
            throw std::out_of_range("unknown display vertex");
        if (d.is_leaf(v)) out.insert(d.graph.name(v));
    }
    return out;
}

std::string DisplayGraph::to_dot() const {
    static const char* palette[] = {"red",    "blue",   "darkgreen", "orange",
                                    "purple", "brown",  "teal",      "magenta"};
    std::ostringstream os;
    os << "graph display {\n";
    std::vector<std::string> leaf_names, internal_names;
    for (VertexId v : leaf_vertices) leaf_names.push_back(graph.name(v));
    for (VertexId v : internal_vertices) internal_names.push_back(graph.name(v));
    std::sort(leaf_names.begin(), leaf_names.end());
    std::sort(internal_names.begin(), internal_names.end());
    for (const auto& n : leaf_names) os << "  \"" << n << "\" [shape=box];\n";
    for (const auto& n : internal_names) os << "  \"" << n << "\" [shape=point];\n";
    std::vector<std::tuple<std::string, std::string, int>> lines;
    for (const auto& [e, tree] : edge_tree) {
        std::string a = graph.name(e.first), b = graph.name(e.second);
        if (b < a) std::swap(a, b);
        lines.emplace_back(a, b, tree);
    }
    std::sort(lines.begin(), lines.end());
    for (const auto& [a, b, tree] : lines)
        os << "  \"" << a << "\" -- \"" << b << "\" [color=" << palette[tree % 8]
           << "];\n";
    os << "}\n";
    return os.str();
}

}  // namespace treecompat
