#include "treecompat/phylo.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <functional>
#include <sstream>

namespace treecompat {

namespace {

bool valid_label(const std::string& text) {
    if (text.empty()) return false;
    for (char c : text) {
        if (c == '(' || c == ')' || c == ',' || c == ';' || c == ':') return false;
        if (std::isspace(static_cast<unsigned char>(c))) return false;
    }
    return true;
}

}  // namespace

PhyloTree PhyloTree::from_adjacency(std::vector<std::set<int>> adj,
                                    std::map<int, std::string> leaf_label) {
    int n = static_cast<int>(adj.size());
    if (n == 0) throw std::invalid_argument("empty tree");

    // Compact ids, preserving relative order.
    std::vector<int> live;
    for (int v = 0; v < n; ++v) live.push_back(v);

    PhyloTree t;
    t.adj_.assign(n, {});
    for (int v = 0; v < n; ++v)
        for (int w : adj[v]) {
            if (w < 0 || w >= n) throw std::invalid_argument("bad adjacency");
            t.adj_[v].insert(w);
        }

    int edge_count = t.num_edges();
    if (edge_count != n - 1) throw std::invalid_argument("tree is not acyclic/connected");

    // Connectivity.
    std::vector<bool> seen(n, false);
    std::deque<int> queue{0};
    seen[0] = true;
    int reached = 0;
    while (!queue.empty()) {
        int v = queue.front();
        queue.pop_front();
        ++reached;
        for (int w : t.adj_[v])
            if (!seen[w]) {
                seen[w] = true;
                queue.push_back(w);
            }
    }
    if (reached != n) throw std::invalid_argument("tree is disconnected");

    for (int v = 0; v < n; ++v) {
        int deg = static_cast<int>(t.adj_[v].size());
        bool labeled = leaf_label.count(v) > 0;
        bool leafish = (n == 1) ? true : deg == 1;
        if (leafish && !labeled) throw std::invalid_argument("unlabeled leaf vertex");
        if (!leafish && labeled) throw std::invalid_argument("label on internal vertex");
        if (!leafish && deg == 2) throw std::invalid_argument("unsuppressed degree-2 vertex");
    }
    for (const auto& [v, label] : leaf_label) {
        if (!valid_label(label)) throw std::invalid_argument("invalid label: " + label);
        if (t.label_vertex_.count(label))
            throw std::invalid_argument("duplicate leaf label: " + label);
        t.label_vertex_.emplace(label, v);
    }
    t.leaf_label_ = std::move(leaf_label);
    return t;
}

int PhyloTree::num_edges() const {
    int total = 0;
    for (const auto& nb : adj_) total += static_cast<int>(nb.size());
    return total / 2;
}

int PhyloTree::leaf_with_label(const std::string& label) const {
    auto it = label_vertex_.find(label);
    if (it == label_vertex_.end()) throw std::out_of_range("unknown label: " + label);
    return it->second;
}

std::set<std::string> PhyloTree::labels() const {
    std::set<std::string> out;
    for (const auto& [v, label] : leaf_label_) out.insert(label);
    return out;
}

std::vector<std::pair<int, int>> PhyloTree::edges() const {
    std::vector<std::pair<int, int>> out;
    for (int v = 0; v < num_vertices(); ++v)
        for (int w : adj_[v])
            if (v < w) out.emplace_back(v, w);
    return out;
}

std::vector<std::pair<int, int>> PhyloTree::internal_edges() const {
    std::vector<std::pair<int, int>> out;
    for (const auto& [a, b] : edges())
        if (!is_leaf(a) && !is_leaf(b)) out.emplace_back(a, b);
    return out;
}

std::set<std::string> PhyloTree::labels_on_side(int a, int b, int side) const {
    std::set<std::string> out;
    std::vector<bool> seen(num_vertices(), false);
    std::deque<int> queue{side};
    seen[side] = true;
    while (!queue.empty()) {
        int v = queue.front();
        queue.pop_front();
        if (is_leaf(v)) out.insert(label(v));
        for (int w : adj_[v]) {
            if ((v == a && w == b) || (v == b && w == a)) continue;
            if (!seen[w]) {
                seen[w] = true;
                queue.push_back(w);
            }
        }
    }
    return out;
}

namespace {

struct NewickParser {
    const std::string& text;
    size_t pos = 0;

    std::vector<std::set<int>> adj;
    std::vector<bool> has_children;
    std::map<int, std::string> labels;

    explicit NewickParser(const std::string& t) : text(t) {}

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }

    [[noreturn]] void fail(const std::string& what) { throw parse_error(what, pos); }

    int new_node() {
        adj.emplace_back();
        has_children.push_back(false);
        return static_cast<int>(adj.size()) - 1;
    }

    std::string read_name() {
        size_t start = pos;
        while (pos < text.size()) {
            char c = text[pos];
            if (c == '(' || c == ')' || c == ',' || c == ';' || c == ':' ||
                std::isspace(static_cast<unsigned char>(c)))
                break;
            ++pos;
        }
        return text.substr(start, pos - start);
    }

    void skip_branch_length() {
        skip_ws();
        if (pos < text.size() && text[pos] == ':') {
            ++pos;
            skip_ws();
            size_t start = pos;
            while (pos < text.size() &&
                   (std::isdigit(static_cast<unsigned char>(text[pos])) ||
                    text[pos] == '.' || text[pos] == '-' || text[pos] == '+' ||
                    text[pos] == 'e' || text[pos] == 'E'))
                ++pos;
            if (pos == start) fail("expected branch length after ':'");
        }
    }

    int parse_subtree() {
        skip_ws();
        if (pos >= text.size()) fail("unexpected end of input");
        int node = new_node();
        if (text[pos] == '(') {
            ++pos;
            has_children[node] = true;
            while (true) {
                int child = parse_subtree();
                adj[node].insert(child);
                adj[child].insert(node);
                skip_ws();
                if (pos >= text.size()) fail("unterminated '('");
                if (text[pos] == ',') {
                    ++pos;
                    continue;
                }
                if (text[pos] == ')') {
                    ++pos;
                    break;
                }
                fail("expected ',' or ')'");
            }
            skip_ws();
            read_name();  // internal label, dropped
            skip_branch_length();
        } else {
            std::string name = read_name();
            if (name.empty()) fail("expected a leaf label");
            labels[node] = name;
            skip_branch_length();
        }
        return node;
    }

    PhyloTree parse() {
        parse_subtree();
        skip_ws();
        if (pos >= text.size() || text[pos] != ';') fail("expected ';'");
        ++pos;
        skip_ws();
        if (pos != text.size()) fail("trailing input after ';'");

        if (labels.empty()) throw parse_error("tree with zero leaves", 0);
        {
            std::set<std::string> seen;
            for (const auto& [v, name] : labels)
                if (!seen.insert(name).second)
                    throw parse_error("duplicate leaf label: " + name, 0);
        }

        // Unroot and normalize: drop unlabeled degree-<=1 nodes, suppress
        // unlabeled degree-2 nodes.
        int n = static_cast<int>(adj.size());
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

        // Compact ids.
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
};

}  // namespace

PhyloTree parse_newick(const std::string& text) {
    NewickParser parser(text);
    return parser.parse();
}

Profile parse_profile(const std::string& text) {
    Profile profile;
    size_t start = 0;
    for (size_t i = 0; i < text.size(); ++i) {
        if (text[i] == ';') {
            std::string chunk = text.substr(start, i - start + 1);
            profile.push_back(parse_newick(chunk));
            start = i + 1;
        }
    }
    std::string rest = text.substr(start);
    if (!std::all_of(rest.begin(), rest.end(),
                     [](char c) { return std::isspace(static_cast<unsigned char>(c)); }))
        throw parse_error("trailing input after last ';'", start);
    if (profile.empty()) throw parse_error("empty profile", 0);
    return profile;
}

namespace {

std::string min_label_below(const PhyloTree& t, int v, int parent,
                            std::map<std::pair<int, int>, std::string>& memo) {
    auto key = std::make_pair(v, parent);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    std::string best;
    if (t.is_leaf(v)) {
        best = t.label(v);
    } else {
        for (int w : t.neighbors(v)) {
            if (w == parent) continue;
            std::string sub = min_label_below(t, w, v, memo);
            if (best.empty() || sub < best) best = sub;
        }
    }
    memo[key] = best;
    return best;
}

void emit_newick(const PhyloTree& t, int v, int parent, std::ostringstream& os,
                 std::map<std::pair<int, int>, std::string>& memo) {
    if (t.is_leaf(v)) {
        os << t.label(v);
        return;
    }
    std::vector<std::pair<std::string, int>> children;
    for (int w : t.neighbors(v))
        if (w != parent) children.emplace_back(min_label_below(t, w, v, memo), w);
    std::sort(children.begin(), children.end());
    os << '(';
    for (size_t i = 0; i < children.size(); ++i) {
        if (i) os << ',';
        emit_newick(t, children[i].second, v, os, memo);
    }
    os << ')';
}

}  // namespace

std::string serialize_newick(const PhyloTree& tree) {
    if (tree.num_vertices() == 1) return tree.label(0) + ";";
    if (tree.num_vertices() == 2) {
        std::string a = tree.label(0), b = tree.label(1);
        if (b < a) std::swap(a, b);
        return "(" + a + "," + b + ");";
    }
    std::string smallest = *tree.labels().begin();
    int leaf = tree.leaf_with_label(smallest);
    int root = *tree.neighbors(leaf).begin();
    std::ostringstream os;
    std::map<std::pair<int, int>, std::string> memo;
    emit_newick(tree, root, -1, os, memo);
    os << ';';
    return os.str();
}

bool tree_isomorphic(const PhyloTree& t1, const PhyloTree& t2) {
    if (t1.labels() != t2.labels()) return false;
    return serialize_newick(t1) == serialize_newick(t2);
}

}  // namespace treecompat
