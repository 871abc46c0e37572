#include <doctest.h>

#include <functional>
#include <random>

#include "support.hpp"
#include "treecompat/graph.hpp"

using namespace treecompat;
using testsup::named_cut;

namespace {

Graph path3() {
    Graph g;
    g.add_edge("a", "b");
    g.add_edge("b", "c");
    return g;
}

Graph triangle() {
    Graph g;
    g.add_edge("a", "b");
    g.add_edge("b", "c");
    g.add_edge("a", "c");
    return g;
}

Graph cycle4() {
    Graph g;
    g.add_edge("a", "b");
    g.add_edge("b", "c");
    g.add_edge("c", "d");
    g.add_edge("a", "d");
    return g;
}

Graph star(int leaves) {
    Graph g;
    g.add_vertex("hub");
    for (int i = 0; i < leaves; ++i) g.add_edge("hub", "l" + std::to_string(i));
    return g;
}

// Definition-level chordless-cycle search for cross-checking is_chordal:
// grow induced paths from each start vertex and look for a closing edge.
bool brute_force_chordal(const Graph& g) {
    int n = g.num_vertices();
    std::vector<VertexId> path;
    std::function<bool(VertexId)> extend = [&](VertexId v) -> bool {
        for (VertexId w = 0; w < n; ++w) {
            if (!g.has_edge(v, w)) continue;
            if (std::find(path.begin(), path.end(), w) != path.end()) continue;
            // w may touch the path only at its last vertex (induced path),
            // except that an edge back to the start closes a cycle.
            bool inner_chord = false;
            for (size_t i = 1; i + 1 < path.size(); ++i)
                if (g.has_edge(path[i], w)) inner_chord = true;
            if (inner_chord) continue;
            bool closes = path.size() >= 2 && g.has_edge(path.front(), w);
            if (closes && path.size() >= 3) return true;  // chordless C>=4
            if (closes) continue;
            path.push_back(w);
            if (extend(w)) return true;
            path.pop_back();
        }
        return false;
    };
    for (VertexId s = 0; s < n; ++s) {
        path = {s};
        if (extend(s)) return false;
    }
    return true;
}

Graph random_graph(int n, double p, std::mt19937& rng) {
    Graph g;
    for (int i = 0; i < n; ++i) g.add_vertex("v" + std::to_string(i));
    std::bernoulli_distribution coin(p);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (coin(rng)) g.add_edge(i, j);
    return g;
}

}  // namespace

TEST_CASE("components basics") {
    Graph empty;
    CHECK(empty.components().empty());
    CHECK(path3().components().size() == 1);
    Graph two;
    two.add_edge("a", "b");
    two.add_edge("c", "d");
    auto comps = two.components();
    REQUIRE(comps.size() == 2);
    // ordered by smallest member; blocks disjoint and covering
    CHECK(comps[0].front() < comps[1].front());
    CHECK(comps[0].size() + comps[1].size() == 4);
}

TEST_CASE("worked display graph is one component; F1 splits it in two") {
    auto d = testsup::worked_display();
    CHECK(d.graph.components().size() == 1);
    CHECK(d.graph.num_vertices() == 14);
    auto comps = d.graph.components_without_edges(testsup::cut_f1(d));
    REQUIRE(comps.size() == 2);
    // one side holds a,b,c and internal vertices 1.1, 2.1, 2.2
    std::set<std::string> side;
    for (VertexId v : comps[0]) side.insert(d.graph.name(v));
    if (!side.count("a")) {
        side.clear();
        for (VertexId v : comps[1]) side.insert(d.graph.name(v));
    }
    CHECK(side == std::set<std::string>{"1.1", "2.1", "2.2", "a", "b", "c"});
}

TEST_CASE("worked display graph minus F2 has two components") {
    auto d = testsup::worked_display();
    CHECK(d.graph.components_without_edges(testsup::cut_f2(d)).size() == 2);
}

TEST_CASE("delete_edges and delete_vertices semantics") {
    Graph g = path3();
    CHECK(g.delete_edges({}) == g);
    Graph h = g.delete_edges({make_edge(g.vertex("a"), g.vertex("b"))});
    CHECK(h.num_vertices() == 3);  // vertices kept
    CHECK(h.num_edges() == 1);
    Graph t = triangle().delete_vertices({triangle().vertex("a")});
    CHECK(t.num_vertices() == 2);
    CHECK(t.num_edges() == 1);
    CHECK_THROWS(g.delete_edges({make_edge(g.vertex("a"), g.vertex("c"))}));
}

TEST_CASE("line_graph shapes") {
    Graph lp = line_graph(path3());
    CHECK(lp.num_vertices() == 2);
    CHECK(lp.num_edges() == 1);
    Graph ls = line_graph(star(3));
    CHECK(ls.num_vertices() == 3);
    CHECK(ls.num_edges() == 3);  // triangle
    auto d = testsup::worked_display();
    CHECK(line_graph(d.graph).num_vertices() == 18);
}

TEST_CASE("line_graph degree identity") {
    std::mt19937 rng(11);
    for (int i = 0; i < 30; ++i) {
        Graph g = random_graph(8, 0.4, rng);
        Graph l = line_graph(g);
        for (const Edge& e : g.edges()) {
            VertexId lv = l.vertex(g.edge_name(e));
            CHECK(l.degree(lv) == g.degree(e.first) + g.degree(e.second) - 2);
        }
    }
}

TEST_CASE("is_chordal basics with witnesses") {
    auto tree = is_chordal(path3());
    CHECK(tree.chordal);
    CHECK(tree.elimination_order.size() == 3);
    auto c4 = is_chordal(cycle4());
    CHECK(!c4.chordal);
    CHECK(c4.chordless_cycle.size() == 4);
    // the witness really is a chordless cycle
    const Graph g = cycle4();
    auto& cyc = c4.chordless_cycle;
    for (size_t i = 0; i < cyc.size(); ++i)
        CHECK(g.has_edge(cyc[i], cyc[(i + 1) % cyc.size()]));
    // the worked display graph is not chordal
    CHECK(!is_chordal(testsup::worked_display().graph).chordal);
}

TEST_CASE("is_chordal agrees with brute force on random graphs") {
    std::mt19937 rng(23);
    for (int i = 0; i < 120; ++i) {
        Graph g = random_graph(8, std::uniform_real_distribution<>(0.2, 0.7)(rng), rng);
        CHECK(is_chordal(g).chordal == brute_force_chordal(g));
    }
}

TEST_CASE("maximal_cliques shapes") {
    CHECK(maximal_cliques(triangle()).size() == 1);
    CHECK(maximal_cliques(triangle())[0].size() == 3);
    auto c4 = maximal_cliques(cycle4());
    CHECK(c4.size() == 4);
    for (const auto& c : c4) CHECK(c.size() == 2);
    auto k4 = maximal_cliques(line_graph(star(4)));
    REQUIRE(k4.size() == 1);
    CHECK(k4[0].size() == 4);
}

TEST_CASE("maximal_cliques budget") {
    // A Moon-Moser-ish graph would be needed for real blowup; a tiny budget
    // makes any nontrivial graph trip it.
    CHECK_THROWS_AS(maximal_cliques(cycle4(), 1), budget_exceeded);
}

TEST_CASE("saturate behavior") {
    Graph g = cycle4();
    CHECK(g.saturate({{g.vertex("a")}, {g.vertex("b")}}) == g);
    Graph filled = g.saturate({{g.vertex("a"), g.vertex("c")}});
    CHECK(is_chordal(filled).chordal);
    CHECK(filled.saturate({{g.vertex("a"), g.vertex("c")}}) == filled);  // idempotent
    CHECK_THROWS(g.saturate({{99}}));
}

TEST_CASE("FillEdgeSet::filled applies fill edges") {
    FillEdgeSet h;
    h.base = cycle4();
    h.fill = {make_edge(h.base.vertex("a"), h.base.vertex("c"))};
    Graph f = h.filled();
    CHECK(f.num_edges() == 5);
    CHECK(is_chordal(f).chordal);
}

TEST_CASE("to_dot is deterministic") {
    auto d = testsup::worked_display();
    CHECK(d.graph.to_dot() == d.graph.to_dot());
    CHECK(d.graph.to_dot().rfind("graph G {", 0) == 0);
}
