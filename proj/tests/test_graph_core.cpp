#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <deque>
#include <random>
#include <set>
#include <sstream>

#include "fva/generators.hpp"
#include "fva/graph6.hpp"
#include "fva/structure.hpp"
#include "oracles.hpp"

using namespace fva;

TEST_CASE("rational parsing") {
    CHECK(parse_rational("3/4") == Rational(3, 4));
    CHECK(parse_rational("-6/8") == Rational(-3, 4));
    CHECK(parse_rational("7") == Rational(7));
    CHECK(to_string(parse_rational("10/4")) == "5/2");
    CHECK(to_string(Rational(-2)) == "-2");
    CHECK(parse_rational("123456789012345678901234567890/3") > Rational(1000000));
    CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
    CHECK_THROWS_AS(parse_rational("0.5"), ParseError);
    CHECK_THROWS_AS(parse_rational(""), ParseError);
    CHECK_THROWS_AS(parse_rational("1/"), ParseError);
    CHECK_THROWS_AS(parse_rational("a/b"), ParseError);
}

TEST_CASE("graph construction rejects loops and repeated edges") {
    Graph g(3);
    CHECK(g.add_edge(0, 1));
    CHECK_FALSE(g.add_edge(1, 0));
    CHECK_THROWS_AS(g.add_edge(2, 2), GraphError);
    CHECK_THROWS_AS(g.add_edge(0, 3), GraphError);
    std::vector<Edge> twice{{0, 1}, {1, 0}};
    CHECK_THROWS_AS(Graph(2, twice), GraphError);
    CHECK(g.size() == 1);
    CHECK(g.adjacent(1, 0));
}

TEST_CASE("induced subgraphs keep the requested order") {
    auto g = named_graph("cycle", 5);
    std::vector<Vertex> keep{3, 0, 4};
    auto h = induced_subgraph(g, keep);
    CHECK(h.original == keep);
    CHECK(h.graph.adjacent(0, 2));  // 3-4
    CHECK(h.graph.adjacent(1, 2));  // 0-4
    CHECK_FALSE(h.graph.adjacent(0, 1));
    std::vector<Vertex> gone{1};
    auto d = delete_vertices(g, gone);
    CHECK(d.graph.order() == 4);
    CHECK(d.graph.size() == 3);
}

TEST_CASE("vertex sets order lexicographically by members") {
    auto a = VertexSet::from(std::vector<Vertex>{0, 5});
    auto b = VertexSet::from(std::vector<Vertex>{0, 2, 9});
    auto c = VertexSet::from(std::vector<Vertex>{1});
    CHECK(b < a);
    CHECK(a < c);
    CHECK(VertexSet() < c);
    CHECK(VertexSet::all(64).size() == 64);
}

TEST_CASE("graph6 decoding of known strings") {
    auto k4 = decode_graph6("C~");
    CHECK(k4 == named_graph("k4"));
    CHECK(decode_graph6(">>graph6<<C~\n") == k4);
    CHECK(encode_graph6(Graph(0)) == "?");
    CHECK(encode_graph6(named_graph("path", 2)) == "A_");
    // Petersen as printed by nauty's geng/showg convention.
    auto p = decode_graph6("IheA@GUAo");
    CHECK(p.order() == 10);
    CHECK(p.size() == 15);
    for (Vertex v = 0; v < 10; ++v) CHECK(p.degree(v) == 3);
    CHECK(girth(p) == 5);
}

TEST_CASE("graph6 round trip on every labelled graph up to six vertices") {
    for (int n = 0; n <= 6; ++n) {
        std::vector<Edge> slots;
        for (Vertex j = 1; j < n; ++j)
            for (Vertex i = 0; i < j; ++i) slots.emplace_back(i, j);
        std::set<std::string> seen;
        for (std::uint64_t m = 0; m < (std::uint64_t{1} << slots.size()); ++m) {
            Graph g(n);
            for (std::size_t k = 0; k < slots.size(); ++k)
                if ((m >> k) & 1u) g.add_edge(slots[k].first, slots[k].second);
            auto s = encode_graph6(g);
            CHECK(decode_graph6(s) == g);
            seen.insert(s);
        }
        CHECK(seen.size() == (std::size_t{1} << slots.size()));
    }
}

TEST_CASE("graph6 long header and random round trips") {
    std::mt19937_64 rng(7);
    for (int n : {62, 63, 64, 100, 300}) {
        auto g = oracle::random_graph(n, 0.05, rng);
        auto s = encode_graph6(g);
        if (n >= 63) CHECK(s[0] == '~');
        CHECK(decode_graph6(s) == g);
    }
}

TEST_CASE("graph6 rejects malformed input") {
    CHECK_THROWS_AS(decode_graph6(""), ParseError);
    CHECK_THROWS_AS(decode_graph6("C"), ParseError);
    CHECK_THROWS_AS(decode_graph6("C~~"), ParseError);
    CHECK_THROWS_AS(decode_graph6("C\x7f"), ParseError);
    CHECK_THROWS_AS(decode_graph6("A`"), ParseError);  // nonzero padding bit
}

TEST_CASE("graph6 streams and edge lists") {
    std::istringstream in("C~\n\nA_\r\nBw\n");
    auto gs = read_graph6_stream(in);
    REQUIRE(gs.size() == 3);
    CHECK(gs[1] == named_graph("path", 2));
    auto cube = named_graph("cube");
    CHECK(parse_edge_list(format_edge_list(cube)) == cube);
    CHECK(parse_edge_list("3\n0 1\n1 2\n") == named_graph("path", 3));
    CHECK_THROWS_AS(parse_edge_list("2\n0 0\n"), ParseError);
    CHECK_THROWS_AS(parse_edge_list("2\n0 1\n1 0\n"), ParseError);
    CHECK_THROWS_AS(parse_edge_list("x"), ParseError);
}

TEST_CASE("girth agrees with the edge-deletion oracle") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 300; ++trial) {
        std::uniform_int_distribution<int> order(1, 14);
        auto g = oracle::random_graph(order(rng), std::uniform_real_distribution<double>(0.05, 0.5)(rng), rng);
        CHECK(girth(g) == oracle::girth(g));
    }
    CHECK(girth(named_graph("dodecahedron")) == 5);
    CHECK(girth(named_graph("cube")) == 4);
    CHECK(girth(named_graph("path", 6)) == std::nullopt);
    CHECK(girth(gadget_graph(GadgetKind::A).graph) == 5);
    CHECK(girth(gadget_graph(GadgetKind::B).graph) == 5);
}

TEST_CASE("induced forest test agrees with depth-first search") {
    std::mt19937_64 rng(12);
    for (int trial = 0; trial < 200; ++trial) {
        auto g = oracle::random_graph(10, 0.3, rng);
        std::uint64_t mask = std::uniform_int_distribution<std::uint64_t>(0, 1023)(rng);
        CHECK(is_induced_forest(g, VertexSet(mask)) == oracle::is_forest(g, mask));
        CHECK(is_independent_set(g, VertexSet(mask)) == oracle::is_independent(g, mask));
        auto members = VertexSet(mask).members();
        CHECK(is_induced_forest(g, members) == oracle::is_forest(g, mask));
    }
}

TEST_CASE("structural predicates") {
    auto g = gadget_graph(GadgetKind::A).graph;
    CHECK(g.degree(0) == 9);
    CHECK(effective_degree(g, 0) == 2);
    CHECK(is_heavy(g, 0));  // degree above five
    auto k4 = named_graph("k4");
    CHECK(is_light(k4, 0));
    CHECK(average_degree(k4) == 3);
    auto stats = structural_stats(named_graph("path", 3));
    CHECK(stats.degrees == std::vector<int>{1, 2, 1});
    CHECK(stats.girth == std::nullopt);
    CHECK(satisfies_euler_bound(named_graph("dodecahedron"), 5));
    CHECK_FALSE(satisfies_euler_bound(named_graph("complete", 6), 3));
    CHECK_THROWS_AS(satisfies_euler_bound(k4, 2), GraphError);
}

TEST_CASE("named graphs and gadgets") {
    CHECK(named_graph("cube").size() == 12);
    CHECK(named_graph("dodecahedron").order() == 20);
    CHECK(named_graph("dodecahedron").size() == 30);
    CHECK(named_graph_spec("cycle:7") == named_graph("cycle", 7));
    CHECK_THROWS_AS(named_graph("cycle", 2), GraphError);
    CHECK_THROWS_AS(named_graph("nonsense"), GraphError);
    CHECK_THROWS_AS(named_graph_spec("cycle:x"), GraphError);
    auto a = gadget_graph(GadgetKind::A);
    CHECK(a.graph.order() == 21);
    CHECK(a.graph.size() == 26);
    CHECK(witness_matches(a.graph, a.witness));
    auto b = gadget_graph(GadgetKind::B);
    CHECK(b.graph.order() == 24);
    CHECK(b.graph.size() == 33);
    CHECK(witness_matches(b.graph, b.witness));
    for (const auto& gadget : {a, b}) {
        CHECK(satisfies_euler_bound(gadget.graph, 5));
        CHECK(average_degree(gadget.graph) < Rational(10, 3));
    }
}

TEST_CASE("witness patterns reject mismatches") {
    auto a = gadget_graph(GadgetKind::A);
    auto broken = a.witness;
    for (auto& r : broken.roles)
        if (r.label == "u'1") r.vertex = a.witness.at("u'2");
    CHECK_FALSE(witness_matches(a.graph, broken));
    ConfigurationWitness partial{ConfigurationKind::effective_degree_two, {{"v", 0}, {"u1", 1}, {"u'1", 8}}};
    CHECK_FALSE(witness_matches(a.graph, partial));  // not every neighbour labelled
}

TEST_CASE("canonical form is invariant under relabelling") {
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 100; ++trial) {
        const int n = std::uniform_int_distribution<int>(1, 10)(rng);
        auto g = oracle::random_graph(n, 0.4, rng);
        std::vector<Vertex> perm(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) perm[i] = i;
        std::shuffle(perm.begin(), perm.end(), rng);
        Graph h(n);
        for (auto [u, v] : g.edges()) h.add_edge(perm[u], perm[v]);
        CHECK(canonical_graph6(g) == canonical_graph6(h));
    }
    CHECK(canonical_graph6(named_graph("path", 4)) != canonical_graph6(decode_graph6("Cr")));
}

TEST_CASE("connected graph counts match the known sequence") {
    const std::size_t expected[] = {0, 1, 1, 2, 6, 21, 112, 853};
    for (int n = 1; n <= 7; ++n) {
        auto gs = connected_graphs(n);
        CHECK(gs.size() == expected[n]);
        std::set<std::string> distinct;
        for (const auto& g : gs) distinct.insert(canonical_graph6(g));
        CHECK(distinct.size() == gs.size());
    }
    CHECK(connected_graphs_up_to(5).size() == 31);
}

TEST_CASE("random connected graphs are connected and seeded") {
    std::mt19937_64 a(5), b(5);
    for (int i = 0; i < 20; ++i) {
        auto g = random_connected_graph(12, 6, a);
        CHECK(g == random_connected_graph(12, 6, b));
        std::vector<Vertex> all;
        for (Vertex v = 0; v < 12; ++v) all.push_back(v);
        CHECK(g.size() >= 11);
        std::deque<Vertex> q{0};
        std::vector<bool> seen(12, false);
        seen[0] = true;
        int count = 1;
        while (!q.empty()) {
            Vertex x = q.front();
            q.pop_front();
            for (Vertex y : g.neighbors(x))
                if (!seen[y]) seen[y] = true, ++count, q.push_back(y);
        }
        CHECK(count == 12);
    }
}
