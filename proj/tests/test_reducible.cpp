#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "fva/generators.hpp"
#include "fva/reducible.hpp"
#include "fva/solvers.hpp"
#include "fva/structure.hpp"
#include "oracles.hpp"

using namespace fva;

namespace {

IntervalSet iv(Rational a, Rational b) { return IntervalSet::interval(a, b); }

std::uint32_t bit(Vertex v) { return std::uint32_t{1} << v; }

Graph star(int t) {
    Graph h(t + 1);
    for (Vertex u = 1; u <= t; ++u) h.add_edge(0, u);
    return h;
}

Graph path3() {
    Graph p(3);
    p.add_edge(0, 1);
    p.add_edge(0, 2);
    return p;
}

OffshootAssignment full_lists(int n, const Rational& k) {
    OffshootAssignment lo;
    lo.lists.assign(static_cast<std::size_t>(n), iv(0, k));
    lo.offshoots.assign(static_cast<std::size_t>(n), IntervalSet());
    return lo;
}

// fva cover of g minus `removed`, laid out as an arborization in host ids.
FractionalArborization input_for(const Graph& g, const std::vector<Vertex>& removed, Rational* value = nullptr) {
    auto rest = delete_vertices(g, removed);
    auto f = fractional_vertex_arboricity(rest.graph);
    if (value) *value = f.value;
    FractionalArborization phi;
    for (const auto& [v, s] : arborization_from_cover(rest.graph, f.cover).sets) phi.sets[rest.original[v]] = s;
    return phi;
}

std::vector<Vertex> spokes_of(const ConfigurationWitness& w) {
    std::vector<Vertex> out;
    for (int i = 1; auto u = w.find("u" + std::to_string(i)); ++i) out.push_back(*u);
    return out;
}

} // namespace

TEST_CASE("normalising a degree-two vertex") {
    Graph p(2);
    p.add_edge(0, 1);
    FractionalArborization phi{{{0, iv(0, 1)}, {1, iv(0, 1)}}};
    auto out = normalize_degree_two(phi, 0, 1, Rational(1, 4));
    CHECK(out.at(0) == (iv(1, Rational(7, 4)) | iv(0, Rational(1, 4))));
    CHECK(out.at(1) == iv(0, 1));
    auto again = normalize_degree_two(out, 0, 1, Rational(1, 4));
    CHECK(again == out);
    CHECK_THROWS_AS(normalize_degree_two(phi, 0, 1, Rational(-1)), ExtensionError);
    FractionalArborization wide{{{0, iv(0, 1)}, {1, iv(1, 2)}}};
    CHECK_THROWS_AS(normalize_degree_two(wide, 0, 1, Rational(1, 4)), ExtensionError);
    FractionalArborization longer{{{0, iv(0, Rational(3, 2))}, {1, iv(0, 1)}}};
    CHECK_THROWS_AS(normalize_degree_two(longer, 0, 1, Rational(1, 4)), ExtensionError);
}

TEST_CASE("normalisation leaves overlap exactly epsilon on random inputs") {
    std::mt19937_64 rng(71);
    const Rational eps(1, 4), k = 2 - eps;  // 14 cells of width 1/8
    for (int trial = 0; trial < 300; ++trial) {
        auto pick = [&] {
            std::vector<int> cells{0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13};
            std::shuffle(cells.begin(), cells.end(), rng);
            std::vector<Interval> pieces;
            for (int i = 0; i < 8; ++i) pieces.push_back({Rational(cells[i], 8), Rational(cells[i] + 1, 8)});
            return IntervalSet::from(pieces);
        };
        FractionalArborization phi{{{0, pick()}, {1, pick()}, {2, pick()}}};
        auto out = normalize_degree_two(phi, 0, 1, eps);
        CHECK((out.at(0) & out.at(1)).measure() == eps);
        CHECK(out.at(0).measure() == 1);
        CHECK(out.at(0).within(0, k));
        CHECK(out.at(1) == phi.at(1));
        CHECK(out.at(2) == phi.at(2));
        CHECK((out.at(0) & out.at(1)).subset_of(phi.at(0) & phi.at(1)));
    }
}

TEST_CASE("star schedule entries") {
    const Rational eps(5, 49), k = 2 - eps;
    auto h = star(3);
    auto lo = full_lists(4, k);
    auto light = schedule_config_A(h, lo, IntervalSet(), eps);
    CHECK(light.size() == 81);
    const auto& e = light.at(CellKey{0, bit(0) | bit(1)});
    CHECK(e.demand[0] == Rational(6, 7));
    CHECK(e.demand[1] == Rational(1, 7));
    CHECK(e.demand[2] == 1);
    CHECK(e.certificate.at(0) == iv(0, Rational(6, 7)));
    CHECK(e.certificate.at(1) == iv(Rational(6, 7), 1));
    CHECK(e.certificate.at(2) == iv(0, 1));

    auto heavy = schedule_config_A(h, lo, iv(0, 1 - eps), eps);
    const auto& hv = heavy.at(CellKey{0, bit(0) | bit(1)});
    CHECK(hv.demand[0] == 1);
    CHECK(hv.demand[1] == 0);
    CHECK(hv.certificate.at(0) == iv(0, 1));
    CHECK(hv.certificate.at(1).empty());
    CHECK(hv.demand[2] == 1);

    for (const auto* s : {&light, &heavy})
        for (const auto& [key, entry] : *s) {
            CHECK(verify_entry(h, key, entry).ok());
            CHECK(entry.certificate.sets.size() == static_cast<std::size_t>(4 - std::popcount(key.outside)));
        }

    CHECK_THROWS_AS(schedule_config_A(h, lo, IntervalSet(), Rational(6, 49)), ExtensionError);
    CHECK_THROWS_AS(schedule_config_A(h, lo, IntervalSet(), Rational(-1, 49)), ExtensionError);
    CHECK_THROWS_AS(schedule_config_A(star(8), full_lists(9, k), IntervalSet(), eps), ExtensionError);
    CHECK_THROWS_AS(schedule_config_A(named_graph("path", 3), full_lists(3, k), IntervalSet(), eps), ExtensionError);
}

TEST_CASE("path schedule entries") {
    const Rational eps(1, 324), k = 2 - eps;
    auto p = path3();
    auto lo = full_lists(3, k);
    auto light = schedule_config_B(p, lo, IntervalSet(), IntervalSet(), eps);
    CHECK(light.size() == 27);
    const auto& both = light.at(CellKey{0, bit(0) | bit(1)});
    CHECK(both.demand[1] == Rational(3, 5));
    CHECK(both.demand[0] == Rational(2, 5));
    CHECK(both.certificate.at(1) == iv(0, Rational(3, 5)));
    CHECK(both.certificate.at(0) == iv(Rational(3, 5), 1));
    const auto& free_v = light.at(CellKey{0, bit(1)});
    CHECK(free_v.demand[0] == Rational(4, 5));
    CHECK(free_v.certificate.at(0) == (iv(Rational(3, 5), 1) | iv(0, Rational(2, 5))));
    CHECK(free_v.demand[2] == 1);

    auto heavy = schedule_config_B(p, lo, iv(0, 1 - eps), IntervalSet(), eps);
    const auto& hv = heavy.at(CellKey{0, bit(1)});
    CHECK(hv.demand[1] == 1);
    CHECK(hv.demand[2] == 1);
    CHECK(hv.demand[0] == 0);
    for (const auto* s : {&light, &heavy})
        for (const auto& [key, entry] : *s) CHECK(verify_entry(p, key, entry).ok());
    CHECK_THROWS_AS(schedule_config_B(p, lo, IntervalSet(), IntervalSet(), Rational(1, 323)), ExtensionError);
    CHECK_THROWS_AS(schedule_config_B(star(3), full_lists(4, k), IntervalSet(), IntervalSet(), eps), ExtensionError);
}

TEST_CASE("extension across gadget A") {
    auto gad = gadget_graph(GadgetKind::A);
    const Rational eps(5, 49);
    auto spokes = spokes_of(gad.witness);
    Rational value;
    auto phi = input_for(gad.graph, spokes, &value);
    CHECK(value <= 2 - eps);
    auto report = extend_config_A(gad.graph, gad.witness, phi, eps);
    CHECK(verify(gad.graph, report.result, VerifyMode::arborization(2 - eps)).ok());
    CHECK(oracle::lo_arborization_ok(gad.graph, report.result.sets, {}));
    CHECK(report.result.sets.size() == 21);
    for (const auto& [v, s] : report.result.sets) {
        CHECK(s.measure() == 1);
        CHECK(s.within(0, 2 - eps));
    }
    REQUIRE(report.blocked.size() == 1);
    CHECK(report.blocked[0].measure() <= 1 - eps);
    CHECK(report.assignment.offshoots[0].measure() <= 2 - 2 * report.blocked[0].measure());
    for (const auto& c : report.covering) CHECK(c >= 1);
    for (Vertex v = 0; v < gad.graph.order(); ++v)
        if (std::find(spokes.begin(), spokes.end(), v) == spokes.end() && v != 0)
            CHECK(report.result.at(v) == report.normalized.at(v));
}

TEST_CASE("extension across gadget A with a heavy blocked set") {
    auto gad = gadget_graph(GadgetKind::A);
    const auto& g = gad.graph;
    const Rational eps(5, 49);
    auto spokes = spokes_of(gad.witness);
    auto rest = delete_vertices(g, spokes);
    const Vertex v = 0, a = 17, b = 18;
    auto local = [&](Vertex host) {
        return static_cast<Vertex>(std::find(rest.original.begin(), rest.original.end(), host) - rest.original.begin());
    };
    auto all = VertexSet::all(rest.graph.order());
    auto minus = [&](Vertex host) {
        auto s = all;
        s.erase(local(host));
        return s;
    };
    std::vector<WeightedSet> cover{{minus(v), 1 - eps}, {minus(a), Rational(1, 2)}, {minus(b), Rational(1, 2)}};
    for (const auto& c : cover) REQUIRE(is_induced_forest(rest.graph, c.set));
    FractionalArborization phi;
    for (const auto& [u, s] : arborization_from_cover(rest.graph, cover).sets) phi.sets[rest.original[u]] = s;
    REQUIRE(verify(g, phi, VerifyMode::arborization(2 - eps)).ok());
    CHECK(blocked_set(g, phi, v) == iv(0, 1 - eps));
    auto report = extend_config_A(g, gad.witness, phi, eps);
    CHECK(report.blocked[0].measure() == 1 - eps);
    CHECK(report.blocked[0].measure() > 1 - Rational(7) * eps / 5);
    CHECK(verify(g, report.result, VerifyMode::arborization(2 - eps)).ok());
    CHECK(oracle::lo_arborization_ok(g, report.result.sets, {}));
}

TEST_CASE("extension across gadget B") {
    auto gad = gadget_graph(GadgetKind::B);
    const Rational eps(1, 324);
    Rational value;
    auto phi = input_for(gad.graph, {gad.witness.at("v")}, &value);
    CHECK(value <= 2 - eps);
    auto report = extend_config_B(gad.graph, gad.witness, phi, eps);
    CHECK(verify(gad.graph, report.result, VerifyMode::arborization(2 - eps)).ok());
    CHECK(oracle::lo_arborization_ok(gad.graph, report.result.sets, {}));
    CHECK(report.result.sets.size() == 24);
    REQUIRE(report.blocked.size() == 2);
    for (int i = 0; i < 2; ++i) {
        CHECK(report.blocked[i].measure() <= 1 - eps);
        CHECK(report.assignment.offshoots[i + 1].measure() <= 2 + 6 * eps - 2 * report.blocked[i].measure());
    }
    for (const auto& c : report.covering) CHECK(c >= 1);
    for (const char* t : {"u1", "w1", "u2", "w2"}) {
        const Vertex u = gad.witness.at(t);
        const Vertex far = gad.witness.at(std::string(1, t[0]) + "'" + t[1]);
        CHECK((report.normalized.at(u) & report.normalized.at(far)).measure() == eps);
    }
}

TEST_CASE("extensions reject bad inputs") {
    auto ga = gadget_graph(GadgetKind::A);
    auto gb = gadget_graph(GadgetKind::B);
    const Rational ea(5, 49), eb(1, 324);
    auto phi_a = input_for(ga.graph, spokes_of(ga.witness));
    CHECK_THROWS_AS(extend_config_A(ga.graph, ga.witness, phi_a, Rational(6, 49)), ExtensionError);
    CHECK_THROWS_AS(extend_config_A(ga.graph, gb.witness, phi_a, ea), ExtensionError);
    auto partial = phi_a;
    partial.sets.erase(20);
    CHECK_THROWS_AS(extend_config_A(ga.graph, ga.witness, partial, ea), ExtensionError);
    auto outside = phi_a;
    outside.sets[20] = iv(2, 3);
    CHECK_THROWS_AS(extend_config_A(ga.graph, ga.witness, outside, ea), ExtensionError);
    auto phi_b = input_for(gb.graph, {gb.witness.at("v")});
    CHECK_THROWS_AS(extend_config_B(gb.graph, gb.witness, phi_b, Rational(1, 323)), ExtensionError);
    CHECK_THROWS_AS(extend_config_B(gb.graph, gb.witness, phi_a, eb), ExtensionError);
    auto dup = gb.witness;
    for (auto& r : dup.roles)
        if (r.label == "x1") r.vertex = gb.witness.at("y1");
    CHECK_THROWS_AS(extend_config_B(gb.graph, dup, phi_b, eb), ExtensionError);
}
