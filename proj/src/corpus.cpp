#include "fva/corpus.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <thread>

#include "fva/generators.hpp"
#include "fva/graph6.hpp"

namespace fva {
namespace {

const Rational theorem_bound = Rational(2) - Rational(1, 324);

bool component_has_two(const Graph& h, std::uint64_t level, std::uint32_t offshoot) {
    // Does some component of h[level] contain two members of offshoot?
    std::uint64_t seen = 0;
    for (Vertex s = 0; s < h.order(); ++s) {
        if (!((level >> s) & 1u) || ((seen >> s) & 1u)) continue;
        std::vector<Vertex> stack{s};
        seen |= std::uint64_t{1} << s;
        int marked = 0;
        while (!stack.empty()) {
            Vertex x = stack.back();
            stack.pop_back();
            if ((offshoot >> x) & 1u) ++marked;
            for (Vertex y : h.neighbors(x))
                if (((level >> y) & 1u) && !((seen >> y) & 1u)) {
                    seen |= std::uint64_t{1} << y;
                    stack.push_back(y);
                }
        }
        if (marked >= 2) return true;
    }
    return false;
}

} // namespace

std::optional<CombinerInstance> random_combiner_instance(std::mt19937_64& rng, int max_vertices) {
    std::uniform_int_distribution<int> order(1, max_vertices);
    std::bernoulli_distribution coin(0.5), keep(0.85), off(0.3);
    CombinerInstance inst;
    const int h = order(rng);
    inst.graph = Graph(h);
    for (Vertex a = 0; a < h; ++a)
        for (Vertex b = a + 1; b < h; ++b)
            if (coin(rng)) inst.graph.add_edge(a, b);

    for (Vertex u = 0; u < h; ++u) {
        std::vector<Interval> l, o;
        for (int k = 0; k < 24; ++k) {
            if (!keep(rng)) continue;
            Interval piece{Rational(k, 12), Rational(k + 1, 12)};
            l.push_back(piece);
            if (off(rng)) o.push_back(piece);
        }
        inst.assignment.lists.push_back(IntervalSet::from(l));
        inst.assignment.offshoots.push_back(IntervalSet::from(o));
    }

    for (CellKey key : all_cell_keys(h)) {
        ScheduleEntry entry;
        entry.demand.assign(static_cast<std::size_t>(h), Rational(0));
        std::vector<Vertex> members;
        for (Vertex u = 0; u < h; ++u)
            if (!((key.outside >> u) & 1u)) members.push_back(u);
        std::shuffle(members.begin(), members.end(), rng);
        std::vector<std::uint64_t> level(8, 0);
        std::vector<std::vector<Interval>> pieces(static_cast<std::size_t>(h));
        for (Vertex u : members) {
            std::vector<int> grid{0, 1, 2, 3, 4, 5, 6, 7};
            std::shuffle(grid.begin(), grid.end(), rng);
            for (int p : grid) {
                const std::uint64_t next = level[p] | (std::uint64_t{1} << u);
                if (!is_induced_forest(inst.graph, VertexSet(next))) continue;
                if (component_has_two(inst.graph, next, key.offshoot)) continue;
                level[p] = next;
                pieces[u].push_back({Rational(p, 8), Rational(p + 1, 8)});
            }
        }
        for (Vertex u : members) {
            auto s = IntervalSet::from(pieces[u]);
            entry.demand[u] = s.measure();
            entry.certificate.sets[u] = s;
        }
        inst.schedule.emplace(key, std::move(entry));
    }

    auto table = cells(inst.graph, inst.assignment);
    for (Vertex u = 0; u < h; ++u)
        if (covering_lhs(u, table, inst.schedule) < 1) return std::nullopt;
    return inst;
}

std::vector<std::pair<std::string, Graph>> theorem_fixtures() {
    std::vector<std::pair<std::string, Graph>> out;
    for (int n = 5; n <= 16; ++n) out.emplace_back("cycle:" + std::to_string(n), named_graph("cycle", n));
    const Graph dodeca = named_graph("dodecahedron");
    for (int k = 4; k <= 10; ++k) {
        std::vector<Vertex> removed;
        for (Vertex v = 0; v < k; ++v) removed.push_back(v);
        out.emplace_back("dodecahedron-minus-" + std::to_string(k), delete_vertices(dodeca, removed).graph);
    }
    out.emplace_back("gadget-a", gadget_graph(GadgetKind::A).graph);
    out.emplace_back("gadget-b", gadget_graph(GadgetKind::B).graph);
    out.emplace_back("petersen", named_graph("petersen"));
    return out;
}

Graph random_sparse_graph(int n, std::mt19937_64& rng) {
    if (n < 3) throw GraphError("random_sparse_graph needs at least 3 vertices");
    Graph g(n);
    std::vector<Vertex> perm(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) perm[i] = i;
    std::shuffle(perm.begin(), perm.end(), rng);
    if (std::bernoulli_distribution(0.5)(rng)) {
        for (int i = 0; i < n; ++i) g.add_edge(perm[i], perm[(i + 1) % n]);
    } else {
        for (int i = 1; i < n; ++i) g.add_edge(perm[i], perm[std::uniform_int_distribution<int>(0, i - 1)(rng)]);
    }
    // Stay strictly below average degree 10/3: 3|E| < 5n.
    const std::size_t cap = static_cast<std::size_t>((5 * n - 1) / 3);
    const std::size_t target =
        std::uniform_int_distribution<std::size_t>(g.size(), std::max(g.size(), cap))(rng);
    std::uniform_int_distribution<int> pick(0, n - 1);
    for (int tries = 0; g.size() < target && tries < 50 * n; ++tries) {
        Vertex a = pick(rng), b = pick(rng);
        if (a != b) g.add_edge(a, b);
    }
    return g;
}

Json chain_check(const Graph& g) {
    const int n = g.order();
    const int a = max_induced_forest_size(g);
    auto f = fractional_vertex_arboricity(g);
    auto va = vertex_arboricity(g);
    const Rational lower(n, a);
    const bool ok = lower <= f.value && f.value <= va.colors;
    return Json{{"n", n}, {"a", a}, {"lower", to_json(lower)}, {"fva", to_json(f.value)}, {"va", va.colors}, {"ok", ok}};
}

Json chif_check(const Graph& g) {
    auto chi = fractional_chromatic_number(g);
    auto f = fractional_vertex_arboricity(g);
    const bool ok = chi.value <= 2 * f.value;
    return Json{{"chif", to_json(chi.value)}, {"fva", to_json(f.value)}, {"ok", ok}};
}

Json lemma4_check(const Graph& g) {
    auto ledger = discharge(g);
    Rational initial = 0, final_charge = 0;
    for (const auto& c : ledger.initial) initial += c;
    for (const auto& c : ledger.final_charge) final_charge += c;
    auto r = check_lemma4(g);
    const bool conserved = initial == final_charge;
    const bool ok = conserved && r.status != Lemma4Result::Status::counterexample;
    return Json{{"average_degree", to_json(r.average_degree)},
                {"status", to_string(r.status)},
                {"witnesses", r.witnesses.size()},
                {"total_charge", to_json(initial)},
                {"conserved", conserved},
                {"ok", ok}};
}

Json acyclic5_check(const Graph& g) {
    auto coloring = acyclic_coloring(g, 5);
    if (!coloring) return Json{{"colorable", false}, {"ok", nullptr}};
    auto phi = arborization_from_acyclic5(g, *coloring);
    auto report = verify(g, phi, VerifyMode::arborization(Rational(5, 2)));
    std::vector<IntervalSet> classes;
    for (int c = 1; c <= 5; ++c) {
        Graph single(1);
        classes.push_back(arborization_from_acyclic5(single, {c}).at(0));
    }
    auto part = atoms(classes);
    bool at_most_two = true;
    IntervalSet covered;
    for (std::size_t i = 0; i < part.atoms.size(); ++i) {
        covered = covered | part.atoms[i];
        if (std::count(part.membership[i].begin(), part.membership[i].end(), true) > 2) at_most_two = false;
    }
    const bool fills = covered == IntervalSet::interval(0, Rational(5, 2));
    return Json{{"colorable", true},
                {"coloring", *coloring},
                {"verified", report.ok()},
                {"at_most_two", at_most_two && fills},
                {"ok", report.ok() && at_most_two && fills}};
}

Json theorem1_check(const Graph& g) {
    auto f = fractional_vertex_arboricity(g);
    auto gi = girth(g);
    return Json{{"n", g.order()},
                {"girth", gi ? Json(*gi) : Json(nullptr)},
                {"fva", to_json(f.value)},
                {"bound", to_json(theorem_bound)},
                {"ok", f.value <= theorem_bound}};
}

Json combiner_check(const CombinerInstance& inst) {
    Json out{{"vertices", inst.graph.order()}, {"edges", inst.graph.size()}};
    try {
        auto phi = combine(inst.graph, inst.assignment, inst.schedule);
        auto report = verify(inst.graph, phi, VerifyMode::offshoot(inst.assignment.list_map(), inst.assignment.offshoot_map()));
        out["cells"] = cells(inst.graph, inst.assignment).size();
        out["verified"] = report.ok();
        out["ok"] = report.ok();
    } catch (const CombineError& e) {
        out["error"] = e.what();
        out["ok"] = false;
    }
    return out;
}

CorpusReport run_corpus(const CorpusOptions& options, const std::vector<CorpusItem>& items) {
    const std::string& suite = options.suite;
    std::function<Json(const Graph&)> check;
    if (suite == "chain") check = chain_check;
    else if (suite == "chif") check = chif_check;
    else if (suite == "lemma4") check = lemma4_check;
    else if (suite == "acyclic5") check = acyclic5_check;
    else if (suite == "theorem1") check = theorem1_check;
    else if (suite != "combiner") throw std::invalid_argument("unknown suite '" + suite + "'");

    std::vector<Json> results;
    std::vector<std::string> names;
    if (suite == "combiner") {
        std::mt19937_64 rng(options.seed);
        std::vector<CombinerInstance> instances;
        const std::size_t want = options.random_count ? options.random_count : 100;
        for (std::size_t attempts = 0; instances.size() < want && attempts < 1000 * want; ++attempts)
            if (auto inst = random_combiner_instance(rng)) instances.push_back(std::move(*inst));
        results.resize(instances.size());
        std::atomic<std::size_t> next{0};
        auto worker = [&] {
            for (std::size_t i; (i = next++) < instances.size();) results[i] = combiner_check(instances[i]);
        };
        unsigned t = options.threads ? options.threads : std::max(1u, std::thread::hardware_concurrency());
        std::vector<std::thread> pool;
        for (unsigned k = 0; k < t; ++k) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
        for (std::size_t i = 0; i < instances.size(); ++i) names.push_back("instance-" + std::to_string(i));
    } else {
        results.resize(items.size());
        std::atomic<std::size_t> next{0};
        auto worker = [&] {
            for (std::size_t i; (i = next++) < items.size();) {
                try {
                    results[i] = check(items[i].graph);
                } catch (const std::exception& e) {
                    results[i] = Json{{"error", e.what()}, {"ok", false}};
                }
            }
        };
        unsigned t = options.threads ? options.threads : std::max(1u, std::thread::hardware_concurrency());
        std::vector<std::thread> pool;
        for (unsigned k = 0; k < t; ++k) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
        for (const auto& it : items) names.push_back(it.name);
    }

    CorpusReport report;
    Json list = Json::array();
    for (std::size_t i = 0; i < results.size(); ++i) {
        Json entry{{"index", i}, {"graph", names[i]}};
        for (auto& [k, v] : results[i].items()) entry[k] = v;
        const auto& ok = results[i]["ok"];
        if (ok.is_null()) ++report.skipped;
        else if (ok.get<bool>()) ++report.passed;
        else ++report.failed;
        list.push_back(std::move(entry));
    }
    report.json = Json{{"suite", suite},
                       {"items", results.size()},
                       {"passed", report.passed},
                       {"failed", report.failed},
                       {"skipped", report.skipped},
                       {"results", list}};
    return report;
}

} // namespace fva
