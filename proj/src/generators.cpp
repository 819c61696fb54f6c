#include "fva/generators.hpp"

#include <algorithm>
#include <charconv>

#include "fva/graph6.hpp"

namespace fva {

namespace {

Graph cycle_graph(int n) {
    Graph g(n);
    for (Vertex i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
    return g;
}

// Generalised Petersen graph GP(n, k): outer n-cycle, spokes, inner star polygon.
Graph generalized_petersen(int n, int k) {
    Graph g(2 * n);
    for (Vertex i = 0; i < n; ++i) {
        g.add_edge(i, (i + 1) % n);
        g.add_edge(i, n + i);
        g.add_edge(n + i, n + (i + k) % n);
    }
    return g;
}

int require_size(std::string_view name, std::optional<int> size, int minimum) {
    if (!size) throw GraphError(std::string(name) + " requires a size");
    if (*size < minimum)
        throw GraphError(std::string(name) + " size must be at least " + std::to_string(minimum));
    return *size;
}

} // namespace

Graph named_graph(std::string_view name, std::optional<int> size) {
    if (name == "k4") return named_graph("complete", 4);
    if (name == "cube") {
        Graph g(8);
        for (Vertex v = 0; v < 8; ++v)
            for (int bit = 0; bit < 3; ++bit)
                if (Vertex w = v ^ (1 << bit); v < w) g.add_edge(v, w);
        return g;
    }
    if (name == "dodecahedron") return generalized_petersen(10, 2);
    if (name == "petersen") return generalized_petersen(5, 2);
    if (name == "gadget-a") return gadget_graph(GadgetKind::A).graph;
    if (name == "gadget-b") return gadget_graph(GadgetKind::B).graph;
    if (name == "cycle") return cycle_graph(require_size(name, size, 3));
    if (name == "path") {
        int n = require_size(name, size, 1);
        Graph g(n);
        for (Vertex i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
        return g;
    }
    if (name == "complete") {
        int n = require_size(name, size, 1);
        Graph g(n);
        for (Vertex i = 0; i < n; ++i)
            for (Vertex j = i + 1; j < n; ++j) g.add_edge(i, j);
        return g;
    }
    throw GraphError("unknown graph name '" + std::string(name) + "'");
}

Graph named_graph_spec(std::string_view spec) {
    auto colon = spec.find(':');
    if (colon == std::string_view::npos) return named_graph(spec);
    auto digits = spec.substr(colon + 1);
    int size = 0;
    auto [end, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), size);
    if (ec != std::errc() || end != digits.data() + digits.size())
        throw GraphError("bad size in '" + std::string(spec) + "'");
    return named_graph(spec.substr(0, colon), size);
}

Gadget gadget_graph(GadgetKind kind) {
    Gadget out;
    if (kind == GadgetKind::A) {
        constexpr Vertex v = 0, x = 15, y = 16, a = 17, b = 18, c = 19, d = 20;
        auto spoke = [](int i) { return static_cast<Vertex>(i); };
        auto far = [](int i) { return static_cast<Vertex>(7 + i); };
        Graph g(21);
        for (int i = 1; i <= 7; ++i) {
            g.add_edge(v, spoke(i));
            g.add_edge(spoke(i), far(i));
        }
        for (auto [p, q] : std::initializer_list<Edge>{
                 {v, x}, {v, y}, {x, a}, {a, b}, {b, y}, {far(1), a}, {x, c}, {c, far(2)},
                 {y, d}, {d, far(3)}, {far(4), far(5)}, {far(6), far(7)}})
            g.add_edge(p, q);
        out.graph = std::move(g);
        out.witness.kind = ConfigurationKind::effective_degree_two;
        out.witness.roles.push_back({"v", v});
        for (int i = 1; i <= 7; ++i) out.witness.roles.push_back({"u" + std::to_string(i), spoke(i)});
        for (int i = 1; i <= 7; ++i) out.witness.roles.push_back({"u'" + std::to_string(i), far(i)});
        out.witness.roles.push_back({"x", x});
        out.witness.roles.push_back({"y", y});
        return out;
    }

    constexpr Vertex v = 0, z = 3;
    Graph g(24);
    g.add_edge(v, 1);
    g.add_edge(v, 2);
    g.add_edge(v, z);
    out.witness.kind = ConfigurationKind::degree_three_two_light;
    out.witness.roles = {{"v", v}, {"v1", 1}, {"v2", 2}, {"z", z}};
    for (int i = 1; i <= 2; ++i) {
        const Vertex hub = i, base = 4 + (i - 1) * 10;
        const Vertex u = base, w = base + 1, uf = base + 2, wf = base + 3, xi = base + 4,
                     yi = base + 5, p = base + 6, q = base + 7, r = base + 8, s = base + 9;
        for (auto [a, b] : std::initializer_list<Edge>{
                 {hub, u}, {u, uf}, {hub, w}, {w, wf}, {hub, xi}, {hub, yi}, {xi, p}, {p, q},
                 {q, yi}, {uf, p}, {wf, q}, {xi, r}, {r, s}, {s, yi}, {z, r}})
            g.add_edge(a, b);
        auto idx = std::to_string(i);
        out.witness.roles.push_back({"u" + idx, u});
        out.witness.roles.push_back({"w" + idx, w});
        out.witness.roles.push_back({"u'" + idx, uf});
        out.witness.roles.push_back({"w'" + idx, wf});
        out.witness.roles.push_back({"x" + idx, xi});
        out.witness.roles.push_back({"y" + idx, yi});
    }
    out.graph = std::move(g);
    return out;
}

Graph random_connected_graph(int n, int extra_edges, std::mt19937_64& rng) {
    Graph g(n);
    if (n <= 1) return g;
    std::vector<Vertex> order(static_cast<std::size_t>(n));
    for (Vertex i = 0; i < n; ++i) order[i] = i;
    std::shuffle(order.begin(), order.end(), rng);
    for (int i = 1; i < n; ++i) {
        std::uniform_int_distribution<int> pick(0, i - 1);
        g.add_edge(order[i], order[pick(rng)]);
    }
    std::vector<Edge> missing;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex w = u + 1; w < n; ++w)
            if (!g.adjacent(u, w)) missing.emplace_back(u, w);
    std::shuffle(missing.begin(), missing.end(), rng);
    int take = std::min<int>(extra_edges, static_cast<int>(missing.size()));
    for (int i = 0; i < take; ++i) g.add_edge(missing[i].first, missing[i].second);
    return g;
}

} // namespace fva
