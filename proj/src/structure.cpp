#include "fva/structure.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <set>

namespace fva {

int effective_degree(const Graph& g, Vertex v) {
    int count = 0;
    for (Vertex w : g.neighbors(v))
        if (g.degree(w) >= 3) ++count;
    return count;
}

bool is_light(const Graph& g, Vertex v) {
    return effective_degree(g, v) <= 3 && g.degree(v) <= 5;
}

std::optional<int> girth(const Graph& g) {
    const int n = g.order();
    int best = -1;
    std::vector<int> dist(static_cast<std::size_t>(n)), parent(static_cast<std::size_t>(n));
    for (Vertex root = 0; root < n; ++root) {
        std::fill(dist.begin(), dist.end(), -1);
        std::queue<Vertex> queue;
        dist[root] = 0;
        parent[root] = -1;
        queue.push(root);
        while (!queue.empty()) {
            Vertex u = queue.front();
            queue.pop();
            if (best != -1 && 2 * dist[u] + 1 >= best) break;
            for (Vertex w : g.neighbors(u)) {
                if (dist[w] == -1) {
                    dist[w] = dist[u] + 1;
                    parent[w] = u;
                    queue.push(w);
                } else if (parent[u] != w) {
                    int len = dist[u] + dist[w] + 1;
                    if (best == -1 || len < best) best = len;
                }
            }
        }
    }
    if (best == -1) return std::nullopt;
    return best;
}

Rational average_degree(const Graph& g) {
    if (g.order() == 0) return Rational(0);
    return Rational(2 * static_cast<long>(g.size())) / Rational(g.order());
}

StructuralStats structural_stats(const Graph& g) {
    StructuralStats s;
    for (Vertex v = 0; v < g.order(); ++v) {
        s.degrees.push_back(g.degree(v));
        s.effective_degrees.push_back(effective_degree(g, v));
        s.light.push_back(is_light(g, v));
    }
    s.girth = girth(g);
    s.average_degree = average_degree(g);
    return s;
}

namespace {

struct DisjointSets {
    explicit DisjointSets(int n) : parent(static_cast<std::size_t>(n)) {
        std::iota(parent.begin(), parent.end(), 0);
    }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        parent[a] = b;
        return true;
    }
    std::vector<int> parent;
};

} // namespace

bool is_induced_forest(const Graph& g, std::span<const Vertex> s) {
    std::vector<bool> in(static_cast<std::size_t>(g.order()), false);
    for (Vertex v : s) in[v] = true;
    DisjointSets ds(g.order());
    std::size_t edges = 0, vertices = 0, merges = 0;
    for (Vertex u = 0; u < g.order(); ++u) {
        if (!in[u]) continue;
        ++vertices;
        for (Vertex w : g.neighbors(u)) {
            if (w > u && in[w]) {
                ++edges;
                if (ds.unite(u, w)) ++merges;
            }
        }
    }
    // components = vertices - merges; forest iff edges == vertices - components
    return edges == merges;
}

bool is_induced_forest(const Graph& g, VertexSet s) {
    auto members = s.members();
    return is_induced_forest(g, members);
}

bool is_independent_set(const Graph& g, VertexSet s) {
    for (Vertex v : s.members())
        for (Vertex w : g.neighbors(v))
            if (s.contains(w)) return false;
    return true;
}

bool satisfies_euler_bound(const Graph& g, int assumed_girth) {
    if (assumed_girth < 3) throw GraphError("girth bound must be at least 3");
    if (g.order() < 3) return true;
    // |E| * (g - 2) <= g * (n - 2)
    return static_cast<long>(g.size()) * (assumed_girth - 2) <=
           static_cast<long>(assumed_girth) * (g.order() - 2);
}

std::string_view to_string(ConfigurationKind kind) {
    switch (kind) {
    case ConfigurationKind::degree_at_most_one: return "degree-at-most-one";
    case ConfigurationKind::adjacent_degree_twos: return "adjacent-degree-twos";
    case ConfigurationKind::effective_degree_two: return "effective-degree-two";
    case ConfigurationKind::degree_three_two_light: return "degree-three-two-light";
    }
    return "unknown";
}

std::optional<Vertex> ConfigurationWitness::find(std::string_view label) const {
    for (const auto& r : roles)
        if (r.label == label) return r.vertex;
    return std::nullopt;
}

Vertex ConfigurationWitness::at(std::string_view label) const {
    if (auto v = find(label)) return *v;
    throw GraphError("witness has no role '" + std::string(label) + "'");
}

std::vector<Vertex> ConfigurationWitness::vertices() const {
    std::vector<Vertex> out;
    for (const auto& r : roles) out.push_back(r.vertex);
    return out;
}

namespace {

bool valid_vertex(const Graph& g, Vertex v) { return v >= 0 && v < g.order(); }

// Degree-two neighbour `u` of `hub` whose far end is `far`.
bool is_thread(const Graph& g, Vertex hub, Vertex u, Vertex far) {
    return g.degree(u) == 2 && g.adjacent(hub, u) && g.adjacent(u, far) && far != hub;
}

} // namespace

bool witness_matches(const Graph& g, const ConfigurationWitness& w) {
    for (const auto& r : w.roles)
        if (!valid_vertex(g, r.vertex)) return false;
    auto v = w.find("v");
    if (!v) return false;
    switch (w.kind) {
    case ConfigurationKind::degree_at_most_one:
        return g.degree(*v) <= 1;
    case ConfigurationKind::adjacent_degree_twos: {
        auto u = w.find("u");
        return u && g.degree(*v) == 2 && g.degree(*u) == 2 && g.adjacent(*v, *u);
    }
    case ConfigurationKind::effective_degree_two: {
        if (effective_degree(g, *v) > 2 || g.degree(*v) < 3 || g.degree(*v) > 9) return false;
        std::set<Vertex> seen;
        int spokes = 0;
        for (int i = 1;; ++i) {
            auto u = w.find("u" + std::to_string(i));
            if (!u) break;
            auto far = w.find("u'" + std::to_string(i));
            if (!far || !is_thread(g, *v, *u, *far)) return false;
            seen.insert(*u);
            ++spokes;
        }
        int others = 0;
        for (const char* label : {"x", "y"}) {
            if (auto x = w.find(label)) {
                if (!g.adjacent(*v, *x) || seen.count(*x)) return false;
                seen.insert(*x);
                ++others;
            }
        }
        for (int i = 1;; ++i) {
            auto leaf = w.find("l" + std::to_string(i));
            if (!leaf) break;
            if (!g.adjacent(*v, *leaf) || g.degree(*leaf) > 1 || seen.count(*leaf)) return false;
            seen.insert(*leaf);
            ++others;
        }
        return spokes + others == g.degree(*v);
    }
    case ConfigurationKind::degree_three_two_light: {
        auto v1 = w.find("v1"), v2 = w.find("v2"), z = w.find("z");
        if (!v1 || !v2 || !z || g.degree(*v) != 3) return false;
        if (!g.adjacent(*v, *v1) || !g.adjacent(*v, *v2) || !g.adjacent(*v, *z)) return false;
        if (!is_light(g, *v1) || !is_light(g, *v2)) return false;
        for (int i = 1; i <= 2; ++i) {
            Vertex hub = i == 1 ? *v1 : *v2;
            auto idx = std::to_string(i);
            int count = 1;  // v itself
            for (const char* t : {"u", "w"}) {
                auto u = w.find(t + idx);
                if (!u) continue;
                auto far = w.find(std::string(t) + "'" + idx);
                if (!far || !is_thread(g, hub, *u, *far)) return false;
                ++count;
            }
            for (const char* t : {"x", "y"}) {
                auto x = w.find(t + idx);
                if (!x) continue;
                if (!g.adjacent(hub, *x)) return false;
                ++count;
            }
            for (int k = 1;; ++k) {
                auto e = w.find("e" + idx + "_" + std::to_string(k));
                if (!e) break;
                if (!g.adjacent(hub, *e)) return false;
                ++count;
            }
            if (count != g.degree(hub)) return false;
        }
        return true;
    }
    }
    return false;
}

} // namespace fva
