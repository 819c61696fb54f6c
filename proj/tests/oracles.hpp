#pragma once

// Brute-force reference implementations used only by the tests.

#include <algorithm>
#include <cstdint>
#include <deque>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <vector>

#include "fva/graph.hpp"
#include "fva/interval_set.hpp"
#include "fva/rational.hpp"

namespace oracle {

using fva::Graph;
using fva::Rational;
using fva::Vertex;

// Cycle detection by depth-first search with parent tracking.
inline bool is_forest(const Graph& g, std::uint64_t mask) {
    const int n = g.order();
    std::vector<int> state(static_cast<std::size_t>(n), 0);
    std::function<bool(Vertex, Vertex)> dfs = [&](Vertex v, Vertex parent) {
        state[v] = 1;
        for (Vertex u : g.neighbors(v)) {
            if (!((mask >> u) & 1u) || u == parent) continue;
            if (state[u]) return false;
            if (!dfs(u, v)) return false;
        }
        return true;
    };
    for (Vertex v = 0; v < n; ++v)
        if (((mask >> v) & 1u) && !state[v] && !dfs(v, -1)) return false;
    return true;
}

inline bool is_independent(const Graph& g, std::uint64_t mask) {
    for (auto [u, v] : g.edges())
        if (((mask >> u) & 1u) && ((mask >> v) & 1u)) return false;
    return true;
}

inline int max_forest(const Graph& g) {
    int best = 0;
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << g.order()); ++m)
        if (std::popcount(m) > best && is_forest(g, m)) best = std::popcount(m);
    return best;
}

inline Rational max_weight(const Graph& g, const std::vector<Rational>& w, bool forest) {
    Rational best = 0;
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << g.order()); ++m) {
        if (forest ? !is_forest(g, m) : !is_independent(g, m)) continue;
        Rational s = 0;
        for (Vertex v = 0; v < g.order(); ++v)
            if ((m >> v) & 1u) s += w[v];
        best = std::max(best, s);
    }
    return best;
}

// Shortest cycle through each edge: distance between its ends without the edge, plus one.
inline std::optional<int> girth(const Graph& g) {
    std::optional<int> best;
    for (auto [a, b] : g.edges()) {
        std::vector<int> dist(static_cast<std::size_t>(g.order()), -1);
        std::deque<Vertex> q{a};
        dist[a] = 0;
        while (!q.empty()) {
            Vertex x = q.front();
            q.pop_front();
            for (Vertex y : g.neighbors(x)) {
                if ((x == a && y == b) || (x == b && y == a) || dist[y] >= 0) continue;
                dist[y] = dist[x] + 1;
                q.push_back(y);
            }
        }
        if (dist[b] >= 0 && (!best || dist[b] + 1 < *best)) best = dist[b] + 1;
    }
    return best;
}

// Smallest k admitting a partition into k induced forests, by trying all colourings.
inline int vertex_arboricity(const Graph& g) {
    const int n = g.order();
    if (n == 0) return 0;
    for (int k = 1;; ++k) {
        std::vector<int> c(static_cast<std::size_t>(n), 0);
        for (;;) {
            bool good = true;
            for (int col = 0; col < k && good; ++col) {
                std::uint64_t m = 0;
                for (Vertex v = 0; v < n; ++v)
                    if (c[v] == col) m |= std::uint64_t{1} << v;
                good = is_forest(g, m);
            }
            if (good) return k;
            int i = 0;
            while (i < n && ++c[i] == k) c[i++] = 0;
            if (i == n) break;
        }
    }
}

inline bool has_acyclic_coloring(const Graph& g, int k) {
    const int n = g.order();
    std::vector<int> c(static_cast<std::size_t>(n), 0);
    for (;;) {
        bool good = true;
        for (auto [u, v] : g.edges())
            if (c[u] == c[v]) good = false;
        for (int a = 0; a < k && good; ++a)
            for (int b = a + 1; b < k && good; ++b) {
                std::uint64_t m = 0;
                for (Vertex v = 0; v < n; ++v)
                    if (c[v] == a || c[v] == b) m |= std::uint64_t{1} << v;
                good = is_forest(g, m);
            }
        if (good) return true;
        int i = 0;
        while (i < n && ++c[i] == k) c[i++] = 0;
        if (i == n) return false;
    }
}

// Solves A x = b exactly; returns nullopt when singular.
inline std::optional<std::vector<Rational>> solve_linear(std::vector<std::vector<Rational>> a, std::vector<Rational> b) {
    const std::size_t n = b.size();
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && a[piv][col] == 0) ++piv;
        if (piv == n) return std::nullopt;
        std::swap(a[piv], a[col]);
        std::swap(b[piv], b[col]);
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col || a[r][col] == 0) continue;
            Rational f = a[r][col] / a[col][col];
            for (std::size_t k = col; k < n; ++k) a[r][k] -= f * a[col][k];
            b[r] -= f * b[col];
        }
    }
    for (std::size_t i = 0; i < n; ++i) b[i] /= a[i][i];
    return b;
}

// min 1.x subject to A x >= 1, x >= 0 by enumerating every choice of m tight constraints.
inline Rational cover_lp_by_vertices(int rows, const std::vector<std::uint64_t>& columns) {
    const std::size_t m = columns.size();
    const std::size_t total = m + static_cast<std::size_t>(rows);
    std::optional<Rational> best;
    std::vector<int> pick(m);
    std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t start, std::size_t depth) {
        if (depth == m) {
            std::vector<std::vector<Rational>> a;
            std::vector<Rational> b;
            for (std::size_t i = 0; i < m; ++i) {
                std::vector<Rational> row(m, Rational(0));
                if (pick[i] < static_cast<int>(m)) {
                    row[pick[i]] = 1;
                    b.push_back(0);
                } else {
                    const int v = pick[i] - static_cast<int>(m);
                    for (std::size_t j = 0; j < m; ++j)
                        if ((columns[j] >> v) & 1u) row[j] = 1;
                    b.push_back(1);
                }
                a.push_back(row);
            }
            auto x = solve_linear(a, b);
            if (!x) return;
            for (const auto& xi : *x)
                if (xi < 0) return;
            for (int v = 0; v < rows; ++v) {
                Rational cover = 0;
                for (std::size_t j = 0; j < m; ++j)
                    if ((columns[j] >> v) & 1u) cover += (*x)[j];
                if (cover < 1) return;
            }
            Rational obj = 0;
            for (const auto& xi : *x) obj += xi;
            if (!best || obj < *best) best = obj;
            return;
        }
        for (std::size_t c = start; c < total; ++c) {
            pick[depth] = static_cast<int>(c);
            rec(c + 1, depth + 1);
        }
    };
    rec(0, 0);
    return *best;
}

// Point membership by scanning the stored pieces.
inline bool member(const fva::IntervalSet& s, const Rational& x) {
    for (const auto& iv : s.intervals())
        if (iv.lo <= x && x < iv.hi) return true;
    return false;
}

inline Graph random_graph(int n, double p, std::mt19937_64& rng) {
    Graph g(n);
    std::bernoulli_distribution coin(p);
    for (Vertex a = 0; a < n; ++a)
        for (Vertex b = a + 1; b < n; ++b)
            if (coin(rng)) g.add_edge(a, b);
    return g;
}

inline fva::IntervalSet random_interval_set(std::mt19937_64& rng, int denominator = 12, int span = 24) {
    std::vector<fva::Interval> pieces;
    std::uniform_int_distribution<int> count(0, 4), pos(0, span);
    for (int k = count(rng); k > 0; --k) {
        int a = pos(rng), b = pos(rng);
        if (a > b) std::swap(a, b);
        pieces.push_back({Rational(a, denominator), Rational(b, denominator)});
    }
    return fva::IntervalSet::from(pieces);
}

// Pointwise check of an (L, o)-arborization at every breakpoint midpoint: each
// level set is a forest and no component of a level set holds two vertices
// whose offshoot sets contain the point. Vertices missing from `offshoots`
// have empty offshoot sets.
inline bool lo_arborization_ok(const Graph& g, const std::map<Vertex, fva::IntervalSet>& sets,
                               const std::map<Vertex, fva::IntervalSet>& offshoots) {
    std::vector<Rational> cuts;
    for (const auto* family : {&sets, &offshoots})
        for (const auto& [v, s] : *family)
            for (const auto& iv : s.intervals()) {
                cuts.push_back(iv.lo);
                cuts.push_back(iv.hi);
            }
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
        const Rational x = (cuts[i] + cuts[i + 1]) / 2;
        std::uint64_t level = 0;
        for (const auto& [v, s] : sets)
            if (member(s, x)) level |= std::uint64_t{1} << v;
        if (!is_forest(g, level)) return false;
        std::uint64_t seen = 0;
        for (Vertex r = 0; r < g.order(); ++r) {
            if (!((level >> r) & 1u) || ((seen >> r) & 1u)) continue;
            int marked = 0;
            std::deque<Vertex> q{r};
            seen |= std::uint64_t{1} << r;
            while (!q.empty()) {
                Vertex a = q.front();
                q.pop_front();
                auto it = offshoots.find(a);
                if (it != offshoots.end() && member(it->second, x)) ++marked;
                for (Vertex b : g.neighbors(a))
                    if (((level >> b) & 1u) && !((seen >> b) & 1u)) {
                        seen |= std::uint64_t{1} << b;
                        q.push_back(b);
                    }
            }
            if (marked >= 2) return false;
        }
    }
    return true;
}

} // namespace oracle
