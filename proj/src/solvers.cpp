#include "fva/solvers.hpp"

#include <algorithm>
#include <deque>

#include "fva/structure.hpp"

namespace fva {
namespace {

// For each colour d, v's d-coloured neighbours must lie in distinct components of the {c, d} subgraph.
bool closes_bichromatic_cycle(const Graph& g, const std::vector<int>& color, Vertex v, int c) {
    std::vector<int> colours;
    for (Vertex u : g.neighbors(v))
        if (color[u] > 0 && color[u] != c) colours.push_back(color[u]);
    std::sort(colours.begin(), colours.end());
    std::vector<int> mark(static_cast<std::size_t>(g.order()), -1);
    for (std::size_t k = 0; k < colours.size(); ++k) {
        if (k + 1 >= colours.size() || colours[k + 1] != colours[k]) continue;
        if (k > 0 && colours[k - 1] == colours[k]) continue;
        const int d = colours[k];
        std::fill(mark.begin(), mark.end(), -1);
        int start = 0;
        for (Vertex s : g.neighbors(v)) {
            if (color[s] != d) continue;
            if (mark[s] >= 0) return true;
            std::deque<Vertex> queue{s};
            mark[s] = start;
            while (!queue.empty()) {
                Vertex x = queue.front();
                queue.pop_front();
                for (Vertex y : g.neighbors(x))
                    if (y != v && mark[y] < 0 && (color[y] == c || color[y] == d)) {
                        mark[y] = start;
                        queue.push_back(y);
                    }
            }
            ++start;
        }
    }
    return false;
}

// Vertex ordering: repeatedly pick the unplaced vertex with most placed neighbours, ties by degree then id.
std::vector<Vertex> search_order(const Graph& g) {
    const int n = g.order();
    std::vector<Vertex> order;
    std::vector<int> placed_nbrs(static_cast<std::size_t>(n), 0);
    std::vector<char> used(static_cast<std::size_t>(n), 0);
    for (int step = 0; step < n; ++step) {
        Vertex best = -1;
        for (Vertex v = 0; v < n; ++v) {
            if (used[v]) continue;
            if (best < 0 || placed_nbrs[v] > placed_nbrs[best] ||
                (placed_nbrs[v] == placed_nbrs[best] && g.degree(v) > g.degree(best)))
                best = v;
        }
        used[best] = 1;
        order.push_back(best);
        for (Vertex u : g.neighbors(best)) ++placed_nbrs[u];
    }
    return order;
}

class ForestPartition {
public:
    ForestPartition(const Graph& g, int k) : g_(g), k_(k), color_(static_cast<std::size_t>(g.order()), 0), order_(search_order(g)) {}

    bool run(std::size_t i, int used) {
        if (i == order_.size()) return true;
        const Vertex v = order_[i];
        for (int c = 1; c <= std::min(k_, used + 1); ++c) {
            if (creates_cycle(v, c)) continue;
            color_[v] = c;
            if (run(i + 1, std::max(used, c))) return true;
            color_[v] = 0;
        }
        return false;
    }
    const std::vector<int>& colors() const { return color_; }

private:
    // Two neighbours of v in class c already connected within class c.
    bool creates_cycle(Vertex v, int c) const {
        std::vector<int> mark(static_cast<std::size_t>(g_.order()), -1);
        int start = 0;
        for (Vertex s : g_.neighbors(v)) {
            if (color_[s] != c) continue;
            if (mark[s] >= 0) return true;
            std::deque<Vertex> queue{s};
            mark[s] = start;
            while (!queue.empty()) {
                Vertex x = queue.front();
                queue.pop_front();
                for (Vertex y : g_.neighbors(x))
                    if (y != v && color_[y] == c && mark[y] < 0) {
                        mark[y] = start;
                        queue.push_back(y);
                    }
            }
            ++start;
        }
        return false;
    }

    const Graph& g_;
    int k_;
    std::vector<int> color_;
    std::vector<Vertex> order_;
};

FractionalCoverResult fractional_cover(const Graph& g, bool forests, int cross_check_limit) {
    require_mask_capacity(g, forests ? "fractional_vertex_arboricity" : "fractional_chromatic_number");
    FractionalCoverResult out;
    if (g.order() == 0) {
        out.value = 0;
        out.pricing_bound = 0;
        out.enumeration_value = Rational(0);
        return out;
    }
    auto feasible = [&](VertexSet s) { return forests ? is_induced_forest(g, s) : is_independent_set(g, s); };
    auto pricing = [&](std::span<const Rational> y) {
        auto best = forests ? max_weight_induced_forest(g, y) : max_weight_independent_set(g, y);
        return std::pair{best.set, best.weight};
    };
    // Greedy maximal seed in id order.
    VertexSet seed;
    for (Vertex v = 0; v < g.order(); ++v) {
        VertexSet t = seed;
        t.insert(v);
        if (feasible(t)) seed = t;
    }
    std::vector<VertexSet> seeds{seed};
    auto cg = column_generation(g, pricing, feasible, seeds);
    out.value = cg.lp.value;
    out.dual = cg.lp.dual;
    out.pricing_bound = cg.pricing_bound;
    out.iterations = cg.iterations;
    out.columns = cg.columns.size();
    out.pricing_history = cg.pricing_history;
    for (std::size_t j = 0; j < cg.columns.size(); ++j)
        if (cg.lp.primal[j] > 0) out.cover.push_back({cg.columns[j], cg.lp.primal[j]});

    if (g.order() <= cross_check_limit) {
        auto all = forests ? enumerate_induced_forests(g, true) : enumerate_independent_sets(g, true);
        auto full = solve_exact(CoverLp{g.order(), all});
        out.enumeration_value = full.value;
        if (full.value != out.value)
            throw LpError("column generation value " + to_string(out.value) + " differs from enumeration value " +
                          to_string(full.value));
    }
    return out;
}

} // namespace

ColoringResult vertex_arboricity(const Graph& g) {
    ColoringResult out;
    if (g.order() == 0) return out;
    for (int k = 1;; ++k) {
        ForestPartition search(g, k);
        if (search.run(0, 0)) {
            out.colors = k;
            out.color = search.colors();
            return out;
        }
    }
}

std::optional<std::vector<int>> acyclic_coloring(const Graph& g, int k) {
    if (k < 0) throw GraphError("negative colour count");
    if (g.order() == 0) return std::vector<int>{};
    auto order = search_order(g);
    std::vector<int> color(static_cast<std::size_t>(g.order()), 0);
    auto rec = [&](auto&& self, std::size_t i, int used) -> bool {
        if (i == order.size()) return true;
        const Vertex v = order[i];
        for (int c = 1; c <= std::min(k, used + 1); ++c) {
            bool clash = false;
            for (Vertex u : g.neighbors(v))
                if (color[u] == c) clash = true;
            if (clash || closes_bichromatic_cycle(g, color, v, c)) continue;
            color[v] = c;
            if (self(self, i + 1, std::max(used, c))) return true;
            color[v] = 0;
        }
        return false;
    };
    if (rec(rec, 0, 0)) return color;
    return std::nullopt;
}

bool is_acyclic_coloring(const Graph& g, const std::vector<int>& color, int k) {
    if (color.size() != static_cast<std::size_t>(g.order())) return false;
    for (int c : color)
        if (c < 1 || c > k) return false;
    for (auto [u, v] : g.edges())
        if (color[u] == color[v]) return false;
    for (int a = 1; a <= k; ++a)
        for (int b = a + 1; b <= k; ++b) {
            std::vector<Vertex> s;
            for (Vertex v = 0; v < g.order(); ++v)
                if (color[v] == a || color[v] == b) s.push_back(v);
            if (!is_induced_forest(g, s)) return false;
        }
    return true;
}

FractionalCoverResult fractional_vertex_arboricity(const Graph& g, int cross_check_limit) {
    return fractional_cover(g, true, cross_check_limit);
}

FractionalCoverResult fractional_chromatic_number(const Graph& g, int cross_check_limit) {
    return fractional_cover(g, false, cross_check_limit);
}

FractionalArborization arborization_from_acyclic5(const Graph& g, const std::vector<int>& color) {
    if (!is_acyclic_coloring(g, color, 5)) throw ArborizationError("not an acyclic 5-colouring");
    const Rational half(1, 2);
    const IntervalSet pieces[5] = {
        IntervalSet::interval(0, 1),
        IntervalSet::interval(1, 2),
        IntervalSet::interval(2, Rational(5, 2)) | IntervalSet::interval(0, half),
        IntervalSet::interval(half, Rational(3, 2)),
        IntervalSet::interval(Rational(3, 2), Rational(5, 2)),
    };
    FractionalArborization out;
    for (Vertex v = 0; v < g.order(); ++v) out.sets[v] = pieces[color[v] - 1];
    return out;
}

FractionalArborization arborization_from_cover(const Graph& g, const std::vector<WeightedSet>& cover) {
    std::vector<IntervalSet> acc(static_cast<std::size_t>(g.order()));
    Rational start = 0;
    for (const auto& [set, w] : cover) {
        if (w < 0) throw ArborizationError("negative cover weight");
        if (!is_induced_forest(g, set)) throw ArborizationError("cover column is not an induced forest");
        auto piece = IntervalSet::interval(start, start + w);
        for (Vertex v : set.members()) acc[v] = acc[v] | piece;
        start += w;
    }
    FractionalArborization out;
    for (Vertex v = 0; v < g.order(); ++v) {
        if (acc[v].measure() < 1)
            throw ArborizationError("vertex " + std::to_string(v) + " is covered with weight below 1");
        out.sets[v] = acc[v].prefix(1);
    }
    return out;
}

} // namespace fva
