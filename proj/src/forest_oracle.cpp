#include "fva/forest_oracle.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

#include "fva/structure.hpp"

namespace fva {
namespace {

class RollbackDsu {
public:
    explicit RollbackDsu(int n) : parent_(n), rank_(n, 0) { std::iota(parent_.begin(), parent_.end(), 0); }

    int find(int x) const {
        while (parent_[x] != x) x = parent_[x];
        return x;
    }
    void unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (rank_[a] < rank_[b]) std::swap(a, b);
        history_.push_back({b, rank_[a] == rank_[b] ? a : -1});
        parent_[b] = a;
        if (rank_[a] == rank_[b]) ++rank_[a];
    }
    std::size_t mark() const { return history_.size(); }
    void rollback(std::size_t m) {
        while (history_.size() > m) {
            auto [child, bumped] = history_.back();
            history_.pop_back();
            if (bumped >= 0) --rank_[bumped];
            parent_[child] = child;
        }
    }

private:
    std::vector<int> parent_;
    std::vector<int> rank_;
    std::vector<std::pair<int, int>> history_;
};

std::vector<std::uint64_t> neighbor_masks(const Graph& g) {
    std::vector<std::uint64_t> m(static_cast<std::size_t>(g.order()), 0);
    for (Vertex v = 0; v < g.order(); ++v)
        for (Vertex u : g.neighbors(v)) m[v] |= std::uint64_t{1} << u;
    return m;
}

template <class W>
struct Search {
    const Graph& g;
    std::vector<Vertex> order;
    std::vector<W> weight;  // by vertex
    std::vector<W> suffix;  // by position in order
    std::vector<std::uint64_t> nbr;
    bool forest;

    RollbackDsu dsu;
    std::uint64_t current = 0;
    std::uint64_t best_set = 0;
    W best = 0;

    Search(const Graph& graph, std::vector<Vertex> ord, std::vector<W> w, bool forest_mode)
        : g(graph), order(std::move(ord)), weight(std::move(w)), nbr(neighbor_masks(graph)),
          forest(forest_mode), dsu(graph.order()) {
        suffix.assign(order.size() + 1, W(0));
        for (std::size_t i = order.size(); i-- > 0;) suffix[i] = suffix[i + 1] + weight[order[i]];
    }

    W remaining_independent(std::size_t i) const {
        W total = 0;
        for (std::size_t k = i; k < order.size(); ++k)
            if ((nbr[order[k]] & current) == 0) total += weight[order[k]];
        return total;
    }

    void run(std::size_t i, const W& value) {
        if (i == order.size()) {
            if (value > best) {
                best = value;
                best_set = current;
            }
            return;
        }
        if (value + (forest ? suffix[i] : remaining_independent(i)) <= best) return;
        const Vertex v = order[i];
        const std::uint64_t bit = std::uint64_t{1} << v;
        if (forest) {
            std::uint64_t inside = nbr[v] & current;
            bool ok = true;
            std::vector<int> roots;
            while (inside) {
                int u = std::countr_zero(inside);
                inside &= inside - 1;
                int r = dsu.find(u);
                if (std::find(roots.begin(), roots.end(), r) != roots.end()) {
                    ok = false;
                    break;
                }
                roots.push_back(r);
            }
            if (ok) {
                auto m = dsu.mark();
                for (int r : roots) dsu.unite(v, r);
                current |= bit;
                run(i + 1, value + weight[v]);
                current &= ~bit;
                dsu.rollback(m);
            }
        } else if ((nbr[v] & current) == 0) {
            current |= bit;
            run(i + 1, value + weight[v]);
            current &= ~bit;
        }
        run(i + 1, value);
    }
};

template <class W>
std::uint64_t run_search(const Graph& g, const std::vector<Vertex>& order, std::vector<W> w, bool forest) {
    Search<W> s(g, order, std::move(w), forest);
    s.run(0, W(0));
    return s.best_set;
}

WeightedSet max_weight_set(const Graph& g, std::span<const Rational> weights, bool forest) {
    require_mask_capacity(g, forest ? "max_weight_induced_forest" : "max_weight_independent_set");
    if (weights.size() != static_cast<std::size_t>(g.order())) throw GraphError("one weight per vertex is required");
    BigInt scale = 1;
    for (const auto& w : weights) {
        if (w < 0) throw GraphError("weights must be non-negative");
        BigInt d = denominator_of(w);
        scale = scale / boost::multiprecision::gcd(scale, d) * d;
    }
    std::vector<BigInt> scaled;
    std::vector<Vertex> order;
    BigInt total = 0;
    for (Vertex v = 0; v < g.order(); ++v) {
        scaled.push_back(numerator_of(weights[v]) * (scale / denominator_of(weights[v])));
        total += scaled.back();
        if (weights[v] > 0) order.push_back(v);
    }
    std::stable_sort(order.begin(), order.end(), [&](Vertex a, Vertex b) { return scaled[a] > scaled[b]; });

    std::uint64_t bits;
    if (total <= BigInt(std::numeric_limits<std::int64_t>::max() / 2)) {
        std::vector<std::int64_t> w;
        for (const auto& x : scaled) w.push_back(x.convert_to<std::int64_t>());
        bits = run_search(g, order, std::move(w), forest);
    } else {
        bits = run_search(g, order, scaled, forest);
    }
    WeightedSet out{VertexSet(bits), Rational(0)};
    for (Vertex v : out.set.members()) out.weight += weights[v];
    return out;
}

template <class Accept>
void enumerate(const Graph& g, bool maximal_only, int limit, const char* what, Accept accept_extension,
               std::vector<VertexSet>& out) {
    if (g.order() > limit) throw GraphError(std::string(what) + ": graph exceeds the enumeration limit");
    require_mask_capacity(g, what);
    const int n = g.order();
    std::uint64_t current = 0;
    auto rec = [&](auto&& self, int v) -> void {
        if (v == n) {
            if (maximal_only) {
                for (Vertex u = 0; u < n; ++u)
                    if (!((current >> u) & 1u) && accept_extension(current, u)) return;
            }
            out.push_back(VertexSet(current));
            return;
        }
        if (accept_extension(current, v)) {
            current |= std::uint64_t{1} << v;
            self(self, v + 1);
            current &= ~(std::uint64_t{1} << v);
        }
        self(self, v + 1);
    };
    rec(rec, 0);
    std::sort(out.begin(), out.end());
}

} // namespace

WeightedSet max_weight_induced_forest(const Graph& g, std::span<const Rational> weights) {
    return max_weight_set(g, weights, true);
}

WeightedSet max_weight_independent_set(const Graph& g, std::span<const Rational> weights) {
    return max_weight_set(g, weights, false);
}

int max_induced_forest_size(const Graph& g) {
    std::vector<Rational> ones(static_cast<std::size_t>(g.order()), Rational(1));
    return max_weight_induced_forest(g, ones).set.size();
}

std::vector<VertexSet> enumerate_induced_forests(const Graph& g, bool maximal_only, int limit) {
    std::vector<VertexSet> out;
    enumerate(g, maximal_only, limit, "enumerate_induced_forests",
              [&](std::uint64_t cur, Vertex v) {
                  VertexSet s(cur);
                  s.insert(v);
                  return is_induced_forest(g, s);
              },
              out);
    return out;
}

std::vector<VertexSet> enumerate_independent_sets(const Graph& g, bool maximal_only, int limit) {
    if (g.order() > limit) throw GraphError("enumerate_independent_sets: graph exceeds the enumeration limit");
    require_mask_capacity(g, "enumerate_independent_sets");
    auto nbr = neighbor_masks(g);
    std::vector<VertexSet> out;
    enumerate(g, maximal_only, limit, "enumerate_independent_sets",
              [&](std::uint64_t cur, Vertex v) { return (nbr[v] & cur) == 0; }, out);
    return out;
}

} // namespace fva
