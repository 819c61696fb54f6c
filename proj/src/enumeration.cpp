#include <algorithm>
#include <map>
#include <set>

#include "fva/generators.hpp"
#include "fva/graph6.hpp"

namespace fva {

namespace {

using Cells = std::vector<std::vector<Vertex>>;

// Equitable refinement: split cells by neighbour counts into each cell until stable.
void refine(const Graph& g, Cells& cells) {
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t s = 0; s < cells.size() && !changed; ++s) {
            std::vector<int> in_splitter(static_cast<std::size_t>(g.order()), 0);
            for (Vertex w : cells[s])
                for (Vertex u : g.neighbors(w)) ++in_splitter[u];
            Cells next;
            next.reserve(cells.size());
            for (auto& cell : cells) {
                if (cell.size() == 1) {
                    next.push_back(cell);
                    continue;
                }
                std::map<int, std::vector<Vertex>> parts;
                for (Vertex u : cell) parts[in_splitter[u]].push_back(u);
                if (parts.size() > 1) changed = true;
                for (auto& [count, part] : parts) next.push_back(std::move(part));
            }
            cells = std::move(next);
        }
    }
}

std::string relabelled_bits(const Graph& g, const Cells& cells) {
    std::vector<Vertex> label(static_cast<std::size_t>(g.order()));
    for (std::size_t i = 0; i < cells.size(); ++i) label[cells[i][0]] = static_cast<Vertex>(i);
    std::vector<Vertex> at(static_cast<std::size_t>(g.order()));
    for (Vertex v = 0; v < g.order(); ++v) at[label[v]] = v;
    std::string bits;
    bits.reserve(static_cast<std::size_t>(g.order() * (g.order() - 1) / 2));
    for (Vertex j = 1; j < g.order(); ++j)
        for (Vertex i = 0; i < j; ++i) bits.push_back(g.adjacent(at[i], at[j]) ? '1' : '0');
    return bits;
}

void search(const Graph& g, Cells cells, std::string& best, Cells& best_cells) {
    refine(g, cells);
    auto target = std::find_if(cells.begin(), cells.end(), [](const auto& c) { return c.size() > 1; });
    if (target == cells.end()) {
        auto bits = relabelled_bits(g, cells);
        if (best.empty() || bits < best) {
            best = std::move(bits);
            best_cells = cells;
        }
        return;
    }
    std::size_t index = static_cast<std::size_t>(target - cells.begin());
    for (Vertex pick : cells[index]) {
        Cells branch;
        branch.reserve(cells.size() + 1);
        for (std::size_t i = 0; i < cells.size(); ++i) {
            if (i != index) {
                branch.push_back(cells[i]);
                continue;
            }
            branch.push_back({pick});
            std::vector<Vertex> rest;
            for (Vertex u : cells[i])
                if (u != pick) rest.push_back(u);
            branch.push_back(std::move(rest));
        }
        search(g, std::move(branch), best, best_cells);
    }
}

} // namespace

std::string canonical_graph6(const Graph& g) {
    if (g.order() <= 1) return encode_graph6(g);
    // Initial partition by degree keeps the search small.
    std::map<int, std::vector<Vertex>> by_degree;
    for (Vertex v = 0; v < g.order(); ++v) by_degree[g.degree(v)].push_back(v);
    Cells cells;
    for (auto& [d, part] : by_degree) cells.push_back(std::move(part));
    std::string best;
    Cells best_cells;
    search(g, std::move(cells), best, best_cells);

    std::vector<Vertex> at;
    for (const auto& c : best_cells) at.push_back(c[0]);
    return encode_graph6(induced_subgraph(g, at).graph);
}

namespace {

std::vector<Graph> extend_level(const std::vector<Graph>& level, int m) {
    std::set<std::string> seen;
    for (const Graph& base : level) {
        const int k = base.order();
        for (std::uint32_t mask = 1; mask < (1u << k); ++mask) {
            Graph g(m);
            for (auto [a, b] : base.edges()) g.add_edge(a, b);
            for (Vertex u = 0; u < k; ++u)
                if ((mask >> u) & 1u) g.add_edge(u, k);
            seen.insert(canonical_graph6(g));
        }
    }
    std::vector<Graph> next;
    for (const auto& s : seen) next.push_back(decode_graph6(s));
    return next;
}

} // namespace

std::vector<Graph> connected_graphs(int n) {
    if (n < 1) return {};
    std::vector<Graph> level{Graph(1)};
    for (int m = 2; m <= n; ++m) level = extend_level(level, m);
    return level;
}

std::vector<Graph> connected_graphs_up_to(int max_n) {
    std::vector<Graph> all;
    if (max_n < 1) return all;
    std::vector<Graph> level{Graph(1)};
    all.push_back(level.front());
    for (int m = 2; m <= max_n; ++m) {
        level = extend_level(level, m);
        all.insert(all.end(), level.begin(), level.end());
    }
    return all;
}

} // namespace fva
