#include "fva/graph.hpp"

#include <algorithm>

namespace fva {

Graph::Graph(int n) {
    if (n < 0) throw GraphError("negative vertex count");
    adj_.resize(static_cast<std::size_t>(n));
}

Graph::Graph(int n, std::span<const Edge> edges) : Graph(n) {
    for (auto [u, v] : edges) {
        if (!add_edge(u, v))
            throw GraphError("parallel edge " + std::to_string(u) + "-" + std::to_string(v));
    }
}

void Graph::check_vertex(Vertex v) const {
    if (v < 0 || v >= order())
        throw GraphError("vertex " + std::to_string(v) + " out of range");
}

bool Graph::add_edge(Vertex u, Vertex v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw GraphError("self-loop at " + std::to_string(u));
    auto& au = adj_[u];
    auto it = std::lower_bound(au.begin(), au.end(), v);
    if (it != au.end() && *it == v) return false;
    au.insert(it, v);
    auto& av = adj_[v];
    av.insert(std::lower_bound(av.begin(), av.end(), u), u);
    ++edge_count_;
    return true;
}

bool Graph::adjacent(Vertex u, Vertex v) const {
    const auto& au = adj_[u];
    return std::binary_search(au.begin(), au.end(), v);
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(edge_count_);
    for (Vertex u = 0; u < order(); ++u)
        for (Vertex v : adj_[u])
            if (u < v) out.emplace_back(u, v);
    return out;
}

InducedSubgraph induced_subgraph(const Graph& g, std::span<const Vertex> keep) {
    std::vector<Vertex> local(static_cast<std::size_t>(g.order()), -1);
    InducedSubgraph sub{Graph(static_cast<int>(keep.size())), {}};
    sub.original.assign(keep.begin(), keep.end());
    for (std::size_t i = 0; i < keep.size(); ++i) {
        if (keep[i] < 0 || keep[i] >= g.order()) throw GraphError("vertex out of range");
        if (local[keep[i]] != -1) throw GraphError("duplicate vertex in subset");
        local[keep[i]] = static_cast<Vertex>(i);
    }
    for (std::size_t i = 0; i < keep.size(); ++i)
        for (Vertex w : g.neighbors(keep[i]))
            if (local[w] > static_cast<Vertex>(i)) sub.graph.add_edge(static_cast<Vertex>(i), local[w]);
    return sub;
}

InducedSubgraph delete_vertices(const Graph& g, std::span<const Vertex> removed) {
    std::vector<bool> gone(static_cast<std::size_t>(g.order()), false);
    for (Vertex v : removed) {
        if (v < 0 || v >= g.order()) throw GraphError("vertex out of range");
        gone[v] = true;
    }
    std::vector<Vertex> keep;
    for (Vertex v = 0; v < g.order(); ++v)
        if (!gone[v]) keep.push_back(v);
    return induced_subgraph(g, keep);
}

VertexSet VertexSet::from(std::span<const Vertex> vs) {
    VertexSet s;
    for (Vertex v : vs) {
        if (v < 0 || v >= capacity) throw GraphError("vertex outside VertexSet capacity");
        s.insert(v);
    }
    return s;
}

std::vector<Vertex> VertexSet::members() const {
    std::vector<Vertex> out;
    out.reserve(static_cast<std::size_t>(size()));
    for (std::uint64_t b = bits_; b != 0; b &= b - 1) out.push_back(std::countr_zero(b));
    return out;
}

std::strong_ordering VertexSet::operator<=>(const VertexSet& other) const {
    std::uint64_t a = bits_, b = other.bits_;
    while (a != 0 && b != 0) {
        int x = std::countr_zero(a), y = std::countr_zero(b);
        if (x != y) return x < y ? std::strong_ordering::less : std::strong_ordering::greater;
        a &= a - 1;
        b &= b - 1;
    }
    if (a == 0 && b == 0) return std::strong_ordering::equal;
    return a == 0 ? std::strong_ordering::less : std::strong_ordering::greater;
}

void require_mask_capacity(const Graph& g, const char* what) {
    if (g.order() > VertexSet::capacity)
        throw GraphError(std::string(what) + ": graphs above 64 vertices are not supported");
}

} // namespace fva
