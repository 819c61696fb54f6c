#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace fva {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;

class GraphError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Simple undirected graph on vertices 0..n-1 with sorted adjacency lists.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n);
    Graph(int n, std::span<const Edge> edges);

    /// Adds {u, v}. Returns false if the edge was already present.
    /// Throws GraphError on loops or out-of-range endpoints.
    bool add_edge(Vertex u, Vertex v);

    int order() const { return static_cast<int>(adj_.size()); }
    std::size_t size() const { return edge_count_; }
    int degree(Vertex v) const { return static_cast<int>(adj_[v].size()); }
    const std::vector<Vertex>& neighbors(Vertex v) const { return adj_[v]; }
    bool adjacent(Vertex u, Vertex v) const;
    std::vector<Edge> edges() const;

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    void check_vertex(Vertex v) const;

    std::vector<std::vector<Vertex>> adj_;
    std::size_t edge_count_ = 0;
};

/// Relabelled induced subgraph; `original[i]` is the host id of local vertex i.
struct InducedSubgraph {
    Graph graph;
    std::vector<Vertex> original;
};

InducedSubgraph induced_subgraph(const Graph& g, std::span<const Vertex> keep);
InducedSubgraph delete_vertices(const Graph& g, std::span<const Vertex> removed);

/// Vertex subset of a graph with at most 64 vertices, stored as a bitmask.
/// Ordering is lexicographic on the sorted member lists.
class VertexSet {
public:
    static constexpr int capacity = 64;

    VertexSet() = default;
    explicit VertexSet(std::uint64_t bits) : bits_(bits) {}
    static VertexSet from(std::span<const Vertex> vs);
    static VertexSet all(int n) {
        return VertexSet(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
    }

    bool contains(Vertex v) const { return (bits_ >> v) & 1u; }
    void insert(Vertex v) { bits_ |= std::uint64_t{1} << v; }
    void erase(Vertex v) { bits_ &= ~(std::uint64_t{1} << v); }
    int size() const { return std::popcount(bits_); }
    bool empty() const { return bits_ == 0; }
    std::uint64_t bits() const { return bits_; }
    std::vector<Vertex> members() const;

    bool operator==(const VertexSet&) const = default;
    std::strong_ordering operator<=>(const VertexSet& other) const;

private:
    std::uint64_t bits_ = 0;
};

/// Throws GraphError if g has more than VertexSet::capacity vertices.
void require_mask_capacity(const Graph& g, const char* what);

} // namespace fva
