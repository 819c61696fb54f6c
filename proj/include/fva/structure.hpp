#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "fva/graph.hpp"
#include "fva/rational.hpp"

namespace fva {

struct StructuralStats {
    std::vector<int> degrees;
    std::vector<int> effective_degrees;  // neighbours of degree >= 3
    std::optional<int> girth;            // nullopt for forests
    Rational average_degree;
    std::vector<bool> light;             // effective degree <= 3 and degree <= 5
};

int effective_degree(const Graph& g, Vertex v);
bool is_light(const Graph& g, Vertex v);
inline bool is_heavy(const Graph& g, Vertex v) { return !is_light(g, v); }

/// Shortest cycle length by BFS from every vertex.
std::optional<int> girth(const Graph& g);
Rational average_degree(const Graph& g);
StructuralStats structural_stats(const Graph& g);

/// True iff g[s] is acyclic, decided by |E(g[s])| = |s| - #components.
bool is_induced_forest(const Graph& g, std::span<const Vertex> s);
bool is_induced_forest(const Graph& g, VertexSet s);
bool is_independent_set(const Graph& g, VertexSet s);

/// Necessary condition for a planar graph of girth g >= 3 on n >= 3 vertices:
/// |E| <= g/(g-2) * (n-2). Never a planarity test.
bool satisfies_euler_bound(const Graph& g, int assumed_girth);

enum class ConfigurationKind {
    degree_at_most_one,
    adjacent_degree_twos,
    effective_degree_two,
    degree_three_two_light,
};

std::string_view to_string(ConfigurationKind kind);

struct Role {
    std::string label;
    Vertex vertex;
    bool operator==(const Role&) const = default;
};

/// A labelled configuration inside a host graph. Labels follow the figures:
/// "v", "u1".."u7", "u'1".., "x", "y" for the star configuration and
/// "v", "v1", "v2", "z", "u1", "w1", "u'1", "w'1", "x1", "y1", ... for the
/// degree-three configuration. Neighbours outside the figures are "l1", "l2", ...
/// (leaves at v) and "e1_1", "e2_1", ... (further neighbours of v1, v2).
struct ConfigurationWitness {
    ConfigurationKind kind;
    std::vector<Role> roles;

    std::optional<Vertex> find(std::string_view label) const;
    Vertex at(std::string_view label) const;
    std::vector<Vertex> vertices() const;
    bool operator==(const ConfigurationWitness&) const = default;
};

/// Checks that the labelled vertices satisfy the degree/adjacency pattern of the kind.
bool witness_matches(const Graph& g, const ConfigurationWitness& w);

} // namespace fva
