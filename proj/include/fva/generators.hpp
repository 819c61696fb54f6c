#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "fva/graph.hpp"
#include "fva/structure.hpp"

namespace fva {

/// k4, cube, dodecahedron, petersen, gadget-a, gadget-b, cycle:n, path:n, complete:n.
Graph named_graph(std::string_view name, std::optional<int> size = std::nullopt);

/// Parses "name" or "name:size".
Graph named_graph_spec(std::string_view spec);

enum class GadgetKind { A, B };

struct Gadget {
    Graph graph;
    ConfigurationWitness witness;
};

/// Fixed girth-5 hosts for the two reducible configurations.
///
/// Kind A: centre v of degree 9 with spokes u1..u7 (degree two, far ends
/// u'1..u'7) and two further neighbours x, y of degree three. The host
/// closes 5-cycles v-x-a-b-y, v-u1-u'1-a-x, v-u2-u'2-c-x, v-u3-u'3-d-y and
/// pairs u'4-u'5, u'6-u'7. 21 vertices, 26 edges.
///
/// Kind B: v of degree three with neighbours v1, v2, z. Each vi has degree
/// five: v, threads ui-u'i and wi-w'i, and xi, yi of degree three. Side i is
/// closed by xi-pi-qi-yi with u'i-pi, w'i-qi, and xi-ri-si-yi; z joins r1
/// and r2. Every path between the two sides avoiding v passes through z.
/// 24 vertices, 33 edges.
Gadget gadget_graph(GadgetKind kind);

/// Connected graph with a random spanning tree plus `extra_edges` further edges.
Graph random_connected_graph(int n, int extra_edges, std::mt19937_64& rng);

/// Canonical graph6 string under relabelling (individualisation-refinement).
std::string canonical_graph6(const Graph& g);

/// All connected graphs on exactly n vertices up to isomorphism, ordered by
/// canonical string. Built by vertex extension of the n-1 list.
std::vector<Graph> connected_graphs(int n);

/// All connected graphs on 1..max_n vertices (concatenated by order).
std::vector<Graph> connected_graphs_up_to(int max_n);

} // namespace fva
