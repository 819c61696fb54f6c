#pragma once

#include <optional>
#include <vector>

#include "fva/arborization.hpp"
#include "fva/cover_lp.hpp"
#include "fva/forest_oracle.hpp"
#include "fva/graph.hpp"

namespace fva {

struct ColoringResult {
    int colors = 0;
    std::vector<int> color;  // 1-based colour per vertex
};

/// Least k such that V(G) splits into k induced forests.
ColoringResult vertex_arboricity(const Graph& g);

/// Proper colouring with k colours (1..k) in which every two colour classes
/// induce a forest, or nullopt.
std::optional<std::vector<int>> acyclic_coloring(const Graph& g, int k);
bool is_acyclic_coloring(const Graph& g, const std::vector<int>& color, int k);

struct FractionalCoverResult {
    Rational value;
    std::vector<WeightedSet> cover;  // positive-weight columns
    std::vector<Rational> dual;
    Rational pricing_bound;
    std::size_t iterations = 0;
    std::size_t columns = 0;
    std::vector<Rational> pricing_history;
    /// Set when the value was also obtained over all maximal feasible sets.
    std::optional<Rational> enumeration_value;
};

/// Fractional vertex arboricity via column generation over induced forests;
/// for at most `cross_check_limit` vertices also solved over all maximal forests.
FractionalCoverResult fractional_vertex_arboricity(const Graph& g, int cross_check_limit = 12);
FractionalCoverResult fractional_chromatic_number(const Graph& g, int cross_check_limit = 12);

/// Five colour classes mapped to 0..1, 1..2, 2..5/2 with 0..1/2, 1/2..3/2, 3/2..5/2.
FractionalArborization arborization_from_acyclic5(const Graph& g, const std::vector<int>& color);

/// Columns laid end to end on (0, total weight); each vertex keeps the
/// leftmost measure-1 part of the union of its columns' intervals.
FractionalArborization arborization_from_cover(const Graph& g, const std::vector<WeightedSet>& cover);

} // namespace fva
