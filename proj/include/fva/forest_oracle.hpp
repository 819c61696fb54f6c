#pragma once

#include <span>
#include <vector>

#include "fva/graph.hpp"
#include "fva/rational.hpp"

namespace fva {

struct WeightedSet {
    VertexSet set;
    Rational weight;
};

/// Maximum-weight induced forest for non-negative weights (one per vertex).
/// Branch and bound over positive-weight vertices in order of decreasing
/// weight (ties by id), include-first; the first optimum found is returned.
WeightedSet max_weight_induced_forest(const Graph& g, std::span<const Rational> weights);

/// Same search for independent sets.
WeightedSet max_weight_independent_set(const Graph& g, std::span<const Rational> weights);

/// Size of a largest induced forest.
int max_induced_forest_size(const Graph& g);

/// All (or only inclusion-maximal) induced forests in lexicographic order.
/// Throws GraphError above `limit` vertices.
std::vector<VertexSet> enumerate_induced_forests(const Graph& g, bool maximal_only, int limit = 20);
std::vector<VertexSet> enumerate_independent_sets(const Graph& g, bool maximal_only, int limit = 20);

} // namespace fva
