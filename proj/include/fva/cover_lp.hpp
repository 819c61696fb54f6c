#pragma once

#include <functional>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "fva/graph.hpp"
#include "fva/rational.hpp"

namespace fva {

class LpError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// minimise sum x_C  subject to  sum_{C containing v} x_C >= 1 for every row v, x >= 0.
struct CoverLp {
    int rows = 0;
    std::vector<VertexSet> columns;
};

struct LpResult {
    Rational value;
    std::vector<Rational> primal;  // per column of the input LP
    std::vector<Rational> dual;    // per row
    std::size_t pivots = 0;
};

/// Checks primal feasibility, dual feasibility and equal objectives.
/// Returns an empty string on success, otherwise a description of the failure.
std::string check_certificate(const CoverLp& lp, const LpResult& result);

/// Revised primal simplex over exact rationals with Bland's rule. The basis is
/// kept between calls so columns can be appended and the LP re-optimised.
class CoverSimplex {
public:
    explicit CoverSimplex(int rows);

    /// Appends a column; returns its index. Duplicate columns are rejected.
    std::size_t add_column(VertexSet column);
    const std::vector<VertexSet>& columns() const { return columns_; }

    /// Optimises from the current basis.
    LpResult solve();

private:
    void ensure_initial_basis();
    std::vector<Rational> duals() const;
    void pivot(std::size_t row, int entering, const std::vector<Rational>& direction);

    int rows_;
    std::vector<VertexSet> columns_;
    // Variables 0..rows-1 are surplus variables, rows+j is column j.
    std::vector<int> basis_;
    std::vector<std::vector<Rational>> inverse_;
    std::vector<Rational> values_;
    bool has_basis_ = false;
    std::size_t pivots_ = 0;
};

/// Solves an explicit cover LP. Every row must be covered by some column;
/// missing singleton columns are added internally and their weight is moved
/// onto a covering input column, which leaves the optimum unchanged.
LpResult solve_exact(const CoverLp& lp);

/// Returns a maximum-weight feasible set and its weight under the given row weights.
using PricingOracle = std::function<std::pair<VertexSet, Rational>(std::span<const Rational>)>;
using ColumnCheck = std::function<bool(VertexSet)>;

struct ColumnGenerationResult {
    LpResult lp;
    std::vector<VertexSet> columns;
    /// Pricing maximum at termination; <= 1 certifies optimality for the full LP.
    Rational pricing_bound;
    /// Pricing maximum per iteration; value/maximum is a lower bound on the optimum.
    std::vector<Rational> pricing_history;
    std::size_t iterations = 0;
};

/// Restricted master seeded with all singletons plus `extra_seeds`; adds the
/// priced column while its weight exceeds 1. Throws LpError if the oracle
/// returns an infeasible set or misreports its weight.
ColumnGenerationResult column_generation(const Graph& g, const PricingOracle& pricing,
                                         const ColumnCheck& feasible,
                                         std::span<const VertexSet> extra_seeds = {},
                                         std::size_t max_iterations = 100000);

} // namespace fva
