#include "fva/cover_lp.hpp"

#include <algorithm>
#include <set>

namespace fva {

std::string check_certificate(const CoverLp& lp, const LpResult& r) {
    if (r.primal.size() != lp.columns.size() || r.dual.size() != static_cast<std::size_t>(lp.rows))
        return "result dimensions do not match the LP";
    Rational primal_sum = 0, dual_sum = 0;
    std::vector<Rational> cover(static_cast<std::size_t>(lp.rows), Rational(0));
    for (std::size_t j = 0; j < lp.columns.size(); ++j) {
        if (r.primal[j] < 0) return "negative primal weight";
        primal_sum += r.primal[j];
        for (Vertex v : lp.columns[j].members()) cover[v] += r.primal[j];
    }
    for (int v = 0; v < lp.rows; ++v) {
        if (cover[v] < 1) return "row " + std::to_string(v) + " under-covered";
        if (r.dual[v] < 0) return "negative dual at row " + std::to_string(v);
        dual_sum += r.dual[v];
    }
    for (const auto& c : lp.columns) {
        Rational load = 0;
        for (Vertex v : c.members()) load += r.dual[v];
        if (load > 1) return "dual violates a column constraint";
    }
    if (primal_sum != dual_sum) return "primal and dual objectives differ";
    if (primal_sum != r.value) return "reported value differs from the primal objective";
    return {};
}

CoverSimplex::CoverSimplex(int rows) : rows_(rows) {
    if (rows < 0) throw LpError("negative row count");
    if (rows > VertexSet::capacity) throw LpError("at most 64 rows are supported");
}

std::size_t CoverSimplex::add_column(VertexSet column) {
    if (column.empty()) throw LpError("empty column");
    if (rows_ < VertexSet::capacity && (column.bits() >> rows_) != 0)
        throw LpError("column references a missing row");
    if (std::find(columns_.begin(), columns_.end(), column) != columns_.end())
        throw LpError("duplicate column");
    columns_.push_back(column);
    return columns_.size() - 1;
}

void CoverSimplex::ensure_initial_basis() {
    if (has_basis_) return;
    basis_.assign(static_cast<std::size_t>(rows_), -1);
    for (std::size_t j = 0; j < columns_.size(); ++j)
        if (columns_[j].size() == 1) basis_[columns_[j].members().front()] = rows_ + static_cast<int>(j);
    for (int v = 0; v < rows_; ++v)
        if (basis_[v] < 0) throw LpError("no singleton column for row " + std::to_string(v));
    inverse_.assign(static_cast<std::size_t>(rows_), std::vector<Rational>(static_cast<std::size_t>(rows_), Rational(0)));
    for (int v = 0; v < rows_; ++v) inverse_[v][v] = 1;
    values_.assign(static_cast<std::size_t>(rows_), Rational(1));
    has_basis_ = true;
}

std::vector<Rational> CoverSimplex::duals() const {
    // y = c_B^T B^{-1}; surplus variables have zero cost.
    std::vector<Rational> y(static_cast<std::size_t>(rows_), Rational(0));
    for (int i = 0; i < rows_; ++i) {
        if (basis_[i] < rows_) continue;
        for (int k = 0; k < rows_; ++k)
            if (inverse_[i][k] != 0) y[k] += inverse_[i][k];
    }
    return y;
}

void CoverSimplex::pivot(std::size_t r, int entering, const std::vector<Rational>& d) {
    const Rational theta = values_[r] / d[r];
    for (std::size_t i = 0; i < values_.size(); ++i)
        if (i != r && d[i] != 0) values_[i] -= theta * d[i];
    values_[r] = theta;

    const Rational pivot_inv = Rational(1) / d[r];
    for (auto& x : inverse_[r]) x *= pivot_inv;
    for (std::size_t i = 0; i < inverse_.size(); ++i) {
        if (i == r || d[i] == 0) continue;
        for (std::size_t k = 0; k < inverse_[i].size(); ++k)
            if (inverse_[r][k] != 0) inverse_[i][k] -= d[i] * inverse_[r][k];
    }
    basis_[r] = entering;
    ++pivots_;
}

LpResult CoverSimplex::solve() {
    ensure_initial_basis();
    for (;;) {
        auto y = duals();
        // Bland: lowest-index variable with negative reduced cost.
        int entering = -1;
        for (int v = 0; v < rows_ && entering < 0; ++v)
            if (y[v] < 0) entering = v;
        for (std::size_t j = 0; j < columns_.size() && entering < 0; ++j) {
            Rational load = 0;
            for (Vertex v : columns_[j].members()) load += y[v];
            if (load > 1) entering = rows_ + static_cast<int>(j);
        }
        if (entering < 0) break;

        std::vector<Rational> d(static_cast<std::size_t>(rows_), Rational(0));
        if (entering < rows_) {
            for (int i = 0; i < rows_; ++i) d[i] = -inverse_[i][entering];
        } else {
            for (Vertex v : columns_[entering - rows_].members())
                for (int i = 0; i < rows_; ++i) d[i] += inverse_[i][v];
        }
        int leave = -1;
        Rational best_ratio;
        for (int i = 0; i < rows_; ++i) {
            if (d[i] <= 0) continue;
            Rational ratio = values_[i] / d[i];
            if (leave < 0 || ratio < best_ratio || (ratio == best_ratio && basis_[i] < basis_[leave])) {
                leave = i;
                best_ratio = ratio;
            }
        }
        if (leave < 0) throw LpError("unbounded cover LP");
        pivot(static_cast<std::size_t>(leave), entering, d);
    }

    LpResult out;
    out.primal.assign(columns_.size(), Rational(0));
    for (int i = 0; i < rows_; ++i)
        if (basis_[i] >= rows_) out.primal[basis_[i] - rows_] = values_[i];
    out.dual = duals();
    out.value = 0;
    for (const auto& x : out.primal) out.value += x;
    out.pivots = pivots_;
    return out;
}

LpResult solve_exact(const CoverLp& lp) {
    CoverSimplex simplex(lp.rows);
    std::vector<std::size_t> slot;  // input column -> simplex column
    std::set<std::uint64_t> present;
    VertexSet covered;
    for (const auto& c : lp.columns) {
        if (!present.insert(c.bits()).second) throw LpError("duplicate column");
        slot.push_back(simplex.add_column(c));
        covered = VertexSet(covered.bits() | c.bits());
    }
    for (int v = 0; v < lp.rows; ++v)
        if (!covered.contains(v)) throw LpError("infeasible: row " + std::to_string(v) + " is uncovered");
    std::vector<std::pair<std::size_t, Vertex>> internal;
    for (int v = 0; v < lp.rows; ++v) {
        VertexSet single;
        single.insert(v);
        if (!present.count(single.bits())) internal.emplace_back(simplex.add_column(single), v);
    }

    LpResult raw = simplex.solve();
    LpResult out;
    out.dual = raw.dual;
    out.pivots = raw.pivots;
    out.primal.assign(lp.columns.size(), Rational(0));
    for (std::size_t j = 0; j < lp.columns.size(); ++j) out.primal[j] = raw.primal[slot[j]];
    for (auto [col, v] : internal) {
        if (raw.primal[col] == 0) continue;
        for (std::size_t j = 0; j < lp.columns.size(); ++j)
            if (lp.columns[j].contains(v)) {
                out.primal[j] += raw.primal[col];
                break;
            }
    }
    out.value = 0;
    for (const auto& x : out.primal) out.value += x;
    if (auto err = check_certificate(lp, out); !err.empty()) throw LpError("certificate check failed: " + err);
    return out;
}

ColumnGenerationResult column_generation(const Graph& g, const PricingOracle& pricing,
                                         const ColumnCheck& feasible,
                                         std::span<const VertexSet> extra_seeds,
                                         std::size_t max_iterations) {
    require_mask_capacity(g, "column generation");
    CoverSimplex simplex(g.order());
    for (Vertex v = 0; v < g.order(); ++v) {
        VertexSet single;
        single.insert(v);
        simplex.add_column(single);
    }
    for (const auto& s : extra_seeds) {
        if (!feasible(s)) throw LpError("seed column is not feasible");
        auto& cols = simplex.columns();
        if (s.size() > 1 && std::find(cols.begin(), cols.end(), s) == cols.end()) simplex.add_column(s);
    }

    ColumnGenerationResult out;
    for (;;) {
        if (out.iterations >= max_iterations) throw LpError("column generation iteration limit reached");
        ++out.iterations;
        out.lp = simplex.solve();
        auto [column, weight] = pricing(out.lp.dual);
        if (!feasible(column)) throw LpError("pricing returned an infeasible column");
        Rational check = 0;
        for (Vertex v : column.members()) check += out.lp.dual[v];
        if (check != weight) throw LpError("pricing misreported the column weight");
        out.pricing_history.push_back(weight);
        if (weight <= 1) {
            out.pricing_bound = weight;
            break;
        }
        const auto& cols = simplex.columns();
        if (std::find(cols.begin(), cols.end(), column) != cols.end())
            throw LpError("pricing returned an existing column with weight above 1");
        simplex.add_column(column);
    }
    out.columns = simplex.columns();
    if (auto err = check_certificate(CoverLp{g.order(), out.columns}, out.lp); !err.empty())
        throw LpError("certificate check failed: " + err);
    return out;
}

} // namespace fva
