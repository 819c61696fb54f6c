#pragma once

#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "fva/graph.hpp"
#include "fva/interval_set.hpp"
#include "fva/rational.hpp"

namespace fva {

class ArborizationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

using ListAssignment = std::map<Vertex, IntervalSet>;
using DemandFunction = std::map<Vertex, Rational>;

/// Assignment of interval sets to the vertices of its domain.
struct FractionalArborization {
    std::map<Vertex, IntervalSet> sets;

    std::vector<Vertex> domain() const;
    bool defined_at(Vertex v) const { return sets.count(v) != 0; }
    const IntervalSet& at(Vertex v) const;
    FractionalArborization without(std::span<const Vertex> drop) const;
    /// Every set replaced by its leftmost part of measure m (error if shorter).
    FractionalArborization trimmed(const Rational& m = 1) const;
    bool operator==(const FractionalArborization&) const = default;
};

/// Constraints checked on top of acyclicity of every level set.
struct VerifyMode {
    std::optional<Rational> ambient;        // phi(v) within [0, ambient)
    std::optional<Rational> min_measure;    // mu(phi(v)) >= min_measure
    std::optional<ListAssignment> lists;    // phi(v) within L(v), mu >= 1
    std::optional<ListAssignment> offshoots;
    std::optional<DemandFunction> demand;   // phi(v) within [0, 1), mu >= f(v)
    std::optional<std::vector<Vertex>> respects;

    static VerifyMode arborization(const Rational& k);
    static VerifyMode list(ListAssignment lists);
    static VerifyMode offshoot(ListAssignment lists, ListAssignment offshoots);
    static VerifyMode demand_mode(DemandFunction f);
    VerifyMode& respecting(std::vector<Vertex> o);
};

struct Violation {
    enum class Kind { cycle, outside_ambient, outside_list, short_measure, outside_unit, offshoot_path, respects_path, missing_vertex };
    Kind kind;
    IntervalSet atom;             // a witness piece of [0, k)
    std::vector<Vertex> vertices; // the cycle, the path, or the offending vertex
    std::string message;
};

std::string to_string(Violation::Kind kind);

struct VerifyReport {
    std::vector<Violation> violations;
    std::size_t atoms_checked = 0;
    bool ok() const { return violations.empty(); }
    explicit operator bool() const { return ok(); }
};

/// Checks phi against g restricted to the domain of phi. At most `max_violations` are collected.
VerifyReport verify(const Graph& g, const FractionalArborization& phi, const VerifyMode& mode,
                    std::size_t max_violations = 16);

/// Union of atoms on which two neighbours of v both carry the atom and are
/// joined by a path in that level set of (domain of phi) - v.
IntervalSet blocked_set(const Graph& g, const FractionalArborization& phi, Vertex v);

} // namespace fva
