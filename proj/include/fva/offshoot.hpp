#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <vector>

#include "fva/arborization.hpp"

namespace fva {

class CombineError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Lists and offshoots for a small local graph H, indexed by local vertex.
struct OffshootAssignment {
    std::vector<IntervalSet> lists;
    std::vector<IntervalSet> offshoots;

    ListAssignment list_map() const;
    ListAssignment offshoot_map() const;
};

/// Disjoint vertex subsets of H as bitmasks: `outside` is X, `offshoot` is O.
struct CellKey {
    std::uint32_t outside = 0;
    std::uint32_t offshoot = 0;
    auto operator<=>(const CellKey&) const = default;
};

using CellTable = std::map<CellKey, IntervalSet>;

struct ScheduleEntry {
    std::vector<Rational> demand;           // per local vertex, ignored on X
    FractionalArborization certificate;     // defined exactly on V(H) - X, inside [0, 1)
};

using DemandSchedule = std::map<CellKey, ScheduleEntry>;

constexpr int max_local_vertices = 16;

/// Every disjoint pair (X, O) of subsets of an h-vertex graph.
std::vector<CellKey> all_cell_keys(int h);

/// Throws CombineError if the sizes disagree or some o(u) is not within L(u).
void check_offshoot_assignment(const Graph& h, const OffshootAssignment& lo);

/// Nonempty cells only; the pieces partition the union of the lists.
CellTable cells(const Graph& h, const OffshootAssignment& lo);

/// Verifies one schedule entry: f-arborization of H - X respecting O.
VerifyReport verify_entry(const Graph& h, CellKey key, const ScheduleEntry& entry);

/// Sum over cells not containing v in X of f(v) times the cell measure.
Rational covering_lhs(Vertex v, const CellTable& table, const DemandSchedule& schedule);
Rational covering_lhs(Vertex v, const Graph& h, const OffshootAssignment& lo, const DemandSchedule& schedule);

/// Glues the transported certificates into an (L, o)-arborization of H with
/// every set trimmed to measure 1. Throws CombineError on any failed check.
FractionalArborization combine(const Graph& h, const OffshootAssignment& lo, const DemandSchedule& schedule);

} // namespace fva
