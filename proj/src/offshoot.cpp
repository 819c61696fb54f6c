#include "fva/offshoot.hpp"

namespace fva {

ListAssignment OffshootAssignment::list_map() const {
    ListAssignment m;
    for (std::size_t v = 0; v < lists.size(); ++v) m[static_cast<Vertex>(v)] = lists[v];
    return m;
}

ListAssignment OffshootAssignment::offshoot_map() const {
    ListAssignment m;
    for (std::size_t v = 0; v < offshoots.size(); ++v) m[static_cast<Vertex>(v)] = offshoots[v];
    return m;
}

std::vector<CellKey> all_cell_keys(int h) {
    if (h < 0 || h > max_local_vertices) throw CombineError("local graph too large for a full schedule");
    std::vector<CellKey> keys;
    const std::uint32_t full = (std::uint32_t{1} << h) - 1;
    for (std::uint32_t x = 0; x <= full; ++x) {
        const std::uint32_t rest = full & ~x;
        // all subsets of rest, ascending
        for (std::uint32_t o = 0;; o = (o - rest) & rest) {
            keys.push_back({x, o});
            if (o == rest) break;
        }
    }
    return keys;
}

void check_offshoot_assignment(const Graph& h, const OffshootAssignment& lo) {
    const auto n = static_cast<std::size_t>(h.order());
    if (h.order() > max_local_vertices) throw CombineError("local graph too large");
    if (lo.lists.size() != n || lo.offshoots.size() != n) throw CombineError("assignment size differs from the graph");
    for (std::size_t v = 0; v < n; ++v)
        if (!lo.offshoots[v].subset_of(lo.lists[v]))
            throw CombineError("offshoot of vertex " + std::to_string(v) + " is not inside its list");
}

CellTable cells(const Graph& h, const OffshootAssignment& lo) {
    check_offshoot_assignment(h, lo);
    const int n = h.order();
    std::vector<IntervalSet> family(lo.lists);
    family.insert(family.end(), lo.offshoots.begin(), lo.offshoots.end());
    auto part = atoms(family);
    CellTable table;
    for (std::size_t a = 0; a < part.atoms.size(); ++a) {
        CellKey key;
        for (int u = 0; u < n; ++u) {
            if (!part.membership[a][u]) key.outside |= std::uint32_t{1} << u;
            else if (part.membership[a][n + u]) key.offshoot |= std::uint32_t{1} << u;
        }
        auto& cell = table[key];
        cell = cell | part.atoms[a];
    }
    return table;
}

VerifyReport verify_entry(const Graph& h, CellKey key, const ScheduleEntry& entry) {
    DemandFunction f;
    std::vector<Vertex> o;
    for (Vertex u = 0; u < h.order(); ++u) {
        if ((key.outside >> u) & 1u) continue;
        f[u] = u < static_cast<Vertex>(entry.demand.size()) ? entry.demand[u] : Rational(0);
        if ((key.offshoot >> u) & 1u) o.push_back(u);
    }
    VerifyReport report;
    for (const auto& [u, s] : entry.certificate.sets)
        if (u < 0 || u >= h.order() || ((key.outside >> u) & 1u))
            report.violations.push_back({Violation::Kind::missing_vertex, s, {u}, "certificate defined outside H - X"});
    for (const auto& [u, d] : f)
        if (!entry.certificate.defined_at(u))
            report.violations.push_back({Violation::Kind::missing_vertex, {}, {u}, "certificate undefined at vertex " + std::to_string(u)});
    if (!report.ok()) return report;
    auto mode = VerifyMode::demand_mode(std::move(f));
    mode.respecting(std::move(o));
    return verify(h, entry.certificate, mode);
}

Rational covering_lhs(Vertex v, const CellTable& table, const DemandSchedule& schedule) {
    Rational total = 0;
    for (const auto& [key, cell] : table) {
        if ((key.outside >> v) & 1u) continue;
        auto it = schedule.find(key);
        if (it == schedule.end()) throw CombineError("no schedule entry for a nonempty cell");
        const auto& demand = it->second.demand;
        if (static_cast<std::size_t>(v) >= demand.size()) throw CombineError("schedule entry lacks a demand for a vertex");
        total += demand[v] * cell.measure();
    }
    return total;
}

Rational covering_lhs(Vertex v, const Graph& h, const OffshootAssignment& lo, const DemandSchedule& schedule) {
    return covering_lhs(v, cells(h, lo), schedule);
}

namespace {

std::string key_name(CellKey k) {
    return "(X=" + std::to_string(k.outside) + ", O=" + std::to_string(k.offshoot) + ")";
}

} // namespace

FractionalArborization combine(const Graph& h, const OffshootAssignment& lo, const DemandSchedule& schedule) {
    auto table = cells(h, lo);
    for (const auto& [key, cell] : table) {
        auto it = schedule.find(key);
        if (it == schedule.end()) throw CombineError("no schedule entry for nonempty cell " + key_name(key));
        auto report = verify_entry(h, key, it->second);
        if (!report.ok())
            throw CombineError("schedule entry " + key_name(key) + " fails: " + report.violations.front().message);
    }
    for (Vertex v = 0; v < h.order(); ++v) {
        auto lhs = covering_lhs(v, table, schedule);
        if (lhs < 1)
            throw CombineError("covering sum at vertex " + std::to_string(v) + " is " + to_string(lhs));
    }
    FractionalArborization phi;
    for (Vertex v = 0; v < h.order(); ++v) phi.sets[v] = IntervalSet();
    for (const auto& [key, cell] : table)
        for (const auto& [u, s] : schedule.at(key).certificate.sets)
            phi.sets[u] = phi.sets[u] | transport(s, cell);

    auto mode = VerifyMode::offshoot(lo.list_map(), lo.offshoot_map());
    auto report = verify(h, phi, mode);
    if (!report.ok()) throw CombineError("combined assignment fails: " + report.violations.front().message);
    auto trimmed = phi.trimmed(1);
    report = verify(h, trimmed, mode);
    if (!report.ok()) throw CombineError("trimmed assignment fails: " + report.violations.front().message);
    return trimmed;
}

} // namespace fva
