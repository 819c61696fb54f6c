#include "fva/reducible.hpp"

#include <algorithm>
#include <set>

namespace fva {
namespace {

constexpr std::uint32_t bit(int v) { return std::uint32_t{1} << v; }

IntervalSet unit() { return IntervalSet::interval(0, 1); }

void require_epsilon(const Rational& eps, const Rational& bound, const char* what) {
    if (eps < 0) throw ExtensionError(std::string(what) + ": epsilon must be non-negative");
    if (eps > bound) throw ExtensionError(std::string(what) + ": epsilon exceeds " + to_string(bound));
}

std::string fails(const VerifyReport& r) { return r.violations.front().message; }

FractionalArborization local_certificate(const std::vector<std::pair<Vertex, IntervalSet>>& pieces) {
    FractionalArborization c;
    for (const auto& [v, s] : pieces) c.sets[v] = s;
    return c;
}

void check_entries(const Graph& h, const DemandSchedule& schedule, const char* what) {
    for (const auto& [key, entry] : schedule) {
        auto report = verify_entry(h, key, entry);
        if (!report.ok()) throw ExtensionError(std::string(what) + ": schedule entry fails: " + fails(report));
    }
}

} // namespace

Rational config_a_epsilon_bound() { return Rational(5, 49); }
Rational config_b_epsilon_bound() { return Rational(1, 324); }

FractionalArborization normalize_degree_two(const FractionalArborization& phi, Vertex u, Vertex u_far,
                                            const Rational& epsilon) {
    if (epsilon < 0) throw ExtensionError("normalize_degree_two: negative epsilon");
    const Rational k = Rational(2) - epsilon;
    const auto& a = phi.at(u);
    const auto& b = phi.at(u_far);
    if (!a.within(0, k) || !b.within(0, k))
        throw ExtensionError("normalize_degree_two: sets leave [0, " + to_string(k) + ")");
    if (a.measure() != 1 || b.measure() != 1)
        throw ExtensionError("normalize_degree_two: both sets must have measure exactly 1");
    auto common = a & b;
    if (common.measure() < epsilon)
        throw ExtensionError("normalize_degree_two: overlap " + to_string(common.measure()) + " is below epsilon");
    FractionalArborization out = phi;
    out.sets[u] = b.complement_within(k) | common.prefix(epsilon);
    return out;
}

DemandSchedule schedule_config_A(const Graph& h, const OffshootAssignment& lo, const IntervalSet& blocked,
                                 const Rational& epsilon) {
    require_epsilon(epsilon, config_a_epsilon_bound(), "schedule_config_A");
    const int t = h.order() - 1;
    if (t < 1 || t > 7) throw ExtensionError("schedule_config_A: the star needs 1 to 7 leaves");
    if (h.size() != static_cast<std::size_t>(t)) throw ExtensionError("schedule_config_A: H is not a star at 0");
    for (Vertex u = 1; u <= t; ++u)
        if (!h.adjacent(0, u)) throw ExtensionError("schedule_config_A: H is not a star at 0");
    check_offshoot_assignment(h, lo);

    const bool heavy = blocked.measure() > 1 - Rational(7) * epsilon / 5;
    DemandSchedule schedule;
    for (CellKey key : all_cell_keys(h.order())) {
        auto in_x = [&](Vertex u) { return (key.outside & bit(u)) != 0; };
        auto in_o = [&](Vertex u) { return (key.offshoot & bit(u)) != 0; };
        ScheduleEntry e;
        e.demand.assign(static_cast<std::size_t>(h.order()), Rational(0));
        std::vector<std::pair<Vertex, IntervalSet>> cert;
        auto give = [&](Vertex u, const Rational& f, IntervalSet s) {
            e.demand[u] = f;
            cert.emplace_back(u, std::move(s));
        };
        if (in_o(0) && heavy) {
            give(0, 1, unit());
            for (Vertex u = 1; u <= t; ++u) {
                if (in_x(u)) continue;
                if (in_o(u)) give(u, 0, IntervalSet());
                else give(u, 1, unit());
            }
        } else if (in_o(0)) {
            const Rational six_sevenths(6, 7);
            give(0, six_sevenths, IntervalSet::interval(0, six_sevenths));
            for (Vertex u = 1; u <= t; ++u) {
                if (in_x(u)) continue;
                if (in_o(u)) give(u, Rational(1, 7), IntervalSet::interval(six_sevenths, 1));
                else give(u, 1, unit());
            }
        } else if (!in_x(0)) {
            give(0, 1, unit());
            for (Vertex u = 1; u <= t; ++u) {
                if (in_x(u)) continue;
                if (in_o(u)) give(u, Rational(1, 7), IntervalSet::interval(Rational(u - 1, 7), Rational(u, 7)));
                else give(u, 1, unit());
            }
        } else {
            for (Vertex u = 1; u <= t; ++u)
                if (!in_x(u)) give(u, 1, unit());
        }
        e.certificate = local_certificate(cert);

        // demand bounds
        for (Vertex u = 0; u <= t; ++u) {
            if (in_x(u)) continue;
            if (!in_o(u) && e.demand[u] != 1) throw ExtensionError("schedule_config_A: free vertex demands less than 1");
        }
        if (!in_x(0) && e.demand[0] < Rational(6, 7)) throw ExtensionError("schedule_config_A: v demands below 6/7");
        if (in_o(0) && heavy && e.demand[0] != 1) throw ExtensionError("schedule_config_A: blocked v demands below 1");
        if (!(in_o(0) && heavy))
            for (Vertex u = 1; u <= t; ++u)
                if (!in_x(u) && e.demand[u] < Rational(1, 7))
                    throw ExtensionError("schedule_config_A: leaf demands below 1/7");
        schedule.emplace(key, std::move(e));
    }
    check_entries(h, schedule, "schedule_config_A");
    return schedule;
}

DemandSchedule schedule_config_B(const Graph& h, const OffshootAssignment& lo, const IntervalSet& blocked1,
                                 const IntervalSet& blocked2, const Rational& epsilon) {
    require_epsilon(epsilon, config_b_epsilon_bound(), "schedule_config_B");
    if (h.order() != 3 || h.size() != 2 || !h.adjacent(0, 1) || !h.adjacent(0, 2))
        throw ExtensionError("schedule_config_B: H must be the path 1-0-2");
    check_offshoot_assignment(h, lo);

    const Rational threshold = 1 - Rational(17) * epsilon;
    const bool heavy_side[3] = {false, blocked1.measure() > threshold, blocked2.measure() > threshold};
    const Rational three_fifths(3, 5), two_fifths(2, 5);

    DemandSchedule schedule;
    for (CellKey key : all_cell_keys(3)) {
        auto in_x = [&](Vertex u) { return (key.outside & bit(u)) != 0; };
        auto in_o = [&](Vertex u) { return (key.offshoot & bit(u)) != 0; };
        auto free = [&](Vertex u) { return !in_x(u) && !in_o(u); };
        ScheduleEntry e;
        e.demand.assign(3, Rational(0));
        std::vector<std::pair<Vertex, IntervalSet>> cert;
        auto give = [&](Vertex u, const Rational& f, IntervalSet s) {
            e.demand[u] = f;
            cert.emplace_back(u, std::move(s));
        };
        const bool heavy = (in_o(1) && heavy_side[1]) || (in_o(2) && heavy_side[2]);
        if (heavy) {
            for (Vertex u : {1, 2})
                if (!in_x(u)) give(u, 1, unit());
            if (!in_x(0)) give(0, 0, IntervalSet());
        } else if (in_o(1) || in_o(2)) {
            const Vertex a = in_o(1) ? 1 : 2;  // the offshoot side handled as v_1
            const Vertex b = 3 - a;
            give(a, three_fifths, IntervalSet::interval(0, three_fifths));
            if (in_o(0)) {
                give(0, two_fifths, IntervalSet::interval(three_fifths, 1));
                if (in_o(b)) give(b, three_fifths, IntervalSet::interval(0, three_fifths));
                else if (free(b)) give(b, 1, unit());
            } else if (free(0)) {
                give(0, Rational(4, 5), IntervalSet::interval(three_fifths, 1) | IntervalSet::interval(0, two_fifths));
                if (in_o(b)) give(b, three_fifths, IntervalSet::interval(two_fifths, 1));
                else if (free(b)) give(b, 1, unit());
            } else {
                if (in_o(b)) give(b, three_fifths, IntervalSet::interval(0, three_fifths));
                else if (free(b)) give(b, 1, unit());
            }
        } else {
            for (Vertex u = 0; u < 3; ++u)
                if (!in_x(u)) give(u, 1, unit());
        }
        e.certificate = local_certificate(cert);

        // demand bounds
        for (Vertex u : {1, 2}) {
            if (free(u) && e.demand[u] != 1) throw ExtensionError("schedule_config_B: free v_i demands less than 1");
            if (!in_x(u) && e.demand[u] < three_fifths) throw ExtensionError("schedule_config_B: v_i demands below 3/5");
            if (in_o(u) && heavy_side[u] && e.demand[u] != 1)
                throw ExtensionError("schedule_config_B: blocked v_i demands below 1");
        }
        if (!heavy) {
            if (free(0) && e.demand[0] < Rational(4, 5)) throw ExtensionError("schedule_config_B: free v demands below 4/5");
            if (in_o(0) && e.demand[0] < two_fifths) throw ExtensionError("schedule_config_B: v demands below 2/5");
        }
        schedule.emplace(key, std::move(e));
    }
    check_entries(h, schedule, "schedule_config_B");
    return schedule;
}

namespace {

FractionalArborization checked_input(const Graph& g, const FractionalArborization& phi, const std::vector<Vertex>& missing,
                                     const Rational& k, const char* what) {
    std::set<Vertex> expect;
    for (Vertex v = 0; v < g.order(); ++v) expect.insert(v);
    for (Vertex v : missing) expect.erase(v);
    auto dom = phi.domain();
    if (std::set<Vertex>(dom.begin(), dom.end()) != expect)
        throw ExtensionError(std::string(what) + ": arborization domain does not match the configuration");
    FractionalArborization trimmed;
    try {
        trimmed = phi.trimmed(1);
    } catch (const ArborizationError& e) {
        throw ExtensionError(std::string(what) + ": " + e.what());
    }
    auto report = verify(g, trimmed, VerifyMode::arborization(k));
    if (!report.ok()) throw ExtensionError(std::string(what) + ": input arborization fails: " + fails(report));
    return trimmed;
}

ExtensionReport finish(const Graph& g, const FractionalArborization& outside, const InducedSubgraph& h,
                       const OffshootAssignment& lo, const DemandSchedule& schedule, const Rational& k,
                       ExtensionReport report, const char* what) {
    auto table = cells(h.graph, lo);
    report.nonempty_cells = table.size();
    for (Vertex u = 0; u < h.graph.order(); ++u) {
        auto lhs = covering_lhs(u, table, schedule);
        report.covering.push_back(lhs);
        if (lhs < 1)
            throw ExtensionError(std::string(what) + ": covering sum at vertex " + std::to_string(h.original[u]) +
                                 " is " + to_string(lhs));
    }
    FractionalArborization local;
    try {
        local = combine(h.graph, lo, schedule);
    } catch (const CombineError& e) {
        throw ExtensionError(std::string(what) + ": " + e.what());
    }
    report.result = outside;
    for (const auto& [u, s] : local.sets) report.result.sets[h.original[u]] = s;
    auto check = verify(g, report.result, VerifyMode::arborization(k));
    if (!check.ok()) throw ExtensionError(std::string(what) + ": extended arborization fails: " + fails(check));
    for (const auto& [v, s] : report.result.sets)
        if (s.measure() != 1) throw ExtensionError(std::string(what) + ": emitted set without measure 1");
    if (static_cast<int>(report.result.sets.size()) != g.order())
        throw ExtensionError(std::string(what) + ": extension does not cover every vertex");
    report.assignment = lo;
    return report;
}

void require_distinct(const std::vector<Vertex>& vs, const char* what) {
    std::set<Vertex> s(vs.begin(), vs.end());
    if (s.size() != vs.size()) throw ExtensionError(std::string(what) + ": witness roles are not distinct");
}

} // namespace

ExtensionReport extend_config_A(const Graph& g, const ConfigurationWitness& witness,
                                const FractionalArborization& phi, const Rational& epsilon) {
    const char* what = "extend_config_A";
    require_epsilon(epsilon, config_a_epsilon_bound(), what);
    if (witness.kind != ConfigurationKind::effective_degree_two || !witness_matches(g, witness))
        throw ExtensionError(std::string(what) + ": witness does not match the configuration");
    const Vertex v = witness.at("v");
    std::vector<Vertex> spokes, far, others;
    for (int i = 1;; ++i) {
        auto u = witness.find("u" + std::to_string(i));
        if (!u) break;
        spokes.push_back(*u);
        far.push_back(witness.at("u'" + std::to_string(i)));
    }
    if (spokes.empty() || spokes.size() > 7)
        throw ExtensionError(std::string(what) + ": needs one to seven degree-two neighbours");
    if (witness.find("l1")) throw ExtensionError(std::string(what) + ": v has neighbours of degree at most one");
    for (const char* label : {"x", "y"})
        if (auto x = witness.find(label)) others.push_back(*x);
    {
        std::vector<Vertex> all{v};
        all.insert(all.end(), spokes.begin(), spokes.end());
        all.insert(all.end(), others.begin(), others.end());
        require_distinct(all, what);
    }
    const Rational k = 2 - epsilon;
    ExtensionReport report;
    const auto input = checked_input(g, phi, spokes, k, what);
    report.normalized = input;

    const IntervalSet blocked = blocked_set(g, input, v);
    report.blocked = {blocked};
    if (blocked.measure() > 1 - epsilon) throw ExtensionError(std::string(what) + ": blocked set exceeds 1 - epsilon");

    std::vector<Vertex> local{v};
    local.insert(local.end(), spokes.begin(), spokes.end());
    auto h = induced_subgraph(g, local);
    report.local = local;
    const auto range = IntervalSet::interval(0, k);
    OffshootAssignment lo;
    lo.lists.assign(local.size(), range);
    lo.offshoots.assign(local.size(), IntervalSet());
    lo.lists[0] = range - blocked;
    IntervalSet near;
    for (Vertex x : others) near = near | input.at(x);
    lo.offshoots[0] = lo.lists[0] & near;
    for (std::size_t i = 0; i < spokes.size(); ++i) lo.offshoots[i + 1] = input.at(far[i]);
    if (lo.offshoots[0].measure() > 2 - 2 * blocked.measure())
        throw ExtensionError(std::string(what) + ": offshoot of v exceeds 2 - 2 mu(B)");

    auto schedule = schedule_config_A(h.graph, lo, blocked, epsilon);
    std::vector<Vertex> drop{v};
    return finish(g, input.without(drop), h, lo, schedule, k, std::move(report), what);
}

ExtensionReport extend_config_B(const Graph& g, const ConfigurationWitness& witness,
                                const FractionalArborization& phi, const Rational& epsilon) {
    const char* what = "extend_config_B";
    require_epsilon(epsilon, config_b_epsilon_bound(), what);
    if (witness.kind != ConfigurationKind::degree_three_two_light || !witness_matches(g, witness))
        throw ExtensionError(std::string(what) + ": witness does not match the configuration");
    const Vertex v = witness.at("v"), z = witness.at("z");
    const Vertex hubs[2] = {witness.at("v1"), witness.at("v2")};
    if (g.adjacent(hubs[0], hubs[1])) throw ExtensionError(std::string(what) + ": v1 and v2 are adjacent");
    if (witness.find("e1_1") || witness.find("e2_1"))
        throw ExtensionError(std::string(what) + ": v1 or v2 has neighbours outside the figure");

    struct Thread {
        Vertex near, far;
    };
    std::vector<Thread> threads[2];
    std::vector<Vertex> others[2];
    std::vector<Vertex> roles{v, z, hubs[0], hubs[1]};
    for (int i = 0; i < 2; ++i) {
        const auto idx = std::to_string(i + 1);
        for (const char* t : {"u", "w"})
            if (auto u = witness.find(t + idx)) {
                threads[i].push_back({*u, witness.at(std::string(t) + "'" + idx)});
                roles.push_back(*u);
            }
        for (const char* t : {"x", "y"})
            if (auto x = witness.find(t + idx)) {
                others[i].push_back(*x);
                roles.push_back(*x);
            }
    }
    require_distinct(roles, what);

    const Rational k = 2 - epsilon;
    ExtensionReport report;
    std::vector<Vertex> missing{v};
    auto current = checked_input(g, phi, missing, k, what);
    for (int i = 0; i < 2; ++i)
        for (const auto& t : threads[i]) current = normalize_degree_two(current, t.near, t.far, epsilon);
    for (int i = 0; i < 2; ++i)
        for (const auto& t : threads[i])
            if ((current.at(t.near) & current.at(t.far)).measure() != epsilon)
                throw ExtensionError(std::string(what) + ": thread overlap differs from epsilon after normalisation");
    if (auto r = verify(g, current, VerifyMode::arborization(k)); !r.ok())
        throw ExtensionError(std::string(what) + ": normalised arborization fails: " + fails(r));
    report.normalized = current;

    const auto range = IntervalSet::interval(0, k);
    std::vector<Vertex> local{v, hubs[0], hubs[1]};
    auto h = induced_subgraph(g, local);
    report.local = local;
    OffshootAssignment lo;
    lo.lists.assign(3, range);
    lo.offshoots.assign(3, IntervalSet());
    lo.offshoots[0] = current.at(z);
    IntervalSet blocked[2];
    for (int i = 0; i < 2; ++i) {
        std::vector<Vertex> drop{hubs[1 - i]};
        blocked[i] = blocked_set(g, current.without(drop), hubs[i]);
        if (blocked[i].measure() > 1 - epsilon)
            throw ExtensionError(std::string(what) + ": blocked set exceeds 1 - epsilon");
        lo.lists[i + 1] = range - blocked[i];
        IntervalSet near;
        for (Vertex x : others[i]) near = near | current.at(x);
        for (const auto& t : threads[i]) near = near | (current.at(t.near) & current.at(t.far));
        lo.offshoots[i + 1] = lo.lists[i + 1] & near;
        if (lo.offshoots[i + 1].measure() > 2 + 6 * epsilon - 2 * blocked[i].measure())
            throw ExtensionError(std::string(what) + ": offshoot of v" + std::to_string(i + 1) +
                                 " exceeds 2 + 6 epsilon - 2 mu(b)");
    }
    report.blocked = {blocked[0], blocked[1]};

    auto schedule = schedule_config_B(h.graph, lo, blocked[0], blocked[1], epsilon);
    std::vector<Vertex> drop{hubs[0], hubs[1]};
    return finish(g, current.without(drop), h, lo, schedule, k, std::move(report), what);
}

} // namespace fva
