#include "fva/arborization.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

namespace fva {

std::vector<Vertex> FractionalArborization::domain() const {
    std::vector<Vertex> out;
    for (const auto& [v, s] : sets) out.push_back(v);
    return out;
}

const IntervalSet& FractionalArborization::at(Vertex v) const {
    auto it = sets.find(v);
    if (it == sets.end()) throw ArborizationError("vertex " + std::to_string(v) + " is not in the domain");
    return it->second;
}

FractionalArborization FractionalArborization::without(std::span<const Vertex> drop) const {
    FractionalArborization out = *this;
    for (Vertex v : drop) out.sets.erase(v);
    return out;
}

FractionalArborization FractionalArborization::trimmed(const Rational& m) const {
    FractionalArborization out;
    for (const auto& [v, s] : sets) {
        if (s.measure() < m)
            throw ArborizationError("vertex " + std::to_string(v) + " has measure " + to_string(s.measure()) +
                                    " below " + to_string(m));
        out.sets[v] = s.prefix(m);
    }
    return out;
}

VerifyMode VerifyMode::arborization(const Rational& k) {
    VerifyMode m;
    m.ambient = k;
    m.min_measure = Rational(1);
    return m;
}

VerifyMode VerifyMode::list(ListAssignment lists) {
    VerifyMode m;
    m.lists = std::move(lists);
    m.min_measure = Rational(1);
    return m;
}

VerifyMode VerifyMode::offshoot(ListAssignment lists, ListAssignment offshoots) {
    VerifyMode m = list(std::move(lists));
    m.offshoots = std::move(offshoots);
    return m;
}

VerifyMode VerifyMode::demand_mode(DemandFunction f) {
    VerifyMode m;
    m.demand = std::move(f);
    return m;
}

VerifyMode& VerifyMode::respecting(std::vector<Vertex> o) {
    respects = std::move(o);
    return *this;
}

std::string to_string(Violation::Kind kind) {
    switch (kind) {
    case Violation::Kind::cycle: return "cycle";
    case Violation::Kind::outside_ambient: return "outside-ambient";
    case Violation::Kind::outside_list: return "outside-list";
    case Violation::Kind::short_measure: return "short-measure";
    case Violation::Kind::outside_unit: return "outside-unit-interval";
    case Violation::Kind::offshoot_path: return "offshoot-path";
    case Violation::Kind::respects_path: return "respects-path";
    case Violation::Kind::missing_vertex: return "missing-vertex";
    }
    return "unknown";
}

namespace {

struct Level {
    std::vector<char> in;
    std::vector<int> comp;
};

// Components of g[level]; returns a cycle if the level is not a forest.
std::optional<std::vector<Vertex>> level_components(const Graph& g, Level& lv) {
    const int n = g.order();
    lv.comp.assign(static_cast<std::size_t>(n), -1);
    std::vector<Vertex> parent(static_cast<std::size_t>(n), -1);
    std::vector<int> depth(static_cast<std::size_t>(n), 0);
    int next = 0;
    for (Vertex s = 0; s < n; ++s) {
        if (!lv.in[s] || lv.comp[s] >= 0) continue;
        std::deque<Vertex> queue{s};
        lv.comp[s] = next;
        while (!queue.empty()) {
            Vertex x = queue.front();
            queue.pop_front();
            for (Vertex y : g.neighbors(x)) {
                if (!lv.in[y] || y == parent[x]) continue;
                if (lv.comp[y] >= 0) {
                    // Non-tree edge: walk both ends up to their common ancestor.
                    std::vector<Vertex> a{x}, b{y};
                    Vertex p = x, q = y;
                    while (depth[p] > depth[q]) a.push_back(p = parent[p]);
                    while (depth[q] > depth[p]) b.push_back(q = parent[q]);
                    while (p != q) {
                        a.push_back(p = parent[p]);
                        b.push_back(q = parent[q]);
                    }
                    b.pop_back();
                    a.insert(a.end(), b.rbegin(), b.rend());
                    return a;
                }
                lv.comp[y] = next;
                parent[y] = x;
                depth[y] = depth[x] + 1;
                queue.push_back(y);
            }
        }
        ++next;
    }
    return std::nullopt;
}

std::vector<Vertex> level_path(const Graph& g, const Level& lv, Vertex from, Vertex to) {
    std::vector<Vertex> parent(static_cast<std::size_t>(g.order()), -2);
    std::deque<Vertex> queue{from};
    parent[from] = -1;
    while (!queue.empty()) {
        Vertex x = queue.front();
        queue.pop_front();
        if (x == to) break;
        for (Vertex y : g.neighbors(x))
            if (lv.in[y] && parent[y] == -2) {
                parent[y] = x;
                queue.push_back(y);
            }
    }
    std::vector<Vertex> path;
    for (Vertex x = to; x != -1; x = parent[x]) path.push_back(x);
    std::reverse(path.begin(), path.end());
    return path;
}

std::string vertex_list(const std::vector<Vertex>& vs) {
    std::string s;
    for (std::size_t i = 0; i < vs.size(); ++i) s += (i ? "-" : "") + std::to_string(vs[i]);
    return s;
}

} // namespace

VerifyReport verify(const Graph& g, const FractionalArborization& phi, const VerifyMode& mode,
                    std::size_t max_violations) {
    VerifyReport report;
    auto add = [&](Violation::Kind kind, IntervalSet atom, std::vector<Vertex> vs, std::string msg) {
        if (report.violations.size() < max_violations)
            report.violations.push_back({kind, std::move(atom), std::move(vs), std::move(msg)});
    };
    for (Vertex v : phi.domain())
        if (v < 0 || v >= g.order()) throw ArborizationError("domain vertex " + std::to_string(v) + " is not in the graph");

    auto lookup = [](const std::optional<ListAssignment>& m, Vertex v) -> const IntervalSet* {
        if (!m) return nullptr;
        auto it = m->find(v);
        return it == m->end() ? nullptr : &it->second;
    };

    for (const auto& [v, s] : phi.sets) {
        const std::vector<Vertex> who{v};
        const std::string name = "vertex " + std::to_string(v);
        if (mode.ambient && !s.within(0, *mode.ambient))
            add(Violation::Kind::outside_ambient, s - IntervalSet::interval(0, *mode.ambient), who,
                name + " leaves [0, " + to_string(*mode.ambient) + ")");
        if (mode.min_measure && s.measure() < *mode.min_measure)
            add(Violation::Kind::short_measure, s, who, name + " has measure " + to_string(s.measure()));
        if (mode.lists) {
            const IntervalSet* l = lookup(mode.lists, v);
            if (!l) add(Violation::Kind::missing_vertex, s, who, name + " has no list");
            else if (!s.subset_of(*l)) add(Violation::Kind::outside_list, s - *l, who, name + " leaves its list");
        }
        if (mode.demand) {
            auto it = mode.demand->find(v);
            if (it == mode.demand->end()) {
                add(Violation::Kind::missing_vertex, s, who, name + " has no demand");
            } else {
                if (!s.within(0, 1)) add(Violation::Kind::outside_unit, s - IntervalSet::interval(0, 1), who, name + " leaves [0, 1)");
                if (s.measure() < it->second)
                    add(Violation::Kind::short_measure, s, who,
                        name + " has measure " + to_string(s.measure()) + " below demand " + to_string(it->second));
            }
        }
    }

    if (mode.lists)
        for (const auto& [v, l] : *mode.lists)
            if (!phi.defined_at(v)) add(Violation::Kind::missing_vertex, IntervalSet(), {v}, "vertex " + std::to_string(v) + " is unassigned");
    if (mode.demand)
        for (const auto& [v, f] : *mode.demand)
            if (!phi.defined_at(v)) add(Violation::Kind::missing_vertex, IntervalSet(), {v}, "vertex " + std::to_string(v) + " is unassigned");

    std::vector<IntervalSet> family;
    std::vector<Vertex> owners;
    for (const auto& [v, s] : phi.sets) {
        family.push_back(s);
        owners.push_back(v);
    }
    const std::size_t phi_count = family.size();
    std::vector<const IntervalSet*> offshoot_of(static_cast<std::size_t>(g.order()), nullptr);
    if (mode.offshoots)
        for (const auto& [v, o] : *mode.offshoots) {
            if (v < 0 || v >= g.order()) throw ArborizationError("offshoot for a vertex outside the graph");
            if (!phi.defined_at(v)) continue;
            offshoot_of[v] = &o;
            family.push_back(o);
        }
    std::vector<char> in_o(static_cast<std::size_t>(g.order()), 0);
    if (mode.respects)
        for (Vertex v : *mode.respects)
            if (v >= 0 && v < g.order()) in_o[v] = 1;

    auto partition = atoms(family);
    report.atoms_checked = partition.atoms.size();
    for (std::size_t a = 0; a < partition.atoms.size(); ++a) {
        const auto& atom = partition.atoms[a];
        Level lv;
        lv.in.assign(static_cast<std::size_t>(g.order()), 0);
        bool any = false;
        for (std::size_t j = 0; j < phi_count; ++j)
            if (partition.membership[a][j]) lv.in[owners[j]] = 1, any = true;
        if (!any) continue;
        if (auto cycle = level_components(g, lv)) {
            add(Violation::Kind::cycle, atom, *cycle, "cycle " + vertex_list(*cycle) + " on " + atom.to_string());
            continue;
        }
        auto check_pairs = [&](auto marked, Violation::Kind kind, const char* what) {
            std::map<int, Vertex> first_in_comp;
            for (Vertex x = 0; x < g.order(); ++x) {
                if (!lv.in[x] || !marked(x)) continue;
                auto [it, fresh] = first_in_comp.emplace(lv.comp[x], x);
                if (!fresh) {
                    auto path = level_path(g, lv, it->second, x);
                    add(kind, atom, path,
                        std::string(what) + " path " + vertex_list(path) + " on " + atom.to_string());
                }
            }
        };
        if (mode.offshoots)
            check_pairs([&](Vertex x) { return offshoot_of[x] && atom.subset_of(*offshoot_of[x]); },
                        Violation::Kind::offshoot_path, "offshoot");
        if (mode.respects)
            check_pairs([&](Vertex x) { return in_o[x] != 0; }, Violation::Kind::respects_path, "respects");
    }
    return report;
}

IntervalSet blocked_set(const Graph& g, const FractionalArborization& phi, Vertex v) {
    if (v < 0 || v >= g.order()) throw ArborizationError("blocked_set: vertex outside the graph");
    VerifyMode plain;
    if (!verify(g, phi, plain, 1).ok()) throw ArborizationError("blocked_set: level sets are not forests");
    std::vector<IntervalSet> family;
    std::vector<Vertex> owners;
    for (const auto& [u, s] : phi.sets)
        if (u != v) {
            family.push_back(s);
            owners.push_back(u);
        }
    auto partition = atoms(family);
    IntervalSet blocked;
    for (std::size_t a = 0; a < partition.atoms.size(); ++a) {
        Level lv;
        lv.in.assign(static_cast<std::size_t>(g.order()), 0);
        for (std::size_t j = 0; j < owners.size(); ++j)
            if (partition.membership[a][j]) lv.in[owners[j]] = 1;
        level_components(g, lv);
        std::vector<int> seen;
        bool hit = false;
        for (Vertex u : g.neighbors(v)) {
            if (!lv.in[u]) continue;
            if (std::find(seen.begin(), seen.end(), lv.comp[u]) != seen.end()) {
                hit = true;
                break;
            }
            seen.push_back(lv.comp[u]);
        }
        if (hit) blocked = blocked | partition.atoms[a];
    }
    return blocked;
}

} // namespace fva
