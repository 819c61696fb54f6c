#include "fva/discharging.hpp"

#include <algorithm>

namespace fva {

std::string_view to_string(DischargeRule rule) { return rule == DischargeRule::r1 ? "R1" : "R2"; }

std::string_view to_string(Lemma4Result::Status status) {
    switch (status) {
    case Lemma4Result::Status::vacuous: return "vacuous";
    case Lemma4Result::Status::pass: return "pass";
    case Lemma4Result::Status::counterexample: return "counterexample";
    }
    return "unknown";
}

ChargeLedger discharge(const Graph& g) {
    ChargeLedger ledger;
    const int n = g.order();
    for (Vertex v = 0; v < n; ++v) ledger.initial.push_back(Rational(g.degree(v)) - Rational(10, 3));
    ledger.final_charge = ledger.initial;
    for (Vertex v = 0; v < n; ++v) {
        for (Vertex u : g.neighbors(v))
            if (g.degree(u) == 2) ledger.transfers.push_back({v, u, Rational(2, 3), DischargeRule::r1});
        if (!is_heavy(g, v)) continue;
        if (g.degree(v) < 4) throw GraphError("heavy vertex of degree below four");
        for (Vertex u : g.neighbors(v))
            if (g.degree(u) == 3) ledger.transfers.push_back({v, u, Rational(1, 6), DischargeRule::r2});
    }
    for (const auto& t : ledger.transfers) {
        ledger.final_charge[t.from] -= t.amount;
        ledger.final_charge[t.to] += t.amount;
    }
    return ledger;
}

std::vector<ConfigurationWitness> detect_configurations(const Graph& g) {
    std::vector<ConfigurationWitness> out;
    const int n = g.order();
    auto other_end = [&](Vertex thread, Vertex hub) {
        const auto& nb = g.neighbors(thread);
        return nb[0] == hub ? nb[1] : nb[0];
    };
    for (Vertex v = 0; v < n; ++v)
        if (g.degree(v) <= 1) out.push_back({ConfigurationKind::degree_at_most_one, {{"v", v}}});
    for (Vertex v = 0; v < n; ++v)
        if (g.degree(v) == 2)
            for (Vertex u : g.neighbors(v))
                if (u > v && g.degree(u) == 2) out.push_back({ConfigurationKind::adjacent_degree_twos, {{"v", v}, {"u", u}}});
    for (Vertex v = 0; v < n; ++v) {
        if (g.degree(v) < 3 || g.degree(v) > 9 || effective_degree(g, v) > 2) continue;
        ConfigurationWitness w{ConfigurationKind::effective_degree_two, {{"v", v}}};
        int spoke = 0, other = 0, leaf = 0;
        for (Vertex u : g.neighbors(v)) {
            if (g.degree(u) == 2) {
                ++spoke;
                w.roles.push_back({"u" + std::to_string(spoke), u});
                w.roles.push_back({"u'" + std::to_string(spoke), other_end(u, v)});
            } else if (g.degree(u) <= 1) {
                w.roles.push_back({"l" + std::to_string(++leaf), u});
            } else {
                w.roles.push_back({other++ == 0 ? "x" : "y", u});
            }
        }
        out.push_back(std::move(w));
    }
    for (Vertex v = 0; v < n; ++v) {
        if (g.degree(v) != 3) continue;
        std::vector<Vertex> light, rest;
        for (Vertex u : g.neighbors(v)) (is_light(g, u) && light.size() < 2 ? light : rest).push_back(u);
        if (light.size() < 2) continue;
        ConfigurationWitness w{ConfigurationKind::degree_three_two_light,
                               {{"v", v}, {"v1", light[0]}, {"v2", light[1]}, {"z", rest[0]}}};
        for (int i = 0; i < 2; ++i) {
            const Vertex hub = light[i];
            const auto idx = std::to_string(i + 1);
            int threads = 0, others = 0, extra = 0;
            for (Vertex u : g.neighbors(hub)) {
                if (u == v) continue;
                if (g.degree(u) == 2 && threads < 2 && other_end(u, hub) != hub) {
                    const std::string t = threads++ == 0 ? "u" : "w";
                    w.roles.push_back({t + idx, u});
                    w.roles.push_back({t + "'" + idx, other_end(u, hub)});
                } else if (others < 2) {
                    w.roles.push_back({(others++ == 0 ? "x" : "y") + idx, u});
                } else {
                    w.roles.push_back({"e" + idx + "_" + std::to_string(++extra), u});
                }
            }
        }
        out.push_back(std::move(w));
    }
    return out;
}

Lemma4Result check_lemma4(const Graph& g) {
    Lemma4Result r;
    r.witnesses = detect_configurations(g);
    if (g.order() == 0) {
        r.average_degree = 0;
        r.detail = "empty graph";
        return r;
    }
    r.average_degree = average_degree(g);
    auto ledger = discharge(g);
    auto it = std::min_element(ledger.final_charge.begin(), ledger.final_charge.end());
    if (*it < 0) {
        r.negative_vertex = static_cast<Vertex>(it - ledger.final_charge.begin());
        r.negative_charge = *it;
    }
    if (r.average_degree >= Rational(10, 3)) {
        r.status = Lemma4Result::Status::vacuous;
        r.detail = "average degree at least 10/3";
        return r;
    }
    if (r.witnesses.empty()) {
        r.status = Lemma4Result::Status::counterexample;
        r.detail = "no configuration below average degree 10/3";
        return r;
    }
    if (!r.negative_vertex) {
        r.status = Lemma4Result::Status::counterexample;
        r.detail = "no negative final charge despite a negative total";
        return r;
    }
    const Vertex c = *r.negative_vertex;
    bool central = false;
    for (const auto& w : r.witnesses) {
        if (w.at("v") == c) central = true;
        if (w.kind == ConfigurationKind::adjacent_degree_twos && w.at("u") == c) central = true;
    }
    r.status = central ? Lemma4Result::Status::pass : Lemma4Result::Status::counterexample;
    r.detail = central ? "negative vertex " + std::to_string(c) + " is the centre of a configuration"
                       : "negative vertex " + std::to_string(c) + " is not the centre of any configuration";
    return r;
}

} // namespace fva
