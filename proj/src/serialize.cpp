#include "fva/serialize.hpp"

namespace fva {

Json to_json(const Rational& r) { return to_string(r); }

Json to_json(const IntervalSet& s) {
    Json out = Json::array();
    for (const auto& iv : s.intervals()) out.push_back(Json::array({to_string(iv.lo), to_string(iv.hi)}));
    return out;
}

Json to_json(const FractionalArborization& phi) {
    Json out = Json::object();
    for (const auto& [v, s] : phi.sets) out[std::to_string(v)] = to_json(s);
    return out;
}

Json to_json(const Violation& v) {
    return Json{{"kind", to_string(v.kind)}, {"atom", to_json(v.atom)}, {"vertices", v.vertices}, {"message", v.message}};
}

Json to_json(const VerifyReport& r) {
    Json violations = Json::array();
    for (const auto& v : r.violations) violations.push_back(to_json(v));
    return Json{{"ok", r.ok()}, {"atoms", r.atoms_checked}, {"violations", violations}};
}

Json to_json(const ConfigurationWitness& w) {
    Json roles = Json::object();
    for (const auto& r : w.roles) roles[r.label] = r.vertex;
    return Json{{"kind", to_string(w.kind)}, {"roles", roles}};
}

Json to_json(const ChargeLedger& ledger) {
    Json initial = Json::array(), final_charge = Json::array(), transfers = Json::array();
    for (const auto& c : ledger.initial) initial.push_back(to_json(c));
    for (const auto& c : ledger.final_charge) final_charge.push_back(to_json(c));
    for (const auto& t : ledger.transfers)
        transfers.push_back(Json{{"from", t.from}, {"to", t.to}, {"amount", to_json(t.amount)}, {"rule", to_string(t.rule)}});
    return Json{{"initial", initial}, {"final", final_charge}, {"transfers", transfers}};
}

Json to_json(const Lemma4Result& r) {
    Json witnesses = Json::array();
    for (const auto& w : r.witnesses) witnesses.push_back(to_json(w));
    Json out{{"status", to_string(r.status)}, {"average_degree", to_json(r.average_degree)}, {"detail", r.detail}};
    if (r.negative_vertex) {
        out["negative_vertex"] = *r.negative_vertex;
        out["negative_charge"] = to_json(r.negative_charge);
    }
    out["witnesses"] = witnesses;
    return out;
}

Json vertex_list(const VertexSet& s) { return s.members(); }

Json to_json(const FractionalCoverResult& r) {
    Json cover = Json::array();
    for (const auto& c : r.cover) cover.push_back(Json{{"set", vertex_list(c.set)}, {"weight", to_json(c.weight)}});
    Json dual = Json::array(), history = Json::array();
    for (const auto& y : r.dual) dual.push_back(to_json(y));
    for (const auto& h : r.pricing_history) history.push_back(to_json(h));
    Json out{{"value", to_json(r.value)},
             {"cover", cover},
             {"dual", dual},
             {"pricing_bound", to_json(r.pricing_bound)},
             {"iterations", r.iterations},
             {"columns", r.columns},
             {"pricing_history", history}};
    if (r.enumeration_value) out["enumeration_value"] = to_json(*r.enumeration_value);
    return out;
}

Json to_json(const ExtensionReport& r) {
    Json blocked = Json::array(), covering = Json::array(), lists = Json::object(), offshoots = Json::object();
    for (const auto& b : r.blocked) blocked.push_back(Json{{"set", to_json(b)}, {"measure", to_json(b.measure())}});
    for (const auto& c : r.covering) covering.push_back(to_json(c));
    for (std::size_t i = 0; i < r.local.size(); ++i) {
        lists[std::to_string(r.local[i])] = to_json(r.assignment.lists[i]);
        offshoots[std::to_string(r.local[i])] = to_json(r.assignment.offshoots[i]);
    }
    return Json{{"local", r.local},         {"blocked", blocked},      {"lists", lists},
                {"offshoots", offshoots},   {"covering", covering},    {"cells", r.nonempty_cells},
                {"arborization", to_json(r.result)}};
}

IntervalSet interval_set_from_json(const Json& j) {
    if (!j.is_array()) throw ParseError("interval set must be an array of pairs");
    std::vector<Interval> pieces;
    for (const auto& p : j) {
        if (!p.is_array() || p.size() != 2 || !p[0].is_string() || !p[1].is_string())
            throw ParseError("interval must be a pair of rational strings");
        Interval iv{parse_rational(p[0].get<std::string>()), parse_rational(p[1].get<std::string>())};
        if (iv.lo > iv.hi) throw ParseError("interval with lower end above upper end");
        pieces.push_back(std::move(iv));
    }
    return IntervalSet::from(std::move(pieces));
}

FractionalArborization arborization_from_json(const Json& j) {
    if (!j.is_object()) throw ParseError("arborization must be an object keyed by vertex");
    FractionalArborization phi;
    for (const auto& [key, value] : j.items()) {
        std::size_t used = 0;
        int v = -1;
        try {
            v = std::stoi(key, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used != key.size() || v < 0) throw ParseError("invalid vertex key '" + key + "'");
        phi.sets[v] = interval_set_from_json(value);
    }
    return phi;
}

} // namespace fva
