#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fva/graph.hpp"
#include "fva/rational.hpp"
#include "fva/structure.hpp"

namespace fva {

enum class DischargeRule { r1, r2 };
std::string_view to_string(DischargeRule rule);

struct Transfer {
    Vertex from;
    Vertex to;
    Rational amount;
    DischargeRule rule;
};

struct ChargeLedger {
    std::vector<Rational> initial;      // d(v) - 10/3
    std::vector<Rational> final_charge;
    std::vector<Transfer> transfers;
};

/// R1: every vertex sends 2/3 to each degree-two neighbour.
/// R2: every heavy vertex sends 1/6 to each degree-three neighbour.
ChargeLedger discharge(const Graph& g);

/// Every occurrence of the four unavoidable configurations.
std::vector<ConfigurationWitness> detect_configurations(const Graph& g);

struct Lemma4Result {
    enum class Status { vacuous, pass, counterexample };
    Status status = Status::vacuous;
    Rational average_degree;
    std::vector<ConfigurationWitness> witnesses;
    std::optional<Vertex> negative_vertex;  // least final charge, when negative
    Rational negative_charge;
    std::string detail;
};

std::string_view to_string(Lemma4Result::Status status);

/// Below average degree 10/3 some configuration must occur, and the vertex
/// of least final charge must be the centre of one.
Lemma4Result check_lemma4(const Graph& g);

} // namespace fva
