#pragma once

#include <stdexcept>
#include <vector>

#include "fva/arborization.hpp"
#include "fva/offshoot.hpp"
#include "fva/structure.hpp"

namespace fva {

class ExtensionError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Replaces phi(u) by ((0, 2 - eps) minus phi(u')) together with the leftmost
/// measure-eps part of phi(u) and phi(u') in common.
FractionalArborization normalize_degree_two(const FractionalArborization& phi, Vertex u, Vertex u_far,
                                            const Rational& epsilon);

Rational config_a_epsilon_bound();  // 5/49
Rational config_b_epsilon_bound();  // 1/324

/// Star H: local vertex 0 is v, 1..t are u_1..u_t (t <= 7).
DemandSchedule schedule_config_A(const Graph& h, const OffshootAssignment& lo, const IntervalSet& blocked,
                                 const Rational& epsilon);

/// Path H: local vertex 0 is v, 1 is v_1, 2 is v_2.
DemandSchedule schedule_config_B(const Graph& h, const OffshootAssignment& lo, const IntervalSet& blocked1,
                                 const IntervalSet& blocked2, const Rational& epsilon);

struct ExtensionReport {
    FractionalArborization result;
    std::vector<Vertex> local;          // host ids of the local vertices of H
    OffshootAssignment assignment;
    std::vector<IntervalSet> blocked;   // B, or b(v_1) and b(v_2)
    std::vector<Rational> covering;     // per local vertex
    std::size_t nonempty_cells = 0;
    FractionalArborization normalized;  // input after trimming (and normalisation for B)
};

/// phi is a (2 - eps)-arborization of G minus the u_i of the witness.
ExtensionReport extend_config_A(const Graph& g, const ConfigurationWitness& witness,
                                const FractionalArborization& phi, const Rational& epsilon);

/// phi is a (2 - eps)-arborization of G - v.
ExtensionReport extend_config_B(const Graph& g, const ConfigurationWitness& witness,
                                const FractionalArborization& phi, const Rational& epsilon);

} // namespace fva
