#pragma once

#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "fva/rational.hpp"

namespace fva {

class IntervalError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Half-open interval [lo, hi).
struct Interval {
    Rational lo;
    Rational hi;
    bool operator==(const Interval&) const = default;
};

/// Finite union of half-open rational intervals in canonical form: sorted,
/// non-empty, pairwise disjoint and non-adjacent.
class IntervalSet {
public:
    IntervalSet() = default;
    /// [lo, hi); empty when lo >= hi.
    static IntervalSet interval(const Rational& lo, const Rational& hi);
    static IntervalSet from(std::vector<Interval> pieces);

    const std::vector<Interval>& intervals() const { return pieces_; }
    bool empty() const { return pieces_.empty(); }
    Rational measure() const;

    IntervalSet unite(const IntervalSet& other) const;
    IntervalSet intersect(const IntervalSet& other) const;
    IntervalSet subtract(const IntervalSet& other) const;
    /// [0, k) minus this set. Throws for k <= 0.
    IntervalSet complement_within(const Rational& k) const;

    bool subset_of(const IntervalSet& other) const;
    bool intersects(const IntervalSet& other) const;
    bool within(const Rational& lo, const Rational& hi) const;

    /// The leftmost part of measure `m`. Throws if m exceeds the measure.
    IntervalSet prefix(const Rational& m) const;

    /// "a..b, c..d" with exact rationals; "{}" when empty.
    std::string to_string() const;

    bool operator==(const IntervalSet&) const = default;

private:
    std::vector<Interval> pieces_;
};

inline IntervalSet operator|(const IntervalSet& a, const IntervalSet& b) { return a.unite(b); }
inline IntervalSet operator&(const IntervalSet& a, const IntervalSet& b) { return a.intersect(b); }
inline IntervalSet operator-(const IntervalSet& a, const IntervalSet& b) { return a.subtract(b); }

/// Maximal pieces of the union of a family on which membership is constant.
struct AtomPartition {
    std::vector<IntervalSet> atoms;
    /// membership[i][j]: family member j contains atom i.
    std::vector<std::vector<bool>> membership;
};

/// Atoms are ordered by their leftmost point.
AtomPartition atoms(std::span<const IntervalSet> family);

/// Image of psi under the order-preserving map from [0, 1) onto `cell` that
/// scales measure uniformly by the measure of `cell`.
IntervalSet transport(const IntervalSet& psi, const IntervalSet& cell);

} // namespace fva
