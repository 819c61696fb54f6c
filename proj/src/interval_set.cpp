#include "fva/interval_set.hpp"

#include <algorithm>
#include <map>

namespace fva {

namespace {

std::vector<Rational> breakpoints(std::span<const IntervalSet> sets) {
    std::vector<Rational> pts;
    for (const auto& s : sets)
        for (const auto& iv : s.intervals()) {
            pts.push_back(iv.lo);
            pts.push_back(iv.hi);
        }
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    return pts;
}

// Membership of the elementary segments [pts[i], pts[i+1]) in `s`.
std::vector<bool> segment_membership(const IntervalSet& s, const std::vector<Rational>& pts) {
    std::vector<bool> in(pts.empty() ? 0 : pts.size() - 1, false);
    std::size_t k = 0;
    for (const auto& iv : s.intervals()) {
        while (pts[k] < iv.lo) ++k;
        while (pts[k] < iv.hi) in[k++] = true;
    }
    return in;
}

template <class Pred>
IntervalSet combine(const IntervalSet& a, const IntervalSet& b, Pred keep) {
    const IntervalSet pair[] = {a, b};
    auto pts = breakpoints(pair);
    if (pts.size() < 2) return {};
    auto in_a = segment_membership(a, pts);
    auto in_b = segment_membership(b, pts);
    std::vector<Interval> out;
    for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
        if (!keep(in_a[i], in_b[i])) continue;
        if (!out.empty() && out.back().hi == pts[i])
            out.back().hi = pts[i + 1];
        else
            out.push_back({pts[i], pts[i + 1]});
    }
    return IntervalSet::from(std::move(out));
}

} // namespace

IntervalSet IntervalSet::interval(const Rational& lo, const Rational& hi) {
    IntervalSet s;
    if (lo < hi) s.pieces_.push_back({lo, hi});
    return s;
}

IntervalSet IntervalSet::from(std::vector<Interval> pieces) {
    std::erase_if(pieces, [](const Interval& iv) { return !(iv.lo < iv.hi); });
    std::sort(pieces.begin(), pieces.end(),
              [](const Interval& a, const Interval& b) { return a.lo < b.lo; });
    IntervalSet s;
    for (auto& iv : pieces) {
        if (!s.pieces_.empty() && iv.lo <= s.pieces_.back().hi) {
            if (s.pieces_.back().hi < iv.hi) s.pieces_.back().hi = iv.hi;
        } else {
            s.pieces_.push_back(std::move(iv));
        }
    }
    return s;
}

Rational IntervalSet::measure() const {
    Rational total = 0;
    for (const auto& iv : pieces_) total += iv.hi - iv.lo;
    return total;
}

IntervalSet IntervalSet::unite(const IntervalSet& other) const {
    return combine(*this, other, [](bool a, bool b) { return a || b; });
}

IntervalSet IntervalSet::intersect(const IntervalSet& other) const {
    return combine(*this, other, [](bool a, bool b) { return a && b; });
}

IntervalSet IntervalSet::subtract(const IntervalSet& other) const {
    return combine(*this, other, [](bool a, bool b) { return a && !b; });
}

IntervalSet IntervalSet::complement_within(const Rational& k) const {
    if (k <= 0) throw IntervalError("complement ambient (0, k) needs k > 0, got " + k.str());
    return interval(0, k).subtract(*this);
}

bool IntervalSet::subset_of(const IntervalSet& other) const {
    return subtract(other).empty();
}

bool IntervalSet::intersects(const IntervalSet& other) const {
    return !intersect(other).empty();
}

bool IntervalSet::within(const Rational& lo, const Rational& hi) const {
    return empty() || (lo <= pieces_.front().lo && pieces_.back().hi <= hi);
}

IntervalSet IntervalSet::prefix(const Rational& m) const {
    if (m < 0) throw IntervalError("negative prefix measure");
    Rational left = m;
    IntervalSet out;
    for (const auto& iv : pieces_) {
        if (left == 0) break;
        Rational len = iv.hi - iv.lo;
        if (len <= left) {
            out.pieces_.push_back(iv);
            left -= len;
        } else {
            out.pieces_.push_back({iv.lo, iv.lo + left});
            left = 0;
        }
    }
    if (left != 0)
        throw IntervalError("prefix of measure " + m.str() + " exceeds measure " + measure().str());
    return out;
}

std::string IntervalSet::to_string() const {
    if (pieces_.empty()) return "{}";
    std::string out;
    for (const auto& iv : pieces_) {
        if (!out.empty()) out += ", ";
        out += iv.lo.str() + ".." + iv.hi.str();
    }
    return out;
}

AtomPartition atoms(std::span<const IntervalSet> family) {
    AtomPartition out;
    auto pts = breakpoints(family);
    if (pts.size() < 2) return out;
    std::vector<std::vector<bool>> member;
    member.reserve(family.size());
    for (const auto& s : family) member.push_back(segment_membership(s, pts));

    std::map<std::vector<bool>, std::size_t> index;
    std::vector<std::vector<Interval>> pieces;
    for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
        std::vector<bool> key(family.size());
        bool any = false;
        for (std::size_t j = 0; j < family.size(); ++j) {
            key[j] = member[j][i];
            any = any || key[j];
        }
        if (!any) continue;
        auto [it, fresh] = index.try_emplace(key, pieces.size());
        if (fresh) {
            pieces.emplace_back();
            out.membership.push_back(key);
        }
        pieces[it->second].push_back({pts[i], pts[i + 1]});
    }
    for (auto& p : pieces) out.atoms.push_back(IntervalSet::from(std::move(p)));
    return out;
}

namespace {

// Leftmost point p of `cell` with measure(cell ∩ (-inf, p)) == target.
Rational locate(const IntervalSet& cell, Rational target) {
    for (const auto& iv : cell.intervals()) {
        Rational len = iv.hi - iv.lo;
        if (target <= len) return iv.lo + target;
        target -= len;
    }
    return cell.intervals().back().hi;
}

} // namespace

IntervalSet transport(const IntervalSet& psi, const IntervalSet& cell) {
    if (!psi.within(0, 1)) throw IntervalError("transport source " + psi.to_string() + " not within [0, 1]");
    const Rational m = cell.measure();
    if (m == 0 || psi.empty()) return {};
    std::vector<Interval> out;
    for (const auto& iv : psi.intervals()) {
        auto piece = cell.intersect(IntervalSet::interval(locate(cell, iv.lo * m), locate(cell, iv.hi * m)));
        out.insert(out.end(), piece.intervals().begin(), piece.intervals().end());
    }
    return IntervalSet::from(std::move(out));
}

} // namespace fva
