#pragma once

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "runnergap/rational.hpp"

namespace runnergap {

// A point on R/Z, stored as the representative in [0, 1).
class CirclePoint {
public:
    CirclePoint() : value_(0) {}
    explicit CirclePoint(const Rational& r) : value_(r.frac()) {}

    const Rational& value() const { return value_; }
    std::string str() const { return value_.str(); }

    friend bool operator==(const CirclePoint& a, const CirclePoint& b) { return a.value_ == b.value_; }
    friend bool operator!=(const CirclePoint& a, const CirclePoint& b) { return !(a == b); }
    friend bool operator<(const CirclePoint& a, const CirclePoint& b) { return a.value_ < b.value_; }

private:
    Rational value_;
};

// Distance to the nearest integer; always in [0, 1/2].
inline Rational circle_norm(const CirclePoint& t) {
    return rat_min(t.value(), Rational(1) - t.value());
}

inline Rational circle_norm(const Rational& x) { return circle_norm(CirclePoint(x)); }

// Finite union of closed arcs on R/Z with rational endpoints.
//
// Canonical form: arcs sorted by left endpoint, pairwise separated (no
// overlapping and no touching pairs survive merging), each arc satisfying
// 0 <= lo <= hi <= 1.  An arc wrapping through 0 is stored split into a
// tail piece [x, 1] and a head piece [0, y]; these are never merged across
// the split even though they touch at the circle point 0.
class CircleIntervalSet {
public:
    struct Arc {
        Rational lo, hi;
        friend bool operator==(const Arc& a, const Arc& b) { return a.lo == b.lo && a.hi == b.hi; }
    };

    CircleIntervalSet() = default;

    static CircleIntervalSet empty_set() { return CircleIntervalSet(); }

    static CircleIntervalSet full_circle() {
        CircleIntervalSet s;
        s.arcs_.push_back(Arc{Rational(0), Rational(1)});
        return s;
    }

    // Builds the closed arc from a to b (b >= a).  Inputs may lie anywhere
    // on the real line; the arc is reduced mod 1 and split at 0 if needed.
    // b - a >= 1 yields the full circle.
    static CircleIntervalSet arc(const Rational& a, const Rational& b) {
        if (b < a) throw std::invalid_argument("CircleIntervalSet: arc with b < a");
        if (b - a >= Rational(1)) return full_circle();
        CircleIntervalSet s;
        Rational lo = a.frac();
        Rational hi = lo + (b - a);
        if (hi <= Rational(1)) {
            s.arcs_.push_back(Arc{lo, hi});
        } else {
            s.arcs_.push_back(Arc{Rational(0), hi - Rational(1)});
            s.arcs_.push_back(Arc{lo, Rational(1)});
        }
        s.canonicalize();
        return s;
    }

    static CircleIntervalSet from_arcs(const std::vector<std::pair<Rational, Rational>>& raw) {
        CircleIntervalSet s;
        for (const auto& [a, b] : raw) {
            CircleIntervalSet piece = arc(a, b);
            s.arcs_.insert(s.arcs_.end(), piece.arcs_.begin(), piece.arcs_.end());
        }
        s.canonicalize();
        return s;
    }

    const std::vector<Arc>& arcs() const { return arcs_; }
    std::size_t arc_count() const { return arcs_.size(); }
    bool is_empty() const { return arcs_.empty(); }

    bool is_full() const {
        return arcs_.size() == 1 && arcs_[0].lo == Rational(0) && arcs_[0].hi == Rational(1);
    }

    Rational measure() const {
        Rational m(0);
        for (const Arc& a : arcs_) m += a.hi - a.lo;
        return m;
    }

    bool contains(const CirclePoint& p) const {
        const Rational& x = p.value();
        // 0 is also the endpoint 1 of a tail arc.
        if (x.is_zero() && !arcs_.empty() && arcs_.back().hi == Rational(1)) return true;
        // Last arc with lo <= x.
        auto it = std::upper_bound(arcs_.begin(), arcs_.end(), x,
                                   [](const Rational& v, const Arc& a) { return v < a.lo; });
        if (it == arcs_.begin()) return false;
        --it;
        return x <= it->hi;
    }

    CircleIntervalSet unite(const CircleIntervalSet& other) const {
        CircleIntervalSet out;
        out.arcs_ = arcs_;
        out.arcs_.insert(out.arcs_.end(), other.arcs_.begin(), other.arcs_.end());
        out.canonicalize();
        return out;
    }

    CircleIntervalSet intersect(const CircleIntervalSet& other) const {
        CircleIntervalSet out;
        std::size_t i = 0, j = 0;
        while (i < arcs_.size() && j < other.arcs_.size()) {
            const Arc& a = arcs_[i];
            const Arc& b = other.arcs_[j];
            Rational lo = rat_max(a.lo, b.lo);
            Rational hi = rat_min(a.hi, b.hi);
            if (lo <= hi) out.arcs_.push_back(Arc{lo, hi});
            if (a.hi < b.hi)
                ++i;
            else
                ++j;
        }
        // The linear sweep cannot see that a tail arc [x, 1] of one set and a
        // head arc [0, y] of the other meet at the circle point 0.
        bool zero_in_both = contains(CirclePoint()) && other.contains(CirclePoint());
        out.canonicalize();
        if (zero_in_both && !out.contains(CirclePoint())) {
            out.arcs_.insert(out.arcs_.begin(), Arc{Rational(0), Rational(0)});
            out.canonicalize();
        }
        return out;
    }

    // Open components of the complement, as (start, end) pairs with the
    // wrap-around gap (if any) reported last with end > 1.
    std::vector<Arc> gaps() const {
        std::vector<Arc> out;
        if (arcs_.empty()) {
            out.push_back(Arc{Rational(0), Rational(1)});
            return out;
        }
        for (std::size_t i = 0; i + 1 < arcs_.size(); ++i)
            out.push_back(Arc{arcs_[i].hi, arcs_[i + 1].lo});
        Rational wrap_len = (Rational(1) - arcs_.back().hi) + arcs_.front().lo;
        if (wrap_len > Rational(0))
            out.push_back(Arc{arcs_.back().hi, Rational(1) + arcs_.front().lo});
        return out;
    }

    // Midpoint of the first complement gap, if the set does not cover R/Z.
    std::optional<CirclePoint> first_gap_midpoint() const {
        auto gs = gaps();
        if (gs.empty()) return std::nullopt;
        return CirclePoint((gs[0].lo + gs[0].hi) / Rational(2));
    }

    friend bool operator==(const CircleIntervalSet& a, const CircleIntervalSet& b) {
        return a.arcs_ == b.arcs_;
    }
    friend bool operator!=(const CircleIntervalSet& a, const CircleIntervalSet& b) { return !(a == b); }

    std::string str() const {
        std::string s;
        for (const Arc& a : arcs_) {
            if (!s.empty()) s += ' ';
            s += '[' + a.lo.str() + ',' + a.hi.str() + ']';
        }
        return s.empty() ? std::string("{}") : s;
    }

private:
    void canonicalize() {
        for (const Arc& a : arcs_) {
            if (a.lo < Rational(0) || a.hi > Rational(1) || a.hi < a.lo)
                throw std::logic_error("CircleIntervalSet: arc out of range");
        }
        std::sort(arcs_.begin(), arcs_.end(), [](const Arc& a, const Arc& b) {
            return a.lo < b.lo || (a.lo == b.lo && a.hi < b.hi);
        });
        std::vector<Arc> merged;
        for (const Arc& a : arcs_) {
            if (!merged.empty() && a.lo <= merged.back().hi)
                merged.back().hi = rat_max(merged.back().hi, a.hi);
            else
                merged.push_back(a);
        }
        // A lone point at 1 is the circle point 0.
        if (!merged.empty() && merged.back().lo == Rational(1)) {
            merged.pop_back();
            merged.insert(merged.begin(), Arc{Rational(0), Rational(0)});
            std::sort(merged.begin(), merged.end(),
                      [](const Arc& a, const Arc& b) { return a.lo < b.lo; });
            // Re-merge in case [0,0] touches an existing head arc.
            std::vector<Arc> again;
            for (const Arc& a : merged) {
                if (!again.empty() && a.lo <= again.back().hi)
                    again.back().hi = rat_max(again.back().hi, a.hi);
                else
                    again.push_back(a);
            }
            merged = std::move(again);
        }
        arcs_ = std::move(merged);
    }

    std::vector<Arc> arcs_;
};

}  // namespace runnergap
