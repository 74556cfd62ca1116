#pragma once

#include <algorithm>
#include <set>
#include <stdexcept>
#include <vector>

#include "runnergap/bohr.hpp"
#include "runnergap/circle.hpp"
#include "runnergap/rational.hpp"
#include "runnergap/velocity.hpp"

namespace runnergap {

// Integer-valued step function on R/Z.  The value is recorded separately at
// every breakpoint and on every open piece between consecutive breakpoints,
// so point evaluation stays exact even where closed arcs meet.  The first
// breakpoint is always 0; piece i covers (breakpoints[i], breakpoints[i+1])
// with the last piece wrapping to 1.
struct StepFunction {
    std::vector<Rational> breakpoints;
    std::vector<long long> point_values;
    std::vector<long long> piece_values;

    long long value_at(const CirclePoint& t) const {
        const Rational& x = t.value();
        auto it = std::upper_bound(breakpoints.begin(), breakpoints.end(), x);
        std::size_t idx = static_cast<std::size_t>(it - breakpoints.begin()) - 1;
        if (breakpoints[idx] == x) return point_values[idx];
        return piece_values[idx];
    }

    long long max_value() const {
        long long m = 0;
        for (long long v : point_values) m = std::max(m, v);
        for (long long v : piece_values) m = std::max(m, v);
        return m;
    }

    // Integral of F^k over R/Z (breakpoints have measure zero).
    Rational integral_power(unsigned k) const {
        Rational out(0);
        for (std::size_t i = 0; i < piece_values.size(); ++i) {
            Rational next = i + 1 < breakpoints.size() ? breakpoints[i + 1] : Rational(1);
            Rational len = next - breakpoints[i];
            Rational val(piece_values[i]);
            out += pow(val, k) * len;
        }
        return out;
    }
};

// F(t) = #{ i : ||t v_i|| <= delta }, as an exact step function.
inline StepFunction multiplicity_F(const VelocityTuple& tuple, const Rational& delta) {
    if (tuple.empty()) throw std::invalid_argument("multiplicity_F: empty tuple");
    if (delta <= Rational(0) || delta >= Rational(1, 2))
        throw std::invalid_argument("multiplicity_F: delta must lie in (0, 1/2)");

    std::vector<CircleIntervalSet> sets;
    sets.reserve(tuple.size());
    for (const Int& v : tuple.velocities()) sets.push_back(rank_one_bohr(v, delta));

    std::set<Rational> points;
    points.insert(Rational(0));
    for (const auto& s : sets)
        for (const auto& a : s.arcs()) {
            if (a.lo < Rational(1)) points.insert(a.lo);
            if (a.hi < Rational(1)) points.insert(a.hi);
        }

    StepFunction f;
    f.breakpoints.assign(points.begin(), points.end());
    f.point_values.reserve(f.breakpoints.size());
    f.piece_values.reserve(f.breakpoints.size());
    auto count_at = [&sets](const CirclePoint& p) {
        long long c = 0;
        for (const auto& s : sets)
            if (s.contains(p)) ++c;
        return c;
    };
    for (std::size_t i = 0; i < f.breakpoints.size(); ++i) {
        f.point_values.push_back(count_at(CirclePoint(f.breakpoints[i])));
        Rational next = i + 1 < f.breakpoints.size() ? f.breakpoints[i + 1] : Rational(1);
        Rational mid = (f.breakpoints[i] + next) / Rational(2);
        f.piece_values.push_back(count_at(CirclePoint(mid)));
    }
    return f;
}

struct Moments {
    Rational m1, m2, m3;  // integrals of F, F^2, F^3
};

// First three moments of the multiplicity function.  m1 = 2*n*delta always;
// m2 equals the sum of the pairwise rank-two Bohr measures (asserted in the
// test suite through the independent interval-intersection path).
inline Moments moments(const VelocityTuple& tuple, const Rational& delta) {
    StepFunction f = multiplicity_F(tuple, delta);
    return Moments{f.integral_power(1), f.integral_power(2), f.integral_power(3)};
}

}  // namespace runnergap
