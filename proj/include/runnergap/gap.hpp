#pragma once

#include <cstdint>
#include <set>
#include <stdexcept>
#include <vector>

#include "runnergap/circle.hpp"
#include "runnergap/rational.hpp"
#include "runnergap/velocity.hpp"

namespace runnergap {

struct GapResult {
    Rational delta;                      // max over t of min_i ||t v_i||
    CirclePoint witness;                 // smallest time attaining delta among candidates
    std::uint64_t candidates_examined = 0;
};

// Exact maximum of t -> min_i ||t v_i|| over R/Z.
//
// The objective is piecewise linear with slopes +-v_i, so its maximum sits
// either at a peak of a single term (t = a/(2v_i), a odd) or where an
// increasing and a decreasing term cross (t = a/(v_i+v_j)).  We enumerate
// the superset of candidate times
//     { a/(v_i+v_j) } u { a/|v_i-v_j| } u { a/(2v_i) }
// over the canonicalized tuple and take the exact maximum; the grid oracle
// in the test suite guards the completeness of this set.  Ties between
// candidate times are broken toward the smallest witness.
inline GapResult compute_delta(const VelocityTuple& tuple) {
    if (tuple.empty()) throw std::invalid_argument("compute_delta: empty tuple");

    const Int scale = canonical_scale(tuple);
    const VelocityTuple canon = canonicalize(tuple);

    // Duplicates cannot change the minimum; drop them for the scan.
    std::vector<Int> u = canon.velocities();
    u.erase(std::unique(u.begin(), u.end()), u.end());
    const std::size_t m = u.size();

    std::set<Int> denoms;
    for (std::size_t i = 0; i < m; ++i) {
        denoms.insert(2 * u[i]);
        for (std::size_t j = i + 1; j < m; ++j) {
            denoms.insert(u[i] + u[j]);
            denoms.insert(u[j] - u[i]);
        }
    }

    // Best so far, as exact fractions; compared by cross-multiplication to
    // keep the hot loop free of gcd reductions.
    Int best_num = -1, best_den = 1;       // delta = best_num / best_den
    Int wit_num = 0, wit_den = 1;          // witness time
    std::uint64_t examined = 0;

    for (const Int& d : denoms) {
        const Int half = d / 2;
        for (Int a = 1; a <= half; ++a) {
            ++examined;
            // min over velocities of ||a u_k / d||, aborted early once the
            // running minimum cannot beat or tie the best candidate.
            Int cur = d;  // above any reachable norm numerator
            bool alive = true;
            for (const Int& v : u) {
                Int r = (a * v) % d;
                Int s = r <= d - r ? r : d - r;
                if (s * best_den < best_num * d) {
                    alive = false;
                    break;
                }
                if (s < cur) cur = s;
            }
            if (!alive) continue;
            // Replace on strictly larger delta, or on equal delta with a
            // smaller witness time.
            Int lhs = cur * best_den, rhs = best_num * d;
            if (lhs > rhs || (lhs == rhs && a * wit_den < wit_num * d)) {
                best_num = cur;
                best_den = d;
                wit_num = a;
                wit_den = d;
            }
        }
    }

    GapResult out;
    out.delta = Rational(best_num, best_den);
    out.witness = CirclePoint(Rational(wit_num, wit_den * scale));
    out.candidates_examined = examined;
    return out;
}

struct ProbeResult {
    bool lonely = false;                 // min_i ||t v_i|| >= threshold
    std::vector<Rational> norms;         // per-runner distances at time t
};

inline ProbeResult probe_time(const VelocityTuple& tuple, const CirclePoint& t,
                              const Rational& threshold) {
    if (tuple.empty()) throw std::invalid_argument("probe_time: empty tuple");
    ProbeResult out;
    out.norms.reserve(tuple.size());
    out.lonely = true;
    for (const Int& v : tuple.velocities()) {
        Rational norm = circle_norm(CirclePoint(t.value() * Rational(v)));
        if (norm < threshold) out.lonely = false;
        out.norms.push_back(std::move(norm));
    }
    return out;
}

}  // namespace runnergap
