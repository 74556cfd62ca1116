#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "runnergap/circle.hpp"
#include "runnergap/rational.hpp"
#include "runnergap/velocity.hpp"

namespace runnergap {

// B(v_1,...,v_r; d_1,...,d_r) = { t : ||t v_i|| <= d_i for all i }.
struct BohrSpec {
    std::vector<Int> frequencies;
    std::vector<Rational> radii;

    BohrSpec(std::vector<Int> f, std::vector<Rational> r)
        : frequencies(std::move(f)), radii(std::move(r)) {
        validate();
    }

    std::size_t rank() const { return frequencies.size(); }

    void validate() const {
        if (frequencies.empty()) throw std::invalid_argument("BohrSpec: rank must be >= 1");
        if (frequencies.size() != radii.size())
            throw std::invalid_argument("BohrSpec: frequency/radius count mismatch");
        for (const Int& v : frequencies)
            if (v == 0) throw std::invalid_argument("BohrSpec: zero frequency");
        for (const Rational& d : radii)
            if (d <= Rational(0) || d >= Rational(1, 2))
                throw std::invalid_argument("BohrSpec: radius must lie in (0, 1/2)");
    }
};

// Rank-one Bohr set: |v| arcs of width 2d/|v| centered at a/|v|.  The arc
// about 0 is stored split, so the representation has |v|+1 pieces.
inline CircleIntervalSet rank_one_bohr(const Int& frequency, const Rational& delta) {
    if (frequency == 0) throw std::invalid_argument("rank_one_bohr: zero frequency");
    if (delta <= Rational(0) || delta >= Rational(1, 2))
        throw std::invalid_argument("rank_one_bohr: radius must lie in (0, 1/2)");
    Int w = abs(frequency);
    if (w > 10'000'000)
        throw std::invalid_argument("rank_one_bohr: frequency too large for explicit arcs");
    Rational r = delta / Rational(w);
    std::vector<std::pair<Rational, Rational>> raw;
    raw.reserve(w.convert_to<std::size_t>() + 1);
    for (Int a = 0; a < w; ++a) {
        Rational center(a, w);
        raw.emplace_back(center - r, center + r);
    }
    return CircleIntervalSet::from_arcs(raw);
}

inline CircleIntervalSet build_bohr(const BohrSpec& spec) {
    spec.validate();
    CircleIntervalSet out = rank_one_bohr(spec.frequencies[0], spec.radii[0]);
    for (std::size_t i = 1; i < spec.rank(); ++i)
        out = out.intersect(rank_one_bohr(spec.frequencies[i], spec.radii[i]));
    return out;
}

inline Rational bohr_measure(const BohrSpec& spec) { return build_bohr(spec).measure(); }

// Kernel = the arc about 0; petal = the remaining |v|-1 arcs.
struct PetalSplit {
    CircleIntervalSet kernel;
    CircleIntervalSet petal;
};

inline PetalSplit kernel_petal(const Int& frequency, const Rational& delta) {
    if (frequency < 1) throw std::invalid_argument("kernel_petal: frequency must be >= 1");
    if (delta <= Rational(0) || delta >= Rational(1, 2))
        throw std::invalid_argument("kernel_petal: radius must lie in (0, 1/2)");
    Rational r = delta / Rational(frequency);
    PetalSplit out;
    out.kernel = CircleIntervalSet::arc(-r, r);
    std::vector<std::pair<Rational, Rational>> raw;
    for (Int a = 1; a < frequency; ++a) {
        Rational center(a, frequency);
        raw.emplace_back(center - r, center + r);
    }
    out.petal = CircleIntervalSet::from_arcs(raw);
    return out;
}

struct CoveringResult {
    bool covered = false;
    std::optional<CirclePoint> witness;  // a point missed by the union, when not covered
};

// Does the union of the B(v_i; delta) cover R/Z?  Equivalent to
// compute_delta(v) <= delta.  Radii >= 1/2 cover trivially.
inline CoveringResult covering_check(const VelocityTuple& tuple, const Rational& delta) {
    if (tuple.empty()) throw std::invalid_argument("covering_check: empty tuple");
    if (delta <= Rational(0)) throw std::invalid_argument("covering_check: delta must be positive");
    CoveringResult out;
    if (delta >= Rational(1, 2)) {
        out.covered = true;
        return out;
    }
    CircleIntervalSet u;
    for (const Int& v : tuple.velocities()) u = u.unite(rank_one_bohr(v, delta));
    auto gap = u.first_gap_midpoint();
    if (gap) {
        out.covered = false;
        out.witness = *gap;
    } else {
        out.covered = true;
    }
    return out;
}

struct SunflowerReport {
    long long n = 0;
    Rational delta;
    std::vector<long long> primes;                // primes in (n/4, n/2]
    std::vector<Rational> petal_measures;
    std::vector<Rational> kernel_measures;
    bool petals_strictly_disjoint = false;
    long long petal_tangencies = 0;               // single-point contacts (measure zero)
    Rational union_measure;                       // m(union of the full Bohr sets)
    Rational sum_measure;                         // sum of m(B(p_i; delta))
    Rational lower_bound;                         // (1 - 4/n) * sum
    bool inequality_holds = false;
};

inline bool is_prime(long long p) {
    if (p < 2) return false;
    for (long long q = 2; q * q <= p; ++q)
        if (p % q == 0) return false;
    return true;
}

// Primes p with n/4 < p <= n/2 (trial division; desk-scale inputs).
inline std::vector<long long> mid_range_primes(long long n) {
    std::vector<long long> out;
    for (long long p = 2; 2 * p <= n; ++p)
        if (4 * p > n && is_prime(p)) out.push_back(p);
    return out;
}

// The mid-range-prime sunflower: petals of B(p; delta) for primes
// p in (n/4, n/2] are pairwise disjoint once delta*(p+p') < 1, and the
// union of the full Bohr sets keeps at least a (1 - 4/n) fraction of the
// union bound.  Violations indicate an implementation bug and throw.
inline SunflowerReport sunflower_check(long long n, const Rational& delta) {
    if (n < 8) throw std::invalid_argument("sunflower_check: n must be >= 8");
    if (delta <= Rational(0) || delta > Rational(1, n + 1))
        throw std::invalid_argument("sunflower_check: delta must lie in (0, 1/(n+1)]");

    SunflowerReport rep;
    rep.n = n;
    rep.delta = delta;
    rep.primes = mid_range_primes(n);

    std::vector<PetalSplit> splits;
    CircleIntervalSet all;
    rep.sum_measure = Rational(0);
    for (long long p : rep.primes) {
        PetalSplit split = kernel_petal(Int(p), delta);
        rep.petal_measures.push_back(split.petal.measure());
        rep.kernel_measures.push_back(split.kernel.measure());
        rep.sum_measure += bohr_measure(BohrSpec({Int(p)}, {delta}));
        all = all.unite(split.kernel).unite(split.petal);
        splits.push_back(std::move(split));
    }

    rep.petals_strictly_disjoint = true;
    for (std::size_t i = 0; i < splits.size(); ++i)
        for (std::size_t j = i + 1; j < splits.size(); ++j) {
            CircleIntervalSet overlap = splits[i].petal.intersect(splits[j].petal);
            if (overlap.is_empty()) continue;
            if (overlap.measure() > Rational(0))
                throw std::logic_error("sunflower_check: petals of primes " +
                                       std::to_string(rep.primes[i]) + " and " +
                                       std::to_string(rep.primes[j]) + " genuinely overlap");
            rep.petals_strictly_disjoint = false;
            rep.petal_tangencies += static_cast<long long>(overlap.arc_count());
        }

    rep.union_measure = all.measure();
    rep.lower_bound = (Rational(1) - Rational(4, n)) * rep.sum_measure;
    rep.inequality_holds = rep.union_measure >= rep.lower_bound;
    if (!rep.inequality_holds)
        throw std::logic_error("sunflower_check: union measure fell below (1-4/n) of the union bound");
    return rep;
}

}  // namespace runnergap
