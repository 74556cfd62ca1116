#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "runnergap/bohr.hpp"
#include "runnergap/rational.hpp"

namespace runnergap {

// Generalised arithmetic progression P(w_1..w_r; N_1..N_r): the sums
// n_1 w_1 + ... + n_r w_r with integer |n_i| <= N_i.  The presentation
// (generators plus dimensions) is the object; dilation acts on it, not on
// the underlying set of sums.  Dimensions are rationals.
struct Progression {
    std::vector<Int> generators;
    std::vector<Rational> dimensions;

    Progression(std::vector<Int> gens, std::vector<Rational> dims)
        : generators(std::move(gens)), dimensions(std::move(dims)) {
        if (generators.empty()) throw std::invalid_argument("Progression: rank must be >= 1");
        if (generators.size() != dimensions.size())
            throw std::invalid_argument("Progression: generator/dimension count mismatch");
        for (const Rational& d : dimensions)
            if (d < Rational(0)) throw std::invalid_argument("Progression: negative dimension");
    }

    std::size_t rank() const { return generators.size(); }

    std::string str() const {
        std::string g, d;
        for (const Int& w : generators) {
            if (!g.empty()) g += ',';
            g += w.str();
        }
        for (const Rational& n : dimensions) {
            if (!d.empty()) d += ',';
            d += n.str();
        }
        return "P(" + g + "; " + d + ")";
    }

    friend bool operator==(const Progression& a, const Progression& b) {
        return a.generators == b.generators && a.dimensions == b.dimensions;
    }
};

// tP = P(w_1..w_r; tN_1..tN_r).
inline Progression dilate(const Progression& p, const Rational& t) {
    if (t <= Rational(0)) throw std::invalid_argument("dilate: factor must be positive");
    std::vector<Rational> dims;
    dims.reserve(p.dimensions.size());
    for (const Rational& d : p.dimensions) dims.push_back(d * t);
    return Progression(p.generators, std::move(dims));
}

namespace detail {

// Enumerates partial sums n_lo..n_hi over the coordinate range [lo, hi),
// accumulating counts per sum value.
inline void accumulate_sums(const Progression& p, std::size_t lo, std::size_t hi,
                            std::map<Int, Int>& counts) {
    std::vector<Int> box;
    for (std::size_t i = lo; i < hi; ++i) box.push_back(p.dimensions[i].floor());
    std::vector<Int> idx(box.size());
    for (std::size_t i = 0; i < box.size(); ++i) idx[i] = -box[i];
    while (true) {
        Int sum = 0;
        for (std::size_t i = 0; i < box.size(); ++i) sum += idx[i] * p.generators[lo + i];
        ++counts[sum];
        std::size_t k = 0;
        while (k < box.size()) {
            if (idx[k] < box[k]) {
                ++idx[k];
                break;
            }
            idx[k] = -box[k];
            ++k;
        }
        if (k == box.size()) break;
    }
}

}  // namespace detail

// mu(P): number of integer tuples in the dimension box whose generator
// combination sums to zero.  Rank one and two have closed forms; higher
// ranks use a meet-in-the-middle split (the naive full enumeration stays in
// the test suite as the oracle).
inline Int multiplicity(const Progression& p) {
    const std::size_t r = p.rank();
    std::vector<Int> box;
    box.reserve(r);
    for (const Rational& d : p.dimensions) box.push_back(d.floor());

    if (r == 1) {
        if (p.generators[0] == 0) return 2 * box[0] + 1;
        return 1;
    }
    if (r == 2) {
        const Int &w1 = p.generators[0], &w2 = p.generators[1];
        if (w1 == 0 && w2 == 0) return (2 * box[0] + 1) * (2 * box[1] + 1);
        if (w1 == 0) return 2 * box[0] + 1;
        if (w2 == 0) return 2 * box[1] + 1;
        // Solutions are the integer multiples of the primitive vector
        // (w2/g, -w1/g).
        Int g = gcd(w1, w2);
        Int s1 = abs(w2) / g, s2 = abs(w1) / g;
        Int k = std::min(Int(box[0] / s1), Int(box[1] / s2));
        return 2 * k + 1;
    }

    std::size_t half = r / 2;
    std::map<Int, Int> left;
    detail::accumulate_sums(p, 0, half, left);
    std::map<Int, Int> right;
    detail::accumulate_sums(p, half, r, right);
    Int total = 0;
    for (const auto& [sum, cnt] : right) {
        auto it = left.find(-sum);
        if (it != left.end()) total += it->second * cnt;
    }
    return total;
}

// P is t-proper when all sums with |n_i| <= t N_i are distinct; decided by
// mu(2tP) == 1.
inline bool is_t_proper(const Progression& p, const Rational& t) {
    if (t <= Rational(0)) throw std::invalid_argument("is_t_proper: t must be positive");
    return multiplicity(dilate(p, Rational(2) * t)) == 1;
}

struct LodRatio {
    Rational measure;  // m(B)
    Int mu;            // mu of the dual progression P(v; 1/delta)
    Rational ratio;    // measure / (mu * prod delta_j)
};

// Compares a Bohr set's measure against mu(P(v_1..v_r; 1/delta_1..1/delta_r))
// times the product of the radii; the two agree up to a rank-dependent
// constant factor.
inline LodRatio lod_ratio(const BohrSpec& spec) {
    spec.validate();
    LodRatio out;
    out.measure = bohr_measure(spec);
    std::vector<Rational> dual_dims;
    Rational prod(1);
    for (const Rational& d : spec.radii) {
        dual_dims.push_back(Rational(1) / d);
        prod *= d;
    }
    out.mu = multiplicity(Progression(spec.frequencies, std::move(dual_dims)));
    out.ratio = out.measure / (Rational(out.mu) * prod);
    return out;
}

}  // namespace runnergap
