#pragma once

// Independent oracles used only by the test suite.  These deliberately avoid
// the library's algorithmic shortcuts: the grid oracle scans every point of
// the common refinement lattice, and the progression oracles enumerate full
// coefficient boxes.  They run on native integers with an explicit overflow
// guard, which the desk-scale corpora stay far below.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "runnergap/progression.hpp"
#include "runnergap/rational.hpp"

namespace testing_oracles {

using runnergap::Int;
using runnergap::Progression;
using runnergap::Rational;

// Exact maximum of min_i ||t v_i|| over the dense grid t = k/L, where L is
// the lcm of every candidate denominator of the tuple.  The true maximum
// lies on this grid, so the scan is an exhaustive exact oracle.
inline Rational grid_oracle_delta(const std::vector<std::uint64_t>& v) {
    if (v.empty()) throw std::invalid_argument("grid oracle: empty tuple");
    std::vector<std::uint64_t> dens;
    for (std::size_t i = 0; i < v.size(); ++i) {
        dens.push_back(2 * v[i]);
        for (std::size_t j = i + 1; j < v.size(); ++j) {
            dens.push_back(v[i] + v[j]);
            if (v[j] != v[i]) dens.push_back(v[j] - v[i]);
        }
    }
    std::uint64_t L = 1;
    for (std::uint64_t d : dens) {
        L = std::lcm(L, d);
        if (L > (std::uint64_t(1) << 62)) throw std::overflow_error("grid oracle: lattice too fine");
    }

    std::vector<std::uint64_t> residue(v.size(), 0);
    std::uint64_t best = 0;
    const std::uint64_t half = L / 2;  // min-norms are symmetric about 1/2
    for (std::uint64_t k = 1; k <= half; ++k) {
        std::uint64_t cur = UINT64_MAX;
        for (std::size_t i = 0; i < v.size(); ++i) {
            residue[i] += v[i];
            if (residue[i] >= L) residue[i] -= L;
            std::uint64_t s = residue[i] <= L - residue[i] ? residue[i] : L - residue[i];
            if (s < cur) cur = s;
        }
        if (cur > best) best = cur;
    }
    return Rational(Int(best), Int(L));
}

namespace detail {

struct SmallBox {
    std::vector<long long> gens;
    std::vector<long long> box;  // coefficient bound per coordinate
};

// Converts and checks that the full enumeration cannot overflow long long.
inline SmallBox small_box(const Progression& p, const Rational& scale) {
    SmallBox out;
    long long reach = 0;
    for (std::size_t i = 0; i < p.rank(); ++i) {
        long long w = p.generators[i].convert_to<long long>();
        long long b = (p.dimensions[i] * scale).floor().convert_to<long long>();
        if (b > 1'000'000) throw std::overflow_error("oracle: box too large");
        long long span = std::abs(w) * b;
        if (span > (1ll << 40) || reach > (1ll << 40)) throw std::overflow_error("oracle: overflow");
        reach += span;
        out.gens.push_back(w);
        out.box.push_back(b);
    }
    return out;
}

template <typename Visit>
inline void for_each_sum(const SmallBox& sb, Visit&& visit) {
    std::vector<long long> idx(sb.box.size());
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = -sb.box[i];
    while (true) {
        long long sum = 0;
        for (std::size_t i = 0; i < idx.size(); ++i) sum += idx[i] * sb.gens[i];
        visit(sum);
        std::size_t k = 0;
        while (k < idx.size()) {
            if (idx[k] < sb.box[k]) {
                ++idx[k];
                break;
            }
            idx[k] = -sb.box[k];
            ++k;
        }
        if (k == idx.size()) break;
    }
}

}  // namespace detail

// Full box enumeration of mu(P).
inline Int naive_multiplicity(const Progression& p) {
    auto sb = detail::small_box(p, Rational(1));
    long long count = 0;
    detail::for_each_sum(sb, [&](long long sum) {
        if (sum == 0) ++count;
    });
    return Int(count);
}

// Are all sums with |n_i| <= t N_i pairwise distinct?  Decided by direct
// enumeration with duplicate detection.
inline bool distinct_sums_oracle(const Progression& p, const Rational& t) {
    auto sb = detail::small_box(p, t);
    std::vector<long long> sums;
    detail::for_each_sum(sb, [&](long long sum) { sums.push_back(sum); });
    std::sort(sums.begin(), sums.end());
    return std::adjacent_find(sums.begin(), sums.end()) == sums.end();
}

}  // namespace testing_oracles
