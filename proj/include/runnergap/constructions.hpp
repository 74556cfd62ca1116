#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "runnergap/matching.hpp"
#include "runnergap/rational.hpp"
#include "runnergap/velocity.hpp"

namespace runnergap {

// (1, 2, ..., n); attains delta = 1/(n+1).
inline VelocityTuple standard_extremiser(long long n) {
    if (n < 1) throw std::invalid_argument("standard_extremiser: n must be >= 1");
    std::vector<Int> v;
    v.reserve(static_cast<std::size_t>(n));
    for (long long i = 1; i <= n; ++i) v.emplace_back(i);
    return VelocityTuple(std::move(v));
}

// Goddyn-Wong substitution: replace r in (1..n) by 2r.  Valid exactly when
// r shares a factor with every b in [n-r+1, 2n-2r+1]; the first coprime b
// is reported on rejection.
struct GwResult {
    std::optional<VelocityTuple> tuple;
    long long rejected_at_b = 0;
    bool accepted() const { return tuple.has_value(); }
};

inline GwResult gw_substitution(long long n, long long r) {
    if (r < 2 || r > n - 1) throw std::invalid_argument("gw_substitution: need 2 <= r <= n-1");
    GwResult out;
    for (long long b = n - r + 1; b <= 2 * n - 2 * r + 1; ++b) {
        if (std::gcd(r, b) == 1) {
            out.rejected_at_b = b;
            return out;
        }
    }
    std::vector<Int> v;
    for (long long i = 1; i <= n; ++i)
        if (i != r) v.emplace_back(i);
    v.emplace_back(2 * r);
    std::sort(v.begin(), v.end());
    out.tuple = VelocityTuple(std::move(v));
    return out;
}

// One forced-membership fact: at least one velocity of any tuple with
// delta < 1/(n+1) and v_i <= k*n must land in `options`.
struct ForcedConstraint {
    int clause = 1;                   // 1 or 2, matching the lemma clause used
    long long j = 0;
    long long k = 1;
    std::optional<long long> residue; // the coprime residue a, clause 2 only
    std::string range_tag;            // set by the certificate generator
    std::vector<long long> options;
};

// Clause (i): some velocity is a multiple of j.  Requires 1 <= j <= n+1.
inline ForcedConstraint lemma_lo_forced_i(long long n, long long k, long long j) {
    if (n < 1 || k < 1) throw std::invalid_argument("lemma_lo_forced_i: need n, k >= 1");
    if (j < 1 || j > n + 1) throw std::invalid_argument("lemma_lo_forced_i: need 1 <= j <= n+1");
    ForcedConstraint c;
    c.clause = 1;
    c.j = j;
    c.k = k;
    for (long long m = j; m <= k * n; m += j) c.options.push_back(m);
    return c;
}

// Clause (ii): some velocity is cj for c = 1..k-1, or lies above k(n+1-j)
// in the residue class a mod j.  Requires 1 <= j <= n and gcd(a, j) = 1.
inline ForcedConstraint lemma_lo_forced(long long n, long long k, long long j, long long a) {
    if (n < 1 || k < 1) throw std::invalid_argument("lemma_lo_forced: need n, k >= 1");
    if (j < 1 || j > n) throw std::invalid_argument("lemma_lo_forced: need 1 <= j <= n");
    if (std::gcd(((a % j) + j) % j, j) != 1)
        throw std::invalid_argument("lemma_lo_forced: a must be coprime to j");
    ForcedConstraint c;
    c.clause = 2;
    c.j = j;
    c.k = k;
    c.residue = a;
    for (long long cc = 1; cc <= k - 1; ++cc) c.options.push_back(cc * j);
    long long lo = k * (n + 1 - j);
    for (long long m = 1; m <= k * n; ++m)
        if (m > lo && (m - a) % j == 0) c.options.push_back(m);
    std::sort(c.options.begin(), c.options.end());
    c.options.erase(std::unique(c.options.begin(), c.options.end()), c.options.end());
    return c;
}

// Machine-checkable object behind the short-progression bound: n+1 forced
// constraints on tuples with velocities <= floor(1.2 n), plus a system of
// distinct representatives showing they cannot all live on n values.
struct ShortCertificate {
    long long n = 0;
    long long bound = 0;  // floor(1.2 n)
    std::vector<ForcedConstraint> constraints;
    std::vector<long long> representatives;  // one per constraint, pairwise distinct
};

namespace detail {

inline ForcedConstraint pruned_to_bound(ForcedConstraint c, long long bound) {
    std::vector<long long> kept;
    for (long long m : c.options)
        if (m <= bound) kept.push_back(m);
    c.options = std::move(kept);
    return c;
}

}  // namespace detail

// Builds the four-range constraint family for velocities <= floor(1.2 n)
// and resolves it into a system of distinct representatives by bipartite
// matching.  The matching is the proof artifact: if it ever stops short of
// n+1 the construction is broken, so that case throws.
inline ShortCertificate prop_short_certificate(long long n) {
    if (n < 5) throw std::invalid_argument("prop_short_certificate: n must be >= 5");
    ShortCertificate cert;
    cert.n = n;
    cert.bound = (6 * n) / 5;

    for (long long j = 1; j <= n + 1; ++j) {
        ForcedConstraint c;
        if (5 * (j - 1) <= 2 * n) {
            // 1 <= j <= 0.4n + 1: clause (ii), k=2, a=1 forces j itself.
            c = detail::pruned_to_bound(lemma_lo_forced(n, 2, j, 1), cert.bound);
            c.range_tag = "low";
        } else if (2 * j <= n + 1) {
            // 0.4n + 1 < j <= (n+1)/2: clause (ii), k=2, a=j-1 forces j.
            c = detail::pruned_to_bound(lemma_lo_forced(n, 2, j, j - 1), cert.bound);
            c.range_tag = "midlow";
        } else if (5 * j <= 3 * n) {
            // (n+1)/2 < j <= 0.6n: clause (ii), k=3, a=1 forces j or 2j.
            c = detail::pruned_to_bound(lemma_lo_forced(n, 3, j, 1), cert.bound);
            c.range_tag = "midhigh";
        } else {
            // 0.6n < j <= n+1: clause (i) forces the only multiple of j
            // below the bound, namely j.
            c = detail::pruned_to_bound(lemma_lo_forced_i(n, 2, j), cert.bound);
            c.range_tag = "high";
        }
        if (c.options.empty())
            throw std::logic_error("prop_short_certificate: empty constraint at j=" +
                                   std::to_string(j));
        cert.constraints.push_back(std::move(c));
    }

    // Distinct representatives via maximum matching over the option values.
    std::map<long long, int> value_id;
    for (const auto& c : cert.constraints)
        for (long long m : c.options)
            value_id.emplace(m, static_cast<int>(value_id.size()));
    std::vector<std::vector<int>> adj(cert.constraints.size());
    for (std::size_t i = 0; i < cert.constraints.size(); ++i)
        for (long long m : cert.constraints[i].options)
            adj[i].push_back(value_id.at(m));
    BipartiteMatcher matcher(cert.constraints.size(), value_id.size(), std::move(adj));
    std::size_t matched = matcher.solve();
    if (matched != cert.constraints.size())
        throw std::logic_error("prop_short_certificate: matching saturated only " +
                               std::to_string(matched) + " of " +
                               std::to_string(cert.constraints.size()) + " constraints");

    std::vector<long long> id_value(value_id.size());
    for (const auto& [value, id] : value_id) id_value[static_cast<std::size_t>(id)] = value;
    cert.representatives.reserve(cert.constraints.size());
    for (std::size_t i = 0; i < cert.constraints.size(); ++i)
        cert.representatives.push_back(
            id_value[static_cast<std::size_t>(matcher.match_left()[i])]);
    return cert;
}

struct CertificateCheck {
    bool ok = false;
    std::string reason;  // first violated condition when not ok
};

// Re-verifies a certificate without reference to how it was generated:
// every representative must come from its constraint's options, all
// representatives must be pairwise distinct, and there must be >= n+1.
inline CertificateCheck validate_certificate(const ShortCertificate& cert) {
    CertificateCheck out;
    if (cert.representatives.size() != cert.constraints.size()) {
        out.reason = "representative count does not match constraint count";
        return out;
    }
    for (std::size_t i = 0; i < cert.constraints.size(); ++i) {
        const auto& opts = cert.constraints[i].options;
        if (std::find(opts.begin(), opts.end(), cert.representatives[i]) == opts.end()) {
            out.reason = "representative " + std::to_string(cert.representatives[i]) +
                         " not among options of constraint " + std::to_string(i);
            return out;
        }
    }
    std::set<long long> distinct(cert.representatives.begin(), cert.representatives.end());
    if (distinct.size() != cert.representatives.size()) {
        out.reason = "representatives are not pairwise distinct";
        return out;
    }
    if (static_cast<long long>(distinct.size()) < cert.n + 1) {
        out.reason = "fewer than n+1 distinct representatives";
        return out;
    }
    out.ok = true;
    return out;
}

inline std::string serialize(const ShortCertificate& cert) {
    std::string s;
    s += "certificate n=" + std::to_string(cert.n) + " bound=" + std::to_string(cert.bound) + "\n";
    for (const auto& c : cert.constraints) {
        s += "constraint range=" + c.range_tag + " j=" + std::to_string(c.j) +
             " k=" + std::to_string(c.k) + " clause=" + std::to_string(c.clause);
        if (c.residue) s += " a=" + std::to_string(*c.residue);
        s += " options=";
        for (std::size_t i = 0; i < c.options.size(); ++i) {
            if (i) s += ',';
            s += std::to_string(c.options[i]);
        }
        s += "\n";
    }
    s += "representatives=";
    for (std::size_t i = 0; i < cert.representatives.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(cert.representatives[i]);
    }
    s += "\n";
    return s;
}

// Diagnostic form of the short-progression density statement: flags a tuple
// whose velocities all sit below C*n while its gap drops under (1+c)/(2n).
inline bool short2_flagged(const VelocityTuple& tuple, const Rational& delta, const Rational& C,
                           const Rational& c) {
    long long n = static_cast<long long>(tuple.size());
    Rational cap = C * Rational(n);
    for (const Int& v : tuple.velocities())
        if (Rational(abs(v)) > cap) return false;
    return delta < (Rational(1) + c) / Rational(2 * n);
}

}  // namespace runnergap
