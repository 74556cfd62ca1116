#pragma once

#include <algorithm>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

#include "runnergap/rational.hpp"

namespace runnergap {

// An ordered tuple of nonzero integer velocities.  Canonical form means
// positive, strictly increasing entries with overall gcd 1; tuples with
// repeated entries are legal but never canonical.
class VelocityTuple {
public:
    VelocityTuple() = default;

    explicit VelocityTuple(std::vector<Int> velocities) : velocities_(std::move(velocities)) {
        for (const Int& v : velocities_)
            if (v == 0) throw std::invalid_argument("VelocityTuple: zero velocity");
        canonical_ = compute_canonical();
    }

    VelocityTuple(std::initializer_list<long long> velocities)
        : VelocityTuple(std::vector<Int>(velocities.begin(), velocities.end())) {}

    const std::vector<Int>& velocities() const { return velocities_; }
    std::size_t size() const { return velocities_.size(); }
    bool empty() const { return velocities_.empty(); }
    bool canonical() const { return canonical_; }

    bool has_duplicates() const {
        std::vector<Int> v = velocities_;
        for (Int& x : v) x = abs(x);
        std::sort(v.begin(), v.end());
        return std::adjacent_find(v.begin(), v.end()) != v.end();
    }

    std::string str() const {
        std::string s;
        for (const Int& v : velocities_) {
            if (!s.empty()) s += ',';
            s += v.str();
        }
        return s;
    }

    friend bool operator==(const VelocityTuple& a, const VelocityTuple& b) {
        return a.velocities_ == b.velocities_;
    }
    friend bool operator!=(const VelocityTuple& a, const VelocityTuple& b) { return !(a == b); }
    friend bool operator<(const VelocityTuple& a, const VelocityTuple& b) {
        return a.velocities_ < b.velocities_;
    }

private:
    bool compute_canonical() const {
        if (velocities_.empty()) return false;
        Int g = 0;
        for (std::size_t i = 0; i < velocities_.size(); ++i) {
            if (velocities_[i] <= 0) return false;
            if (i > 0 && velocities_[i] <= velocities_[i - 1]) return false;
            g = runnergap::gcd(g, velocities_[i]);
        }
        return g == 1;
    }

    std::vector<Int> velocities_;
    bool canonical_ = false;
};

// Sign-flips to positive, sorts ascending, and divides out the common gcd.
// Duplicates are preserved (the result is then flagged non-canonical).
// The gap of loneliness is invariant under this reduction.
inline VelocityTuple canonicalize(const VelocityTuple& t) {
    if (t.empty()) throw std::invalid_argument("canonicalize: empty tuple");
    std::vector<Int> v = t.velocities();
    Int g = 0;
    for (Int& x : v) {
        x = abs(x);
        g = gcd(g, x);
    }
    if (g > 1)
        for (Int& x : v) x /= g;
    std::sort(v.begin(), v.end());
    return VelocityTuple(std::move(v));
}

// The common gcd removed by canonicalize (witnesses rescale by it).
inline Int canonical_scale(const VelocityTuple& t) {
    Int g = 0;
    for (const Int& x : t.velocities()) g = gcd(g, abs(x));
    return g;
}

}  // namespace runnergap
