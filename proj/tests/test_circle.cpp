#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <vector>

#include "runnergap/circle.hpp"

using namespace runnergap;

namespace {

CircleIntervalSet set_of(std::initializer_list<std::pair<long long, long long>> halves,
                         long long den) {
    std::vector<std::pair<Rational, Rational>> raw;
    for (auto [a, b] : halves) raw.emplace_back(Rational(a, den), Rational(b, den));
    return CircleIntervalSet::from_arcs(raw);
}

CircleIntervalSet random_set(std::mt19937_64& rng) {
    std::uniform_int_distribution<long long> den(2, 40), count(1, 4);
    std::vector<std::pair<Rational, Rational>> raw;
    long long n = count(rng);
    for (long long i = 0; i < n; ++i) {
        long long q = den(rng);
        std::uniform_int_distribution<long long> num(0, 2 * q);
        long long a = num(rng), b = num(rng);
        if (b < a) std::swap(a, b);
        if (Rational(b - a, q) >= Rational(1)) b = a + q - 1;
        raw.emplace_back(Rational(a, q), Rational(b, q));
    }
    return CircleIntervalSet::from_arcs(raw);
}

// Grid membership marker: cell k is set when k/N lies in the set (cell 0
// also covers the endpoint 1).
std::vector<char> grid_membership(const CircleIntervalSet& s, long long N) {
    std::vector<char> out(static_cast<std::size_t>(N), 0);
    for (const auto& arc : s.arcs()) {
        long long lo = (arc.lo * Rational(N)).ceil().convert_to<long long>();
        long long hi = (arc.hi * Rational(N)).floor().convert_to<long long>();
        for (long long k = lo; k <= hi; ++k) out[static_cast<std::size_t>(k % N)] = 1;
    }
    return out;
}

}  // namespace

TEST_CASE("normalization merges overlapping and touching arcs") {
    auto s = set_of({{0, 2}, {1, 3}}, 8);  // [0,1/4] u [1/8,3/8]
    REQUIRE(s.arc_count() == 1);
    CHECK(s.arcs()[0].lo == Rational(0));
    CHECK(s.arcs()[0].hi == Rational(3, 8));

    auto touching = set_of({{0, 1}, {1, 2}}, 4);
    REQUIRE(touching.arc_count() == 1);
    CHECK(touching.measure() == Rational(1, 2));
}

TEST_CASE("normalization is idempotent") {
    std::mt19937_64 rng(101);
    for (int i = 0; i < 200; ++i) {
        auto s = random_set(rng);
        std::vector<std::pair<Rational, Rational>> raw;
        for (const auto& a : s.arcs()) raw.emplace_back(a.lo, a.hi);
        CHECK(CircleIntervalSet::from_arcs(raw) == s);
    }
}

TEST_CASE("union examples") {
    auto a = set_of({{0, 2}}, 8);
    auto b = set_of({{1, 3}}, 8);
    CHECK(a.unite(b) == set_of({{0, 3}}, 8));

    CHECK(a.unite(CircleIntervalSet::empty_set()) == a);

    auto c = set_of({{0, 1}}, 10).unite(set_of({{5, 6}}, 10));
    CHECK(c.arc_count() == 2);
    CHECK(c.measure() == Rational(1, 5));
}

TEST_CASE("intersection examples") {
    auto a = set_of({{0, 2}}, 8);
    auto b = set_of({{1, 3}}, 8);
    auto i = a.intersect(b);
    REQUIRE(i.arc_count() == 1);
    CHECK(i.arcs()[0].lo == Rational(1, 8));
    CHECK(i.arcs()[0].hi == Rational(1, 4));

    auto x = set_of({{0, 2}, {10, 12}}, 20);
    CHECK(x.intersect(CircleIntervalSet::full_circle()) == x);

    // ([0,1/10] u [1/2,3/5]) n [1/20,11/20] = [1/20,1/10] u [1/2,11/20]
    auto lhs = set_of({{0, 2}, {10, 12}}, 20).intersect(set_of({{1, 11}}, 20));
    auto expect = set_of({{1, 2}, {10, 11}}, 20);
    CHECK(lhs == expect);
}

TEST_CASE("measure examples") {
    CHECK(CircleIntervalSet::empty_set().measure() == Rational(0));
    CHECK(CircleIntervalSet::full_circle().measure() == Rational(1));
    CHECK(CircleIntervalSet::arc(Rational(1, 6), Rational(1, 3)).measure() == Rational(1, 6));
}

TEST_CASE("wraparound arcs split at zero") {
    auto s = CircleIntervalSet::arc(Rational(-1, 10), Rational(1, 10));
    REQUIRE(s.arc_count() == 2);
    CHECK(s.measure() == Rational(1, 5));
    CHECK(s.contains(CirclePoint(Rational(0))));
    CHECK(s.contains(CirclePoint(Rational(19, 20))));
    CHECK(s.contains(CirclePoint(Rational(1, 10))));
    CHECK_FALSE(s.contains(CirclePoint(Rational(1, 2))));

    // Covering the seam merges into the full circle.
    auto full = CircleIntervalSet::arc(Rational(0), Rational(1, 2))
                    .unite(CircleIntervalSet::arc(Rational(1, 2), Rational(1)));
    CHECK(full.is_full());
}

TEST_CASE("tail and head arcs intersect in the single circle point 0") {
    auto tail = CircleIntervalSet::arc(Rational(3, 4), Rational(1));
    auto head = CircleIntervalSet::arc(Rational(0), Rational(1, 4));
    auto i = tail.intersect(head);
    CHECK(i.measure() == Rational(0));
    CHECK(i.contains(CirclePoint(Rational(0))));
    CHECK_FALSE(i.is_empty());

    // Modular identity survives the point overlap.
    CHECK(tail.unite(head).measure() + i.measure() == tail.measure() + head.measure());
}

TEST_CASE("degenerate point arcs") {
    auto p = CircleIntervalSet::arc(Rational(1, 4), Rational(1, 4));
    CHECK(p.measure() == Rational(0));
    CHECK(p.contains(CirclePoint(Rational(1, 4))));
    auto s = set_of({{0, 1}}, 4);
    CHECK(p.unite(s) == s);

    // A point placed at 1 is the circle point 0.
    auto q = CircleIntervalSet::arc(Rational(1), Rational(1));
    CHECK(q.contains(CirclePoint(Rational(0))));
}

TEST_CASE("gap reporting") {
    auto s = set_of({{1, 2}, {5, 6}}, 8);
    auto gs = s.gaps();
    REQUIRE(gs.size() == 2);
    CHECK(gs[0].lo == Rational(1, 4));
    CHECK(gs[0].hi == Rational(5, 8));
    // wrap gap from 6/8 around to 1/8
    CHECK(gs[1].lo == Rational(3, 4));
    CHECK(gs[1].hi == Rational(9, 8));
    CHECK_FALSE(CircleIntervalSet::full_circle().first_gap_midpoint().has_value());
    auto mid = s.first_gap_midpoint();
    REQUIRE(mid.has_value());
    CHECK(mid->value() == Rational(7, 16));
}

TEST_CASE("random pairs agree with the dense-grid membership oracle") {
    constexpr long long N = 10007;
    std::mt19937_64 rng(424242);
    for (int iter = 0; iter < 1000; ++iter) {
        auto a = random_set(rng);
        auto b = random_set(rng);
        auto u = a.unite(b);
        auto i = a.intersect(b);

        auto ga = grid_membership(a, N), gb = grid_membership(b, N);
        auto gu = grid_membership(u, N), gi = grid_membership(i, N);
        long long cu = 0, ci = 0;
        for (long long k = 0; k < N; ++k) {
            auto idx = static_cast<std::size_t>(k);
            REQUIRE(static_cast<bool>(gu[idx]) == (ga[idx] || gb[idx]));
            REQUIRE(static_cast<bool>(gi[idx]) == (ga[idx] && gb[idx]));
            cu += gu[idx];
            ci += gi[idx];
        }
        // Each arc misestimates the grid count by at most one cell per side.
        auto close = [&](long long count, const CircleIntervalSet& s) {
            Rational diff = Rational(count) - Rational(N) * s.measure();
            return diff.abs() <= Rational(static_cast<long long>(s.arc_count()) + 1);
        };
        REQUIRE(close(cu, u));
        REQUIRE(close(ci, i));

        // Modularity and monotonicity of the exact measures.
        REQUIRE(u.measure() + i.measure() == a.measure() + b.measure());
        REQUIRE(u.measure() >= rat_max(a.measure(), b.measure()));
        REQUIRE(i.measure() <= rat_min(a.measure(), b.measure()));
        REQUIRE(u.measure() <= a.measure() + b.measure());
    }
}
