#include "crdyn/builders.hpp"
#include "crdyn/errors.hpp"

#include <doctest.h>

#include <algorithm>

using namespace crdyn;

namespace {
using Q = Rational;
Q q(long a, long b = 1) { return make_rational(a, b); }
Space1D unit() { return Space1D({{q(0), q(1)}}, {}); }

// tent map written out directly, independent of the primitive pieces
Q tent(const Q& t) { return t <= q(1, 2) ? Q(2 * t) : Q(2 - 2 * t); }

// every point of [0,1] within eps of the sorted orbit
bool covers_unit(std::vector<Q> orbit, const Q& eps) {
    std::sort(orbit.begin(), orbit.end());
    if (orbit.front() > eps || q(1) - orbit.back() > eps) return false;
    for (std::size_t k = 1; k < orbit.size(); ++k)
        if (orbit[k] - orbit[k - 1] > 2 * eps) return false;
    return true;
}
}

TEST_CASE("tent map is onto") {
    SymbolicRelation r(unit(), tent_map_graph());
    CHECK(sym_image(r, unit().region()) == unit().region());
    for (long k = 0; k <= 16; ++k) CHECK(eval_piecewise(tent_map_graph(), q(k, 16)) == tent(q(k, 16)));
}

TEST_CASE("half tents stay in their halves") {
    SymbolicRelation l(unit(), half_tent_left()), r(unit(), half_tent_right());
    CHECK(sym_image(l, Region1D::interval(q(0), q(1, 2))) == Region1D::interval(q(0), q(1, 2)));
    CHECK(sym_image(r, Region1D::interval(q(1, 2), q(1))) == Region1D::interval(q(1, 2), q(1)));
}

TEST_CASE("cantor staircase") {
    SymbolicRelation s1(unit(), cantor_staircase(1));
    CHECK(sym_image(s1, Region1D::interval(q(0), q(1, 3))) == Region1D::interval(q(0), q(1, 2)));
    CHECK(sym_image(s1, Region1D::interval(q(1, 3), q(2, 3))) == Region1D::point(q(1, 2)));
    CHECK(cantor_staircase(0).size() == 1);
    for (std::size_t n = 0; n <= 4; ++n) {
        auto pieces = cantor_staircase(n);
        std::size_t flats = 0;
        for (const auto& p : pieces) flats += p.a.y == p.b.y ? 1 : 0;
        CHECK(flats == (std::size_t{1} << n) - 1);
        CHECK(pieces.size() - flats == std::size_t{1} << n);
        CHECK(cantor_intervals(n).size() == std::size_t{1} << n);
        // monotone and onto [0,1]
        Q prev = -1;
        for (long k = 0; k <= 81; ++k) {
            Q v = eval_piecewise(pieces, q(k, 81));
            CHECK(v >= prev);
            prev = v;
        }
        CHECK(eval_piecewise(pieces, q(0)) == 0);
        CHECK(eval_piecewise(pieces, q(1)) == 1);
    }
}

TEST_CASE("dense prefix point for the tent map") {
    const Q eps = q(1, 16);
    const Q t = dense_prefix_point(tent_map_graph(), eps, 200);
    // dyadic
    const auto den = t.get_den();
    CHECK((den & (den - 1)) == 0);
    std::vector<Q> orbit{t};
    for (int k = 0; k < 200; ++k) orbit.push_back(tent(orbit.back()));
    CHECK(orbit == orbit_prefix(tent_map_graph(), t, 200));
    CHECK(covers_unit(orbit, eps));
    // seeds are reproducible
    CHECK(dense_prefix_point(tent_map_graph(), eps, 200) == t);
}

TEST_CASE("dense prefix point fails explicitly when the horizon is too short") {
    CHECK_THROWS_AS(dense_prefix_point(tent_map_graph(), q(1, 64), 10), BudgetExhausted);
}
