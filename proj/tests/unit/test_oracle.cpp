#include "crdyn/classify.hpp"
#include "crdyn/errors.hpp"
#include "support/random_relation.hpp"

#include <doctest.h>

using namespace crdyn;
using crdyn::testing::random_relation;
using crdyn::testing::Rng;

TEST_CASE("oracle examples") {
    const auto ex = DensityPredicate::exhaustive();
    auto g = FiniteRelation::numbered(2, {{0, 0}});
    CHECK(oracle_classify(g, 1, ex).verdict == Verdict::Illegal);
    auto c = FiniteRelation::numbered(3, {{0, 1}, {1, 2}, {2, 0}});
    CHECK(oracle_classify(c, 0, ex).verdict == Verdict::Trans1);
}

TEST_CASE("oracle refuses large spaces") {
    std::vector<Edge> e;
    for (std::size_t i = 0; i <= kOracleMaxPoints; ++i) e.emplace_back(i, (i + 1) % (kOracleMaxPoints + 1));
    auto g = FiniteRelation::numbered(kOracleMaxPoints + 1, e);
    CHECK_THROWS_AS(oracle_classify(g, 0, DensityPredicate::exhaustive()), SizeExceeded);
}

TEST_CASE("classifier agrees with the brute-force oracle") {
    Rng rng(301);
    const auto ex = DensityPredicate::exhaustive();
    for (int i = 0; i < 500; ++i) {
        auto g = random_relation(rng, 7);
        for (std::size_t x = 0; x < g.size(); ++x) {
            auto a = classify_point(g, x, ex);
            auto b = oracle_classify(g, x, ex);
            CHECK_MESSAGE(a == b, "point ", x, ": ", to_string(a), " vs ", to_string(b));
        }
    }
}

TEST_CASE("classifier agrees with the oracle under eps-net density") {
    Rng rng(302);
    for (int i = 0; i < 300; ++i) {
        auto g = random_relation(rng, 7);
        const std::size_t n = g.size();
        // points placed at random grid coordinates on [0,1]
        std::vector<Rational> coords;
        for (std::size_t k = 0; k < n; ++k) coords.push_back(make_rational(static_cast<long>(rng() % 9), 8));
        const auto eps = make_rational(1 + static_cast<long>(rng() % 4), 8);
        auto net = DensityPredicate::eps_net(eps, coords, Region1D::interval(make_rational(0), make_rational(1)));
        for (std::size_t x = 0; x < n; ++x) {
            auto a = classify_point(g, x, net);
            auto b = oracle_classify(g, x, net);
            CHECK_MESSAGE(a == b, "point ", x, ": ", to_string(a), " vs ", to_string(b));
        }
    }
}
