#include "crdyn/classify.hpp"
#include "crdyn/condensation.hpp"
#include "crdyn/errors.hpp"

namespace crdyn {

bool do_transitive(const FiniteRelation& g, int k, const DensityPredicate& dense) {
    Level level;
    switch (k) {
    case 1: level = Level::Trans1; break;
    case 2: level = Level::Trans2; break;
    case 3: level = Level::Trans3; break;
    default: throw PreconditionError("DO-transitivity type must be 1, 2 or 3");
    }
    return !members_at(classify_all(g, dense), level).empty();
}

// On a finite discrete space singletons generate the open sets, so
// transitivity is strong connectivity; the plus variant also needs a cycle.
bool system_transitive(const FiniteRelation& g, bool plus) {
    const Condensation c = condense(g);
    if (c.count() != 1) return false;
    return !plus || c.live[0];
}

namespace {

// forall u, v: exists n >= n0 with v in step(u, n)  (step = G^n or G^{-n})
template <class Step>
bool pairwise(const FiniteRelation& g, std::size_t n0, Step step) {
    const auto n = g.size();
    for (std::size_t u = 0; u < n; ++u) {
        PointSet hit(n);
        PointSet level = g.single(u);
        for (std::size_t k = 0; k <= n; ++k) {
            if (k >= n0) hit |= level;
            level = step(level);
        }
        for (std::size_t v = 0; v < n; ++v)
            if (!hit.contains(v)) return false;
    }
    return true;
}

// forall u: union_{k >= k0} step^k({u}) = X
template <class Step>
bool cumulative(const FiniteRelation& g, std::size_t k0, Step step) {
    for (std::size_t u = 0; u < g.size(); ++u) {
        PointSet level = k0 == 0 ? g.single(u) : step(g.single(u));
        PointSet acc = level;
        while (true) {
            level = step(level);
            PointSet next = acc | level;
            if (next == acc) break;
            acc = std::move(next);
        }
        if (!acc.is_full()) return false;
    }
    return true;
}

} // namespace

bool CharacterizationReport::odd_group_agrees() const {
    return statement[0] == statement[2] && statement[0] == statement[4] && statement[0] == statement[6];
}
bool CharacterizationReport::even_group_agrees() const {
    return statement[1] == statement[3] && statement[1] == statement[5] && statement[1] == statement[7];
}
bool CharacterizationReport::consistent() const {
    return odd_group_agrees() && even_group_agrees() && statement[0] == transitive &&
           statement[1] == plus_transitive && transitive == inverse_transitive;
}

CharacterizationReport characterization_suite(const FiniteRelation& g) {
    auto fwd = [&](const PointSet& a) { return image_step(g, a); };
    auto bwd = [&](const PointSet& a) { return preimage(g, a, 1); };
    CharacterizationReport r;
    r.statement[0] = pairwise(g, 0, fwd);
    r.statement[1] = pairwise(g, 1, fwd);
    r.statement[2] = cumulative(g, 0, fwd);
    r.statement[3] = cumulative(g, 1, fwd);
    r.statement[4] = pairwise(g, 0, bwd);
    r.statement[5] = pairwise(g, 1, bwd);
    r.statement[6] = cumulative(g, 0, bwd);
    r.statement[7] = cumulative(g, 1, bwd);
    r.transitive = system_transitive(g, false);
    r.plus_transitive = system_transitive(g, true);
    r.inverse_transitive = system_transitive(inverse_relation(g), false);
    return r;
}

std::pair<PointSet, PointSet> projection_check(const FiniteRelation& g) {
    PointSet p1(g.size()), p2(g.size());
    for (auto [a, b] : g.edges()) {
        p1.insert(a);
        p2.insert(b);
    }
    return {p1, p2};
}

} // namespace crdyn
