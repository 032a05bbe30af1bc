#include "crdyn/classify.hpp"
#include "crdyn/errors.hpp"

#include <cstdint>
#include <deque>
#include <unordered_set>

// Brute-force classifier over (current point, visited set) states. Shares no
// code with the condensation-based classifier beyond the tag type.

namespace crdyn {

namespace {

using Mask = std::uint32_t;

PointSet to_set(std::size_t n, Mask m) {
    PointSet s(n);
    for (std::size_t i = 0; i < n; ++i)
        if (m >> i & 1u) s.insert(i);
    return s;
}

bool on_cycle_within(const FiniteRelation& g, std::size_t v, Mask s) {
    Mask seen = 0;
    std::vector<std::size_t> stack;
    for (auto w : g.successors(v))
        if (s >> w & 1u) {
            if (w == v) return true;
            if (!(seen >> w & 1u)) {
                seen |= Mask{1} << w;
                stack.push_back(w);
            }
        }
    while (!stack.empty()) {
        auto u = stack.back();
        stack.pop_back();
        for (auto w : g.successors(u)) {
            if (!(s >> w & 1u)) continue;
            if (w == v) return true;
            if (!(seen >> w & 1u)) {
                seen |= Mask{1} << w;
                stack.push_back(w);
            }
        }
    }
    return false;
}

} // namespace

ClassificationTag oracle_classify(const FiniteRelation& g, std::size_t x, const DensityPredicate& dense) {
    const std::size_t n = g.size();
    if (n > kOracleMaxPoints) throw SizeExceeded("oracle supports at most 16 points");
    if (x >= n) throw PreconditionError("point index out of range");

    // legal(v) iff a walk with n edges starts at v (any such walk repeats a point)
    std::vector<char> has(n, 1);
    for (std::size_t k = 0; k < n; ++k) {
        std::vector<char> next(n, 0);
        for (std::size_t v = 0; v < n; ++v)
            for (auto w : g.successors(v))
                if (has[w]) next[v] = 1;
        has = std::move(next);
    }

    std::array<Certainty, 4> m;
    m.fill(Certainty::refuted());
    if (!has[x]) return ClassificationTag::from_memberships(m, ReachGrade::none(), 0);
    m[0] = Certainty::certified();

    auto key = [n](std::size_t v, Mask s) { return (std::uint64_t{s} * n) + v; };
    std::unordered_set<std::uint64_t> seen;
    std::deque<std::pair<std::size_t, Mask>> queue;
    const Mask start = Mask{1} << x;
    seen.insert(key(x, start));
    queue.push_back({x, start});
    bool some_dense_walk = false, some_sparse_lasso = false;
    Mask legal_union = 0;
    while (!queue.empty()) {
        auto [v, s] = queue.front();
        queue.pop_front();
        if (has[v]) {
            legal_union |= Mask{1} << v;
            const bool d = dense.dense(to_set(n, s));
            if (d) some_dense_walk = true;
            if (!d && on_cycle_within(g, v, s)) some_sparse_lasso = true;
        }
        for (auto w : g.successors(v)) {
            Mask t = s | (Mask{1} << w);
            if (seen.insert(key(w, t)).second) queue.push_back({w, t});
        }
    }

    const bool t3 = dense.dense(to_set(n, legal_union));
    m[1] = t3 ? Certainty::certified() : Certainty::refuted();
    m[2] = t3 && some_dense_walk ? Certainty::certified() : Certainty::refuted();
    m[3] = t3 && !some_sparse_lasso ? Certainty::certified() : Certainty::refuted();

    ReachGrade grade;
    if (t3 && !some_dense_walk) {
        // level sets G^k(x) as masks; cumulative union until density
        Mask level = start, acc = start;
        grade = ReachGrade::omega();
        for (std::size_t k = 1; k <= n + 1; ++k) {
            Mask nxt = 0;
            for (std::size_t v = 0; v < n; ++v)
                if (level >> v & 1u)
                    for (auto w : g.successors(v)) nxt |= Mask{1} << w;
            level = nxt;
            acc |= level;
            if (dense.dense(to_set(n, acc))) {
                grade = ReachGrade::finite(k);
                break;
            }
        }
    }
    return ClassificationTag::from_memberships(m, grade, 0);
}

} // namespace crdyn
