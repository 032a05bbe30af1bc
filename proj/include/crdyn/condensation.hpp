#pragma once

#include "crdyn/point_set.hpp"
#include "crdyn/relation.hpp"

#include <vector>

namespace crdyn {

// Strongly connected components of G, numbered in a topological order of
// the component DAG (every DAG edge goes from a lower to a higher id).
struct Condensation {
    std::vector<std::size_t> scc_of;
    std::vector<std::vector<std::size_t>> members;
    std::vector<std::vector<std::size_t>> dag_succ; // sorted, no self entries
    std::vector<bool> live;                         // supports an infinite walk inside

    std::size_t count() const { return members.size(); }
    PointSet member_set(std::size_t c, std::size_t universe) const { return PointSet::of(universe, members[c]); }
};

Condensation condense(const FiniteRelation& g);

// Components reachable from c (including c).
std::vector<bool> reachable_components(const Condensation& c, std::size_t from);

} // namespace crdyn
