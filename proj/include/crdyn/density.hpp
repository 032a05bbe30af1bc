#pragma once

#include "crdyn/point_set.hpp"
#include "crdyn/rational.hpp"
#include "crdyn/region.hpp"

#include <optional>
#include <vector>

namespace crdyn {

// dense(S) for the eps-net predicate: every point of `ambient` lies within
// eps of the coordinate of some member of S.
struct EpsNet {
    Rational eps;
    std::vector<Rational> coords; // one per point index
    Region1D ambient;
};

// Decomposition of a predicate into atoms: dense(S) iff every atom is
// covered by some member of S. Both predicates admit one, which turns
// branch covers into ordinary set cover.
struct CoverageModel {
    std::size_t atom_count = 0;
    std::vector<boost::dynamic_bitset<>> covers; // per point index
};

class DensityPredicate {
public:
    static DensityPredicate exhaustive() { return DensityPredicate(); }
    static DensityPredicate eps_net(Rational eps, std::vector<Rational> coords, Region1D ambient);

    bool is_exhaustive() const { return !net_.has_value(); }
    const EpsNet& net() const { return *net_; }

    bool dense(const PointSet& s) const;
    CoverageModel coverage(std::size_t universe) const;

private:
    std::optional<EpsNet> net_;
};

} // namespace crdyn
