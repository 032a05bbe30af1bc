#include "crdyn/density.hpp"

#include "crdyn/errors.hpp"

#include <algorithm>

namespace crdyn {

DensityPredicate DensityPredicate::eps_net(Rational eps, std::vector<Rational> coords, Region1D ambient) {
    if (eps <= 0) throw PreconditionError("eps-net radius must be positive");
    DensityPredicate d;
    d.net_ = EpsNet{std::move(eps), std::move(coords), std::move(ambient)};
    return d;
}

bool DensityPredicate::dense(const PointSet& s) const {
    if (!net_) return s.is_full();
    if (s.universe() != net_->coords.size()) throw PreconditionError("eps-net coordinates do not match the space");
    std::vector<Rational> pts;
    s.for_each([&](std::size_t i) { pts.push_back(net_->coords[i]); });
    return eps_dense(net_->ambient, Region1D::points(std::move(pts)), net_->eps);
}

CoverageModel DensityPredicate::coverage(std::size_t universe) const {
    CoverageModel m;
    if (!net_) {
        m.atom_count = universe;
        m.covers.assign(universe, boost::dynamic_bitset<>(universe));
        for (std::size_t i = 0; i < universe; ++i) m.covers[i].set(i);
        return m;
    }
    const auto& net = *net_;
    if (universe != net.coords.size()) throw PreconditionError("eps-net coordinates do not match the space");
    // Breakpoints split the ambient region into atoms (single points and open
    // gaps) on which coverage by each ball [c - eps, c + eps] is constant.
    std::vector<Rational> cuts;
    for (const auto& p : net.ambient.parts()) {
        cuts.push_back(p.lo);
        cuts.push_back(p.hi);
    }
    for (const auto& c : net.coords) {
        cuts.push_back(c - net.eps);
        cuts.push_back(c + net.eps);
    }
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
    std::vector<Rational> reps; // one representative per atom
    for (std::size_t i = 0; i < cuts.size(); ++i) {
        if (net.ambient.contains(cuts[i])) reps.push_back(cuts[i]);
        if (i + 1 < cuts.size()) {
            Rational mid = midpoint(cuts[i], cuts[i + 1]);
            if (net.ambient.contains(mid)) reps.push_back(mid);
        }
    }
    m.atom_count = reps.size();
    m.covers.assign(universe, boost::dynamic_bitset<>(reps.size()));
    for (std::size_t s = 0; s < universe; ++s) {
        const Rational lo = net.coords[s] - net.eps, hi = net.coords[s] + net.eps;
        auto first = std::lower_bound(reps.begin(), reps.end(), lo);
        for (auto it = first; it != reps.end() && *it <= hi; ++it) m.covers[s].set(it - reps.begin());
    }
    return m;
}

} // namespace crdyn
