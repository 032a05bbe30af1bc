#include "crdyn/symbolic.hpp"

#include "crdyn/errors.hpp"

namespace crdyn {

ClassificationTag classify_symbolic(const SymbolicRelation& r, const Rational& x, const SymClassifyOptions& opts) {
    if (!r.space().contains(x)) throw PreconditionError("point outside the space");
    if (opts.eps <= 0) throw PreconditionError("eps must be positive");
    const Space1D& space = r.space();
    const std::size_t h = opts.horizon;
    std::array<Certainty, 4> m;
    m.fill(Certainty::unknown(h));
    auto done = [&](ReachGrade g = {}) { return ClassificationTag::from_memberships(m, g, h); };

    // legal(G) = G^{-omega}(X); every stage of the chain contains it
    const SymLegal legal = sym_legal_set(r, opts.max_iter);
    if (!legal.region.contains(x)) {
        m.fill(Certainty::refuted());
        return done();
    }
    if (legal.stabilized) m[0] = Certainty::certified();

    // a unique trajectory decides every level at once
    const ForcedOrbit forced = forced_orbit(r, x, opts.max_iter);
    if (forced.dead_end) {
        m.fill(Certainty::refuted());
        return done();
    }
    if (forced.cycles) {
        const bool d = eps_dense(space, Region1D::points(forced.points), opts.eps);
        m[0] = Certainty::certified();
        for (int i = 1; i < 4; ++i) m[i] = d ? Certainty::certified() : Certainty::refuted();
        return done();
    }

    std::optional<std::size_t> grade;
    const SymReach reach =
        for_each_reach_step(r, Region1D::point(x), opts.max_iter, [&](std::size_t n, const Region1D& c) {
            if (n >= 1 && !grade && eps_dense(space, c, opts.eps)) grade = n;
            if (legal.stabilized && !m[1].is_certified() && eps_dense(space, intersect(c, legal.region), opts.eps))
                m[1] = Certainty::certified();
            return !(m[1].is_certified() && grade);
        });
    if (!m[1].is_certified()) {
        // the legal part of everything reachable is inside these regions
        const Region1D bound = reach.stabilized ? reach.region : component_saturation(r, Region1D::point(x));
        if (!eps_dense(space, intersect(bound, legal.region), opts.eps)) m[1] = Certainty::refuted();
    }
    if (m[1].is_refuted()) return done();

    std::optional<Discretization> disc;
    auto discretized = [&]() -> const Discretization* {
        if (!opts.use_discretization) return nullptr;
        if (!disc) {
            try {
                DiscretizeOptions dopts;
                dopts.eps0 = opts.eps; // predicate radius eps + w/2
                disc = discretize(r, opts.delta, dopts);
            } catch (const SizeExceeded&) {
                return nullptr;
            }
        }
        return &*disc;
    };

    WalkSearchOptions wopts;
    wopts.node_budget = opts.walk_budget;
    const WalkSearchResult walk = bounded_walk_search(r, x, opts.eps, h, wopts);
    if (walk.found && m[0].is_certified() && legal.region.contains(walk.witness.back()) &&
        verify_dense_walk(r, walk.witness, opts.eps)) {
        m[2] = Certainty::certified();
    } else if (const Discretization* d = discretized()) {
        // every true walk from x shadows a box walk from any box holding x;
        // an eps-dense orbit makes the shadow (eps + w/2)-dense
        ClassifyOptions copts;
        copts.search_budget = opts.walk_budget;
        auto tag = classify_point(d->relation, d->boxes_of(x).front(), d->predicate, copts);
        if (tag.member(Level::Trans2).is_refuted()) m[2] = Certainty::refuted();
    }

    if (m[2].is_refuted()) {
        m[3] = Certainty::refuted();
    } else {
        wopts.lasso = true;
        const WalkSearchResult loop = bounded_walk_search(r, x, opts.eps, h, wopts);
        if (loop.found) {
            m[3] = Certainty::refuted();
        } else if (m[2].is_certified()) {
            const Discretization* d = discretized();
            const Rational eps_box = opts.eps - (d ? d->max_width / 2 : Rational(0));
            if (d && eps_box > 0) {
                std::vector<Rational> mids;
                for (const auto& b : d->boxes) mids.push_back(midpoint(b.lo, b.hi));
                auto pred = DensityPredicate::eps_net(eps_box, mids, space.region());
                ClassifyOptions copts;
                copts.search_budget = opts.walk_budget;
                auto tag = classify_point(d->relation, d->boxes_of(x).front(), pred, copts);
                if (tag.member(Level::Trans1).is_certified()) m[3] = Certainty::certified();
            }
        }
    }
    return done(grade ? ReachGrade::finite(*grade) : ReachGrade::none());
}

} // namespace crdyn
