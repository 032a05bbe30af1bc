#include "crdyn/symbolic.hpp"

#include "crdyn/errors.hpp"

#include <algorithm>
#include <map>

namespace crdyn {

std::vector<std::size_t> Discretization::boxes_of(const Rational& t) const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < boxes.size(); ++i)
        if (boxes[i].contains(t)) out.push_back(i);
    return out;
}

namespace {

std::string box_label(const Interval& b) {
    if (b.is_point()) return to_string(b.lo);
    return "[" + to_string(b.lo) + "," + to_string(b.hi) + "]";
}

// Index range of the sorted boxes meeting [lo, hi].
std::pair<std::size_t, std::size_t> boxes_meeting(const std::vector<Interval>& boxes, const Rational& lo,
                                                  const Rational& hi) {
    auto first = std::lower_bound(boxes.begin(), boxes.end(), lo,
                                  [](const Interval& b, const Rational& v) { return b.hi < v; });
    auto last = std::upper_bound(boxes.begin(), boxes.end(), hi,
                                 [](const Rational& v, const Interval& b) { return v < b.lo; });
    return {static_cast<std::size_t>(first - boxes.begin()), static_cast<std::size_t>(last - boxes.begin())};
}

} // namespace

Discretization discretize(const SymbolicRelation& r, const Rational& delta, const DiscretizeOptions& opts) {
    if (delta <= 0) throw PreconditionError("delta must be positive");
    std::vector<Interval> boxes;
    Rational max_width = 0;
    for (const auto& iv : r.space().intervals()) {
        if (iv.is_point()) {
            boxes.push_back(iv);
            continue;
        }
        Rational q = (iv.hi - iv.lo) / delta;
        mpz_class k;
        mpz_cdiv_q(k.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
        if (k > opts.box_cap) throw SizeExceeded("grid exceeds the box cap");
        Rational w = (iv.hi - iv.lo) / Rational(k);
        max_width = std::max(max_width, w);
        for (mpz_class i = 0; i < k; ++i) boxes.push_back({iv.lo + Rational(i) * w, iv.lo + Rational(i + 1) * w});
        if (boxes.size() > opts.box_cap) throw SizeExceeded("grid exceeds the box cap");
    }
    for (const auto& p : r.space().isolated_listed()) boxes.push_back({p, p});
    if (boxes.size() > opts.box_cap) throw SizeExceeded("grid exceeds the box cap");
    std::sort(boxes.begin(), boxes.end(), [](const Interval& a, const Interval& b) { return a.lo < b.lo; });

    // box i -> box j iff the primitive meets box_i x box_j; over the x-strip
    // of box i the primitive is connected, so its y-range decides
    std::vector<Edge> edges;
    for (const auto& p : r.primitives()) {
        auto [i0, i1] = boxes_meeting(boxes, p.x_lo(), p.x_hi());
        for (std::size_t i = i0; i < i1; ++i) {
            auto y = p.y_over(boxes[i].lo, boxes[i].hi);
            if (!y) continue;
            auto [j0, j1] = boxes_meeting(boxes, y->lo, y->hi);
            for (std::size_t j = j0; j < j1; ++j) edges.push_back({i, j});
        }
    }

    std::vector<std::string> labels;
    std::vector<Rational> mids;
    for (const auto& b : boxes) {
        labels.push_back(box_label(b));
        mids.push_back(midpoint(b.lo, b.hi));
    }
    Rational eps = opts.eps0 + max_width / 2;
    DensityPredicate pred = eps > 0 ? DensityPredicate::eps_net(eps, mids, r.space().region())
                                    : DensityPredicate::exhaustive();
    FiniteRelation rel(FiniteSpace(std::move(labels)), std::move(edges));
    return Discretization{std::move(rel), std::move(pred), std::move(boxes), max_width};
}

PointRestriction restrict_to_points(const SymbolicRelation& r, const Region1D& invariant, const Rational& eps) {
    if (!invariant.is_finite()) throw PreconditionError("restriction needs a finite set of points");
    std::vector<Rational> pts;
    std::map<Rational, std::size_t> index;
    for (const auto& p : invariant.parts()) {
        index.emplace(p.lo, pts.size());
        pts.push_back(p.lo);
    }
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        Region1D img = sym_image(r, pts[i]);
        for (const auto& q : img.parts()) {
            auto it = index.find(q.lo);
            if (!q.is_point() || it == index.end()) throw PreconditionError("point set is not forward invariant");
            edges.push_back({i, it->second});
        }
    }
    std::vector<std::string> labels;
    for (const auto& p : pts) labels.push_back(to_string(p));
    FiniteRelation rel(FiniteSpace(std::move(labels)), std::move(edges));
    auto pred = DensityPredicate::eps_net(eps, pts, r.space().region());
    return PointRestriction{std::move(rel), std::move(pred), std::move(pts)};
}

} // namespace crdyn
