#include "crdyn/region.hpp"

#include "crdyn/errors.hpp"

#include <algorithm>

namespace crdyn {

namespace {

// Merge a list that is already sorted by lo.
std::vector<Interval> merge_sorted(std::vector<Interval> v) {
    std::vector<Interval> out;
    out.reserve(v.size());
    for (auto& iv : v) {
        if (!out.empty() && iv.lo <= out.back().hi) {
            if (iv.hi > out.back().hi) out.back().hi = std::move(iv.hi);
        } else {
            out.push_back(std::move(iv));
        }
    }
    return out;
}

} // namespace

Region1D::Region1D(std::vector<Interval> parts) {
    for (auto& p : parts)
        if (p.lo > p.hi) throw PreconditionError("interval with lo > hi");
    std::sort(parts.begin(), parts.end(), [](const Interval& a, const Interval& b) { return a.lo < b.lo; });
    parts_ = merge_sorted(std::move(parts));
}

Region1D Region1D::point(const Rational& p) { return Region1D({Interval{p, p}}); }

Region1D Region1D::interval(const Rational& lo, const Rational& hi) { return Region1D({Interval{lo, hi}}); }

Region1D Region1D::points(std::vector<Rational> pts) {
    std::vector<Interval> parts;
    parts.reserve(pts.size());
    for (auto& p : pts) parts.push_back(Interval{p, p});
    return Region1D(std::move(parts));
}

bool Region1D::contains(const Rational& t) const {
    auto it = std::upper_bound(parts_.begin(), parts_.end(), t,
                               [](const Rational& v, const Interval& iv) { return v < iv.lo; });
    if (it == parts_.begin()) return false;
    return t <= std::prev(it)->hi;
}

bool Region1D::intersects_open(const Rational& lo, const Rational& hi) const {
    if (!(lo < hi)) return false;
    for (const auto& p : parts_) {
        if (p.lo >= hi) break;
        if (p.hi > lo) return true;
    }
    return false;
}

bool Region1D::subset_of(const Region1D& other) const {
    std::size_t j = 0;
    const auto& o = other.parts_;
    for (const auto& p : parts_) {
        while (j < o.size() && o[j].hi < p.lo) ++j;
        if (j == o.size() || o[j].lo > p.lo || o[j].hi < p.hi) return false;
    }
    return true;
}

bool Region1D::is_finite() const {
    return std::all_of(parts_.begin(), parts_.end(), [](const Interval& p) { return p.is_point(); });
}

Region1D Region1D::expanded(const Rational& eps) const {
    std::vector<Interval> v;
    v.reserve(parts_.size());
    for (const auto& p : parts_) v.push_back(Interval{p.lo - eps, p.hi + eps});
    Region1D r;
    r.parts_ = merge_sorted(std::move(v));
    return r;
}

std::string Region1D::to_string() const {
    if (parts_.empty()) return "{}";
    std::string s;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) s += " u ";
        const auto& p = parts_[i];
        if (p.is_point())
            s += "{" + crdyn::to_string(p.lo) + "}";
        else
            s += "[" + crdyn::to_string(p.lo) + "," + crdyn::to_string(p.hi) + "]";
    }
    return s;
}

bool operator<(const Region1D& a, const Region1D& b) {
    return std::lexicographical_compare(a.parts_.begin(), a.parts_.end(), b.parts_.begin(), b.parts_.end(),
                                        [](const Interval& x, const Interval& y) {
                                            if (x.lo != y.lo) return x.lo < y.lo;
                                            return x.hi < y.hi;
                                        });
}

Region1D unite(const Region1D& a, const Region1D& b) {
    std::vector<Interval> v;
    v.reserve(a.size() + b.size());
    std::merge(a.parts().begin(), a.parts().end(), b.parts().begin(), b.parts().end(), std::back_inserter(v),
               [](const Interval& x, const Interval& y) { return x.lo < y.lo; });
    return Region1D(std::move(v));
}

Region1D intersect(const Region1D& a, const Region1D& b) {
    std::vector<Interval> v;
    std::size_t i = 0, j = 0;
    const auto& A = a.parts();
    const auto& B = b.parts();
    while (i < A.size() && j < B.size()) {
        const Rational& lo = A[i].lo > B[j].lo ? A[i].lo : B[j].lo;
        const Rational& hi = A[i].hi < B[j].hi ? A[i].hi : B[j].hi;
        if (lo <= hi) v.push_back(Interval{lo, hi});
        if (A[i].hi < B[j].hi)
            ++i;
        else
            ++j;
    }
    return Region1D(std::move(v));
}

Region1D closure_difference(const Region1D& a, const Region1D& b) {
    std::vector<Interval> out;
    const auto& B = b.parts();
    std::size_t j = 0;
    for (const auto& p : a.parts()) {
        while (j < B.size() && B[j].hi < p.lo) ++j;
        Rational s = p.lo;
        bool s_removed = false; // s itself belongs to b; what remains starts just after s
        bool done = false;
        for (std::size_t k = j; k < B.size() && B[k].lo <= p.hi; ++k) {
            if (B[k].lo > s) out.push_back(Interval{s, B[k].lo});
            if (B[k].hi >= s) {
                s = B[k].hi;
                s_removed = true;
            }
            if (s >= p.hi) {
                done = true;
                break;
            }
        }
        if (done) continue;
        if (s < p.hi)
            out.push_back(Interval{s, p.hi});
        else if (!s_removed)
            out.push_back(Interval{s, s});
    }
    return Region1D(std::move(out));
}

Space1D::Space1D(std::vector<Interval> intervals, std::vector<Rational> isolated)
    : intervals_(std::move(intervals)), isolated_(std::move(isolated)) {
    if (intervals_.empty() && isolated_.empty()) throw PreconditionError("space must be non-empty");
    std::vector<Interval> all = intervals_;
    for (const auto& p : isolated_) all.push_back(Interval{p, p});
    for (const auto& iv : all)
        if (iv.lo > iv.hi) throw PreconditionError("space interval with lo > hi");
    std::sort(all.begin(), all.end(), [](const Interval& a, const Interval& b) { return a.lo < b.lo; });
    for (std::size_t i = 1; i < all.size(); ++i)
        if (all[i].lo <= all[i - 1].hi) throw PreconditionError("space pieces must be pairwise disjoint");
    std::sort(intervals_.begin(), intervals_.end(), [](const Interval& a, const Interval& b) { return a.lo < b.lo; });
    std::sort(isolated_.begin(), isolated_.end());
    region_ = Region1D(std::move(all));
}

std::vector<Rational> Space1D::isolated_points() const {
    std::vector<Rational> out;
    for (const auto& p : region_.parts())
        if (p.is_point()) out.push_back(p.lo);
    return out;
}

Interval Space1D::component_of(const Rational& t) const {
    for (const auto& p : region_.parts())
        if (p.contains(t)) return p;
    throw PreconditionError("point " + to_string(t) + " is not in the space");
}

bool eps_dense(const Region1D& ambient, const Region1D& s, const Rational& eps) {
    if (eps <= 0) throw PreconditionError("eps must be positive");
    if (s.empty()) return ambient.empty();
    return ambient.subset_of(s.expanded(eps));
}

bool eps_dense(const Space1D& space, const Region1D& s, const Rational& eps) {
    return eps_dense(space.region(), s, eps);
}

} // namespace crdyn
