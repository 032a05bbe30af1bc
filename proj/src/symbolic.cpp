#include "crdyn/symbolic.hpp"

#include "crdyn/errors.hpp"

#include <algorithm>
#include <set>

namespace crdyn {

bool Primitive::contains(const Point2& p) const {
    if (kind == Kind::SinglePoint) return p == a;
    if (p.x < x_lo() || p.x > x_hi() || p.y < y_lo() || p.y > y_hi()) return false;
    // collinearity via the cross product
    return (b.x - a.x) * (p.y - a.y) == (b.y - a.y) * (p.x - a.x);
}

std::optional<Interval> Primitive::y_over(const Rational& lo, const Rational& hi) const {
    Rational l = std::max(lo, x_lo()), h = std::min(hi, x_hi());
    if (l > h) return std::nullopt;
    if (a.x == b.x) return Interval{y_lo(), y_hi()};
    Rational slope = (b.y - a.y) / (b.x - a.x);
    Rational y1 = a.y + (l - a.x) * slope, y2 = a.y + (h - a.x) * slope;
    if (y1 > y2) std::swap(y1, y2);
    return Interval{y1, y2};
}

SymbolicRelation::SymbolicRelation(Space1D space, std::vector<Primitive> primitives)
    : space_(std::move(space)), primitives_(std::move(primitives)) {
    if (primitives_.empty()) throw PreconditionError("relation must be non-empty");
    const Region1D& x = space_.region();
    for (const auto& p : primitives_) {
        if (!Region1D::interval(p.x_lo(), p.x_hi()).subset_of(x) ||
            !Region1D::interval(p.y_lo(), p.y_hi()).subset_of(x))
            throw PreconditionError("primitive leaves the space");
    }
}

bool SymbolicRelation::contains(const Rational& a, const Rational& b) const {
    const Point2 p{a, b};
    return std::any_of(primitives_.begin(), primitives_.end(), [&](const Primitive& q) { return q.contains(p); });
}

SymbolicRelation mirror(const SymbolicRelation& r) {
    std::vector<Primitive> out;
    out.reserve(r.primitives().size());
    for (const auto& p : r.primitives()) {
        Primitive q = p;
        q.a = {p.a.y, p.a.x};
        q.b = {p.b.y, p.b.x};
        out.push_back(std::move(q));
    }
    return SymbolicRelation(r.space(), std::move(out));
}

Region1D sym_image(const SymbolicRelation& r, const Region1D& a) {
    std::vector<Interval> out;
    const auto& parts = a.parts();
    for (const auto& p : r.primitives()) {
        const Rational lo = p.x_lo(), hi = p.x_hi();
        auto it = std::lower_bound(parts.begin(), parts.end(), lo,
                                   [](const Interval& iv, const Rational& v) { return iv.hi < v; });
        for (; it != parts.end() && it->lo <= hi; ++it)
            if (auto y = p.y_over(it->lo, it->hi)) out.push_back(std::move(*y));
    }
    return Region1D(std::move(out));
}

Region1D sym_preimage(const SymbolicRelation& r, const Region1D& a) { return sym_image(mirror(r), a); }

Region1D sym_image(const SymbolicRelation& r, const Rational& t) { return sym_image(r, Region1D::point(t)); }

SymReach for_each_reach_step(const SymbolicRelation& r, const Region1D& start, std::size_t max_iter,
                             const std::function<bool(std::size_t, const Region1D&)>& f) {
    SymReach res;
    Region1D cur = start, prev;
    if (!f(0, cur)) {
        res.region = cur;
        return res;
    }
    for (std::size_t n = 1; n <= max_iter; ++n) {
        // only the part added last step can contribute new image points
        Region1D next = unite(cur, sym_image(r, closure_difference(cur, prev)));
        res.steps = n;
        if (next == cur) {
            res.stabilized = true;
            break;
        }
        prev = std::move(cur);
        cur = std::move(next);
        if (!f(n, cur)) break;
    }
    res.region = std::move(cur);
    return res;
}

SymReach sym_reach(const SymbolicRelation& r, const Region1D& start, std::size_t max_iter) {
    return for_each_reach_step(r, start, max_iter, [](std::size_t, const Region1D&) { return true; });
}

std::pair<Region1D, Region1D> projections(const SymbolicRelation& r) {
    std::vector<Interval> p1, p2;
    for (const auto& p : r.primitives()) {
        p1.push_back({p.x_lo(), p.x_hi()});
        p2.push_back({p.y_lo(), p.y_hi()});
    }
    return {Region1D(std::move(p1)), Region1D(std::move(p2))};
}

SymLegal sym_legal_set(const SymbolicRelation& r, std::size_t max_iter) {
    const SymbolicRelation inv = mirror(r);
    SymLegal res{r.space().region(), false};
    for (std::size_t n = 0; n < max_iter; ++n) {
        Region1D next = sym_image(inv, res.region);
        if (next == res.region) {
            res.stabilized = true;
            break;
        }
        res.region = std::move(next);
    }
    return res;
}

std::vector<Rational> sampled_successors(const SymbolicRelation& r, const Rational& t, const Rational& resolution) {
    if (resolution <= 0) throw PreconditionError("resolution must be positive");
    std::vector<Rational> out;
    for (const auto& p : r.primitives()) {
        if (t < p.x_lo() || t > p.x_hi()) continue;
        if (p.is_vertical()) {
            const Rational lo = p.y_lo(), hi = p.y_hi();
            out.push_back(lo);
            mpz_class k;
            Rational q = lo / resolution;
            mpz_cdiv_q(k.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
            for (Rational y = Rational(k) * resolution; y < hi; y += resolution)
                if (y > lo) out.push_back(y);
            out.push_back(hi);
        } else {
            out.push_back(p.y_over(t, t)->lo);
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

ForcedOrbit forced_orbit(const SymbolicRelation& r, const Rational& t, std::size_t max_iter) {
    ForcedOrbit o;
    o.points.push_back(t);
    std::set<Rational> seen{t};
    Rational cur = t;
    for (std::size_t n = 0; n < max_iter; ++n) {
        Region1D img = sym_image(r, cur);
        if (img.empty()) {
            o.dead_end = true;
            break;
        }
        if (img.size() != 1 || !img.parts()[0].is_point()) break;
        cur = img.parts()[0].lo;
        if (!seen.insert(cur).second) {
            o.cycles = true;
            break;
        }
        o.points.push_back(cur);
    }
    return o;
}

namespace {

Region1D components_meeting(const Space1D& space, const Region1D& a) {
    std::vector<Interval> comps;
    for (const auto& p : a.parts()) comps.push_back(space.component_of(p.lo));
    return Region1D(std::move(comps));
}

} // namespace

Region1D component_saturation(const SymbolicRelation& r, const Region1D& start) {
    Region1D k = components_meeting(r.space(), start);
    while (true) {
        Region1D next = unite(k, components_meeting(r.space(), sym_image(r, k)));
        if (next == k) return k;
        k = std::move(next);
    }
}

std::string OpenSet::to_string() const {
    if (is_point()) return "{" + crdyn::to_string(lo) + "}";
    return "(" + crdyn::to_string(lo) + "," + crdyn::to_string(hi) + ")";
}

std::vector<OpenSet> open_grid(const Space1D& space, const Rational& delta) {
    if (delta <= 0) throw PreconditionError("delta must be positive");
    std::vector<OpenSet> out;
    for (const auto& iv : space.intervals()) {
        if (iv.is_point()) {
            out.push_back({iv.lo, iv.lo});
            continue;
        }
        Rational q = (iv.hi - iv.lo) / delta;
        mpz_class k;
        mpz_cdiv_q(k.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
        Rational w = (iv.hi - iv.lo) / Rational(k);
        for (mpz_class i = 0; i < k; ++i) out.push_back({iv.lo + Rational(i) * w, iv.lo + Rational(i + 1) * w});
    }
    for (const auto& p : space.isolated_listed()) out.push_back({p, p});
    std::sort(out.begin(), out.end(), [](const OpenSet& a, const OpenSet& b) { return a.lo < b.lo; });
    return out;
}

bool GridCheck::all_certified() const { return failures() == 0; }

std::size_t GridCheck::failures() const {
    return std::count_if(pairs.begin(), pairs.end(), [](const GridPairResult& p) { return !p.n; });
}

GridCheck check_open_grid(const SymbolicRelation& r, const Rational& delta, std::size_t max_n, bool positive) {
    GridCheck res;
    res.sets = open_grid(r.space(), delta);
    const auto& sets = res.sets;
    for (std::size_t u = 0; u < sets.size(); ++u) {
        const OpenSet& U = sets[u];
        Region1D a;
        if (U.is_point()) {
            a = Region1D::point(U.lo);
        } else {
            Rational quarter = (U.hi - U.lo) / 4;
            a = Region1D::interval(U.lo + quarter, U.hi - quarter);
        }
        std::vector<std::optional<std::size_t>> hit(sets.size());
        std::size_t open = sets.size();
        for (std::size_t n = 0; n <= max_n && open > 0; ++n) {
            if (n > 0) a = sym_image(r, a);
            if (n == 0 && positive) continue;
            for (std::size_t v = 0; v < sets.size(); ++v) {
                if (hit[v]) continue;
                const OpenSet& V = sets[v];
                bool meets = V.is_point() ? a.contains(V.lo) : a.intersects_open(V.lo, V.hi);
                if (meets) {
                    hit[v] = n;
                    --open;
                }
            }
        }
        for (std::size_t v = 0; v < sets.size(); ++v) res.pairs.push_back({u, v, hit[v]});
    }
    return res;
}

std::vector<Rational> default_query_points(const Space1D& space) {
    std::vector<Rational> pts;
    for (const auto& iv : space.intervals()) {
        pts.push_back(iv.lo);
        if (!iv.is_point()) pts.push_back(iv.hi);
    }
    for (const auto& p : space.isolated_listed()) pts.push_back(p);
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    return pts;
}

} // namespace crdyn
