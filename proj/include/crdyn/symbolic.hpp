#pragma once

#include "crdyn/classify.hpp"
#include "crdyn/density.hpp"
#include "crdyn/region.hpp"
#include "crdyn/relation.hpp"

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace crdyn {

struct Point2 {
    Rational x;
    Rational y;
    friend bool operator==(const Point2& a, const Point2& b) { return a.x == b.x && a.y == b.y; }
};

struct Primitive {
    enum class Kind { Segment, SinglePoint };
    Kind kind = Kind::SinglePoint;
    Point2 a; // segment start, or the point
    Point2 b; // segment end (equal to a for points)

    static Primitive segment(Point2 from, Point2 to) { return {Kind::Segment, std::move(from), std::move(to)}; }
    static Primitive point(Point2 at) { return {Kind::SinglePoint, at, at}; }
    bool is_vertical() const { return kind == Kind::Segment && a.x == b.x && a.y != b.y; }
    Rational x_lo() const { return a.x < b.x ? a.x : b.x; }
    Rational x_hi() const { return a.x < b.x ? b.x : a.x; }
    Rational y_lo() const { return a.y < b.y ? a.y : b.y; }
    Rational y_hi() const { return a.y < b.y ? b.y : a.y; }
    bool contains(const Point2& p) const;
    // y-range of the primitive over the strip lo <= x <= hi; nullopt if it misses the strip.
    std::optional<Interval> y_over(const Rational& lo, const Rational& hi) const;
    friend bool operator==(const Primitive& a, const Primitive& b) {
        return a.kind == b.kind && a.a == b.a && a.b == b.b;
    }
};

// Closed relation on a Space1D given as a finite union of segments and points.
class SymbolicRelation {
public:
    SymbolicRelation(Space1D space, std::vector<Primitive> primitives);

    const Space1D& space() const { return space_; }
    const std::vector<Primitive>& primitives() const { return primitives_; }
    bool contains(const Rational& a, const Rational& b) const;

    friend bool operator==(const SymbolicRelation& a, const SymbolicRelation& b) {
        return a.space_ == b.space_ && a.primitives_ == b.primitives_;
    }

private:
    Space1D space_;
    std::vector<Primitive> primitives_;
};

SymbolicRelation mirror(const SymbolicRelation& r);

Region1D sym_image(const SymbolicRelation& r, const Region1D& a);
Region1D sym_preimage(const SymbolicRelation& r, const Region1D& a);
Region1D sym_image(const SymbolicRelation& r, const Rational& t);

struct SymReach {
    Region1D region;
    bool stabilized = false;
    std::size_t steps = 0; // iterations performed
};
// Calls f(n, R_n) for n = 0, 1, ... until f returns false, the region
// stabilizes, or max_iter steps were taken.
SymReach for_each_reach_step(const SymbolicRelation& r, const Region1D& start, std::size_t max_iter,
                             const std::function<bool(std::size_t, const Region1D&)>& f);
SymReach sym_reach(const SymbolicRelation& r, const Region1D& start, std::size_t max_iter);

// p1(G) and p2(G).
std::pair<Region1D, Region1D> projections(const SymbolicRelation& r);

struct SymLegal {
    Region1D region;
    bool stabilized = false;
};
SymLegal sym_legal_set(const SymbolicRelation& r, std::size_t max_iter);

// Exact successor points of t, with interval-valued choices (vertical
// segments) sampled at multiples of `resolution` plus their endpoints.
std::vector<Rational> sampled_successors(const SymbolicRelation& r, const Rational& t, const Rational& resolution);

// Follows t while every point has exactly one successor.
struct ForcedOrbit {
    std::vector<Rational> points;
    bool cycles = false;    // ended by returning to a visited point
    bool dead_end = false;  // ended at a point without successors
};
ForcedOrbit forced_orbit(const SymbolicRelation& r, const Rational& t, std::size_t max_iter);

// Union of the space components the forward orbit of `start` can enter.
Region1D component_saturation(const SymbolicRelation& r, const Region1D& start);

struct WalkSearchOptions {
    std::optional<Rational> resolution; // defaults to eps
    std::size_t node_budget = 200'000;
    // Lasso mode looks for a periodic walk whose orbit is NOT eps-dense.
    bool lasso = false;
};
struct WalkSearchResult {
    bool found = false;
    std::vector<Rational> witness;
    bool budget_exhausted = false;
    std::size_t nodes = 0;
};
WalkSearchResult bounded_walk_search(const SymbolicRelation& r, const Rational& x, const Rational& eps,
                                     std::size_t horizon, const WalkSearchOptions& opts = {});
// A prefix is a walk of r, and (outside lasso mode) its orbit is eps-dense.
bool verify_dense_walk(const SymbolicRelation& r, const std::vector<Rational>& walk, const Rational& eps);

struct DiscretizeOptions {
    std::size_t box_cap = 1u << 14;
    Rational eps0 = 0;
};
struct Discretization {
    FiniteRelation relation;
    DensityPredicate predicate;
    std::vector<Interval> boxes;
    Rational max_width;
    // Boxes containing t.
    std::vector<std::size_t> boxes_of(const Rational& t) const;
};
// Outer approximation on a grid of boxes of width <= delta. The predicate is
// the eps-net over box midpoints with eps = eps0 + max_width / 2.
Discretization discretize(const SymbolicRelation& r, const Rational& delta, const DiscretizeOptions& opts = {});

// The relation restricted to a finite forward-invariant set of points, with
// the eps-net predicate over the space.
struct PointRestriction {
    FiniteRelation relation;
    DensityPredicate predicate;
    std::vector<Rational> points;
};
PointRestriction restrict_to_points(const SymbolicRelation& r, const Region1D& invariant, const Rational& eps);

// Open-set grid: interval components split into open pieces of width <=
// delta, isolated points as open singletons.
struct OpenSet {
    Rational lo, hi; // lo == hi: singleton
    bool is_point() const { return lo == hi; }
    std::string to_string() const;
};
std::vector<OpenSet> open_grid(const Space1D& space, const Rational& delta);

struct GridPairResult {
    std::size_t u, v;
    std::optional<std::size_t> n; // first n certified, or nullopt
};
struct GridCheck {
    std::vector<OpenSet> sets;
    std::vector<GridPairResult> pairs;
    bool all_certified() const;
    std::size_t failures() const;
};
// For each grid pair (U, V) look for n in [positive ? 1 : 0, max_n] with
// G^n(U') meeting V, where U' is a closed subset of U (so every hit is a
// certified hit for U).
GridCheck check_open_grid(const SymbolicRelation& r, const Rational& delta, std::size_t max_n, bool positive);

struct SymClassifyOptions {
    Rational eps = make_rational(1, 64);
    std::size_t horizon = 200;
    Rational delta = make_rational(1, 64);
    std::size_t max_iter = 1024;
    std::size_t walk_budget = 200'000;
    bool use_discretization = true;
};
// Classification at resolution eps: "dense" means eps-dense, trans2/trans1
// are decided by witnesses up to the horizon and by sound refutations.
ClassificationTag classify_symbolic(const SymbolicRelation& r, const Rational& x, const SymClassifyOptions& opts = {});

// Points classified when no point is given: isolated points and interval endpoints.
std::vector<Rational> default_query_points(const Space1D& space);

} // namespace crdyn
