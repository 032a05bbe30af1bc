#pragma once

#include "crdyn/rational.hpp"

#include <string>
#include <vector>

namespace crdyn {

// Closed interval [lo, hi]; lo == hi is a single point.
struct Interval {
    Rational lo;
    Rational hi;

    bool is_point() const { return lo == hi; }
    bool contains(const Rational& t) const { return lo <= t && t <= hi; }
    friend bool operator==(const Interval& a, const Interval& b) { return a.lo == b.lo && a.hi == b.hi; }
};

// Finite union of closed intervals and points, kept in canonical form:
// ascending, pairwise disjoint and non-touching (touching pieces are merged).
class Region1D {
public:
    Region1D() = default;
    explicit Region1D(std::vector<Interval> parts); // canonicalizes

    static Region1D point(const Rational& p);
    static Region1D interval(const Rational& lo, const Rational& hi);
    static Region1D points(std::vector<Rational> pts);

    const std::vector<Interval>& parts() const { return parts_; }
    bool empty() const { return parts_.empty(); }
    std::size_t size() const { return parts_.size(); }

    bool contains(const Rational& t) const;
    // Some point of the region lies strictly between lo and hi.
    bool intersects_open(const Rational& lo, const Rational& hi) const;
    bool subset_of(const Region1D& other) const;
    // True when every component is a single point.
    bool is_finite() const;

    Region1D expanded(const Rational& eps) const;

    std::string to_string() const;

    friend bool operator==(const Region1D& a, const Region1D& b) { return a.parts_ == b.parts_; }
    friend bool operator<(const Region1D& a, const Region1D& b);

private:
    std::vector<Interval> parts_;
};

Region1D unite(const Region1D& a, const Region1D& b);
Region1D intersect(const Region1D& a, const Region1D& b);
// Closure of a \ b. Used to image only the new part of a growing region.
Region1D closure_difference(const Region1D& a, const Region1D& b);

// The space X: disjoint closed intervals plus isolated points.
class Space1D {
public:
    Space1D(std::vector<Interval> intervals, std::vector<Rational> isolated);

    const std::vector<Interval>& intervals() const { return intervals_; }
    const std::vector<Rational>& isolated_listed() const { return isolated_; }
    // Isolated points of X: the listed ones plus degenerate intervals.
    std::vector<Rational> isolated_points() const;
    const Region1D& region() const { return region_; }
    bool contains(const Rational& t) const { return region_.contains(t); }
    // The connected component of X containing t (an interval or a point).
    Interval component_of(const Rational& t) const;

    friend bool operator==(const Space1D& a, const Space1D& b) {
        return a.intervals_ == b.intervals_ && a.isolated_ == b.isolated_;
    }

private:
    std::vector<Interval> intervals_;
    std::vector<Rational> isolated_;
    Region1D region_;
};

// Every point of the space is within distance eps of S.
bool eps_dense(const Space1D& space, const Region1D& s, const Rational& eps);
bool eps_dense(const Region1D& ambient, const Region1D& s, const Rational& eps);

} // namespace crdyn
