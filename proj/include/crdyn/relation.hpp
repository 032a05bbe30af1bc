#pragma once

#include "crdyn/point_set.hpp"
#include "crdyn/rational.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace crdyn {

using Edge = std::pair<std::size_t, std::size_t>;

// Finite discrete space. Points are indexed in the order their labels are given.
class FiniteSpace {
public:
    explicit FiniteSpace(std::vector<std::string> labels);

    std::size_t size() const { return labels_.size(); }
    const std::string& label(std::size_t i) const { return labels_.at(i); }
    const std::vector<std::string>& labels() const { return labels_; }
    std::optional<std::size_t> index_of(const std::string& label) const;
    std::size_t require_index(const std::string& label) const;

    friend bool operator==(const FiniteSpace& a, const FiniteSpace& b) { return a.labels_ == b.labels_; }

private:
    std::vector<std::string> labels_;
    std::unordered_map<std::string, std::size_t> index_;
};

// Non-empty relation G on a finite space, stored as sorted adjacency lists.
class FiniteRelation {
public:
    FiniteRelation(FiniteSpace space, std::vector<Edge> edges);

    // Convenience: labels are the decimal numbers 0..n-1.
    static FiniteRelation numbered(std::size_t n, std::vector<Edge> edges);
    static FiniteRelation labelled(std::vector<std::string> labels,
                                   const std::vector<std::pair<std::string, std::string>>& pairs);

    const FiniteSpace& space() const { return space_; }
    std::size_t size() const { return space_.size(); }
    const std::vector<Edge>& edges() const { return edges_; }
    const std::vector<std::size_t>& successors(std::size_t i) const { return succ_.at(i); }
    const std::vector<std::size_t>& predecessors(std::size_t i) const { return pred_.at(i); }
    bool has_edge(std::size_t a, std::size_t b) const;

    PointSet empty_set() const { return PointSet(size()); }
    PointSet all() const { return PointSet::full(size()); }
    PointSet single(std::size_t i) const { return PointSet::singleton(size(), i); }

    friend bool operator==(const FiniteRelation& a, const FiniteRelation& b) {
        return a.space_ == b.space_ && a.edges_ == b.edges_;
    }

private:
    FiniteSpace space_;
    std::vector<Edge> edges_;
    std::vector<std::vector<std::size_t>> succ_;
    std::vector<std::vector<std::size_t>> pred_;
};

// A finite walk (x_1, ..., x_{m+1}) whose consecutive pairs are edges,
// i.e. an element of the m-th Mahavier product.
class Walk {
public:
    static Walk make(const FiniteRelation& g, std::vector<std::size_t> points);

    const std::vector<std::size_t>& points() const { return points_; }
    // 1-based standard projection pi_k.
    std::size_t pi(std::size_t k) const { return points_.at(k - 1); }
    std::size_t length() const { return points_.size() - 1; }
    PointSet orbit(std::size_t universe) const { return PointSet::of(universe, points_); }

    friend bool operator==(const Walk& a, const Walk& b) { return a.points_ == b.points_; }
    friend bool operator<(const Walk& a, const Walk& b) { return a.points_ < b.points_; }

private:
    explicit Walk(std::vector<std::size_t> p) : points_(std::move(p)) {}
    std::vector<std::size_t> points_;
};

FiniteRelation inverse_relation(const FiniteRelation& g);

PointSet image_step(const FiniteRelation& g, const PointSet& a);
// G^n(A), with G^0(A) = A.
PointSet image(const FiniteRelation& g, const PointSet& a, std::size_t n);
// G^{-n}(A).
PointSet preimage(const FiniteRelation& g, const PointSet& a, std::size_t n);

struct OmegaChain {
    PointSet value;
    std::size_t steps = 0; // first n with G^{n+1}(X) = G^n(X)
};
OmegaChain omega_image_chain(const FiniteRelation& g);
OmegaChain omega_preimage_chain(const FiniteRelation& g);
PointSet omega_image(const FiniteRelation& g);
PointSet omega_preimage(const FiniteRelation& g);

// Points admitting an infinite walk.
PointSet legal_set(const FiniteRelation& g);
PointSet illegal_set(const FiniteRelation& g);

// Walks of length m (m+1 points) in lexicographic order, at most `limit` of them.
std::vector<Walk> mahavier_enumerate(const FiniteRelation& g, std::size_t m, std::size_t limit);
BigInt mahavier_count(const FiniteRelation& g, std::size_t m);
// Same count in 64 bits; throws OverflowError when it does not fit.
std::uint64_t mahavier_count_u64(const FiniteRelation& g, std::size_t m);

std::string format_set(const FiniteRelation& g, const PointSet& s);

} // namespace crdyn
