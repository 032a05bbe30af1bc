#pragma once

#include <boost/dynamic_bitset.hpp>

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

namespace crdyn {

// Subset of the index range [0, universe) of a finite space.
class PointSet {
public:
    PointSet() = default;
    explicit PointSet(std::size_t universe) : bits_(universe) {}

    static PointSet full(std::size_t universe) {
        PointSet s(universe);
        s.bits_.set();
        return s;
    }
    static PointSet singleton(std::size_t universe, std::size_t i) {
        PointSet s(universe);
        s.insert(i);
        return s;
    }
    static PointSet of(std::size_t universe, const std::vector<std::size_t>& idx) {
        PointSet s(universe);
        for (auto i : idx) s.insert(i);
        return s;
    }

    std::size_t universe() const { return bits_.size(); }
    std::size_t count() const { return bits_.count(); }
    bool empty() const { return bits_.none(); }
    bool is_full() const { return bits_.all(); }
    bool contains(std::size_t i) const { return bits_.test(i); }
    void insert(std::size_t i) { bits_.set(i); }
    void erase(std::size_t i) { bits_.reset(i); }

    bool subset_of(const PointSet& o) const { return bits_.is_subset_of(o.bits_); }
    bool intersects(const PointSet& o) const { return bits_.intersects(o.bits_); }

    PointSet& operator|=(const PointSet& o) {
        bits_ |= o.bits_;
        return *this;
    }
    PointSet& operator&=(const PointSet& o) {
        bits_ &= o.bits_;
        return *this;
    }
    PointSet& operator-=(const PointSet& o) {
        bits_ -= o.bits_;
        return *this;
    }
    friend PointSet operator|(PointSet a, const PointSet& b) { return a |= b; }
    friend PointSet operator&(PointSet a, const PointSet& b) { return a &= b; }
    friend PointSet operator-(PointSet a, const PointSet& b) { return a -= b; }
    PointSet complement() const {
        PointSet s = *this;
        s.bits_.flip();
        return s;
    }

    std::vector<std::size_t> indices() const {
        std::vector<std::size_t> out;
        for (auto i = bits_.find_first(); i != boost::dynamic_bitset<>::npos; i = bits_.find_next(i))
            out.push_back(i);
        return out;
    }
    template <class F>
    void for_each(F&& f) const {
        for (auto i = bits_.find_first(); i != boost::dynamic_bitset<>::npos; i = bits_.find_next(i)) f(i);
    }

    const boost::dynamic_bitset<>& bits() const { return bits_; }

    friend bool operator==(const PointSet& a, const PointSet& b) { return a.bits_ == b.bits_; }
    friend bool operator<(const PointSet& a, const PointSet& b) { return a.bits_ < b.bits_; }

private:
    boost::dynamic_bitset<> bits_;
};

struct PointSetHash {
    std::size_t operator()(const PointSet& s) const { return std::hash<boost::dynamic_bitset<>>{}(s.bits()); }
};

} // namespace crdyn
