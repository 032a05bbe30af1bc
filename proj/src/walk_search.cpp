#include "crdyn/symbolic.hpp"

#include "crdyn/errors.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace crdyn {

namespace {

Rational length(const Region1D& r) {
    Rational s = 0;
    for (const auto& p : r.parts()) s += p.hi - p.lo;
    return s;
}

class WalkSearch {
public:
    WalkSearch(const SymbolicRelation& r, const Rational& eps, std::size_t horizon, const WalkSearchOptions& opts)
        : r_(r), eps_(eps), horizon_(horizon), res_(opts.resolution.value_or(eps)), budget_(opts.node_budget),
          lasso_(opts.lasso) {}

    WalkSearchResult run(const Rational& x) {
        WalkSearchResult out;
        path_.push_back(x);
        on_path_.insert(x);
        Region1D covered = ball(x);
        bool found = lasso_ ? lasso(x, covered, horizon_) : dense(x, covered, horizon_);
        out.found = found;
        if (found) out.witness = witness_;
        out.budget_exhausted = exhausted_;
        out.nodes = nodes_;
        return out;
    }

private:
    Region1D ball(const Rational& q) const { return Region1D::interval(q - eps_, q + eps_); }
    bool is_dense(const Region1D& covered) const { return r_.space().region().subset_of(covered); }

    bool spend() {
        if (nodes_ >= budget_) {
            exhausted_ = true;
            return false;
        }
        ++nodes_;
        return true;
    }

    // Successors ordered by how much uncovered space their ball adds. An
    // uncovered isolated point outweighs any interval gain.
    std::vector<Rational> ordered(const Rational& p, const Region1D& covered, bool least_first) const {
        auto succ = sampled_successors(r_, p, res_);
        const Region1D uncovered = closure_difference(r_.space().region(), covered);
        std::vector<std::pair<Rational, Rational>> scored;
        for (auto& q : succ) {
            Region1D hit = intersect(uncovered, ball(q));
            Rational gain = length(hit);
            for (const auto& part : hit.parts())
                if (part.is_point()) gain += 4 * eps_;
            scored.push_back({std::move(gain), std::move(q)});
        }
        std::stable_sort(scored.begin(), scored.end(), [&](const auto& a, const auto& b) {
            if (a.first != b.first) return least_first ? a.first < b.first : a.first > b.first;
            return a.second < b.second;
        });
        std::vector<Rational> out;
        for (auto& s : scored) out.push_back(std::move(s.second));
        return out;
    }

    bool dense(const Rational& p, const Region1D& covered, std::size_t left) {
        if (is_dense(covered)) {
            witness_ = path_;
            return true;
        }
        if (left == 0 || exhausted_) return false;
        auto key = std::make_pair(p, covered);
        auto it = memo_.find(key);
        if (it != memo_.end() && it->second >= left) return false;
        memo_[key] = left;
        if (!spend()) return false;
        for (const auto& q : ordered(p, covered, false)) {
            path_.push_back(q);
            bool ok = dense(q, unite(covered, ball(q)), left - 1);
            path_.pop_back();
            if (ok) return true;
            if (exhausted_) return false;
        }
        return false;
    }

    // Periodic walk whose orbit (the path points) is not eps-dense.
    bool lasso(const Rational& p, const Region1D& covered, std::size_t left) {
        if (is_dense(covered) || exhausted_) return false;
        if (!spend()) return false;
        auto succ = ordered(p, covered, true);
        for (const auto& q : succ)
            if (on_path_.count(q)) {
                witness_ = path_;
                witness_.push_back(q);
                return true;
            }
        if (left == 0) return false;
        for (const auto& q : succ) {
            path_.push_back(q);
            on_path_.insert(q);
            bool ok = lasso(q, unite(covered, ball(q)), left - 1);
            on_path_.erase(q);
            path_.pop_back();
            if (ok) return true;
            if (exhausted_) return false;
        }
        return false;
    }

    const SymbolicRelation& r_;
    Rational eps_;
    std::size_t horizon_;
    Rational res_;
    std::size_t budget_;
    bool lasso_;
    std::size_t nodes_ = 0;
    bool exhausted_ = false;
    std::vector<Rational> path_, witness_;
    std::set<Rational> on_path_;
    std::map<std::pair<Rational, Region1D>, std::size_t> memo_;
};

} // namespace

WalkSearchResult bounded_walk_search(const SymbolicRelation& r, const Rational& x, const Rational& eps,
                                     std::size_t horizon, const WalkSearchOptions& opts) {
    if (eps <= 0) throw PreconditionError("eps must be positive");
    if (!r.space().contains(x)) throw PreconditionError("start point outside the space");
    return WalkSearch(r, eps, horizon, opts).run(x);
}

bool verify_dense_walk(const SymbolicRelation& r, const std::vector<Rational>& walk, const Rational& eps) {
    if (walk.empty()) return false;
    for (std::size_t i = 0; i + 1 < walk.size(); ++i)
        if (!r.contains(walk[i], walk[i + 1])) return false;
    return eps_dense(r.space(), Region1D::points(walk), eps);
}

} // namespace crdyn
