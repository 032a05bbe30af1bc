#include "crdyn/classify.hpp"
#include "crdyn/errors.hpp"

#include <algorithm>
#include <unordered_map>

namespace crdyn {

namespace {

using Bits = boost::dynamic_bitset<>;

struct StateKey {
    std::size_t v;
    PointSet s;
    friend bool operator==(const StateKey&, const StateKey&) = default;
};
struct StateKeyHash {
    std::size_t operator()(const StateKey& k) const { return PointSetHash{}(k.s) * 1000003u ^ k.v; }
};

struct State {
    std::size_t v;
    std::size_t parent; // npos for the root
    std::size_t depth;
    PointSet s;
};

constexpr std::size_t npos = static_cast<std::size_t>(-1);

std::vector<std::size_t> walk_points(const std::vector<State>& states, std::size_t i) {
    std::vector<std::size_t> pts;
    for (; i != npos; i = states[i].parent) pts.push_back(states[i].v);
    std::reverse(pts.begin(), pts.end());
    return pts;
}

class CoverSearch {
public:
    CoverSearch(const std::vector<Bits>& sets, const Bits& goal, std::size_t budget)
        : sets_(sets), goal_(goal), budget_(budget), suffix_(sets.size() + 1, Bits(goal.size())) {
        for (std::size_t i = sets.size(); i-- > 0;) suffix_[i] = suffix_[i + 1] | sets[i];
    }

    // First cover of exactly k sets in lexicographic index order, if any.
    std::optional<std::vector<std::size_t>> exactly(std::size_t k) {
        chosen_.clear();
        if (rec(0, Bits(goal_.size()), k)) return chosen_;
        return std::nullopt;
    }
    bool exhausted() const { return exhausted_; }

private:
    bool rec(std::size_t from, const Bits& covered, std::size_t left) {
        if (goal_.is_subset_of(covered)) return true;
        if (left == 0) return false;
        if (budget_ == 0) {
            exhausted_ = true;
            return false;
        }
        --budget_;
        Bits missing = goal_ - covered;
        for (std::size_t i = from; i < sets_.size(); ++i) {
            if (!missing.is_subset_of(suffix_[i])) return false;
            if (!sets_[i].intersects(missing)) continue;
            chosen_.push_back(i);
            if (rec(i + 1, covered | sets_[i], left - 1)) return true;
            chosen_.pop_back();
            if (exhausted_) return false;
        }
        return false;
    }

    const std::vector<Bits>& sets_;
    Bits goal_;
    std::size_t budget_;
    bool exhausted_ = false;
    std::vector<Bits> suffix_;
    std::vector<std::size_t> chosen_;
};

} // namespace

BranchCoverResult minimal_dense_branch_cover(const FiniteRelation& g, std::size_t x, const DensityPredicate& dense,
                                             std::size_t horizon, const BranchCoverOptions& opts) {
    const PointSet legal = legal_set(g);
    if (x >= g.size() || !legal.contains(x)) throw PreconditionError("branch cover needs a legal starting point");

    BranchCoverResult res;
    res.horizon = horizon;

    // breadth-first over (point, visited set); successors are sorted, so the
    // first witness found for a state is the shortest, lexicographically least
    std::vector<State> states;
    std::unordered_map<StateKey, std::size_t, StateKeyHash> index;
    states.push_back({x, npos, 0, g.single(x)});
    index.emplace(StateKey{x, g.single(x)}, 0);
    bool cut_by_horizon = false, out_of_budget = false;
    for (std::size_t q = 0; q < states.size(); ++q) {
        for (auto w : g.successors(states[q].v)) {
            if (!legal.contains(w)) continue;
            PointSet s = states[q].s;
            s.insert(w);
            StateKey key{w, s};
            if (index.count(key)) continue;
            if (states[q].depth == horizon) {
                cut_by_horizon = true;
                continue;
            }
            if (states.size() >= opts.state_budget) {
                out_of_budget = true;
                continue;
            }
            index.emplace(std::move(key), states.size());
            states.push_back({w, q, states[q].depth + 1, std::move(s)});
        }
    }

    // distinct visited sets, each with its first witness; keep the maximal ones
    std::vector<std::size_t> reps;
    {
        std::unordered_map<PointSet, std::size_t, PointSetHash> first;
        for (std::size_t i = 0; i < states.size(); ++i)
            if (first.emplace(states[i].s, i).second) reps.push_back(i);
    }
    std::sort(reps.begin(), reps.end(), [&](std::size_t a, std::size_t b) {
        return states[a].s.count() > states[b].s.count();
    });
    std::vector<std::size_t> maximal;
    for (auto i : reps) {
        bool dominated = false;
        for (auto j : maximal)
            if (states[i].s.subset_of(states[j].s)) {
                dominated = true;
                break;
            }
        if (!dominated) maximal.push_back(i);
    }
    std::vector<std::pair<std::vector<std::size_t>, std::size_t>> ordered;
    for (auto i : maximal) ordered.push_back({walk_points(states, i), i});
    std::sort(ordered.begin(), ordered.end());

    const CoverageModel model = dense.coverage(g.size());
    auto atoms_of = [&](const PointSet& s) {
        Bits b(model.atom_count);
        s.for_each([&](std::size_t p) { b |= model.covers[p]; });
        return b;
    };
    std::vector<Bits> sets;
    Bits all(model.atom_count);
    for (auto& [pts, i] : ordered) {
        sets.push_back(atoms_of(states[i].s));
        all |= sets.back();
    }
    Bits goal(model.atom_count);
    goal.set();

    const bool complete = !cut_by_horizon && !out_of_budget;
    if (!goal.is_subset_of(all)) {
        res.size = std::nullopt;
        res.horizon_exhausted = !complete;
        res.certainty = complete ? Certainty::certified() : Certainty::unknown(horizon);
        return res;
    }

    CoverSearch search(sets, goal, opts.search_budget);
    std::optional<std::vector<std::size_t>> pick;
    std::size_t lower = 1;
    for (std::size_t k = 1; k <= sets.size(); ++k) {
        pick = search.exactly(k);
        if (pick || search.exhausted()) break;
        lower = k + 1;
    }
    if (!pick) {
        // greedy fallback: most new atoms, ties to the earlier set
        std::vector<std::size_t> greedy;
        Bits covered(model.atom_count);
        while (!goal.is_subset_of(covered)) {
            std::size_t best = 0, gain = 0;
            for (std::size_t i = 0; i < sets.size(); ++i) {
                auto c = (sets[i] - covered).count();
                if (c > gain) gain = c, best = i;
            }
            greedy.push_back(best);
            covered |= sets[best];
        }
        std::sort(greedy.begin(), greedy.end());
        pick = greedy;
    }
    const bool exact = pick->size() <= lower;
    res.size = pick->size();
    for (auto i : *pick) res.witnesses.push_back(Walk::make(g, ordered[i].first));
    res.certainty = exact && !out_of_budget ? Certainty::certified() : Certainty::unknown(horizon);
    return res;
}

} // namespace crdyn
