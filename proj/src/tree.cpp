#include "crdyn/tree.hpp"

#include "crdyn/condensation.hpp"
#include "crdyn/errors.hpp"

#include <functional>

#include <map>
#include <sstream>

namespace crdyn {

PointSet TransTree::level(std::size_t n) const {
    PointSet s(labels_.size());
    for (auto id : levels_.at(n)) s.insert(nodes_[id].point);
    return s;
}

PointSet TransTree::cumulative(std::size_t n) const {
    PointSet s(labels_.size());
    for (std::size_t k = 0; k <= n; ++k) s |= level(k);
    return s;
}

namespace {

// Longest walk from x, or nullopt if x reaches a cycle.
std::optional<std::size_t> longest_walk(const FiniteRelation& g, std::size_t x) {
    enum : char { White, Gray, Black };
    std::vector<char> color(g.size(), White);
    std::vector<std::size_t> best(g.size(), 0);
    std::vector<std::pair<std::size_t, std::size_t>> stack{{x, 0}};
    color[x] = Gray;
    while (!stack.empty()) {
        auto& [v, i] = stack.back();
        const auto& s = g.successors(v);
        if (i == s.size()) {
            for (auto w : s) best[v] = std::max(best[v], best[w] + 1);
            color[v] = Black;
            stack.pop_back();
            continue;
        }
        auto w = s[i++];
        if (color[w] == Gray) return std::nullopt;
        if (color[w] == White) {
            color[w] = Gray;
            stack.push_back({w, 0});
        }
    }
    return best[x];
}

} // namespace

TransTree build_tree(const FiniteRelation& g, std::size_t x, std::size_t depth) {
    if (x >= g.size()) throw PreconditionError("point index out of range");
    TransTree t;
    t.root_ = x;
    t.depth_ = depth;
    t.labels_ = g.space().labels();
    t.height_ = longest_walk(g, x);
    t.nodes_.push_back({x, 0, {}});
    t.levels_.push_back({0});
    for (std::size_t n = 0; n < depth; ++n) {
        std::map<std::size_t, std::size_t> next; // point -> node id
        for (auto id : t.levels_[n])
            for (auto w : g.successors(t.nodes_[id].point)) next.emplace(w, 0);
        std::vector<std::size_t> ids;
        for (auto& [p, id] : next) {
            id = t.nodes_.size();
            t.nodes_.push_back({p, n + 1, {}});
            ids.push_back(id);
        }
        for (auto id : t.levels_[n])
            for (auto w : g.successors(t.nodes_[id].point)) t.nodes_[id].children.push_back(next.at(w));
        t.levels_.push_back(std::move(ids));
    }
    return t;
}

BranchSummary branch_summary(const FiniteRelation& g, std::size_t x, const DensityPredicate& dense) {
    BranchSummary b;
    const PointSet legal = legal_set(g);
    const PointSet r = reach_omega(g, x);
    b.infinite_branch_cover = r & legal;
    b.has_infinite_branch = legal.contains(x);

    // Finite branches are walks to points without successors. There are
    // infinitely many iff a reachable point on a cycle reaches such a point;
    // otherwise they only pass through acyclic points and a DP counts them.
    const PointSet dead = g.all() - preimage(g, g.all(), 1);
    PointSet to_dead = dead;
    for (PointSet frontier = dead; !frontier.empty();) {
        frontier = preimage(g, frontier, 1) - to_dead;
        to_dead |= frontier;
    }
    const Condensation cond = condense(g);
    bool unbounded = false;
    (r & to_dead).for_each([&](std::size_t u) { unbounded = unbounded || cond.live[cond.scc_of[u]]; });
    if (!unbounded) {
        std::vector<std::optional<BigInt>> count(g.size());
        std::vector<std::optional<std::size_t>> longest(g.size());
        std::function<void(std::size_t)> solve = [&](std::size_t v) {
            if (count[v]) return;
            BigInt c = dead.contains(v) ? 1 : 0;
            std::optional<std::size_t> len;
            if (dead.contains(v)) len = 0;
            for (auto w : g.successors(v)) {
                if (!to_dead.contains(w)) continue;
                solve(w);
                c += *count[w];
                len = std::max(len.value_or(0), *longest[w] + 1);
            }
            count[v] = c;
            longest[v] = len;
        };
        if (to_dead.contains(x)) {
            solve(x);
            b.finite_branch_count = *count[x];
            b.max_finite_length = longest[x];
        } else {
            b.finite_branch_count = BigInt(0);
        }
    }

    const ClassificationTag tag = classify_point(g, x, dense);
    b.union_of_infinite_dense = tag.member(Level::Trans3).is_certified();
    b.exists_infinite_dense_branch = tag.member(Level::Trans2).is_certified();
    b.all_infinite_branches_dense = tag.member(Level::Trans1).is_certified();
    return b;
}

BranchCounts branch_counts(const FiniteRelation& g, std::size_t x) {
    const PointSet legal = legal_set(g);
    const PointSet r = reach_omega(g, x);
    bool branching = false;
    r.for_each([&](std::size_t v) { branching = branching || g.successors(v).size() > 1; });
    BranchCounts c{branching ? Multiplicity::Many : Multiplicity::One, Multiplicity::Zero};
    if (legal.contains(x)) {
        bool split = false;
        (r & legal).for_each([&](std::size_t v) {
            std::size_t k = 0;
            for (auto w : g.successors(v)) k += legal.contains(w);
            split = split || k > 1;
        });
        c.infinite = split ? Multiplicity::Many : Multiplicity::One;
    }
    return c;
}

FunctionGraphTests function_graph_tests(const FiniteRelation& g) {
    FunctionGraphTests t{true, true};
    for (std::size_t v = 0; v < g.size(); ++v) {
        auto k = g.successors(v).size();
        t.single_valued_partial = t.single_valued_partial && k <= 1;
        t.single_valued_total = t.single_valued_total && k == 1;
    }
    return t;
}

namespace {

std::string dot_quote(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    return out + "\"";
}

std::string node_name(const TreeNode& n) { return "p" + std::to_string(n.point) + "_l" + std::to_string(n.level); }

} // namespace

std::string dot_export(const TransTree& t) {
    std::ostringstream os;
    os << "digraph T {\n";
    os << "  node [shape=circle];\n";
    for (std::size_t n = 0; n <= t.depth(); ++n) {
        os << "  { rank=same;";
        for (auto id : t.level_nodes(n)) {
            const auto& node = t.nodes()[id];
            os << " " << node_name(node) << " [label=" << dot_quote(t.labels()[node.point]) << "];";
        }
        os << " }\n";
    }
    for (const auto& node : t.nodes())
        for (auto c : node.children) os << "  " << node_name(node) << " -> " << node_name(t.nodes()[c]) << ";\n";
    os << "}\n";
    return os.str();
}

} // namespace crdyn
