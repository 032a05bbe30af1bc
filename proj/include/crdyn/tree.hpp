#pragma once

#include "crdyn/classify.hpp"
#include "crdyn/density.hpp"
#include "crdyn/relation.hpp"

#include <optional>
#include <string>
#include <vector>

namespace crdyn {

struct TreeNode {
    std::size_t point;
    std::size_t level;
    std::vector<std::size_t> children; // node ids, ascending by point
};

// Depth-bounded unfolding of the walks from a root. A node is a
// (point, level) pair, so repeated visits at one level share a node.
class TransTree {
public:
    std::size_t root() const { return root_; }
    std::size_t depth() const { return depth_; }
    const std::vector<TreeNode>& nodes() const { return nodes_; }
    std::size_t node_count() const { return nodes_.size(); }
    // Node ids on level n, ascending by point.
    const std::vector<std::size_t>& level_nodes(std::size_t n) const { return levels_.at(n); }
    PointSet level(std::size_t n) const;
    // Union of levels 0..n.
    PointSet cumulative(std::size_t n) const;
    // Length of the longest walk from the root; nullopt when unbounded.
    std::optional<std::size_t> height() const { return height_; }
    const std::vector<std::string>& labels() const { return labels_; }

private:
    friend TransTree build_tree(const FiniteRelation& g, std::size_t x, std::size_t depth);
    std::size_t root_ = 0, depth_ = 0;
    std::vector<TreeNode> nodes_;
    std::vector<std::vector<std::size_t>> levels_;
    std::optional<std::size_t> height_;
    std::vector<std::string> labels_;
};

TransTree build_tree(const FiniteRelation& g, std::size_t x, std::size_t depth);

struct BranchSummary {
    // Number of finite branches (walks ending at a point without successors);
    // nullopt when there are infinitely many.
    std::optional<BigInt> finite_branch_count;
    // Longest finite branch in edges; nullopt when unbounded or there is none.
    std::optional<std::size_t> max_finite_length;
    bool has_infinite_branch = false;
    PointSet infinite_branch_cover;
    bool union_of_infinite_dense = false;
    bool exists_infinite_dense_branch = false;
    bool all_infinite_branches_dense = false;
};

BranchSummary branch_summary(const FiniteRelation& g, std::size_t x, const DensityPredicate& dense);

enum class Multiplicity { Zero, One, Many };
struct BranchCounts {
    Multiplicity all;      // |B(T(x))|
    Multiplicity infinite; // |B_inf(T(x))|
};
BranchCounts branch_counts(const FiniteRelation& g, std::size_t x);

struct FunctionGraphTests {
    bool single_valued_partial = false;
    bool single_valued_total = false;
};
FunctionGraphTests function_graph_tests(const FiniteRelation& g);

std::string dot_export(const TransTree& t);

} // namespace crdyn
