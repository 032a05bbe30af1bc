#pragma once

#include "crdyn/density.hpp"
#include "crdyn/point_set.hpp"
#include "crdyn/relation.hpp"

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace crdyn {

enum class Verdict { Illegal, Trans1, Trans2, Trans3, Intransitive };

struct ReachGrade {
    enum class Kind { None, Finite, Omega };
    Kind kind = Kind::None;
    std::size_t n = 0;

    static ReachGrade none() { return {}; }
    static ReachGrade finite(std::size_t n) { return {Kind::Finite, n}; }
    static ReachGrade omega() { return {Kind::Omega, 0}; }
    friend bool operator==(const ReachGrade&, const ReachGrade&) = default;
};

struct Certainty {
    enum class Kind { Certified, Refuted, UnknownAtHorizon };
    Kind kind = Kind::UnknownAtHorizon;
    std::size_t horizon = 0;

    static Certainty certified() { return {Kind::Certified, 0}; }
    static Certainty refuted() { return {Kind::Refuted, 0}; }
    static Certainty unknown(std::size_t h) { return {Kind::UnknownAtHorizon, h}; }
    bool is_certified() const { return kind == Kind::Certified; }
    bool is_refuted() const { return kind == Kind::Refuted; }
    bool is_unknown() const { return kind == Kind::UnknownAtHorizon; }
    friend bool operator==(const Certainty&, const Certainty&) = default;
};

// Memberships ordered from weakest to strongest.
enum class Level { Legal = 0, Trans3 = 1, Trans2 = 2, Trans1 = 3 };

// Strongest established verdict. `certainty` is Certified when every
// stronger membership is refuted, UnknownAtHorizon when the next one up is
// undecided. Per-level memberships are kept so weaker facts stay queryable.
struct ClassificationTag {
    Verdict verdict = Verdict::Illegal;
    ReachGrade grade;
    Certainty certainty;
    std::array<Certainty, 4> membership{};

    Certainty member(Level l) const { return membership[static_cast<int>(l)]; }

    // Normalizes the chain (a certified level certifies the weaker ones, a
    // refuted level refutes the stronger ones) and derives verdict/certainty.
    static ClassificationTag from_memberships(std::array<Certainty, 4> m, ReachGrade grade, std::size_t horizon);

    friend bool operator==(const ClassificationTag&, const ClassificationTag&) = default;
};

std::string to_string(Verdict v);
std::string to_string(const ReachGrade& g);
std::string to_string(const Certainty& c);
std::string to_string(const ClassificationTag& t);

// R_n(x) = {x} u G(x) u ... u G^n(x).
PointSet reach(const FiniteRelation& g, std::size_t x, std::size_t n);
PointSet reach_omega(const FiniteRelation& g, std::size_t x);
// Union of the orbits of all infinite walks from x: reachable points that are legal.
PointSet trajectory_union(const FiniteRelation& g, std::size_t x);

struct ClassifyOptions {
    // Node budget for the bounded searches used with eps-net predicates.
    std::size_t search_budget = 1'000'000;
};

ClassificationTag classify_point(const FiniteRelation& g, std::size_t x, const DensityPredicate& dense,
                                 const ClassifyOptions& opts = {});
std::vector<ClassificationTag> classify_all(const FiniteRelation& g, const DensityPredicate& dense,
                                            const ClassifyOptions& opts = {});

// Points whose tag certifies membership at `level`.
PointSet members_at(const std::vector<ClassificationTag>& tags, Level level);

// Brute force over (point, visited-set) states; independent of classify_point.
inline constexpr std::size_t kOracleMaxPoints = 16;
ClassificationTag oracle_classify(const FiniteRelation& g, std::size_t x, const DensityPredicate& dense);

struct BranchCoverResult {
    std::optional<std::size_t> size; // nullopt: unbounded (no finite family found)
    std::vector<Walk> witnesses;
    std::size_t horizon = 0;
    Certainty certainty;
    bool horizon_exhausted = false;
};

struct BranchCoverOptions {
    std::size_t state_budget = 4'000'000;
    std::size_t search_budget = 10'000'000;
};

// Minimum number of walk prefixes of length <= horizon from x, each
// extendable to an infinite walk, whose joint orbit is dense.
BranchCoverResult minimal_dense_branch_cover(const FiniteRelation& g, std::size_t x, const DensityPredicate& dense,
                                             std::size_t horizon, const BranchCoverOptions& opts = {});

bool do_transitive(const FiniteRelation& g, int k, const DensityPredicate& dense);
bool system_transitive(const FiniteRelation& g, bool plus);

struct CharacterizationReport {
    std::array<bool, 8> statement{};
    bool transitive = false;
    bool plus_transitive = false;
    bool inverse_transitive = false;

    bool odd_group_agrees() const;
    bool even_group_agrees() const;
    bool consistent() const;
};
CharacterizationReport characterization_suite(const FiniteRelation& g);

std::pair<PointSet, PointSet> projection_check(const FiniteRelation& g);

} // namespace crdyn
