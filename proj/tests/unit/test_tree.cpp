#include "crdyn/classify.hpp"
#include "crdyn/tree.hpp"
#include "support/random_relation.hpp"

#include <doctest.h>

#include <cctype>

using namespace crdyn;
using crdyn::testing::random_relation;
using crdyn::testing::Rng;

namespace {
const auto kExh = DensityPredicate::exhaustive();
FiniteRelation cycle3() { return FiniteRelation::numbered(3, {{0, 1}, {1, 2}, {2, 0}}); }
FiniteRelation loop_and_orphan() { return FiniteRelation::numbered(2, {{0, 0}}); }

// Recursive-descent check against the DOT grammar (graph, stmt_list, node,
// edge and attribute statements, anonymous subgraphs).
class DotChecker {
public:
    explicit DotChecker(const std::string& s) : s_(s) {}
    bool valid() {
        try {
            if (ident() != "digraph") return false;
            if (peek() != "{") ident();
            expect("{");
            stmt_list();
            expect("}");
            skip_ws();
            return pos_ == s_.size();
        } catch (const std::exception&) {
            return false;
        }
    }
    std::size_t nodes = 0, edges = 0;

private:
    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    std::string peek() {
        auto save = pos_;
        auto t = token();
        pos_ = save;
        return t;
    }
    std::string token() {
        skip_ws();
        if (pos_ >= s_.size()) return "";
        char c = s_[pos_];
        if (c == '-' && pos_ + 1 < s_.size() && s_[pos_ + 1] == '>') {
            pos_ += 2;
            return "->";
        }
        if (std::string("{}[];=,").find(c) != std::string::npos) {
            ++pos_;
            return std::string(1, c);
        }
        if (c == '"') {
            std::string out = "\"";
            ++pos_;
            while (true) {
                if (pos_ >= s_.size()) throw std::runtime_error("unterminated string");
                char d = s_[pos_++];
                if (d == '\\') {
                    if (pos_ >= s_.size()) throw std::runtime_error("bad escape");
                    out += s_[pos_++];
                    continue;
                }
                if (d == '"') break;
                out += d;
            }
            return out;
        }
        if (std::isalnum(static_cast<unsigned char>(c)) || c == '_') {
            auto b = pos_;
            while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
            return s_.substr(b, pos_ - b);
        }
        throw std::runtime_error("unexpected character");
    }
    static bool is_id(const std::string& t) {
        return !t.empty() && (t[0] == '"' || std::isalnum(static_cast<unsigned char>(t[0])) || t[0] == '_');
    }
    std::string ident() {
        auto t = token();
        if (!is_id(t)) throw std::runtime_error("expected id");
        return t;
    }
    void expect(const std::string& want) {
        if (token() != want) throw std::runtime_error("expected " + want);
    }
    void attr_list() {
        while (peek() == "[") {
            token();
            while (peek() != "]") {
                ident();
                expect("=");
                ident();
                if (peek() == ";" || peek() == ",") token();
            }
            expect("]");
        }
    }
    void stmt_list() {
        while (peek() != "}" && !peek().empty()) {
            stmt();
            if (peek() == ";") token();
        }
    }
    void stmt() {
        if (peek() == "{") {
            token();
            stmt_list();
            expect("}");
            return;
        }
        auto id = ident();
        if (id == "node" || id == "edge" || id == "graph") {
            attr_list();
            return;
        }
        if (peek() == "=") {
            token();
            ident();
            return;
        }
        bool edge = false;
        while (peek() == "->") {
            token();
            ident();
            edge = true;
            ++edges;
        }
        if (!edge) ++nodes;
        attr_list();
    }
    std::string s_;
    std::size_t pos_ = 0;
};
}

TEST_CASE("tree levels unroll the cycle") {
    auto t = build_tree(cycle3(), 0, 4);
    const std::vector<std::size_t> expect{0, 1, 2, 0, 1};
    for (std::size_t n = 0; n <= 4; ++n) CHECK(t.level(n) == cycle3().single(expect[n]));
    CHECK_FALSE(t.height().has_value());
}

TEST_CASE("illegal root gives a single node of height zero") {
    auto t = build_tree(loop_and_orphan(), 1, 3);
    CHECK(t.node_count() == 1);
    REQUIRE(t.height().has_value());
    CHECK(*t.height() == 0);
}

TEST_CASE("levels are images, cumulative levels are reaches") {
    Rng rng(401);
    for (int i = 0; i < 200; ++i) {
        auto g = random_relation(rng, 7);
        const std::size_t x = rng() % g.size(), depth = rng() % 6;
        auto t = build_tree(g, x, depth);
        CHECK(t.node_count() <= g.size() * (depth + 1));
        for (std::size_t n = 0; n <= depth; ++n) {
            CHECK(t.level(n) == image(g, g.single(x), n));
            CHECK(t.cumulative(n) == reach(g, x, n));
            for (auto id : t.level_nodes(n)) {
                const auto& node = t.nodes()[id];
                CHECK(node.level == n);
                // children are exactly the successors on the next level
                if (n < depth) CHECK(node.children.size() == g.successors(node.point).size());
                for (auto c : node.children) CHECK(g.has_edge(node.point, t.nodes()[c].point));
            }
        }
        CHECK(t.height().has_value() == !legal_set(g).contains(x));
    }
}

TEST_CASE("grade equals the first dense cumulative level") {
    Rng rng(402);
    for (int i = 0; i < 300; ++i) {
        auto g = random_relation(rng, 7);
        for (std::size_t x = 0; x < g.size(); ++x) {
            auto tag = classify_point(g, x, kExh);
            if (tag.grade.kind != ReachGrade::Kind::Finite) continue;
            auto t = build_tree(g, x, g.size());
            std::size_t first = 0;
            while (!(t.cumulative(first)).is_full()) ++first;
            CHECK(tag.grade.n == first);
        }
    }
}

TEST_CASE("branch summary examples") {
    auto dens = FiniteRelation::numbered(2, {{0, 1}, {1, 1}});
    CHECK(branch_summary(dens, 0, kExh).all_infinite_branches_dense);
    auto s = branch_summary(loop_and_orphan(), 1, kExh);
    CHECK_FALSE(s.has_infinite_branch);
    REQUIRE(s.finite_branch_count.has_value());
    CHECK(*s.finite_branch_count == 1);
    CHECK(s.infinite_branch_cover.empty());
}

// maximal finite walks from x, counted by direct enumeration on an acyclic part
BigInt count_dead_ends(const FiniteRelation& g, std::size_t x) {
    if (g.successors(x).empty()) return 1;
    BigInt total = 0;
    for (auto y : g.successors(x)) total += count_dead_ends(g, y);
    return total;
}

TEST_CASE("branch summaries reproduce the classification") {
    Rng rng(403);
    for (int i = 0; i < 500; ++i) {
        auto g = random_relation(rng, 7);
        const auto legal = legal_set(g);
        for (std::size_t x = 0; x < g.size(); ++x) {
            auto s = branch_summary(g, x, kExh);
            auto tag = classify_point(g, x, kExh);
            CHECK(s.has_infinite_branch == legal.contains(x));
            CHECK(s.infinite_branch_cover.subset_of(reach_omega(g, x)));
            CHECK(s.infinite_branch_cover == (reach_omega(g, x) & legal));
            CHECK(s.all_infinite_branches_dense == tag.member(Level::Trans1).is_certified());
            CHECK(s.exists_infinite_dense_branch == tag.member(Level::Trans2).is_certified());
            CHECK(s.union_of_infinite_dense == tag.member(Level::Trans3).is_certified());
            CHECK((tag.verdict == Verdict::Intransitive) == (s.has_infinite_branch && !s.union_of_infinite_dense));
            if (!legal.contains(x)) {
                REQUIRE(s.finite_branch_count.has_value());
                CHECK(*s.finite_branch_count == count_dead_ends(g, x));
            }
        }
    }
}

TEST_CASE("function graph tests") {
    auto a = function_graph_tests(cycle3());
    CHECK(a.single_valued_partial);
    CHECK(a.single_valued_total);
    auto b = function_graph_tests(loop_and_orphan());
    CHECK(b.single_valued_partial);
    CHECK_FALSE(b.single_valued_total);
    auto cross = FiniteRelation::numbered(3, {{0, 0}, {0, 2}, {1, 1}, {2, 0}, {2, 2}});
    auto c = function_graph_tests(cross);
    CHECK_FALSE(c.single_valued_partial);
    CHECK_FALSE(c.single_valued_total);

    Rng rng(404);
    for (int i = 0; i < 300; ++i) {
        auto g = random_relation(rng, 6);
        auto f = function_graph_tests(g);
        bool all_one = true, all_inf_one = true;
        for (std::size_t x = 0; x < g.size(); ++x) {
            auto bc = branch_counts(g, x);
            all_one = all_one && bc.all == Multiplicity::One;
            all_inf_one = all_inf_one && bc.infinite == Multiplicity::One;
        }
        CHECK(f.single_valued_partial == all_one);
        CHECK(f.single_valued_total == all_inf_one);
    }
}

TEST_CASE("dot export") {
    auto d0 = dot_export(build_tree(cycle3(), 0, 0));
    DotChecker c0(d0);
    CHECK(c0.valid());
    CHECK(c0.nodes == 1);
    CHECK(c0.edges == 0);

    auto d2 = dot_export(build_tree(cycle3(), 0, 2));
    DotChecker c2(d2);
    CHECK(c2.valid());
    CHECK(c2.nodes == 3);
    CHECK(c2.edges == 2);
    CHECK(d2.find("p0_l0") != std::string::npos);
    CHECK(d2 == dot_export(build_tree(cycle3(), 0, 2)));

    CHECK_FALSE(DotChecker("digraph T { a -> ; }").valid());
    CHECK_FALSE(DotChecker("digraph T { a [label=\"x] }").valid());
}

TEST_CASE("dot output of random trees is well formed") {
    Rng rng(405);
    for (int i = 0; i < 100; ++i) {
        auto g = random_relation(rng, 7);
        auto t = build_tree(g, rng() % g.size(), rng() % 6);
        auto dot = dot_export(t);
        DotChecker c(dot);
        CHECK(c.valid());
        CHECK(c.nodes == t.node_count());
        std::size_t links = 0;
        for (const auto& n : t.nodes()) links += n.children.size();
        CHECK(c.edges == links);
    }
}

TEST_CASE("labels are escaped in dot output") {
    auto g = FiniteRelation::labelled({"a\"b", "c"}, {{"a\"b", "c"}, {"c", "c"}});
    DotChecker c(dot_export(build_tree(g, 0, 2)));
    CHECK(c.valid());
}
