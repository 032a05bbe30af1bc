#include "crdyn/gallery.hpp"

#include "crdyn/builders.hpp"
#include "crdyn/classify.hpp"
#include "crdyn/errors.hpp"
#include "crdyn/tree.hpp"

#include <algorithm>
#include <memory>
#include <sstream>

namespace crdyn {

namespace {

using Q = Rational;
Q q(long n, long d = 1) { return make_rational(n, d); }

std::string str(const Q& v) { return to_string(v); }
std::string yes(bool b) { return b ? "true" : "false"; }

Primitive seg(Q x0, Q y0, Q x1, Q y1) { return Primitive::segment({x0, y0}, {x1, y1}); }
Primitive pt(Q x, Q y) { return Primitive::point({x, y}); }

SymClassifyOptions sym_opts(const GalleryParams& p) {
    SymClassifyOptions o;
    o.eps = p.eps;
    o.horizon = p.horizon;
    o.delta = p.delta;
    return o;
}

// Surrogates for transitive points: only their checked prefixes are claimed.
struct Surrogate {
    Q point;
    std::string recipe;
};

Surrogate surrogate(const std::vector<Primitive>& pieces, const char* map, Q eps, std::size_t horizon,
                    std::size_t extra) {
    DensePrefixOptions o;
    o.extra_steps = extra;
    Q t = dense_prefix_point(pieces, eps, horizon, o);
    return {t, std::string(map) + " dense prefix: eps=" + str(eps) + " horizon=" + std::to_string(horizon) +
                   " pinned=" + std::to_string(extra) + " seed=1"};
}

std::vector<Primitive> with(std::vector<Primitive> base, std::initializer_list<Primitive> extra) {
    base.insert(base.end(), extra.begin(), extra.end());
    return base;
}

struct Builder {
    GalleryInstance inst;
    GalleryParams params;

    void param(std::string k, std::string v) { inst.parameters.emplace_back(std::move(k), std::move(v)); }
    void expect(std::string query, std::string expected, std::string citation, std::function<std::string()> f,
                bool horizon_relative = false) {
        inst.expectations.push_back({std::move(query), std::move(expected), std::move(citation), horizon_relative,
                                     std::move(f)});
    }
};

std::shared_ptr<const FiniteRelation> finite_of(Builder& b, FiniteRelation g) {
    b.inst.system = Instance::of(g);
    return std::make_shared<const FiniteRelation>(std::move(g));
}

std::shared_ptr<const SymbolicRelation> symbolic_of(Builder& b, SymbolicRelation r) {
    b.inst.system = Instance::of(r);
    return std::make_shared<const SymbolicRelation>(std::move(r));
}

std::string finite_tag(const FiniteRelation& g, const std::string& label) {
    return to_string(classify_point(g, g.space().require_index(label), DensityPredicate::exhaustive()));
}

std::string trans_set(const FiniteRelation& g, Level l) {
    return format_set(g, members_at(classify_all(g, DensityPredicate::exhaustive()), l));
}

std::string vector_of(const FiniteRelation& g) {
    auto rep = characterization_suite(g);
    std::string s;
    for (bool b : rep.statement) s += b ? 'T' : 'F';
    return s;
}

// ---- finite instances ----

void illegal_pair(Builder& b) {
    b.inst.description = "X = {1,2}, G = {(1,1)}: the point 2 has no successor";
    auto g = finite_of(b, FiniteRelation::labelled({"1", "2"}, {{"1", "1"}}));
    b.expect("illegal(G)", "{2}", "illegal-pair: illegal(G) = {2}, legal(G) = {1}",
             [g] { return format_set(*g, illegal_set(*g)); });
    b.expect("classify(2)", "Illegal / Certified", "illegal-pair: 2 in illegal(G)", [g] { return finite_tag(*g, "2"); });
    b.expect("classify(1)", "Intransitive / Certified", "illegal-pair: R_omega(1) = {1} != X",
             [g] { return finite_tag(*g, "1"); });
    b.expect("height of T(2)", "0", "illegal-pair: 2 illegal iff T(2) has finite height", [g] {
        auto t = build_tree(*g, 1, 3);
        return t.height() ? std::to_string(*t.height()) : std::string("unbounded");
    });
    b.expect("DO-transitive k=1,2,3", "false,false,false", "illegal-pair: no point has a dense reach", [g] {
        auto d = DensityPredicate::exhaustive();
        return yes(do_transitive(*g, 1, d)) + "," + yes(do_transitive(*g, 2, d)) + "," + yes(do_transitive(*g, 3, d));
    });
}

void nontransitive_pair(Builder& b) {
    b.inst.description = "X = {1,2}, G = {(1,2),(2,2)}";
    auto g = finite_of(b, FiniteRelation::labelled({"1", "2"}, {{"1", "2"}, {"2", "2"}}));
    b.expect("trans2(G)", "{1}", "nontransitive-pair: trans2(G) = {1}", [g] { return trans_set(*g, Level::Trans2); });
    b.expect("classify(1)", "Trans1 / Certified", "nontransitive-pair: the only walk from 1 is (1,2,2,...)",
             [g] { return finite_tag(*g, "1"); });
    b.expect("transitive", "false", "nontransitive-pair: (X,G) is not transitive",
             [g] { return yes(system_transitive(*g, false)); });
    b.expect("statements 1..8", "FFFFFFFF", "nontransitive-pair: the pair (2,1) is unreachable",
             [g] { return vector_of(*g); });
}

void fse1(Builder& b) {
    b.inst.description = "3-cycle on {1,2,3}";
    auto g = finite_of(b, FiniteRelation::labelled({"1", "2", "3"}, {{"1", "2"}, {"2", "3"}, {"3", "1"}}));
    b.expect("trans2(G)", "{1,2,3}", "fse1: isolated(X) = trans2(G) = {1,2,3}",
             [g] { return trans_set(*g, Level::Trans2); });
    b.expect("trans1(G)", "{1,2,3}", "fse1: a cycle has a single trajectory per point",
             [g] { return trans_set(*g, Level::Trans1); });
    b.expect("transitive, +transitive", "true,true", "fse1: every ordered pair is joined by a positive walk",
             [g] { return yes(system_transitive(*g, false)) + "," + yes(system_transitive(*g, true)); });
    b.expect("statements 1..8", "TTTTTTTT", "fse1: every ordered pair is joined by a positive walk",
             [g] { return vector_of(*g); });
    b.expect("DO-transitive k=1,2,3", "true,true,true", "fse1: trans2(G) = {1,2,3}", [g] {
        auto d = DensityPredicate::exhaustive();
        return yes(do_transitive(*g, 1, d)) + "," + yes(do_transitive(*g, 2, d)) + "," + yes(do_transitive(*g, 3, d));
    });
}

void dens(Builder& b) {
    b.inst.description = "X = {0,1}, G = {(0,1),(1,1)}";
    auto g = finite_of(b, FiniteRelation::labelled({"0", "1"}, {{"0", "1"}, {"1", "1"}}));
    b.expect("classify(0)", "Trans1 / Certified", "dens: x = 0 in trans1(G)", [g] { return finite_tag(*g, "0"); });
    b.expect("classify(1)", "Intransitive / Certified", "dens: y = 1 not in trans1(G); R_omega(1) = {1}",
             [g] { return finite_tag(*g, "1"); });
}

// Truncation at depth N: 0, 1/2, q_n = 1 - 2^-(n+1) for n = 1..N, the n
// points of A_n inside (q_n, q_{n+1}) for n < N, and 1.
FiniteRelation ex32_relation(std::size_t depth) {
    std::vector<std::string> labels{"0", "1/2"};
    std::vector<std::pair<std::string, std::string>> pairs;
    auto qn = [](std::size_t n) -> Q { return 1 - Q(1) / Q(mpz_class(1) << static_cast<unsigned>(n + 1)); };
    std::vector<std::string> tops{"1/2"};
    for (std::size_t n = 1; n <= depth; ++n) {
        labels.push_back(str(qn(n)));
        tops.push_back(str(qn(n)));
    }
    for (std::size_t n = 1; n < depth; ++n) {
        const Q lo = qn(n), step = (qn(n + 1) - lo) / Q(static_cast<long>(n + 1));
        for (std::size_t k = 1; k <= n; ++k) {
            const std::string a = str(lo + step * Q(static_cast<long>(k)));
            labels.push_back(a);
            pairs.emplace_back(str(lo), a);
        }
    }
    labels.push_back("1");
    tops.push_back("1");
    for (const auto& l : labels) pairs.emplace_back(l, l);
    for (const auto& t : tops) pairs.emplace_back("0", t);
    return FiniteRelation::labelled(labels, pairs);
}

void ex32(Builder& b) {
    const std::size_t depth = b.params.ex32_depth;
    b.inst.description = "ex32 truncated at depth " + std::to_string(depth) + " (points above 1 - 2^-" +
                         std::to_string(depth + 1) + " omitted, except 1)";
    b.param("depth", std::to_string(depth));
    auto g = finite_of(b, ex32_relation(depth));
    b.expect("classify(0)", "Trans3 / Certified (3,2)", "ex32: 0 in trans3(G) \\ trans2(G); R_2(0) = X",
             [g] { return finite_tag(*g, "0"); });
    b.expect("trans3(G)", "{0}", "ex32: trans3(G) = {0}", [g] { return trans_set(*g, Level::Trans3); });
    b.expect("illegal(G)", "{}", "ex32: the diagonal keeps every point legal in the truncation",
             [g] { return format_set(*g, illegal_set(*g)); });
    const std::size_t expected = depth * (depth - 1) / 2 + 3;
    b.expect("minimal dense branch cover of 0 (horizon 8)", std::to_string(expected),
             "ex32: every trajectory from 0 has a finite orbit, so the cover grows with the truncation", [g] {
                 auto r = minimal_dense_branch_cover(*g, 0, DensityPredicate::exhaustive(), 8);
                 return r.size ? std::to_string(*r.size) + (r.certainty.is_certified() ? "" : " (uncertified)")
                               : std::string("unbounded");
             });
    b.expect("branch cover size for depths 2..N strictly increasing", "true",
             "ex32: 0 in trans_(3,omega,omega)(G) in the untruncated space", [depth] {
                 std::size_t prev = 0;
                 for (std::size_t d = 2; d <= depth; ++d) {
                     auto g2 = ex32_relation(d);
                     auto r = minimal_dense_branch_cover(g2, 0, DensityPredicate::exhaustive(), 8);
                     if (!r.size || !r.certainty.is_certified() || *r.size <= prev) return std::string("false");
                     prev = *r.size;
                 }
                 return std::string("true");
             });
}

// ---- symbolic instances ----

Space1D unit() { return Space1D({{q(0), q(1)}}, {}); }

std::string sym_tag(const SymbolicRelation& r, const Q& x, const GalleryParams& p) {
    return to_string(classify_symbolic(r, x, sym_opts(p)));
}

std::string unk(const GalleryParams& p) { return "UnknownAtHorizon(" + std::to_string(p.horizon) + ")"; }

void ex1(Builder& b) {
    b.inst.description = "X = [0,1], G = ([0,1] x {1/2}) u ({1/2} x [0,1])";
    auto r = symbolic_of(b, SymbolicRelation(unit(), {seg(q(0), q(1, 2), q(1), q(1, 2)), seg(q(1, 2), q(0), q(1, 2), q(1))}));
    const GalleryParams p = b.params;
    b.expect("p1(G), p2(G)", "[0,1], [0,1]", "ex1: p1(G) = p2(G) = X", [r] {
        auto [p1, p2] = projections(*r);
        return p1.to_string() + ", " + p2.to_string();
    });
    b.expect("walk search from 1/2 at eps", "found, verified", "ex1: the walk (1/2, q_1, 1/2, q_2, ...) is dense", [r, p] {
        auto w = bounded_walk_search(*r, q(1, 2), p.eps, p.horizon);
        if (!w.found) return std::string("not found");
        return std::string("found, ") + (verify_dense_walk(*r, w.witness, p.eps) ? "verified" : "NOT verified");
    });
    b.expect("constant walk (1/2,1/2,...) dense at 1/8", "false", "ex1: (x,x,x,...) has orbit {1/2}",
             [r] { return yes(eps_dense(r->space(), Region1D::point(q(1, 2)), q(1, 8))); });
    b.expect("classify(1/2)", "Trans2 / Certified", "ex1: 1/2 in trans2(G) \\ trans1(G)",
             [r, p] { return sym_tag(*r, q(1, 2), p); });
}

SymbolicRelation cross_relation(const Space1D& space, std::vector<Primitive> extra = {}) {
    std::vector<Primitive> prims{seg(q(0), q(1), q(1), q(1)), seg(q(0), q(0), q(0), q(1))};
    prims.insert(prims.end(), extra.begin(), extra.end());
    return SymbolicRelation(space, prims);
}

void ex2(Builder& b) {
    b.inst.description = "X = [0,1], G = ([0,1] x {1}) u ({0} x [0,1])";
    auto r = symbolic_of(b, cross_relation(unit()));
    const GalleryParams p = b.params;
    b.expect("G({0})", "[0,1]", "ex2: every y in [0,1] is the second entry of a trajectory from 0",
             [r] { return sym_image(*r, q(0)).to_string(); });
    b.expect("G({3/10})", "{1}", "ex2: orbits from x > 0 are {x,1}", [r] { return sym_image(*r, q(3, 10)).to_string(); });
    b.expect("classify(0)", "Trans3 / Certified (3,1)", "ex2: 0 in trans3(G) \\ trans2(G)",
             [r, p] { return sym_tag(*r, q(0), p); });
    b.expect("classify(3/10)", "Intransitive / Certified", "ex2: the orbit {3/10, 1} is not dense",
             [r, p] { return sym_tag(*r, q(3, 10), p); });
}

void ex3(Builder& b) {
    b.inst.description = "X = [0,1], G = ([0,1] x {1}) u ({0} x [0,1])";
    auto r = symbolic_of(b, cross_relation(unit()));
    b.expect("R_1(0)", "[0,1]", "ex3a: 0 in trans_(3,1)(G)", [r] { return sym_reach(*r, Region1D::point(q(0)), 1).region.to_string(); });
    b.expect("R_omega(y) for y = k/32, k = 1..32", "{y,1}, stabilized, not 1/8-dense: 32/32",
             "ex3: for y in (0,1], y not in trans3(G)", [r] {
                 std::size_t ok = 0;
                 for (long k = 1; k <= 32; ++k) {
                     const Q y = q(k, 32);
                     auto s = sym_reach(*r, Region1D::point(y), 16);
                     if (s.stabilized && s.region == Region1D::points({y, q(1)}) && !eps_dense(r->space(), s.region, q(1, 8)))
                         ++ok;
                 }
                 return "{y,1}, stabilized, not 1/8-dense: " + std::to_string(ok) + "/32";
             });
}

void ex4(Builder& b) {
    const std::size_t level = b.params.staircase_level;
    b.inst.description = "X = [0,1], G = ({1/2} x C_n) u graph(f_n), level-" + std::to_string(level) +
                         " approximations of the Cantor set and Cantor function";
    b.param("staircase_level", std::to_string(level));
    std::vector<Primitive> prims = cantor_staircase(level);
    for (const auto& iv : cantor_intervals(level)) prims.push_back(seg(q(1, 2), iv.lo, q(1, 2), iv.hi));
    auto r = symbolic_of(b, SymbolicRelation(unit(), prims));
    const GalleryParams p = b.params;
    b.expect("first n with R_n(1/2) eps-dense", "2", "ex4: [0,1] = union of the orbits of (1/2, c_t, t, ...)", [r, p] {
        std::string out = "none";
        for_each_reach_step(*r, Region1D::point(q(1, 2)), 64, [&](std::size_t n, const Region1D& c) {
            if (n >= 1 && eps_dense(r->space(), c, p.eps)) {
                out = std::to_string(n);
                return false;
            }
            return true;
        });
        return out;
    });
    b.expect("1/2 in trans3 at eps", "Certified", "ex4: x = 1/2 in trans3(G)",
             [r, p] { return to_string(classify_symbolic(*r, q(1, 2), sym_opts(p)).member(Level::Trans3)); });
    // Walks re-enter 1/2 through the flat over [1/3,2/3] (e.g. 1/4 -> 1/3 -> 1/2
    // in the true Cantor function too), so a single walk can branch again.
    b.param("choice_resolution", str(p.eps / 4));
    b.expect("walk search from 1/2 at eps, choices on a grid of eps/4", "found, verified",
             "ex4: x = 1/2 claimed outside trans2(G); computed: the walk returns to 1/2 and re-branches", [r, p] {
                 WalkSearchOptions o;
                 o.resolution = p.eps / 4;
                 auto w = bounded_walk_search(*r, q(1, 2), p.eps, p.horizon, o);
                 if (!w.found) return std::string("not found");
                 return std::string("found, ") + (verify_dense_walk(*r, w.witness, p.eps) ? "verified" : "NOT verified");
             });
}

Space1D unit_plus(std::vector<Q> iso) { return Space1D({{q(0), q(1)}}, std::move(iso)); }

void fse2(Builder& b) {
    auto x = surrogate(tent_map_graph(), "tent", q(1, 64), 120, 300);
    b.inst.description = "X = [0,1] u {2,3}, G = graph(tent) u {(2,3),(3,x)}";
    b.param("x", str(x.point));
    b.param("x_recipe", x.recipe);
    auto r = symbolic_of(b, SymbolicRelation(unit_plus({q(2), q(3)}),
                                             with(tent_map_graph(), {pt(q(2), q(3)), pt(q(3), x.point)})));
    const GalleryParams p = b.params;
    b.expect("classify(2)", "Trans1 / Certified",
             "fse2: trans2(G) = {2}; the forced orbit of 2 is the only trajectory and it is eps-dense",
             [r, p] { return sym_tag(*r, q(2), p); });
    b.expect("trans2 among 2, 3, 0, 1/2, 1, x", "{2}", "fse2: trans2(G) = {2}", [r, p, xv = x.point] {
        std::string s;
        for (const Q& t : {q(2), q(3), q(0), q(1, 2), q(1), xv}) {
            auto tag = classify_symbolic(*r, t, sym_opts(p));
            if (tag.member(Level::Trans2).is_certified()) s += (s.empty() ? "" : ",") + str(t);
            else if (!tag.member(Level::Trans2).is_refuted()) s += (s.empty() ? "?" : ",?") + str(t);
        }
        return "{" + s + "}";
    });
}

void fse3(Builder& b) {
    auto x = surrogate(tent_map_graph(), "tent", q(1, 64), 120, 300);
    b.inst.description = "X = [0,1] u {2,3}, G = graph(tent) u {(2,3),(3,2),(3,x)}";
    b.param("x", str(x.point));
    b.param("x_recipe", x.recipe);
    auto r = symbolic_of(b, SymbolicRelation(unit_plus({q(2), q(3)}), with(tent_map_graph(), {pt(q(2), q(3)), pt(q(3), q(2)),
                                                                                           pt(q(3), x.point)})));
    const GalleryParams p = b.params;
    b.expect("classify(2)", "Trans2 / Certified", "fse3: trans2(G) = {2,3}, trans1(G) = {}",
             [r, p] { return sym_tag(*r, q(2), p); });
    b.expect("classify(3)", "Trans2 / Certified", "fse3: trans2(G) = {2,3}, trans1(G) = {}",
             [r, p] { return sym_tag(*r, q(3), p); });
    for (const Q& t : {q(0), q(1, 2), q(1)})
        b.expect("classify(" + str(t) + ")", "Intransitive / Certified", "fse3: trans2(G) = {2,3}",
                 [r, p, t] { return sym_tag(*r, t, p); });
}

void ff(Builder& b) {
    const Q y = q(1, 3);
    b.inst.description = "X = [0,1] u {2}, G = ([0,1] x {1}) u ({0} x [0,1]) u {(0,2),(2,y)}";
    b.param("y", str(y));
    auto r = symbolic_of(b, cross_relation(unit_plus({q(2)}), {pt(q(0), q(2)), pt(q(2), y)}));
    const GalleryParams p = b.params;
    b.expect("R_omega(2)", "{1/3} u {1} u {2}", "ff: U(2) = O(2) = {2,y,1}", [r] {
        auto s = sym_reach(*r, Region1D::point(q(2)), 16);
        return s.region.to_string() + (s.stabilized ? "" : " (not stabilized)");
    });
    b.expect("classify(0)", "Trans3 / Certified (3,1)", "ff: trans3(G) = {0}", [r, p] { return sym_tag(*r, q(0), p); });
    for (const Q& t : {q(2), y, q(1, 2), q(1)})
        b.expect("classify(" + str(t) + ")", "Intransitive / Certified", "ff: trans3(G) = {0}",
                 [r, p, t] { return sym_tag(*r, t, p); });
}

void tistile0(Builder& b) {
    auto t0 = surrogate(tent_map_graph(), "tent", q(1, 64), 120, 300);
    b.inst.description = "X = [0,1] u {2}, G = graph(tent) u {(2,t0),(t0,2)}";
    b.param("t0", str(t0.point));
    b.param("t0_recipe", t0.recipe);
    auto r = symbolic_of(b, SymbolicRelation(unit_plus({q(2)}), with(tent_map_graph(), {pt(q(2), t0.point), pt(t0.point, q(2))})));
    const GalleryParams p = b.params;
    b.expect("classify(t0)", "Trans2 / Certified", "tistile0: 2 isolated, (2,t0) in G, t0 in trans2(G)",
             [r, p, t = t0.point] { return sym_tag(*r, t, p); });
    b.expect("(2,t0) in G", "true", "tistile0: (x,y) in G with x isolated", [r, t = t0.point] { return yes(r->contains(q(2), t)); });
}

void tistile(Builder& b) {
    auto x = surrogate(tent_map_graph(), "tent", q(1, 64), 120, 300);
    b.inst.description = "X = [0,1] u {2}, G = graph(tent) u {(2,x)}";
    b.param("x", str(x.point));
    b.param("x_recipe", x.recipe);
    auto r = symbolic_of(b, SymbolicRelation(unit_plus({q(2)}), with(tent_map_graph(), {pt(q(2), x.point)})));
    const GalleryParams p = b.params;
    b.expect("p2(G) = X", "false", "tistile: p2(G) != X", [r] { return yes(projections(*r).second == r->space().region()); });
    b.expect("classify(2)", "Trans1 / Certified", "tistile: trans1(G) = trans2(G) = trans3(G) = {2}",
             [r, p] { return sym_tag(*r, q(2), p); });
    for (const Q& t : {q(0), q(1, 2), q(1)})
        b.expect("classify(" + str(t) + ")", "Intransitive / Certified", "tistile: trans3(G) = {2}",
                 [r, p, t] { return sym_tag(*r, t, p); });
}

std::string grid_summary(const GridCheck& g) {
    std::size_t worst = 0;
    for (const auto& pr : g.pairs)
        if (pr.n) worst = std::max(worst, *pr.n);
    return std::to_string(g.pairs.size() - g.failures()) + "/" + std::to_string(g.pairs.size()) +
           " pairs certified, max n " + std::to_string(worst);
}

std::string certified_all(const GridCheck& g) {
    return g.all_certified() ? "all certified" : grid_summary(g) + " (" + std::to_string(g.failures()) + " open)";
}

void exxi(Builder& b) {
    auto x = surrogate(tent_map_graph(), "tent", q(1, 32), 60, 300);
    b.inst.description = "X = [0,1] u {2}, G = graph(tent) u {(2,x),(0,2)}";
    b.param("x", str(x.point));
    b.param("x_recipe", x.recipe);
    b.param("grid_delta", "1/32");
    b.param("grid_max_n", "64");
    auto r = symbolic_of(b, SymbolicRelation(unit_plus({q(2)}), with(tent_map_graph(), {pt(q(2), x.point), pt(q(0), q(2))})));
    b.expect("open grid delta=1/32: some 0 <= n <= 64 with G^n(U) meeting V", "all certified",
             "exxi: statement 3 holds", [r] { return certified_all(check_open_grid(*r, q(1, 32), 64, false)); });
    b.expect("2 in G^k({2}) for some 1 <= k <= 300", "false", "exxi: statement 4 fails at U = {2}", [r] {
        bool hit = false;
        Region1D cur = Region1D::point(q(2));
        for (int k = 1; k <= 300 && !hit; ++k) {
            cur = sym_image(*r, cur);
            hit = cur.contains(q(2));
        }
        return yes(hit);
    }, true);
}

std::vector<Primitive> halves() {
    auto v = half_tent_left();
    auto w = half_tent_right();
    v.insert(v.end(), w.begin(), w.end());
    return v;
}

void exhura(Builder& b) {
    auto x1 = surrogate(half_tent_left(), "f1", q(1, 64), 48, 300);
    auto x2 = surrogate(half_tent_right(), "f2", q(1, 64), 48, 300);
    b.inst.description = "X = [0,1], G = graph(f1) u graph(f2) u {(0,x2),(1,x1)}";
    b.param("x1", str(x1.point));
    b.param("x1_recipe", x1.recipe);
    b.param("x2", str(x2.point));
    b.param("x2_recipe", x2.recipe);
    auto r = symbolic_of(b, SymbolicRelation(unit(), with(halves(), {pt(q(0), x2.point), pt(q(1), x1.point)})));
    b.expect("open grid delta=1/32: some 0 <= n <= 64 with G^n(U) meeting V", "all certified",
             "exhura: (X,G) is transitive", [r] { return certified_all(check_open_grid(*r, q(1, 32), 64, false)); });
    b.expect("dense walk (eps=1/32, horizon 300) from k/32, k = 0..32", "none found",
             "exhura: trans2(G) = {} (not machine-proved; bounded search only)", [r] {
                 std::size_t found = 0;
                 for (long k = 0; k <= 32; ++k)
                     if (bounded_walk_search(*r, q(k, 32), q(1, 32), 300).found) ++found;
                 return found ? std::to_string(found) + " found" : std::string("none found");
             }, true);
}

void ex31(Builder& b) {
    auto x1 = surrogate(half_tent_left(), "f1", q(1, 256), 512, 64);
    auto x2 = surrogate(half_tent_right(), "f2", q(1, 256), 512, 64);
    b.inst.description = "X = [0,1], G = graph(f1) u graph(f2) u {(0,x1),(0,x2)}";
    b.param("x1", str(x1.point));
    b.param("x1_recipe", x1.recipe);
    b.param("x2", str(x2.point));
    b.param("x2_recipe", x2.recipe);
    auto r = symbolic_of(b, SymbolicRelation(unit(), with(halves(), {pt(q(0), x1.point), pt(q(0), x2.point)})));
    const GalleryParams p = b.params;
    b.expect("R_n(0) strictly growing for n = 0..10", "true", "ex31: R_n(0) never reaches a dense set at finite n", [r] {
        Region1D prev;
        bool grow = true;
        auto s = for_each_reach_step(*r, Region1D::point(q(0)), 10, [&](std::size_t n, const Region1D& c) {
            if (n > 0 && (c == prev || !prev.subset_of(c))) grow = false;
            prev = c;
            return true;
        });
        return yes(grow && !s.stabilized && s.steps == 10);
    });
    b.expect("first n with R_n(0) eps-dense, eps = 2^-3..2^-8", "strictly increasing",
             "ex31a: 0 in trans_(3,omega)(G); grows as eps shrinks", [r] {
                 std::vector<std::size_t> grades;
                 for (unsigned k = 3; k <= 8; ++k) {
                     const Q eps = Q(1) / Q(mpz_class(1) << k);
                     std::optional<std::size_t> g;
                     for_each_reach_step(*r, Region1D::point(q(0)), 2048, [&](std::size_t n, const Region1D& c) {
                         if (n >= 1 && eps_dense(r->space(), c, eps)) g = n;
                         return !g;
                     });
                     grades.push_back(g ? *g : 0);
                 }
                 bool inc = grades.front() > 0;
                 std::string s;
                 for (std::size_t i = 0; i < grades.size(); ++i) {
                     if (i && grades[i] <= grades[i - 1]) inc = false;
                     s += (i ? "," : "") + std::to_string(grades[i]);
                 }
                 return inc ? std::string("strictly increasing") : "not increasing: " + s;
             });
    b.expect("minimal dense branch cover of 0 (eps=1/32, horizon 300)", "2, witnesses through x1 and x2",
             "ex31aa: 0 in trans_(3,omega,2)(G)", [r, x1 = x1.point, x2 = x2.point] {
                 auto reach = sym_reach(*r, Region1D::point(q(0)), 4096);
                 if (!reach.stabilized) return std::string("reach did not stabilize");
                 auto pr = restrict_to_points(*r, reach.region, q(1, 32));
                 auto res = minimal_dense_branch_cover(pr.relation, pr.relation.space().require_index("0"), pr.predicate, 300);
                 if (!res.size) return std::string("unbounded");
                 bool left = false, right = false;
                 for (const auto& w : res.witnesses)
                     for (auto i : w.points()) {
                         left = left || pr.points[i] == x1;
                         right = right || pr.points[i] == x2;
                     }
                 return std::to_string(*res.size) + (res.certainty.is_certified() ? "" : " (uncertified)") +
                        (left && right ? ", witnesses through x1 and x2" : ", witnesses miss x1 or x2");
             });
    b.expect("classify(0)", "Trans3, trans2 " + unk(p), "ex31: 0 in trans3(G) \\ trans2(G) (trans2 left open at horizon)",
             [r, p] {
                 auto t = classify_symbolic(*r, q(0), sym_opts(p));
                 return to_string(t.verdict) + ", trans2 " + to_string(t.member(Level::Trans2));
             }, true);
}

struct Entry {
    const char* name;
    void (*make)(Builder&);
};

const std::vector<Entry>& registry() {
    static const std::vector<Entry> entries = {
        {"dens", dens},         {"ex1", ex1},         {"ex2", ex2},           {"ex3", ex3},
        {"ex31", ex31},         {"ex32", ex32},       {"ex4", ex4},           {"exhura", exhura},
        {"exxi", exxi},         {"ff", ff},           {"fse1", fse1},         {"fse2", fse2},
        {"fse3", fse3},         {"illegal-pair", illegal_pair},               {"nontransitive-pair", nontransitive_pair},
        {"tistile", tistile},   {"tistile0", tistile0},
    };
    return entries;
}

} // namespace

std::vector<std::string> gallery_names() {
    std::vector<std::string> out;
    for (const auto& e : registry()) out.emplace_back(e.name);
    std::sort(out.begin(), out.end());
    return out;
}

GalleryInstance build_gallery_instance(const std::string& name, const GalleryParams& params) {
    for (const auto& e : registry()) {
        if (name != e.name) continue;
        Builder b;
        b.inst.name = name;
        b.params = params;
        e.make(b);
        return std::move(b.inst);
    }
    throw PreconditionError("unknown gallery instance '" + name + "'");
}

Observation evaluate(const Expectation& e) {
    Observation o;
    try {
        o.observed = e.observe();
    } catch (const std::exception& ex) {
        o.observed = std::string("error: ") + ex.what();
        return o;
    }
    if (o.observed == e.expected) o.status = e.horizon_relative ? RowStatus::PassUnknown : RowStatus::Pass;
    return o;
}

std::size_t GalleryReport::count(RowStatus s) const {
    return static_cast<std::size_t>(std::count_if(rows.begin(), rows.end(), [&](const GalleryRow& r) { return r.outcome.status == s; }));
}

GalleryReport run_gallery(const std::string& filter, const GalleryParams& params) {
    GalleryReport rep;
    for (const auto& name : gallery_names()) {
        if (name.find(filter) == std::string::npos) continue;
        auto inst = build_gallery_instance(name, params);
        for (const auto& e : inst.expectations)
            rep.rows.push_back({name, e.query, e.expected, e.citation, evaluate(e)});
    }
    return rep;
}

std::string params_header(const GalleryParams& p) {
    return "defaults: eps=" + str(p.eps) + " horizon=" + std::to_string(p.horizon) + " delta=" + str(p.delta) +
           " ex32_depth=" + std::to_string(p.ex32_depth) + " staircase_level=" + std::to_string(p.staircase_level);
}

std::string format_report(const GalleryReport& report, const GalleryParams& params) {
    std::ostringstream os;
    os << params_header(params) << "\n";
    for (const auto& r : report.rows) {
        const char* tag = r.outcome.status == RowStatus::Pass ? "PASS" : r.outcome.status == RowStatus::PassUnknown ? "PASS*" : "FAIL";
        os << "[" << tag << "] " << r.instance << ": " << r.query << " -> " << r.outcome.observed;
        if (r.outcome.status == RowStatus::Fail) os << " (expected " << r.expected << ")";
        os << "\n        " << r.citation << "\n";
    }
    os << report.count(RowStatus::Pass) + report.count(RowStatus::PassUnknown) << " passed ("
       << report.count(RowStatus::PassUnknown) << " unknown at horizon, as expected), " << report.count(RowStatus::Fail)
       << " failed\n";
    return os.str();
}

} // namespace crdyn
