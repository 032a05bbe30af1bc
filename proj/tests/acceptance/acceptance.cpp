// Acceptance run: one PASS/FAIL line per criterion, each under a pinned time limit.
#include "crdyn/builders.hpp"
#include "crdyn/classify.hpp"
#include "crdyn/gallery.hpp"
#include "crdyn/instance_io.hpp"
#include "crdyn/symbolic.hpp"
#include "crdyn/tree.hpp"
#include "support/random_relation.hpp"

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include <unistd.h>

#ifndef CRDYN_CLI_PATH
#error "CRDYN_CLI_PATH must point at the crdyn executable"
#endif

using namespace crdyn;
using crdyn::testing::random_relation;
using crdyn::testing::Rng;
namespace fs = std::filesystem;

namespace {
using Q = Rational;
Q q(long a, long b = 1) { return make_rational(a, b); }
const auto kExh = DensityPredicate::exhaustive();

// Collects failure notes for one criterion.
struct Check {
    std::vector<std::string> notes;
    void operator()(bool ok, const std::string& what) {
        if (!ok && notes.size() < 5) notes.push_back(what);
        if (!ok) ++failures;
        ++checks;
    }
    std::size_t failures = 0, checks = 0;
};

int g_failed = 0;

void criterion(int id, const char* title, double limit_s, const std::function<void(Check&)>& body) {
    Check c;
    const auto t0 = std::chrono::steady_clock::now();
    try {
        body(c);
    } catch (const std::exception& e) {
        c(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const bool in_time = secs < limit_s;
    const bool ok = c.failures == 0 && in_time;
    if (!ok) ++g_failed;
    std::printf("[%s] %2d %s (%zu checks, %.2fs, limit %.0fs)\n", ok ? "PASS" : "FAIL", id, title, c.checks, secs,
                limit_s);
    if (!in_time) std::printf("       time limit exceeded\n");
    if (c.failures) std::printf("       %zu violation(s)\n", c.failures);
    for (const auto& n : c.notes) std::printf("       %s\n", n.c_str());
    std::fflush(stdout);
}

FiniteRelation named(const std::string& name) { return *build_gallery_instance(name).system.finite; }
SymbolicRelation symbolic(const std::string& name) { return *build_gallery_instance(name).system.symbolic; }

std::size_t idx(const FiniteRelation& g, const std::string& label) { return g.space().require_index(label); }

PointSet by_labels(const FiniteRelation& g, std::initializer_list<const char*> labels) {
    PointSet s(g.size());
    for (auto l : labels) s.insert(idx(g, l));
    return s;
}

std::vector<Primitive> halves() {
    auto v = half_tent_left();
    auto w = half_tent_right();
    v.insert(v.end(), w.begin(), w.end());
    return v;
}

// Runs the CLI with stdout captured into `out`; returns the exit status.
int run_cli(const std::string& args, const fs::path& out) {
    const std::string cmd = std::string("\"") + CRDYN_CLI_PATH + "\" " + args + " > \"" + out.string() + "\" 2>&1";
    const int rc = std::system(cmd.c_str());
#ifdef WEXITSTATUS
    return rc == -1 ? -1 : WEXITSTATUS(rc);
#else
    return rc;
#endif
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

bool positive_path(const FiniteRelation& g, std::size_t u, std::size_t v) {
    for (std::size_t n = 1; n <= g.size(); ++n)
        if (image(g, g.single(u), n).contains(v)) return true;
    return false;
}
}

int main() {
    std::cout << std::unitbuf;

    criterion(1, "finite examples reproduced exactly", 1, [](Check& c) {
        auto ip = named("illegal-pair");
        c(illegal_set(ip) == by_labels(ip, {"2"}), "illegal({1,2},{(1,1)}) != {2}");
        auto f = named("fse1");
        c(members_at(classify_all(f, kExh), Level::Trans2) == f.all(), "fse1 trans2 != {1,2,3}");
        auto d = named("dens");
        for (const auto& [label, v] : {std::pair<const char*, Verdict>{"0", Verdict::Trans1}, {"1", Verdict::Intransitive}}) {
            auto t = classify_point(d, idx(d, label), kExh);
            c(t.verdict == v && t.certainty.is_certified(), std::string("dens point ") + label + ": " + to_string(t));
            c(oracle_classify(d, idx(d, label), kExh) == t, std::string("dens oracle disagrees at ") + label);
        }
        auto n = named("nontransitive-pair");
        c(members_at(classify_all(n, kExh), Level::Trans2) == by_labels(n, {"1"}), "final example trans2 != {1}");
        c(!system_transitive(n, false), "final example reported transitive");
    });

    criterion(2, "classifier agrees with the oracle on 500 random relations", 120, [](Check& c) {
        Rng rng(20001);
        for (int i = 0; i < 500; ++i) {
            auto g = random_relation(rng, 7);
            for (std::size_t x = 0; x < g.size(); ++x) {
                auto a = classify_point(g, x, kExh), b = oracle_classify(g, x, kExh);
                c(a == b, "relation " + std::to_string(i) + " point " + std::to_string(x) + ": " + to_string(a) +
                              " vs oracle " + to_string(b));
            }
        }
    });

    criterion(3, "structural properties on 500 random relations", 300, [](Check& c) {
        Rng rng(30001);
        for (int i = 0; i < 500; ++i) {
            auto g = random_relation(rng, 7);
            const std::string tag = "relation " + std::to_string(i) + ": ";
            const std::size_t n = g.size();
            auto tags = classify_all(g, kExh);
            auto legal = legal_set(g);
            for (std::size_t x = 0; x < n; ++x) {
                bool dies = false;
                for (std::size_t k = 0; k <= n; ++k) dies = dies || image(g, g.single(x), k).empty();
                c(illegal_set(g).contains(x) == dies && omega_preimage(g).contains(x) == !dies &&
                      legal.contains(x) == crdyn::testing::reaches_cycle(g, x),
                  tag + "illegality triple");
                c(tags[x].grade.kind != ReachGrade::Kind::Omega, tag + "omega grade on a finite space");
            }
            auto t1 = members_at(tags, Level::Trans1), t2 = members_at(tags, Level::Trans2),
                 t3 = members_at(tags, Level::Trans3);
            c(t1.subset_of(t2) && t2.subset_of(t3), tag + "trans chain");
            PointSet intrans(n);
            for (std::size_t x = 0; x < n; ++x)
                if (tags[x].verdict == Verdict::Intransitive) intrans.insert(x);
            c(!t3.intersects(intrans) && (t3 | intrans) == legal, tag + "legal partition");
            for (auto [x, y] : g.edges())
                if (intrans.contains(x) && legal.contains(y)) c(intrans.contains(y), tag + "intransitive successor");
            // every point of sampled legal walks from intransitive points
            intrans.for_each([&](std::size_t x) {
                for (int s = 0; s < 3; ++s) {
                    std::size_t v = x;
                    for (int step = 0; step < 16; ++step) {
                        std::vector<std::size_t> next;
                        for (auto w : g.successors(v))
                            if (legal.contains(w)) next.push_back(w);
                        v = next[rng() % next.size()];
                        c(intrans.contains(v), tag + "intransitive walk");
                    }
                }
            });
            auto p1 = projection_check(g).first;
            for (int k = 1; k <= 3; ++k)
                if (do_transitive(g, k, kExh)) c(p1.is_full(), tag + "DO-transitive without p1 = X");
            auto r = characterization_suite(g);
            c(r.odd_group_agrees() && r.even_group_agrees() && r.consistent(), tag + "characterization groups");
            const bool tr = system_transitive(g, false), tp = system_transitive(g, true);
            c(tr == system_transitive(inverse_relation(g), false), tag + "inverse transitivity");
            c(!tp || tr, tag + "+transitive without transitive");
            bool pairs = true, pairs_plus = true;
            for (std::size_t u = 0; u < n; ++u)
                for (std::size_t v = 0; v < n; ++v) {
                    pairs_plus = pairs_plus && positive_path(g, u, v);
                    if (u != v) pairs = pairs && positive_path(g, u, v);
                }
            c(tr == pairs && tp == pairs_plus, tag + "transitivity against pairwise paths");
        }
    });

    criterion(4, "symbolic regions are exact", 10, [](Check& c) {
        auto ex3 = symbolic("ex3");
        c(sym_reach(ex3, Region1D::point(q(0)), 1).region == Region1D::interval(q(0), q(1)), "ex3 R_1(0) != [0,1]");
        auto ff = symbolic("ff");
        auto s = sym_reach(ff, Region1D::point(q(2)), 16);
        c(s.stabilized && s.region == Region1D::points({q(2), q(1, 3), q(1)}), "ff R_omega(2) = " + s.region.to_string());
        auto ex1 = symbolic("ex1");
        auto [p1, p2] = projections(ex1);
        c(p1 == ex1.space().region() && p2 == ex1.space().region(), "ex1 projections");
        auto ti = symbolic("tistile");
        c(!(projections(ti).second == ti.space().region()), "tistile p2 = X");
    });

    criterion(5, "ex1 separates trans2 from trans1 at eps = 1/64", 30, [](Check& c) {
        auto ex1 = symbolic("ex1");
        auto w = bounded_walk_search(ex1, q(1, 2), q(1, 64), 200);
        c(w.found, "no dense walk found from 1/2");
        if (w.found) {
            c(w.witness.size() <= 201, "witness longer than the horizon");
            c(verify_dense_walk(ex1, w.witness, q(1, 64)), "witness does not verify");
        }
        for (const Q& eps : {q(1, 5), q(1, 8), q(1, 64), q(249, 1000)})
            c(!eps_dense(ex1.space(), Region1D::point(q(1, 2)), eps), "constant walk dense at " + to_string(eps));
    });

    criterion(6, "ex2/ex3: trans3 is {0}", 10, [](Check& c) {
        auto r = symbolic("ex3");
        for (long k = 1; k <= 32; ++k) {
            const Q y = q(k, 32);
            auto s = sym_reach(r, Region1D::point(y), 16);
            c(s.stabilized && s.region == Region1D::points({y, q(1)}), "R_omega(" + to_string(y) + ") = " + s.region.to_string());
            c(!eps_dense(r.space(), s.region, q(1, 8)), "R_omega(" + to_string(y) + ") is 1/8-dense");
        }
        c(sym_reach(r, Region1D::point(q(0)), 1).region == r.space().region(), "R_1(0) != X");
    });

    criterion(7, "ex31: grades grow as eps shrinks; branch cover of size 2", 120, [](Check& c) {
        auto inst = build_gallery_instance("ex31");
        const auto& r = *inst.system.symbolic;
        std::vector<std::size_t> grades;
        for (unsigned k = 3; k <= 8; ++k) {
            const Q eps = Q(1) / Q(mpz_class(1) << k);
            std::optional<std::size_t> first;
            for_each_reach_step(r, Region1D::point(q(0)), 4096, [&](std::size_t n, const Region1D& reg) {
                if (eps_dense(r.space(), reg, eps)) first = n;
                return !first;
            });
            c(first.has_value(), "no dense reach at eps 2^-" + std::to_string(k));
            grades.push_back(first.value_or(0));
        }
        std::string seq;
        for (std::size_t i = 0; i < grades.size(); ++i) seq += (i ? "," : "") + std::to_string(grades[i]);
        for (std::size_t i = 1; i < grades.size(); ++i) c(grades[i] > grades[i - 1], "grades " + seq);
        std::printf("       grades for eps = 2^-3..2^-8: %s\n", seq.c_str());

        Q x1, x2;
        for (const auto& [k, v] : inst.parameters) {
            if (k == "x1") x1 = parse_rational(v);
            if (k == "x2") x2 = parse_rational(v);
        }
        auto reach = sym_reach(r, Region1D::point(q(0)), 4096);
        c(reach.stabilized && reach.region.is_finite(), "reach of 0 is not a finite invariant set");
        auto pr = restrict_to_points(r, reach.region, q(1, 32));
        auto res = minimal_dense_branch_cover(pr.relation, pr.relation.space().require_index("0"), pr.predicate, 300);
        c(res.size.has_value() && *res.size == 2, "cover size is not 2");
        c(res.certainty.is_certified(), "cover size not certified minimal");
        bool left = false, right = false;
        PointSet joint(pr.relation.size());
        for (const auto& w : res.witnesses) {
            c(w.length() <= 300, "witness beyond the horizon");
            joint |= w.orbit(pr.relation.size());
            for (auto i : w.points()) {
                left = left || pr.points[i] == x1;
                right = right || pr.points[i] == x2;
            }
        }
        c(left && right, "witnesses do not pass through both half-tent points");
        c(pr.predicate.dense(joint), "witness orbits are not 1/32-dense");
    });

    criterion(8, "exhura: grid transitivity certified, no dense walk within horizon 300", 300, [](Check& c) {
        DensePrefixOptions o;
        o.extra_steps = 300;
        const Q x1 = dense_prefix_point(half_tent_left(), q(1, 32), 48, o);
        const Q x2 = dense_prefix_point(half_tent_right(), q(1, 32), 48, o);
        auto prims = halves();
        prims.push_back(Primitive::point({q(0), x2}));
        prims.push_back(Primitive::point({q(1), x1}));
        SymbolicRelation r(Space1D({{q(0), q(1)}}, {}), prims);
        auto grid = check_open_grid(r, q(1, 32), 64, false);
        c(grid.all_certified(), std::to_string(grid.failures()) + " grid pairs uncertified");
        std::size_t found = 0;
        for (long k = 0; k <= 32; ++k)
            if (bounded_walk_search(r, q(k, 32), q(1, 32), 300).found) ++found;
        c(found == 0, std::to_string(found) + " dense walks found");
        std::printf("       33 start points: trans2 UnknownAtHorizon(300), %zu witnesses\n", found);
    });

    criterion(9, "exxi: statement 3 holds on the grid, statement 4 fails at {2}", 120, [](Check& c) {
        auto r = symbolic("exxi");
        c(check_open_grid(r, q(1, 32), 64, false).all_certified(), "grid pairs uncertified");
        Region1D cur = Region1D::point(q(2));
        bool back = false;
        for (int k = 1; k <= 300 && !back; ++k) {
            cur = sym_image(r, cur);
            back = cur.contains(q(2));
            c(cur.subset_of(Region1D::interval(q(0), q(1))), "orbit of {2} leaves [0,1]");
        }
        c(!back, "2 returns to itself within 300 steps");
    });

    criterion(10, "tree levels, branch summaries, heights", 60, [](Check& c) {
        Rng rng(100001);
        for (int i = 0; i < 200; ++i) {
            auto g = random_relation(rng, 7);
            const std::size_t x = rng() % g.size(), depth = rng() % 6;
            auto t = build_tree(g, x, depth);
            for (std::size_t n = 0; n <= depth; ++n) c(t.cumulative(n) == reach(g, x, n), "cumulative level != reach");
            c(t.height().has_value() == !legal_set(g).contains(x), "height finite iff illegal");
        }
        for (int i = 0; i < 500; ++i) {
            auto g = random_relation(rng, 7);
            const std::size_t x = rng() % g.size();
            auto s = branch_summary(g, x, kExh);
            auto t = classify_point(g, x, kExh);
            c(s.has_infinite_branch == (t.verdict != Verdict::Illegal) &&
                  s.all_infinite_branches_dense == t.member(Level::Trans1).is_certified() &&
                  s.exists_infinite_dense_branch == t.member(Level::Trans2).is_certified() &&
                  s.union_of_infinite_dense == t.member(Level::Trans3).is_certified() &&
                  (t.verdict == Verdict::Intransitive) == (s.has_infinite_branch && !s.union_of_infinite_dense),
              "branch summary disagrees with " + to_string(t));
        }
    });

    criterion(11, "Mahavier counts", 30, [](Check& c) {
        Rng rng(110001);
        for (int i = 0; i < 100; ++i) {
            auto g = random_relation(rng, 4);
            const std::size_t m = 1 + rng() % 5;
            c(mahavier_count(g, m) == mahavier_enumerate(g, m, SIZE_MAX).size(), "count != enumeration");
        }
        auto full = FiniteRelation::numbered(2, {{0, 0}, {0, 1}, {1, 0}, {1, 1}});
        for (std::size_t m = 1; m <= 64; ++m) c(mahavier_count(full, m) == BigInt(1) << (m + 1), "full shift count");
    });

    criterion(12, "CLI: round-trip, gallery run-all, stable DOT", 120, [](Check& c) {
        const fs::path dir = fs::temp_directory_path() / ("crdyn_acceptance_" + std::to_string(::getpid()));
        fs::create_directories(dir);
        for (const auto& name : gallery_names()) {
            const fs::path file = dir / (name + ".json");
            c(run_cli("gallery export " + name, file) == 0, "export " + name + " failed");
            const std::string text = slurp(file);
            c(serialize_instance(parse_instance(text)) == text, "round-trip changed " + name);
            c(text == serialize_instance(build_gallery_instance(name).system), "export differs from the built " + name);
        }
        const fs::path report = dir / "run-all.txt";
        const int rc = run_cli("gallery run-all", report);
        const std::string out = slurp(report);
        c(rc == 0, "gallery run-all exited " + std::to_string(rc));
        c(out.find("[FAIL]") == std::string::npos && out.find(" 0 failed") != std::string::npos, "gallery rows failed");
        for (const auto& [name, point] : {std::pair<const char*, const char*>{"fse1", "1"}, {"ex32", "0"}, {"dens", "0"}}) {
            const fs::path in = dir / (std::string(name) + ".json");
            const fs::path a = dir / "a.dot", b = dir / "b.dot", log = dir / "tree.txt";
            const std::string args = "tree \"" + in.string() + "\" --point " + point + " --depth 4 --dot ";
            c(run_cli(args + "\"" + a.string() + "\"", log) == 0 && run_cli(args + "\"" + b.string() + "\"", log) == 0,
              std::string("tree --dot failed on ") + name);
            c(slurp(a) == slurp(b) && !slurp(a).empty(), std::string("DOT output not byte-stable for ") + name);
        }
        fs::remove_all(dir);
    });

    std::printf("%s: %d criterion(s) failed\n", g_failed ? "FAILED" : "OK", g_failed);
    return g_failed ? 1 : 0;
}
