#include "crdyn/classify.hpp"
#include "crdyn/errors.hpp"
#include "crdyn/gallery.hpp"
#include "crdyn/instance_io.hpp"
#include "crdyn/symbolic.hpp"
#include "crdyn/tree.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

using namespace crdyn;

namespace {

constexpr int kOk = 0, kFailed = 1, kUsage = 2;

struct Settings {
    std::string eps = "1/64";
    std::size_t horizon = 200;
    std::string delta = "1/64";
};

std::string header(const Settings& s) {
    return "defaults: eps=" + s.eps + " horizon=" + std::to_string(s.horizon) + " delta=" + s.delta;
}

SymClassifyOptions sym_options(const Settings& s) {
    SymClassifyOptions o;
    o.eps = parse_rational(s.eps);
    o.horizon = s.horizon;
    o.delta = parse_rational(s.delta);
    if (o.eps <= 0 || o.delta <= 0) throw ParseError("eps and delta must be positive");
    return o;
}

Instance load(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot read '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_instance(ss.str());
}

std::size_t finite_point(const FiniteRelation& g, const std::string& label) {
    auto i = g.space().index_of(label);
    if (!i) throw ParseError("unknown point '" + label + "'");
    return *i;
}

Rational symbolic_point(const SymbolicRelation& r, const std::string& text) {
    Rational t = parse_rational(text);
    if (!r.space().contains(t)) throw ParseError("point " + text + " is not in the space");
    return t;
}

const FiniteRelation& need_finite(const Instance& inst, const char* cmd) {
    if (!inst.finite) throw ParseError(std::string(cmd) + " needs a finite instance");
    return *inst.finite;
}

std::string membership_row(const ClassificationTag& t) {
    std::string s;
    const char* names[] = {"legal", "trans3", "trans2", "trans1"};
    for (int i = 0; i < 4; ++i) s += std::string(i ? " " : "") + names[i] + "=" + to_string(t.membership[i]);
    return s;
}

int cmd_classify(const std::string& file, const std::string& point, const Settings& s) {
    Instance inst = load(file);
    std::cout << header(s) << "\n";
    bool unknown = false;
    auto row = [&](const std::string& label, const ClassificationTag& t) {
        unknown = unknown || t.certainty.is_unknown();
        std::cout << label << "\t" << to_string(t) << "\t[" << membership_row(t) << "]\n";
    };
    if (inst.finite) {
        const auto& g = *inst.finite;
        const auto pred = inst.finite_predicate();
        std::cout << "density: " << (pred.is_exhaustive() ? "exhaustive" : "eps-net " + to_string(pred.net().eps)) << "\n";
        ClassifyOptions co;
        if (!point.empty()) {
            row(point, classify_point(g, finite_point(g, point), pred, co));
        } else {
            auto tags = classify_all(g, pred, co);
            for (std::size_t i = 0; i < tags.size(); ++i) row(g.space().label(i), tags[i]);
        }
    } else {
        const auto& r = *inst.symbolic;
        const auto opts = sym_options(s);
        std::vector<Rational> pts;
        if (!point.empty()) pts.push_back(symbolic_point(r, point));
        else pts = default_query_points(r.space());
        for (const auto& t : pts) row(to_string(t), classify_symbolic(r, t, opts));
    }
    if (unknown) std::cout << "note: UnknownAtHorizon rows were not decided within the horizon\n";
    return kOk;
}

int cmd_tree(const std::string& file, const std::string& point, std::size_t depth, const std::string& dot) {
    Instance inst = load(file);
    const auto& g = need_finite(inst, "tree");
    auto t = build_tree(g, finite_point(g, point), depth);
    std::cout << "root " << point << ", depth " << depth << ", nodes " << t.node_count() << ", height "
              << (t.height() ? std::to_string(*t.height()) : std::string("unbounded")) << "\n";
    for (std::size_t n = 0; n <= depth; ++n) std::cout << "level " << n << ": " << format_set(g, t.level(n)) << "\n";
    if (!dot.empty()) {
        std::ofstream out(dot, std::ios::binary);
        if (!out) throw ParseError("cannot write '" + dot + "'");
        out << dot_export(t);
        std::cout << "dot written to " << dot << "\n";
    }
    return kOk;
}

int cmd_transitive(const std::string& file, bool plus, const Settings& s) {
    Instance inst = load(file);
    std::cout << header(s) << "\n";
    if (inst.finite) {
        const auto& g = *inst.finite;
        auto rep = characterization_suite(g);
        std::cout << (plus ? "+transitive: " : "transitive: ") << std::boolalpha << (plus ? rep.plus_transitive : rep.transitive) << std::noboolalpha << "\n";
        std::cout << "statements 1..8:";
        for (bool b : rep.statement) std::cout << " " << (b ? "T" : "F");
        std::cout << "\n";
        if (!rep.consistent()) {
            std::cout << "characterization groups disagree\n";
            return kFailed;
        }
        return kOk;
    }
    const auto& r = *inst.symbolic;
    const auto opts = sym_options(s);
    auto grid = check_open_grid(r, opts.delta, opts.horizon, plus);
    std::cout << (plus ? "+transitive" : "transitive") << " on the open delta-grid (n <= " << opts.horizon << "): "
              << (grid.all_certified() ? "certified" : "UnknownAtHorizon") << " (" << grid.pairs.size() - grid.failures()
              << "/" << grid.pairs.size() << " pairs)\n";
    for (const auto& pr : grid.pairs)
        if (!pr.n)
            std::cout << "  open: U=" << grid.sets[pr.u].to_string() << " V=" << grid.sets[pr.v].to_string() << "\n";
    return kOk;
}

int cmd_reach(const std::string& file, const std::string& point, std::size_t steps) {
    Instance inst = load(file);
    if (inst.finite) {
        const auto& g = *inst.finite;
        const auto x = finite_point(g, point);
        PointSet prev;
        for (std::size_t n = 0; n <= steps; ++n) {
            PointSet c = reach(g, x, n);
            std::cout << "R_" << n << " = " << format_set(g, c) << "\n";
            if (n > 0 && c == prev) {
                std::cout << "stabilized at n = " << n - 1 << "\n";
                return kOk;
            }
            prev = std::move(c);
        }
        std::cout << "not stabilized within " << steps << " steps\n";
        return kOk;
    }
    const auto& r = *inst.symbolic;
    auto res = for_each_reach_step(r, Region1D::point(symbolic_point(r, point)), steps, [](std::size_t n, const Region1D& c) {
        std::cout << "R_" << n << " = " << c.to_string() << "\n";
        return true;
    });
    if (res.stabilized) std::cout << "stabilized after " << res.steps << " steps\n";
    else std::cout << "not stabilized within " << steps << " steps\n";
    return kOk;
}

int cmd_mahavier(const std::string& file, std::size_t depth, bool count, std::size_t list) {
    Instance inst = load(file);
    const auto& g = need_finite(inst, "mahavier");
    if (depth == 0) throw ParseError("--depth must be at least 1");
    if (count || list == 0) std::cout << "count: " << mahavier_count(g, depth).get_str() << "\n";
    if (list > 0)
        for (const auto& w : mahavier_enumerate(g, depth, list)) {
            std::cout << "(";
            for (std::size_t i = 0; i < w.points().size(); ++i) std::cout << (i ? "," : "") << g.space().label(w.points()[i]);
            std::cout << ")\n";
        }
    return kOk;
}

int cmd_discretize(const std::string& file, const std::string& delta, const std::string& out_path) {
    Instance inst = load(file);
    if (!inst.symbolic) throw ParseError("discretize needs an interval instance");
    const Rational d = parse_rational(delta);
    if (d <= 0) throw ParseError("--delta must be positive");
    auto disc = discretize(*inst.symbolic, d);
    Instance out = Instance::of(disc.relation);
    out.density = disc.predicate.is_exhaustive() ? std::nullopt : std::optional<EpsNet>(disc.predicate.net());
    std::ofstream os(out_path, std::ios::binary);
    if (!os) throw ParseError("cannot write '" + out_path + "'");
    os << serialize_instance(out);
    std::cout << "boxes: " << disc.boxes.size() << ", edges: " << disc.relation.edges().size()
              << ", max box width: " << to_string(disc.max_width) << "\n";
    if (!disc.predicate.is_exhaustive())
        std::cout << "predicate: eps-net over box midpoints, eps = " << to_string(disc.predicate.net().eps) << "\n";
    std::cout << "written to " << out_path << "\n";
    return kOk;
}

int cmd_gallery(const std::string& action, const std::string& name) {
    GalleryParams p;
    if (action == "list") {
        for (const auto& n : gallery_names()) std::cout << n << "\t" << build_gallery_instance(n, p).description << "\n";
        return kOk;
    }
    if (action == "export") {
        if (name.empty()) throw ParseError("gallery export needs NAME");
        std::cout << serialize_instance(build_gallery_instance(name, p).system);
        return kOk;
    }
    if (action == "run" || action == "run-all") {
        if (action == "run") {
            if (name.empty()) throw ParseError("gallery run needs NAME");
            build_gallery_instance(name, p); // reject unknown names
        }
        GalleryReport rep;
        if (action == "run") {
            auto inst = build_gallery_instance(name, p);
            for (const auto& e : inst.expectations) rep.rows.push_back({name, e.query, e.expected, e.citation, evaluate(e)});
        } else {
            rep = run_gallery("", p);
        }
        std::cout << format_report(rep, p);
        return rep.ok() ? kOk : kFailed;
    }
    throw ParseError("unknown gallery action '" + action + "'");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"crdyn: transitivity classification for closed-relation dynamical systems"};
    app.require_subcommand(1);
    Settings s;
    std::string file, point, dot, out, delta, action, name;
    std::size_t depth = 0, steps = 16, list = 0;
    bool plus = false, count = false;

    auto add_sym = [&](CLI::App* c) {
        c->add_option("--eps", s.eps, "density radius for interval instances");
        c->add_option("--horizon", s.horizon, "search horizon");
        c->add_option("--delta", s.delta, "grid width for discretization");
    };
    auto* classify = app.add_subcommand("classify", "classify points");
    classify->add_option("file", file)->required();
    classify->add_option("--point", point);
    add_sym(classify);
    auto* tree = app.add_subcommand("tree", "transitivity tree levels");
    tree->add_option("file", file)->required();
    tree->add_option("--point", point)->required();
    tree->add_option("--depth", depth)->required();
    tree->add_option("--dot", dot);
    auto* trans = app.add_subcommand("transitive", "system transitivity");
    trans->add_option("file", file)->required();
    trans->add_flag("--plus", plus);
    add_sym(trans);
    auto* rch = app.add_subcommand("reach", "n-reach chain");
    rch->add_option("file", file)->required();
    rch->add_option("--point", point)->required();
    rch->add_option("--steps", steps);
    auto* mah = app.add_subcommand("mahavier", "Mahavier products");
    mah->add_option("file", file)->required();
    mah->add_option("--depth", depth)->required();
    auto* cnt = mah->add_flag("--count", count);
    mah->add_option("--list", list)->excludes(cnt);
    auto* disc = app.add_subcommand("discretize", "grid outer approximation");
    disc->add_option("file", file)->required();
    disc->add_option("--delta", delta)->required();
    disc->add_option("-o", out)->required();
    auto* gal = app.add_subcommand("gallery", "named examples");
    gal->add_option("action", action, "list | run NAME | run-all | export NAME")->required();
    gal->add_option("name", name);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    try {
        if (*classify) return cmd_classify(file, point, s);
        if (*tree) return cmd_tree(file, point, depth, dot);
        if (*trans) return cmd_transitive(file, plus, s);
        if (*rch) return cmd_reach(file, point, steps);
        if (*mah) return cmd_mahavier(file, depth, count, list);
        if (*disc) return cmd_discretize(file, delta, out);
        if (*gal) return cmd_gallery(action, name);
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const PreconditionError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kFailed;
    }
    return kUsage;
}
