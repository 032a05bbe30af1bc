#include "crdyn/classify.hpp"

#include "crdyn/condensation.hpp"

#include "crdyn/errors.hpp"

#include <algorithm>
#include <sstream>

namespace crdyn {

ClassificationTag ClassificationTag::from_memberships(std::array<Certainty, 4> m, ReachGrade grade,
                                                      std::size_t horizon) {
    // certified at level i => certified below; refuted at level i => refuted above
    for (int i = 3; i > 0; --i)
        if (m[i].is_certified()) m[i - 1] = Certainty::certified();
    for (int i = 0; i < 3; ++i)
        if (m[i].is_refuted()) m[i + 1] = Certainty::refuted();

    ClassificationTag t;
    t.membership = m;
    // grades only refine trans3 points that are not known to be trans2
    if (m[1].is_certified() && !m[2].is_certified()) t.grade = grade;
    int strongest = -1;
    for (int i = 0; i < 4; ++i)
        if (m[i].is_certified()) strongest = i;
    static constexpr Verdict names[] = {Verdict::Intransitive, Verdict::Trans3, Verdict::Trans2, Verdict::Trans1};
    if (strongest < 0) {
        t.verdict = Verdict::Illegal;
        t.certainty = m[0].is_refuted() ? Certainty::certified() : Certainty::unknown(horizon);
    } else {
        t.verdict = names[strongest];
        if (strongest == 3 || m[strongest + 1].is_refuted())
            t.certainty = Certainty::certified();
        else
            t.certainty = Certainty::unknown(horizon);
    }
    return t;
}

std::string to_string(Verdict v) {
    switch (v) {
    case Verdict::Illegal: return "Illegal";
    case Verdict::Trans1: return "Trans1";
    case Verdict::Trans2: return "Trans2";
    case Verdict::Trans3: return "Trans3";
    case Verdict::Intransitive: return "Intransitive";
    }
    return "?";
}

std::string to_string(const ReachGrade& g) {
    switch (g.kind) {
    case ReachGrade::Kind::None: return "-";
    case ReachGrade::Kind::Finite: return "(3," + std::to_string(g.n) + ")";
    case ReachGrade::Kind::Omega: return "(3,omega)";
    }
    return "?";
}

std::string to_string(const Certainty& c) {
    switch (c.kind) {
    case Certainty::Kind::Certified: return "Certified";
    case Certainty::Kind::Refuted: return "Refuted";
    case Certainty::Kind::UnknownAtHorizon: return "UnknownAtHorizon(" + std::to_string(c.horizon) + ")";
    }
    return "?";
}

std::string to_string(const ClassificationTag& t) {
    std::ostringstream os;
    os << to_string(t.verdict) << " / " << to_string(t.certainty);
    if (t.grade.kind != ReachGrade::Kind::None) os << " " << to_string(t.grade);
    return os.str();
}

PointSet reach(const FiniteRelation& g, std::size_t x, std::size_t n) {
    PointSet acc = g.single(x), frontier = acc;
    for (std::size_t i = 0; i < n; ++i) {
        frontier = image_step(g, frontier);
        PointSet next = acc | frontier;
        if (next == acc) break; // R_{n+1} = R_n forces G(R_n) inside R_n
        acc = std::move(next);
    }
    return acc;
}

PointSet reach_omega(const FiniteRelation& g, std::size_t x) {
    PointSet seen = g.single(x);
    std::vector<std::size_t> stack{x};
    while (!stack.empty()) {
        auto v = stack.back();
        stack.pop_back();
        for (auto w : g.successors(v))
            if (!seen.contains(w)) {
                seen.insert(w);
                stack.push_back(w);
            }
    }
    return seen;
}

PointSet trajectory_union(const FiniteRelation& g, std::size_t x) { return reach_omega(g, x) & legal_set(g); }

PointSet members_at(const std::vector<ClassificationTag>& tags, Level level) {
    PointSet s(tags.size());
    for (std::size_t i = 0; i < tags.size(); ++i)
        if (tags[i].member(level).is_certified()) s.insert(i);
    return s;
}

namespace {

class Classifier {
public:
    Classifier(const FiniteRelation& g, const DensityPredicate& dense, const ClassifyOptions& opts)
        : g_(g), dense_(dense), opts_(opts), cond_(condense(g)), legal_(legal_set(g)) {
        const auto nc = cond_.count();
        // members reachable from each component; ids are topological so sweep backwards
        downstream_.assign(nc, PointSet(g.size()));
        live_below_.assign(nc, false);
        for (std::size_t c = nc; c-- > 0;) {
            downstream_[c] = cond_.member_set(c, g.size());
            live_below_[c] = cond_.live[c];
            for (auto d : cond_.dag_succ[c]) {
                downstream_[c] |= downstream_[d];
                live_below_[c] = live_below_[c] || live_below_[d];
            }
        }
    }

    ClassificationTag classify(std::size_t x) const {
        std::array<Certainty, 4> m{};
        if (!legal_.contains(x)) {
            m.fill(Certainty::refuted());
            return ClassificationTag::from_memberships(m, ReachGrade::none(), 0);
        }
        m[0] = Certainty::certified();
        const PointSet u = downstream_[cond_.scc_of[x]] & legal_;
        m[1] = dense_.dense(u) ? Certainty::certified() : Certainty::refuted();
        if (m[1].is_certified()) {
            m[2] = trans2(x);
            m[3] = m[2].is_refuted() ? Certainty::refuted() : trans1(x);
        } else {
            m[2] = m[3] = Certainty::refuted();
        }
        ReachGrade grade;
        if (m[1].is_certified() && !m[2].is_certified()) grade = grade_of(x);
        return ClassificationTag::from_memberships(m, grade, opts_.search_budget);
    }

private:
    ReachGrade grade_of(std::size_t x) const {
        PointSet acc = g_.single(x), frontier = acc;
        for (std::size_t n = 1;; ++n) {
            frontier = image_step(g_, frontier);
            PointSet next = acc | frontier;
            if (dense_.dense(next)) return ReachGrade::finite(n);
            if (next == acc) break;
            acc = std::move(next);
        }
        return ReachGrade::omega();
    }

    Certainty trans2(std::size_t x) const {
        const auto start = cond_.scc_of[x];
        if (dense_.is_exhaustive()) {
            if (start != 0) return Certainty::refuted();
            for (std::size_t c = 0; c + 1 < cond_.count(); ++c) {
                const auto& s = cond_.dag_succ[c];
                if (!std::binary_search(s.begin(), s.end(), c + 1)) return Certainty::refuted();
            }
            return cond_.live[cond_.count() - 1] ? Certainty::certified() : Certainty::refuted();
        }
        std::size_t budget = opts_.search_budget;
        bool exhausted = false;
        PointSet path(g_.size());
        bool found = trans2_dfs(start, path, budget, exhausted);
        if (found) return Certainty::certified();
        return exhausted ? Certainty::unknown(opts_.search_budget) : Certainty::refuted();
    }

    bool trans2_dfs(std::size_t c, const PointSet& before, std::size_t& budget, bool& exhausted) const {
        if (budget == 0) {
            exhausted = true;
            return false;
        }
        --budget;
        if (!live_below_[c]) return false;
        if (!dense_.dense(before | downstream_[c])) return false;
        PointSet path = before | cond_.member_set(c, g_.size());
        if (cond_.live[c] && dense_.dense(path)) return true;
        for (auto d : cond_.dag_succ[c])
            if (trans2_dfs(d, path, budget, exhausted)) return true;
        return false;
    }

    Certainty trans1(std::size_t x) const {
        if (dense_.is_exhaustive()) {
            for (std::size_t v = 0; v < g_.size(); ++v)
                if (v != x && reaches_cycle_avoiding(x, v)) return Certainty::refuted();
            return Certainty::certified();
        }
        // a non-dense infinite walk exists iff a non-dense lasso (simple path
        // closing back onto itself) does
        std::size_t budget = opts_.search_budget;
        bool exhausted = false;
        std::vector<std::size_t> path{x};
        PointSet on_path = g_.single(x);
        if (lasso_dfs(path, on_path, budget, exhausted)) return Certainty::refuted();
        return exhausted ? Certainty::unknown(opts_.search_budget) : Certainty::certified();
    }

    bool lasso_dfs(std::vector<std::size_t>& path, PointSet& on_path, std::size_t& budget, bool& exhausted) const {
        if (budget == 0) {
            exhausted = true;
            return false;
        }
        --budget;
        if (dense_.dense(on_path)) return false;
        const auto v = path.back();
        for (auto w : g_.successors(v))
            if (on_path.contains(w)) return true;
        for (auto w : g_.successors(v)) {
            if (!legal_.contains(w)) continue;
            path.push_back(w);
            on_path.insert(w);
            bool hit = lasso_dfs(path, on_path, budget, exhausted);
            on_path.erase(w);
            path.pop_back();
            if (hit) return true;
            if (exhausted) return false;
        }
        return false;
    }

    // Does x reach a cycle in G with vertex `removed` deleted?
    bool reaches_cycle_avoiding(std::size_t x, std::size_t removed) const {
        enum : char { White, Gray, Black };
        std::vector<char> color(g_.size(), White);
        std::vector<std::pair<std::size_t, std::size_t>> stack{{x, 0}};
        color[x] = Gray;
        while (!stack.empty()) {
            auto& [v, i] = stack.back();
            const auto& s = g_.successors(v);
            if (i == s.size()) {
                color[v] = Black;
                stack.pop_back();
                continue;
            }
            auto w = s[i++];
            if (w == removed) continue;
            if (color[w] == Gray) return true;
            if (color[w] == White) {
                color[w] = Gray;
                stack.push_back({w, 0});
            }
        }
        return false;
    }

    const FiniteRelation& g_;
    const DensityPredicate& dense_;
    ClassifyOptions opts_;
    Condensation cond_;
    PointSet legal_;
    std::vector<PointSet> downstream_;
    std::vector<bool> live_below_;
};

} // namespace

ClassificationTag classify_point(const FiniteRelation& g, std::size_t x, const DensityPredicate& dense,
                                 const ClassifyOptions& opts) {
    if (x >= g.size()) throw PreconditionError("point index out of range");
    return Classifier(g, dense, opts).classify(x);
}

std::vector<ClassificationTag> classify_all(const FiniteRelation& g, const DensityPredicate& dense,
                                            const ClassifyOptions& opts) {
    Classifier c(g, dense, opts);
    std::vector<ClassificationTag> out;
    out.reserve(g.size());
    for (std::size_t x = 0; x < g.size(); ++x) out.push_back(c.classify(x));
    return out;
}

} // namespace crdyn
