#include "crdyn/relation.hpp"

#include "crdyn/errors.hpp"

#include <algorithm>

namespace crdyn {

FiniteSpace::FiniteSpace(std::vector<std::string> labels) : labels_(std::move(labels)) {
    if (labels_.empty()) throw PreconditionError("a finite space needs at least one point");
    for (std::size_t i = 0; i < labels_.size(); ++i)
        if (!index_.emplace(labels_[i], i).second) throw PreconditionError("duplicate point label '" + labels_[i] + "'");
}

std::optional<std::size_t> FiniteSpace::index_of(const std::string& label) const {
    auto it = index_.find(label);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

std::size_t FiniteSpace::require_index(const std::string& label) const {
    auto i = index_of(label);
    if (!i) throw PreconditionError("unknown point '" + label + "'");
    return *i;
}

FiniteRelation::FiniteRelation(FiniteSpace space, std::vector<Edge> edges)
    : space_(std::move(space)), edges_(std::move(edges)) {
    if (edges_.empty()) throw PreconditionError("a closed relation must be non-empty");
    const std::size_t n = space_.size();
    for (const auto& [a, b] : edges_)
        if (a >= n || b >= n) throw PreconditionError("edge endpoint out of range");
    std::sort(edges_.begin(), edges_.end());
    edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
    succ_.assign(n, {});
    pred_.assign(n, {});
    for (const auto& [a, b] : edges_) {
        succ_[a].push_back(b);
        pred_[b].push_back(a);
    }
    for (auto& p : pred_) std::sort(p.begin(), p.end());
}

FiniteRelation FiniteRelation::numbered(std::size_t n, std::vector<Edge> edges) {
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < n; ++i) labels.push_back(std::to_string(i));
    return FiniteRelation(FiniteSpace(std::move(labels)), std::move(edges));
}

FiniteRelation FiniteRelation::labelled(std::vector<std::string> labels,
                                        const std::vector<std::pair<std::string, std::string>>& pairs) {
    FiniteSpace space(std::move(labels));
    std::vector<Edge> edges;
    for (const auto& [a, b] : pairs) edges.emplace_back(space.require_index(a), space.require_index(b));
    return FiniteRelation(std::move(space), std::move(edges));
}

bool FiniteRelation::has_edge(std::size_t a, std::size_t b) const {
    const auto& s = succ_.at(a);
    return std::binary_search(s.begin(), s.end(), b);
}

Walk Walk::make(const FiniteRelation& g, std::vector<std::size_t> points) {
    if (points.empty()) throw PreconditionError("a walk has at least one point");
    for (auto p : points)
        if (p >= g.size()) throw PreconditionError("walk point out of range");
    for (std::size_t i = 0; i + 1 < points.size(); ++i)
        if (!g.has_edge(points[i], points[i + 1]))
            throw PreconditionError("walk step " + g.space().label(points[i]) + " -> " +
                                    g.space().label(points[i + 1]) + " is not an edge");
    return Walk(std::move(points));
}

FiniteRelation inverse_relation(const FiniteRelation& g) {
    std::vector<Edge> e;
    e.reserve(g.edges().size());
    for (const auto& [a, b] : g.edges()) e.emplace_back(b, a);
    return FiniteRelation(g.space(), std::move(e));
}

PointSet image_step(const FiniteRelation& g, const PointSet& a) {
    PointSet out(g.size());
    a.for_each([&](std::size_t i) {
        for (auto j : g.successors(i)) out.insert(j);
    });
    return out;
}

PointSet image(const FiniteRelation& g, const PointSet& a, std::size_t n) {
    PointSet cur = a;
    for (std::size_t k = 0; k < n && !cur.empty(); ++k) cur = image_step(g, cur);
    return cur;
}

PointSet preimage(const FiniteRelation& g, const PointSet& a, std::size_t n) {
    PointSet cur = a;
    for (std::size_t k = 0; k < n && !cur.empty(); ++k) {
        PointSet next(g.size());
        cur.for_each([&](std::size_t i) {
            for (auto j : g.predecessors(i)) next.insert(j);
        });
        cur = std::move(next);
    }
    return cur;
}

namespace {

template <class Step>
OmegaChain stabilize(const FiniteRelation& g, Step step) {
    OmegaChain c{g.all(), 0};
    for (;;) {
        PointSet next = step(c.value);
        if (next == c.value) return c;
        c.value = std::move(next);
        ++c.steps;
    }
}

} // namespace

OmegaChain omega_image_chain(const FiniteRelation& g) {
    return stabilize(g, [&](const PointSet& s) { return image(g, s, 1); });
}

OmegaChain omega_preimage_chain(const FiniteRelation& g) {
    return stabilize(g, [&](const PointSet& s) { return preimage(g, s, 1); });
}

PointSet omega_image(const FiniteRelation& g) { return omega_image_chain(g).value; }
PointSet omega_preimage(const FiniteRelation& g) { return omega_preimage_chain(g).value; }

PointSet legal_set(const FiniteRelation& g) { return omega_preimage(g); }
PointSet illegal_set(const FiniteRelation& g) { return legal_set(g).complement(); }

std::vector<Walk> mahavier_enumerate(const FiniteRelation& g, std::size_t m, std::size_t limit) {
    if (m == 0) throw PreconditionError("Mahavier products need m >= 1");
    std::vector<Walk> out;
    std::vector<std::size_t> cur;
    // explicit DFS in lexicographic order
    auto rec = [&](auto&& self) -> bool {
        if (out.size() >= limit) return false;
        if (cur.size() == m + 1) {
            out.push_back(Walk::make(g, cur));
            return true;
        }
        for (auto nxt : g.successors(cur.back())) {
            cur.push_back(nxt);
            bool more = self(self);
            cur.pop_back();
            if (!more) return false;
        }
        return true;
    };
    for (std::size_t s = 0; s < g.size(); ++s) {
        cur.assign(1, s);
        if (!rec(rec)) break;
    }
    return out;
}

BigInt mahavier_count(const FiniteRelation& g, std::size_t m) {
    if (m == 0) throw PreconditionError("Mahavier products need m >= 1");
    // ways[v] = number of walks of the current length ending at v
    std::vector<BigInt> ways(g.size(), BigInt(1));
    for (std::size_t step = 0; step < m; ++step) {
        std::vector<BigInt> next(g.size(), BigInt(0));
        for (const auto& [a, b] : g.edges()) next[b] += ways[a];
        ways = std::move(next);
    }
    BigInt total = 0;
    for (const auto& w : ways) total += w;
    return total;
}

std::uint64_t mahavier_count_u64(const FiniteRelation& g, std::size_t m) {
    BigInt c = mahavier_count(g, m);
    if (sizeof(unsigned long) < 8 || !c.fits_ulong_p())
        throw OverflowError("Mahavier count " + c.get_str() + " does not fit in 64 bits");
    return c.get_ui();
}

std::string format_set(const FiniteRelation& g, const PointSet& s) {
    std::string out = "{";
    bool first = true;
    s.for_each([&](std::size_t i) {
        if (!first) out += ",";
        first = false;
        out += g.space().label(i);
    });
    return out + "}";
}

} // namespace crdyn
