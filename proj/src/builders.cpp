#include "crdyn/builders.hpp"

#include "crdyn/errors.hpp"

#include <algorithm>

namespace crdyn {

namespace {

Rational q(long n, long d = 1) { return make_rational(n, d); }

Primitive seg(Rational x0, Rational y0, Rational x1, Rational y1) {
    return Primitive::segment({std::move(x0), std::move(y0)}, {std::move(x1), std::move(y1)});
}

} // namespace

std::vector<Primitive> tent_map_graph() { return {seg(q(0), q(0), q(1, 2), q(1)), seg(q(1, 2), q(1), q(1), q(0))}; }

std::vector<Primitive> half_tent_left() {
    return {seg(q(0), q(0), q(1, 4), q(1, 2)), seg(q(1, 4), q(1, 2), q(1, 2), q(0))};
}

std::vector<Primitive> half_tent_right() {
    return {seg(q(1, 2), q(1, 2), q(3, 4), q(1)), seg(q(3, 4), q(1), q(1), q(1, 2))};
}

std::vector<Interval> cantor_intervals(std::size_t level) {
    std::vector<Interval> cur{{q(0), q(1)}};
    for (std::size_t n = 0; n < level; ++n) {
        std::vector<Interval> next;
        for (const auto& iv : cur) {
            Rational third = (iv.hi - iv.lo) / 3;
            next.push_back({iv.lo, iv.lo + third});
            next.push_back({iv.hi - third, iv.hi});
        }
        cur = std::move(next);
    }
    return cur;
}

std::vector<Primitive> cantor_staircase(std::size_t level) {
    const auto ivs = cantor_intervals(level);
    const Rational step = Rational(1) / Rational(mpz_class(1) << level);
    std::vector<Primitive> out;
    for (std::size_t k = 0; k < ivs.size(); ++k) {
        Rational y0 = step * k, y1 = step * (k + 1);
        out.push_back(seg(ivs[k].lo, y0, ivs[k].hi, y1));
        if (k + 1 < ivs.size()) out.push_back(seg(ivs[k].hi, y1, ivs[k + 1].lo, y1));
    }
    return out;
}

Rational eval_piecewise(const std::vector<Primitive>& pieces, const Rational& t) {
    for (const auto& p : pieces) {
        if (p.is_vertical() || t < p.x_lo() || t > p.x_hi()) continue;
        return p.y_over(t, t)->lo;
    }
    throw PreconditionError("point outside the domain of the map");
}

std::vector<Rational> orbit_prefix(const std::vector<Primitive>& pieces, const Rational& t, std::size_t steps) {
    std::vector<Rational> out{t};
    out.reserve(steps + 1);
    for (std::size_t i = 0; i < steps; ++i) out.push_back(eval_piecewise(pieces, out.back()));
    return out;
}

namespace {

struct Cell {
    Interval span;
    const Primitive* piece; // affine piece covering the cell
    std::vector<std::size_t> next;
};

} // namespace

Rational dense_prefix_point(const std::vector<Primitive>& pieces, const Rational& eps, std::size_t horizon,
                            const DensePrefixOptions& opts) {
    if (eps <= 0) throw PreconditionError("eps must be positive");
    if (pieces.empty()) throw PreconditionError("no map pieces");
    Rational lo = pieces.front().x_lo(), hi = pieces.front().x_hi();
    for (const auto& p : pieces) {
        lo = std::min(lo, p.x_lo());
        hi = std::max(hi, p.x_hi());
    }
    // finest dyadic grid needed for eps, refined until every cell sits in one piece
    std::size_t count = 1;
    while ((hi - lo) / Rational(count) > eps) count *= 2;
    std::vector<Cell> cells;
    for (;; count *= 2) {
        if (count > (1u << 20)) throw PreconditionError("map pieces do not align with a dyadic grid");
        cells.clear();
        const Rational w = (hi - lo) / Rational(count);
        bool aligned = true;
        for (std::size_t i = 0; i < count && aligned; ++i) {
            Interval c{lo + w * i, lo + w * (i + 1)};
            const Primitive* owner = nullptr;
            for (const auto& p : pieces)
                if (!p.is_vertical() && p.a.y != p.b.y && p.x_lo() <= c.lo && c.hi <= p.x_hi()) owner = &p;
            aligned = owner != nullptr;
            cells.push_back({c, owner, {}});
        }
        if (aligned) break;
    }
    for (auto& c : cells) {
        Interval img = *c.piece->y_over(c.span.lo, c.span.hi);
        for (std::size_t j = 0; j < cells.size(); ++j)
            if (img.lo <= cells[j].span.lo && cells[j].span.hi <= img.hi) c.next.push_back(j);
        if (c.next.empty()) throw PreconditionError("map does not expand cells onto the grid");
    }

    gmp_randclass rng(gmp_randinit_mt);
    rng.seed(static_cast<unsigned long>(opts.seed));
    auto pick = [&](std::size_t n) { return static_cast<std::size_t>(mpz_class(rng.get_z_range(n)).get_ui()); };

    for (std::size_t attempt = 0; attempt < opts.max_tries; ++attempt) {
        // walk: step to an unvisited successor when one exists, otherwise
        // along a shortest path to the nearest unvisited cell
        std::vector<bool> seen(cells.size(), false);
        std::vector<std::size_t> walk{pick(cells.size())};
        seen[walk[0]] = true;
        std::size_t unseen = cells.size() - 1;
        while (walk.size() <= horizon + opts.extra_steps) {
            const auto cur = walk.back();
            std::vector<std::size_t> fresh;
            for (auto j : cells[cur].next)
                if (!seen[j]) fresh.push_back(j);
            std::size_t nxt;
            if (!fresh.empty()) {
                nxt = fresh[pick(fresh.size())];
            } else if (unseen > 0) {
                std::vector<std::size_t> from(cells.size(), cells.size());
                std::vector<std::size_t> queue{cur};
                from[cur] = cur;
                std::size_t target = cells.size();
                for (std::size_t qi = 0; qi < queue.size() && target == cells.size(); ++qi)
                    for (auto j : cells[queue[qi]].next)
                        if (from[j] == cells.size()) {
                            from[j] = queue[qi];
                            if (!seen[j]) {
                                target = j;
                                break;
                            }
                            queue.push_back(j);
                        }
                if (target == cells.size()) break; // the rest is unreachable
                while (from[target] != cur) target = from[target];
                nxt = target;
            } else {
                nxt = cells[cur].next[pick(cells[cur].next.size())];
            }
            if (!seen[nxt]) {
                seen[nxt] = true;
                --unseen;
            }
            walk.push_back(nxt);
        }
        if (unseen > 0 || walk.size() <= horizon + opts.extra_steps) continue;

        // pull the cell sequence back through the affine pieces
        Interval j = cells[walk.back()].span;
        for (std::size_t k = walk.size() - 1; k-- > 0;) {
            const Primitive& p = *cells[walk[k]].piece;
            const Rational slope = (p.b.y - p.a.y) / (p.b.x - p.a.x);
            Rational u = p.a.x + (j.lo - p.a.y) / slope, v = p.a.x + (j.hi - p.a.y) / slope;
            if (u > v) std::swap(u, v);
            j = {std::max(u, cells[walk[k]].span.lo), std::min(v, cells[walk[k]].span.hi)};
        }
        Rational t = midpoint(j.lo, j.hi);
        auto orbit = orbit_prefix(pieces, t, horizon);
        if (eps_dense(Region1D::interval(lo, hi), Region1D::points(orbit), eps)) return t;
    }
    throw BudgetExhausted("no dense-prefix point found within the try budget");
}

} // namespace crdyn
