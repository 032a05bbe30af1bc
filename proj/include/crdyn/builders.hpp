#pragma once

#include "crdyn/symbolic.hpp"

#include <cstdint>
#include <vector>

namespace crdyn {

// f(t) = 2t on [0,1/2], 2 - 2t on [1/2,1].
std::vector<Primitive> tent_map_graph();
// Tent maps rescaled to [0,1/2] and [1/2,1].
std::vector<Primitive> half_tent_left();
std::vector<Primitive> half_tent_right();

// Level-n intervals of the middle-thirds construction (2^n of them).
std::vector<Interval> cantor_intervals(std::size_t level);
// Piecewise-linear approximation of the Cantor function: it maps the k-th
// level-n interval linearly onto [k/2^n, (k+1)/2^n] and is constant on the
// 2^n - 1 gaps. Level 0 is the identity.
std::vector<Primitive> cantor_staircase(std::size_t level);

// Value of a piecewise-linear function given by its non-vertical pieces.
Rational eval_piecewise(const std::vector<Primitive>& pieces, const Rational& t);

struct DensePrefixOptions {
    std::uint64_t seed = 1;
    std::size_t max_tries = 64;
    // The itinerary is pinned for this many steps past the horizon, keeping
    // the orbit off every cell endpoint (0, 1/2, 1 included) that long.
    std::size_t extra_steps = 64;
};

// Dyadic t whose iterates t, f(t), ..., f^horizon(t) are eps-dense in the
// domain of f. Works on the cell graph of a dyadic grid of width <= eps: a
// seeded walk that visits every cell is pulled back exactly through the
// affine pieces. Not a transitive point; only the checked prefix is claimed.
// Throws BudgetExhausted when no try covers the grid within the horizon.
Rational dense_prefix_point(const std::vector<Primitive>& pieces, const Rational& eps, std::size_t horizon,
                            const DensePrefixOptions& opts = {});

std::vector<Rational> orbit_prefix(const std::vector<Primitive>& pieces, const Rational& t, std::size_t steps);

} // namespace crdyn
