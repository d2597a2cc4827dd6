#pragma once

#include "nnfif/fif.hpp"
#include "nnfif/point.hpp"

#include <cstddef>
#include <cstdint>
#include <vector>

namespace nnfif {

/// Random-iteration orbit of the maps lambda_i(x, y) = (L_i(x), F_i(x, y)),
/// starting from (x_0, f(x_0)) on the graph. Maps are chosen uniformly with a
/// mt19937_64 seeded from `seed`; the first 100 points are discarded.
std::vector<Point2> chaos_game_render(const FifProblem& problem, std::size_t point_count, std::uint64_t seed);

} // namespace nnfif
