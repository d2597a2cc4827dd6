#include "nnfif/chaos_game.hpp"

#include <random>

namespace nnfif {

namespace {
constexpr std::size_t kBurnIn = 100;
}

std::vector<Point2> chaos_game_render(const FifProblem& problem, std::size_t point_count, std::uint64_t seed) {
    if (point_count < 1000) throw InvalidArgument("chaos game needs at least 1000 points");
    const IfsMaps maps(problem);
    const Partition& part = maps.partition();
    const auto N = static_cast<std::uint64_t>(part.size());

    std::mt19937_64 rng(seed);
    Point2 p{part.a(), maps.beta_left()};
    std::vector<Point2> out;
    out.reserve(point_count);
    for (std::size_t step = 0; step < point_count + kBurnIn; ++step) {
        const int i = static_cast<int>(rng() % N);
        p = Point2{part.forward(i, p.x), maps.apply(i, p.x, p.y)};
        if (step >= kBurnIn) out.push_back(p);
    }
    return out;
}

} // namespace nnfif
