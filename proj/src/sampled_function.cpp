#include "nnfif/sampled_function.hpp"

#include "nnfif/error.hpp"

#include <algorithm>
#include <cmath>

namespace nnfif {

double UniformGrid::x(std::size_t j) const noexcept {
    if (j == intervals) return b;
    return a + (b - a) * (static_cast<double>(j) / static_cast<double>(intervals));
}

SampledFunction::SampledFunction(UniformGrid grid, std::vector<double> values)
    : grid_(grid), values_(std::move(values)) {
    if (grid_.intervals == 0 || !(grid_.b > grid_.a)) throw InvalidArgument("invalid sample grid");
    if (values_.size() != grid_.size()) throw InvalidArgument("sample count does not match grid");
}

SampledFunction SampledFunction::sample(const UniformGrid& grid, const RealFn& f) {
    std::vector<double> v(grid.size());
    for (std::size_t j = 0; j < v.size(); ++j) v[j] = f(grid.x(j));
    return {grid, std::move(v)};
}

double SampledFunction::operator()(double x) const {
    const double slack = 1e-12 * (grid_.b - grid_.a);
    if (!(x >= grid_.a - slack && x <= grid_.b + slack)) throw DomainError("outside domain");
    const double p = std::clamp((x - grid_.a) / grid_.step(), 0.0, static_cast<double>(grid_.intervals));
    const auto lo = std::min(static_cast<std::size_t>(p), grid_.intervals - 1);
    const double w = p - static_cast<double>(lo);
    if (w == 0.0) return values_[lo];
    return (1.0 - w) * values_[lo] + w * values_[lo + 1];
}

SampledFunction SampledFunction::thinned(std::size_t stride) const {
    if (stride == 0 || grid_.intervals % stride != 0) {
        throw InvalidArgument("thinning stride must divide the grid interval count");
    }
    UniformGrid g{grid_.a, grid_.b, grid_.intervals / stride};
    std::vector<double> v(g.size());
    for (std::size_t j = 0; j < v.size(); ++j) v[j] = values_[j * stride];
    return {g, std::move(v)};
}

} // namespace nnfif
