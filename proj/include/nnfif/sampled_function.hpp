#pragma once

#include "nnfif/function_input.hpp"

#include <cstddef>
#include <span>
#include <vector>

namespace nnfif {

/// Uniform grid of `intervals` cells over [a, b]; intervals + 1 points,
/// with the first and last point equal to a and b exactly.
struct UniformGrid {
    double a = 0.0;
    double b = 1.0;
    std::size_t intervals = 1;

    [[nodiscard]] std::size_t size() const noexcept { return intervals + 1; }
    [[nodiscard]] double step() const noexcept { return (b - a) / static_cast<double>(intervals); }
    [[nodiscard]] double x(std::size_t j) const noexcept;
    friend bool operator==(const UniformGrid&, const UniformGrid&) = default;
};

/// A function known by its samples on a uniform grid; evaluated off-grid by
/// linear interpolation between the bracketing samples.
class SampledFunction {
public:
    SampledFunction(UniformGrid grid, std::vector<double> values);

    static SampledFunction sample(const UniformGrid& grid, const RealFn& f);

    [[nodiscard]] const UniformGrid& grid() const noexcept { return grid_; }
    [[nodiscard]] std::span<const double> values() const noexcept { return values_; }
    [[nodiscard]] std::vector<double>& mutable_values() noexcept { return values_; }
    [[nodiscard]] std::size_t size() const noexcept { return values_.size(); }
    double operator[](std::size_t j) const { return values_[j]; }
    [[nodiscard]] double operator()(double x) const;

    /// Every `stride`-th sample (stride must divide the interval count).
    [[nodiscard]] SampledFunction thinned(std::size_t stride) const;

private:
    UniformGrid grid_;
    std::vector<double> values_;
};

} // namespace nnfif
