#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace nnfif {

/// Affine map L(x) = slope * x + intercept.
struct AffineMap {
    double slope;
    double intercept;
};

/// Strictly increasing knots x_0 < ... < x_N (N >= 2) and the affine maps
/// L_i sending [x_0, x_N] onto the i-th subinterval.
///
/// Subintervals are 0-based in code: map i sends [x_0, x_N] onto
/// [x_i, x_{i+1}], i = 0 .. N-1, with
///     slope_i     = (x_{i+1} - x_i) / (x_N - x_0)
///     intercept_i = (x_N x_i - x_0 x_{i+1}) / (x_N - x_0).
/// forward() and inverse() are evaluated as lerps so that the endpoint
/// conditions L_i(x_0) = x_i, L_i(x_N) = x_{i+1} hold bit-exactly.
class Partition {
public:
    explicit Partition(std::vector<double> knots);
    static Partition uniform(double a, double b, int N);

    [[nodiscard]] int size() const noexcept { return static_cast<int>(knots_.size()) - 1; }
    [[nodiscard]] std::span<const double> knots() const noexcept { return knots_; }
    [[nodiscard]] double knot(int i) const { return knots_.at(static_cast<std::size_t>(i)); }
    [[nodiscard]] double a() const noexcept { return knots_.front(); }
    [[nodiscard]] double b() const noexcept { return knots_.back(); }

    [[nodiscard]] AffineMap map(int i) const;
    [[nodiscard]] double slope(int i) const { return map(i).slope; }
    [[nodiscard]] double forward(int i, double x) const;
    [[nodiscard]] double inverse(int i, double x) const;

    /// Subinterval owning x; interior knots belong to the map on their left.
    [[nodiscard]] int owner(double x) const;
    [[nodiscard]] bool is_uniform(double rel_tol = 1e-12) const;

private:
    std::vector<double> knots_;
};

std::vector<AffineMap> affine_maps(const Partition& partition);

} // namespace nnfif
