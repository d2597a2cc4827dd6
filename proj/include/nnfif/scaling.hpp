#pragma once

#include "nnfif/function_input.hpp"
#include "nnfif/partition.hpp"

#include <cstddef>
#include <variant>
#include <vector>

namespace nnfif {

/// Per-subinterval vertical scaling: constants alpha_i or continuous
/// functions alpha_i(x) on [a, b]. Function entries record a sampled sup
/// norm over a 10^4-point grid.
class ScalingVector {
public:
    static ScalingVector constant(std::vector<double> alphas);
    static ScalingVector functions(std::vector<RealFn> alphas, double a, double b);

    [[nodiscard]] std::size_t size() const noexcept { return entries_.size(); }
    [[nodiscard]] bool is_constant() const noexcept;
    /// alpha_i(x); constant entries ignore x.
    [[nodiscard]] double value(std::size_t i, double x) const;
    [[nodiscard]] double constant_value(std::size_t i) const;
    [[nodiscard]] std::vector<double> constant_values() const;
    [[nodiscard]] double sup_norm(std::size_t i) const { return sup_norms_.at(i); }
    /// |alpha|_inf = max_i ||alpha_i||_inf
    [[nodiscard]] double max_norm() const noexcept;
    /// kappa = sum_i ||alpha_i||_inf
    [[nodiscard]] double kappa() const noexcept;
    /// max_i ||alpha_i||_inf / slope_i^mu
    [[nodiscard]] double holder_factor(const Partition& partition, double mu) const;

private:
    std::vector<std::variant<double, RealFn>> entries_;
    std::vector<double> sup_norms_;
};

/// Throws InvalidArgument("scaling must satisfy |α|<1") unless |alpha|_inf < 1.
void require_contraction(const ScalingVector& scaling);

/// Hölder-space contraction gate max_i ||alpha_i|| / slope_i^mu < 1.
/// Returns the factor; throws HypothesisFailure naming the first failing
/// (1-based) subinterval.
double check_holder_gate(const Partition& partition, const ScalingVector& scaling, double mu);

/// Smooth-construction gate |alpha_i| < 1 / N^r on a uniform partition with
/// constant scalings.
void check_smooth_gate(const Partition& partition, const ScalingVector& scaling, int r);

} // namespace nnfif
