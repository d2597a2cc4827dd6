#pragma once

#include "nnfif/error.hpp"
#include "nnfif/function_input.hpp"
#include "nnfif/kernels.hpp"
#include "nnfif/nn_operator.hpp"
#include "nnfif/partition.hpp"
#include "nnfif/sampled_function.hpp"
#include "nnfif/scaling.hpp"

#include <cstddef>
#include <memory>
#include <optional>
#include <vector>

namespace nnfif {

/// Which IFS family to build.
///   AlphaFractal: base S_{n}(f), height f.
///   Discrete:     base S_{n}(f), height S_{N}(f); f is only read at nodes.
///   Smooth:       base S_{n,r}(f), height f, plus derivative IFSs k = 1..r.
enum class FifVariant { AlphaFractal, Discrete, Smooth };

struct FifProblem {
    FifVariant variant = FifVariant::AlphaFractal;
    Partition partition;
    ScalingVector scaling;
    OperatorConfig operator_cfg;
    FunctionInput f;

    void validate() const;
};

/// The maps lambda_i(x, y) = (L_i(x), F_i(x, y)) of a problem, at derivative
/// level k (k = 0 for the FIF itself):
///
///     F_i(x, y) = s_i(x) y + height(L_i(x)) - s_i(x) base(x)
///
/// with s_i = alpha_i / slope_i^k, height = f^(k) (or S_N(f) for the discrete
/// variant) and base = S^(k)_{n,r}(f).
class IfsMaps {
public:
    IfsMaps(const FifProblem& problem, int derivative_order = 0);

    [[nodiscard]] const Partition& partition() const noexcept { return partition_; }
    [[nodiscard]] int derivative_order() const noexcept { return order_; }
    [[nodiscard]] double scale(int i, double x) const;
    [[nodiscard]] double height(double x) const;
    [[nodiscard]] double base(double x) const;
    [[nodiscard]] double apply(int i, double x, double y) const;
    /// max_i sup |s_i|
    [[nodiscard]] double contraction() const noexcept { return contraction_; }
    /// Fixed-point values at a and b (f^(k)(a), f^(k)(b) when consistent).
    [[nodiscard]] double beta_left() const noexcept { return beta_left_; }
    [[nodiscard]] double beta_right() const noexcept { return beta_right_; }
    [[nodiscard]] bool used_finite_differences() const noexcept;
    [[nodiscard]] const NnOperator& base_operator() const noexcept { return *base_; }

private:
    Partition partition_;
    ScalingVector scaling_;
    FifVariant variant_;
    int order_;
    FunctionInput f_;
    std::shared_ptr<const NnOperator> base_;
    std::shared_ptr<const NnOperator> height_op_;
    double fd_step_;
    mutable bool height_fd_ = false;
    double contraction_;
    double beta_left_;
    double beta_right_;
};

/// Read-Bajraktarevic operator T phi(x) = F_i(L_i^{-1}(x), phi(L_i^{-1}(x)))
/// discretised on a uniform grid. Every knot must be a grid point; for
/// uniform partitions every source point L_i^{-1}(x_j) is a grid point too.
class RbOperator {
public:
    RbOperator(const FifProblem& problem, std::size_t grid_intervals, int derivative_order = 0);

    [[nodiscard]] const UniformGrid& grid() const noexcept { return grid_; }
    [[nodiscard]] const IfsMaps& maps() const noexcept { return maps_; }
    [[nodiscard]] double contraction() const noexcept { return maps_.contraction(); }
    /// Height function sampled on the grid with endpoints pinned to beta.
    [[nodiscard]] SampledFunction initial_guess() const;
    /// True when every source point is a grid point (no interpolation slack).
    [[nodiscard]] bool exact_lookups() const noexcept { return exact_; }
    [[nodiscard]] std::span<const std::size_t> knot_indices() const noexcept { return knot_index_; }

    /// One sweep (OpenMP kernel).
    [[nodiscard]] SampledFunction apply(const SampledFunction& phi) const;
    /// One sweep through the serial kernel on the same plan.
    [[nodiscard]] SampledFunction apply_serial(const SampledFunction& phi) const;
    /// One sweep evaluating F_i(L_i^{-1}(x), phi(L_i^{-1}(x))) directly from
    /// the maps, with no precomputed plan.
    [[nodiscard]] SampledFunction apply_reference(const SampledFunction& phi) const;

    /// Estimate of the error from linear interpolation at off-grid source
    /// points: |alpha|_inf times the largest local oscillation of phi.
    [[nodiscard]] double interpolation_slack(const SampledFunction& phi) const;

    /// Throws InvalidArgument unless phi(a), phi(b) equal beta within 1e-9.
    void check_membership(const SampledFunction& phi) const;

private:
    IfsMaps maps_;
    UniformGrid grid_;
    std::vector<std::size_t> knot_index_;
    kernels::SweepPlan plan_;
    bool exact_ = true;
};

struct SolveOptions {
    std::size_t grid_intervals = std::size_t{1} << 14;
    double tol = 1e-10;
    int max_iters = 1000;
    /// Starting iterate; defaults to the height samples.
    std::optional<std::vector<double>> initial;
};

/// Per-derivative-order diagnostics of the smooth construction.
struct SmoothOrderReport {
    int order = 0;
    double y_left = 0.0;        // q_1^(k)(x_0) / (a_1^k - alpha_1)
    double y_right = 0.0;       // q_N^(k)(x_N) / (a_N^k - alpha_N)
    double f_left = 0.0;        // f^(k)(x_0)
    double f_right = 0.0;       // f^(k)(x_N)
    double endpoint_residual = 0.0;  // max(|y_left - f_left|, |y_right - f_right|)
    double matching_residual = 0.0;  // max_i |F_{i-1,k}(x_N, y_right) - F_{i,k}(x_0, y_left)|
    double knot_residual = 0.0;      // max_i |F_{i,k}(x_0, y_left) - f^(k)(x_i)|
    double contraction = 0.0;
    double residual = 0.0;
    int iterations = 0;
};

struct FifResult {
    SampledFunction values;
    double residual = 0.0;
    int iterations = 0;
    /// ceil(log tol / log |alpha|_inf) + 1, for reporting only.
    int predicted_iterations = 0;
    double contraction = 0.0;
    double interpolation_slack = 0.0;
    /// max_i |phi(x_i) - data_i|
    double knot_error = 0.0;
    double y_min = 0.0;
    double y_max = 0.0;
    bool used_finite_differences = false;
    /// Smooth variant: derivative FIFs k = 1..r and their diagnostics.
    std::vector<SampledFunction> derivatives = {};
    std::vector<SmoothOrderReport> smooth = {};
    std::shared_ptr<const FifProblem> provenance = {};
};

/// Picard iteration hit max_iters; carries the last iterate.
class NonConvergenceError : public Error {
public:
    NonConvergenceError(const std::string& what, SampledFunction best, double residual, int iterations)
        : Error(what), best_(std::move(best)), residual_(residual), iterations_(iterations) {}

    [[nodiscard]] const SampledFunction& best() const noexcept { return best_; }
    [[nodiscard]] double residual() const noexcept { return residual_; }
    [[nodiscard]] int iterations() const noexcept { return iterations_; }

private:
    SampledFunction best_;
    double residual_;
    int iterations_;
};

/// One RB sweep of the problem's order-0 operator on phi's grid.
SampledFunction rb_apply(const FifProblem& problem, const SampledFunction& phi);

/// Picard iteration from the height samples until the sup-change drops to
/// tol * (1 - |alpha|_inf). Dispatches on the problem variant.
FifResult solve_fif(const FifProblem& problem, const SolveOptions& options = {});
/// solve_fif for the Discrete variant; f is read at operator nodes only.
FifResult solve_fif_discrete(const FifProblem& problem, const SolveOptions& options = {});
/// Order-0 FIF plus derivative FIFs k = 1..r after checking the
/// Barnsley-Harrington matching conditions.
FifResult solve_fif_smooth(const FifProblem& problem, const SolveOptions& options = {});

/// sup over the grid of |phi(x) - F_i(L_i^{-1}(x), phi(L_i^{-1}(x)))|,
/// evaluated through IfsMaps directly.
double self_referential_residual(const FifProblem& problem, const SampledFunction& phi, int derivative_order = 0);

/// Linear interpolant of the knot data (x_i, f(x_i)) sampled on a grid.
std::vector<double> knot_interpolant(const FifProblem& problem, const UniformGrid& grid);

} // namespace nnfif
