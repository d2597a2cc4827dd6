#pragma once

#include "nnfif/point.hpp"
#include "nnfif/sampled_function.hpp"
#include "nnfif/scaling.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace nnfif {

/// omega(phi, delta): sup of |phi(x) - phi(y)| over sampled pairs with
/// |x - y| <= delta. Requires grid step <= delta / 16 ("refine grid").
double modulus_of_continuity(const SampledFunction& phi, double delta);

double sup_norm(const SampledFunction& phi);
/// max |phi - psi| on a shared grid; throws on mismatched grids.
double sup_norm_diff(const SampledFunction& phi, const SampledFunction& psi);

struct HolderParams {
    double mu = 1.0;
    /// Largest sample count accepted by the quadratic pair scan.
    std::size_t max_points = 4000;
};

struct HolderReport {
    double seminorm = 0.0;  // |phi|_mu on the sampled pairs
    double sup = 0.0;       // ||phi||_inf
    double combined = 0.0;  // ||phi||_{0,mu} = max(sup, seminorm)
    std::size_t points = 0;
};

/// Exhaustive pair scan; throws "use subsample" above params.max_points.
HolderReport holder_seminorm(const SampledFunction& phi, const HolderParams& params);
/// Uniform thinning by the smallest stride dividing the interval count that
/// leaves at most max_points samples.
SampledFunction holder_subsample(const SampledFunction& phi, std::size_t max_points = 4000);

/// (|alpha| / (1 - |alpha|)) * base_gap
double error_bound_alpha(double alpha_norm, double base_gap);
/// (|alpha| / (1 - |alpha|)) * omega_n + (1 / (1 - |alpha|)) * omega_N
double error_bound_discrete(double alpha_norm, double omega_n, double omega_N);

/// 1 + log_N(kappa) when kappa = sum |alpha_i| > 1, else 1. Constant
/// scalings only.
double theoretical_box_dimension(const ScalingVector& scaling, int N);

/// Knot data are collinear when every point lies within 1e-9 * (value range)
/// of the least-squares line (a constant data set is collinear).
bool knots_collinear(std::span<const double> x, std::span<const double> y);

enum class BoxCountMode {
    PointCloud,  // count boxes holding at least one point
    Graph,       // count boxes met by the polyline through x-sorted points
};

struct DimensionReport {
    /// Empty when the formula does not apply (collinear knot data).
    std::optional<double> theoretical;
    double estimated = 0.0;
    double kappa = 0.0;
    std::vector<double> scales;
    std::vector<std::uint64_t> counts;
    double r_squared = 0.0;
    bool uniform_partition_assumed = true;
    std::string note;
};

/// Box sizes 2^-4 .. 2^-12 on the normalised unit square.
std::vector<double> default_box_scales();

/// Least-squares slope of log(count) against log(1/scale) after mapping the
/// point set's bounding box onto the unit square. Needs >= 1e5 points and
/// >= 5 scales spanning two decades, each the reciprocal of an integer.
DimensionReport box_counting_dimension(std::span<const Point2> points, std::span<const double> scales,
                                       BoxCountMode mode = BoxCountMode::Graph);

/// The render grid of a sampled function as a point set.
std::vector<Point2> graph_points(const SampledFunction& phi);

} // namespace nnfif
