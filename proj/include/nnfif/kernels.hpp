#pragma once

// Data-parallel inner loops. Each kernel has an OpenMP version used by the
// library and a plain serial version kept as the reference for tests and
// benchmarks; both must produce bit-identical results.

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace nnfif::kernels {

/// One affine self-map sweep over a sample grid:
///     out[j] = coef[j] * lerp(in[lo[j]], in[lo[j] + 1], w[j]) + offset[j]
/// with w[j] == 0 reading in[lo[j]] alone.
struct SweepPlan {
    std::vector<std::size_t> lo;
    std::vector<double> w;
    std::vector<double> coef;
    std::vector<double> offset;

    [[nodiscard]] std::size_t size() const noexcept { return lo.size(); }
};

void sweep_parallel(const SweepPlan& plan, std::span<const double> in, std::span<double> out);
void sweep_serial(const SweepPlan& plan, std::span<const double> in, std::span<double> out);

/// max_j |a[j] - b[j]|
double max_abs_diff_parallel(std::span<const double> a, std::span<const double> b);
double max_abs_diff_serial(std::span<const double> a, std::span<const double> b);

/// max over i < j of |v[i] - v[j]| / ((j - i) * step)^mu
double holder_pairs_parallel(std::span<const double> v, double step, double mu);
double holder_pairs_serial(std::span<const double> v, double step, double mu);

/// Occupied box counts for points already normalised to the unit square,
/// one count per subdivision (boxes per side).
std::vector<std::uint64_t> cloud_box_counts_parallel(std::span<const double> x, std::span<const double> y,
                                                     std::span<const std::uint64_t> subdivisions);
std::vector<std::uint64_t> cloud_box_counts_serial(std::span<const double> x, std::span<const double> y,
                                                   std::span<const std::uint64_t> subdivisions);

/// Box counts of the polyline through x-sorted normalised points: each
/// column contributes the boxes spanned by the polyline's vertical range in it.
std::vector<std::uint64_t> graph_box_counts_parallel(std::span<const double> x, std::span<const double> y,
                                                     std::span<const std::uint64_t> subdivisions);
std::vector<std::uint64_t> graph_box_counts_serial(std::span<const double> x, std::span<const double> y,
                                                   std::span<const std::uint64_t> subdivisions);

/// Caps OpenMP worker threads; values < 1 leave the runtime default.
void set_thread_cap(int threads);
/// Applies FIF_THREADS when set; returns the cap applied (0 if none).
int apply_thread_env();

} // namespace nnfif::kernels
