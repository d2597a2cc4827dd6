#include "nnfif/kernels.hpp"

#include "nnfif/error.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <string>

#include <omp.h>

namespace nnfif::kernels {

namespace {

inline double sweep_one(const SweepPlan& p, std::span<const double> in, std::size_t j) {
    const std::size_t lo = p.lo[j];
    const double w = p.w[j];
    const double src = (w == 0.0) ? in[lo] : (1.0 - w) * in[lo] + w * in[lo + 1];
    return p.coef[j] * src + p.offset[j];
}

void check_sweep(const SweepPlan& plan, std::span<const double> in, std::span<double> out) {
    if (in.size() != plan.size() || out.size() != plan.size()) {
        throw InvalidArgument("sweep buffers do not match the plan");
    }
}

inline double holder_row(std::span<const double> v, std::size_t i, const std::vector<double>& denom) {
    double best = 0.0;
    for (std::size_t j = i + 1; j < v.size(); ++j) {
        best = std::max(best, std::fabs(v[i] - v[j]) / denom[j - i]);
    }
    return best;
}

std::vector<double> holder_denominators(std::size_t n, double step, double mu) {
    std::vector<double> d(n, 1.0);
    for (std::size_t k = 1; k < n; ++k) d[k] = std::pow(static_cast<double>(k) * step, mu);
    return d;
}

inline std::uint64_t cell(double v, std::uint64_t k) {
    const auto c = static_cast<std::uint64_t>(std::max(0.0, std::floor(v * static_cast<double>(k))));
    return std::min(c, k - 1);
}

std::uint64_t cloud_count(std::span<const double> x, std::span<const double> y, std::uint64_t k) {
    std::vector<std::uint64_t> ids(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) ids[i] = cell(x[i], k) * k + cell(y[i], k);
    std::sort(ids.begin(), ids.end());
    return static_cast<std::uint64_t>(std::unique(ids.begin(), ids.end()) - ids.begin());
}

std::uint64_t graph_count(std::span<const double> x, std::span<const double> y, std::uint64_t k) {
    std::vector<double> lo(k, std::numeric_limits<double>::infinity());
    std::vector<double> hi(k, -std::numeric_limits<double>::infinity());
    auto touch = [&](std::uint64_t c, double v) {
        lo[c] = std::min(lo[c], v);
        hi[c] = std::max(hi[c], v);
    };
    const double kd = static_cast<double>(k);
    for (std::size_t i = 0; i < x.size(); ++i) {
        touch(cell(x[i], k), y[i]);
        if (i + 1 == x.size()) continue;
        // split the segment where it crosses column boundaries
        const std::uint64_t c0 = cell(x[i], k);
        const std::uint64_t c1 = cell(x[i + 1], k);
        for (std::uint64_t c = c0 + 1; c <= c1; ++c) {
            const double xb = static_cast<double>(c) / kd;
            const double t = (xb - x[i]) / (x[i + 1] - x[i]);
            const double yb = y[i] + t * (y[i + 1] - y[i]);
            touch(c - 1, yb);
            touch(c, yb);
        }
    }
    std::uint64_t total = 0;
    for (std::uint64_t c = 0; c < k; ++c) {
        if (!(lo[c] <= hi[c])) continue;
        total += cell(hi[c], k) - cell(lo[c], k) + 1;
    }
    return total;
}

void check_points(std::span<const double> x, std::span<const double> y) {
    if (x.size() != y.size()) throw InvalidArgument("point coordinate arrays differ in length");
}

} // namespace

void sweep_parallel(const SweepPlan& plan, std::span<const double> in, std::span<double> out) {
    check_sweep(plan, in, out);
    const auto n = static_cast<std::ptrdiff_t>(plan.size());
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t j = 0; j < n; ++j) {
        out[static_cast<std::size_t>(j)] = sweep_one(plan, in, static_cast<std::size_t>(j));
    }
}

void sweep_serial(const SweepPlan& plan, std::span<const double> in, std::span<double> out) {
    check_sweep(plan, in, out);
    for (std::size_t j = 0; j < plan.size(); ++j) out[j] = sweep_one(plan, in, j);
}

double max_abs_diff_parallel(std::span<const double> a, std::span<const double> b) {
    if (a.size() != b.size()) throw InvalidArgument("mismatched grids");
    const auto n = static_cast<std::ptrdiff_t>(a.size());
    double best = 0.0;
#pragma omp parallel for reduction(max : best) schedule(static)
    for (std::ptrdiff_t j = 0; j < n; ++j) {
        best = std::max(best, std::fabs(a[static_cast<std::size_t>(j)] - b[static_cast<std::size_t>(j)]));
    }
    return best;
}

double max_abs_diff_serial(std::span<const double> a, std::span<const double> b) {
    if (a.size() != b.size()) throw InvalidArgument("mismatched grids");
    double best = 0.0;
    for (std::size_t j = 0; j < a.size(); ++j) best = std::max(best, std::fabs(a[j] - b[j]));
    return best;
}

double holder_pairs_parallel(std::span<const double> v, double step, double mu) {
    const auto denom = holder_denominators(v.size(), step, mu);
    const auto n = static_cast<std::ptrdiff_t>(v.size());
    double best = 0.0;
#pragma omp parallel for reduction(max : best) schedule(dynamic, 16)
    for (std::ptrdiff_t i = 0; i < n; ++i) {
        best = std::max(best, holder_row(v, static_cast<std::size_t>(i), denom));
    }
    return best;
}

double holder_pairs_serial(std::span<const double> v, double step, double mu) {
    const auto denom = holder_denominators(v.size(), step, mu);
    double best = 0.0;
    for (std::size_t i = 0; i < v.size(); ++i) best = std::max(best, holder_row(v, i, denom));
    return best;
}

std::vector<std::uint64_t> cloud_box_counts_parallel(std::span<const double> x, std::span<const double> y,
                                                     std::span<const std::uint64_t> subdivisions) {
    check_points(x, y);
    std::vector<std::uint64_t> counts(subdivisions.size());
    const auto n = static_cast<std::ptrdiff_t>(subdivisions.size());
#pragma omp parallel for schedule(dynamic, 1)
    for (std::ptrdiff_t s = 0; s < n; ++s) {
        counts[static_cast<std::size_t>(s)] = cloud_count(x, y, subdivisions[static_cast<std::size_t>(s)]);
    }
    return counts;
}

std::vector<std::uint64_t> cloud_box_counts_serial(std::span<const double> x, std::span<const double> y,
                                                   std::span<const std::uint64_t> subdivisions) {
    check_points(x, y);
    std::vector<std::uint64_t> counts;
    for (auto k : subdivisions) counts.push_back(cloud_count(x, y, k));
    return counts;
}

std::vector<std::uint64_t> graph_box_counts_parallel(std::span<const double> x, std::span<const double> y,
                                                     std::span<const std::uint64_t> subdivisions) {
    check_points(x, y);
    std::vector<std::uint64_t> counts(subdivisions.size());
    const auto n = static_cast<std::ptrdiff_t>(subdivisions.size());
#pragma omp parallel for schedule(dynamic, 1)
    for (std::ptrdiff_t s = 0; s < n; ++s) {
        counts[static_cast<std::size_t>(s)] = graph_count(x, y, subdivisions[static_cast<std::size_t>(s)]);
    }
    return counts;
}

std::vector<std::uint64_t> graph_box_counts_serial(std::span<const double> x, std::span<const double> y,
                                                   std::span<const std::uint64_t> subdivisions) {
    check_points(x, y);
    std::vector<std::uint64_t> counts;
    for (auto k : subdivisions) counts.push_back(graph_count(x, y, k));
    return counts;
}

void set_thread_cap(int threads) {
    if (threads >= 1) omp_set_num_threads(threads);
}

int apply_thread_env() {
    const char* env = std::getenv("FIF_THREADS");
    if (env == nullptr || *env == '\0') return 0;
    int threads = 0;
    try {
        threads = std::stoi(env);
    } catch (const std::exception&) {
        throw InvalidArgument(std::string("FIF_THREADS must be a positive integer, got '") + env + "'");
    }
    if (threads < 1) throw InvalidArgument("FIF_THREADS must be a positive integer");
    set_thread_cap(threads);
    return threads;
}

} // namespace nnfif::kernels
