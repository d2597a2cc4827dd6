#include "nnfif/analysis.hpp"

#include "nnfif/error.hpp"
#include "nnfif/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <set>

namespace nnfif {

double modulus_of_continuity(const SampledFunction& phi, double delta) {
    const UniformGrid& g = phi.grid();
    if (!(delta > 0.0)) throw InvalidArgument("delta must be positive");
    if (delta > (g.b - g.a) * (1.0 + 1e-12)) throw InvalidArgument("delta must not exceed b - a");
    if (g.step() > delta / 16.0 * (1.0 + 1e-12)) throw InvalidArgument("refine grid");
    const auto window = static_cast<std::size_t>(std::floor(delta / g.step() + 1e-9));

    // sliding-window max - min over windows of window + 1 samples
    const auto v = phi.values();
    std::deque<std::size_t> hi;
    std::deque<std::size_t> lo;
    double best = 0.0;
    for (std::size_t r = 0; r < v.size(); ++r) {
        while (!hi.empty() && v[hi.back()] <= v[r]) hi.pop_back();
        while (!lo.empty() && v[lo.back()] >= v[r]) lo.pop_back();
        hi.push_back(r);
        lo.push_back(r);
        if (hi.front() + window < r) hi.pop_front();
        if (lo.front() + window < r) lo.pop_front();
        best = std::max(best, v[hi.front()] - v[lo.front()]);
    }
    return best;
}

double sup_norm(const SampledFunction& phi) {
    double best = 0.0;
    for (double v : phi.values()) best = std::max(best, std::fabs(v));
    return best;
}

double sup_norm_diff(const SampledFunction& phi, const SampledFunction& psi) {
    if (!(phi.grid() == psi.grid())) throw InvalidArgument("mismatched grids");
    return kernels::max_abs_diff_parallel(phi.values(), psi.values());
}

HolderReport holder_seminorm(const SampledFunction& phi, const HolderParams& params) {
    if (!(params.mu > 0.0 && params.mu <= 1.0)) throw InvalidArgument("Hölder exponent must satisfy 0 < mu <= 1");
    if (phi.size() > params.max_points) throw InvalidArgument("use subsample");
    HolderReport rep;
    rep.points = phi.size();
    rep.seminorm = kernels::holder_pairs_parallel(phi.values(), phi.grid().step(), params.mu);
    rep.sup = sup_norm(phi);
    rep.combined = std::max(rep.sup, rep.seminorm);
    return rep;
}

SampledFunction holder_subsample(const SampledFunction& phi, std::size_t max_points) {
    if (max_points < 2) throw InvalidArgument("subsample needs at least two points");
    const std::size_t intervals = phi.grid().intervals;
    for (std::size_t stride = 1; stride <= intervals; ++stride) {
        if (intervals % stride == 0 && intervals / stride + 1 <= max_points) return phi.thinned(stride);
    }
    return phi.thinned(intervals);
}

double error_bound_alpha(double alpha_norm, double base_gap) {
    if (!(alpha_norm >= 0.0 && alpha_norm < 1.0)) throw InvalidArgument("scaling must satisfy 0 <= |α| < 1");
    if (!(base_gap >= 0.0)) throw InvalidArgument("base gap must be nonnegative");
    return alpha_norm / (1.0 - alpha_norm) * base_gap;
}

double error_bound_discrete(double alpha_norm, double omega_n, double omega_N) {
    if (!(alpha_norm >= 0.0 && alpha_norm < 1.0)) throw InvalidArgument("scaling must satisfy 0 <= |α| < 1");
    if (!(omega_n >= 0.0 && omega_N >= 0.0)) throw InvalidArgument("moduli must be nonnegative");
    return alpha_norm / (1.0 - alpha_norm) * omega_n + omega_N / (1.0 - alpha_norm);
}

double theoretical_box_dimension(const ScalingVector& scaling, int N) {
    if (!scaling.is_constant()) throw InvalidArgument("constant scalings required");
    if (N < 2) throw InvalidArgument("N must be >= 2");
    const double kappa = scaling.kappa();
    if (kappa > 1.0) return 1.0 + std::log(kappa) / std::log(static_cast<double>(N));
    return 1.0;
}

bool knots_collinear(std::span<const double> x, std::span<const double> y) {
    if (x.size() != y.size() || x.size() < 2) throw InvalidArgument("knot data must have matching sizes >= 2");
    const auto [ymin, ymax] = std::minmax_element(y.begin(), y.end());
    const double range = *ymax - *ymin;
    if (range == 0.0) return true;
    const double n = static_cast<double>(x.size());
    double mx = 0.0;
    double my = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        mx += x[i];
        my += y[i];
    }
    mx /= n;
    my /= n;
    double sxx = 0.0;
    double sxy = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sxx += (x[i] - mx) * (x[i] - mx);
        sxy += (x[i] - mx) * (y[i] - my);
    }
    const double slope = sxy / sxx;
    double worst = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double resid = y[i] - (my + slope * (x[i] - mx));
        worst = std::max(worst, std::fabs(resid) / std::sqrt(1.0 + slope * slope));
    }
    return worst <= 1e-9 * range;
}

std::vector<double> default_box_scales() {
    std::vector<double> s;
    for (int j = 4; j <= 12; ++j) s.push_back(std::ldexp(1.0, -j));
    return s;
}

DimensionReport box_counting_dimension(std::span<const Point2> points, std::span<const double> scales,
                                       BoxCountMode mode) {
    if (points.size() < 100000) throw InvalidArgument("box counting needs at least 1e5 points");
    if (scales.size() < 5) throw InvalidArgument("box counting needs at least 5 scales");
    const auto [smin, smax] = std::minmax_element(scales.begin(), scales.end());
    if (!(*smin > 0.0) || *smax / *smin < 100.0 * (1.0 - 1e-12)) {
        throw InvalidArgument("box scales must span at least two decades");
    }
    std::vector<std::uint64_t> subdivisions;
    for (double s : scales) {
        const double k = 1.0 / s;
        if (!(s <= 1.0) || std::fabs(k - std::round(k)) > 1e-9 * k) {
            throw InvalidArgument("each box scale must be an integer subdivision of the bounding box");
        }
        subdivisions.push_back(static_cast<std::uint64_t>(std::llround(k)));
    }

    double xmin = points[0].x, xmax = points[0].x, ymin = points[0].y, ymax = points[0].y;
    for (const auto& p : points) {
        if (!std::isfinite(p.x) || !std::isfinite(p.y)) throw InvalidArgument("non-finite point");
        xmin = std::min(xmin, p.x);
        xmax = std::max(xmax, p.x);
        ymin = std::min(ymin, p.y);
        ymax = std::max(ymax, p.y);
    }
    if (!(xmax > xmin)) throw InvalidArgument("degenerate point set");
    std::vector<double> xs(points.size());
    std::vector<double> ys(points.size());
    const double yspan = ymax - ymin;
    for (std::size_t i = 0; i < points.size(); ++i) {
        xs[i] = (points[i].x - xmin) / (xmax - xmin);
        ys[i] = yspan > 0.0 ? (points[i].y - ymin) / yspan : 0.0;
        if (mode == BoxCountMode::Graph && i > 0 && xs[i] < xs[i - 1]) {
            throw InvalidArgument("graph box counting needs points sorted by x");
        }
    }

    DimensionReport rep;
    rep.scales.assign(scales.begin(), scales.end());
    rep.counts = mode == BoxCountMode::Graph ? kernels::graph_box_counts_parallel(xs, ys, subdivisions)
                                             : kernels::cloud_box_counts_parallel(xs, ys, subdivisions);
    if (std::set<std::uint64_t>(rep.counts.begin(), rep.counts.end()).size() < 2) {
        throw InvalidArgument("degenerate point set");
    }

    // ordinary least squares of log N(eps) on log(1/eps)
    const double n = static_cast<double>(scales.size());
    double mx = 0.0, my = 0.0;
    std::vector<double> lx(scales.size()), ly(scales.size());
    for (std::size_t i = 0; i < scales.size(); ++i) {
        lx[i] = std::log(1.0 / scales[i]);
        ly[i] = std::log(static_cast<double>(rep.counts[i]));
        mx += lx[i];
        my += ly[i];
    }
    mx /= n;
    my /= n;
    double sxx = 0.0, sxy = 0.0, syy = 0.0;
    for (std::size_t i = 0; i < scales.size(); ++i) {
        sxx += (lx[i] - mx) * (lx[i] - mx);
        sxy += (lx[i] - mx) * (ly[i] - my);
        syy += (ly[i] - my) * (ly[i] - my);
    }
    rep.estimated = sxy / sxx;
    rep.r_squared = syy > 0.0 ? (sxy * sxy) / (sxx * syy) : 1.0;
    return rep;
}

std::vector<Point2> graph_points(const SampledFunction& phi) {
    std::vector<Point2> pts(phi.size());
    for (std::size_t j = 0; j < pts.size(); ++j) pts[j] = {phi.grid().x(j), phi[j]};
    return pts;
}

} // namespace nnfif
