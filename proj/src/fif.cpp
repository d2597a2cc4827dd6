#include "nnfif/fif.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace nnfif {

namespace {

bool on_node_grid(double x, double a, double b, int count) {
    const double t = (x - a) / (b - a) * count;
    return t >= -1e-9 && t <= count + 1e-9 && std::fabs(t - std::round(t)) <= 1e-9;
}

// The discrete construction may only read f at operator nodes.
FunctionInput node_only(const FunctionInput& f, double a, double b, int n, int N) {
    if (f.is_tabulated()) return f;
    RealFn inner = f.as_analytic().value;
    return FunctionInput::analytic([=](double x) {
        if (!on_node_grid(x, a, b, n) && !on_node_grid(x, a, b, N)) {
            std::ostringstream msg;
            msg << "internal assertion: discrete FIF evaluated f off the nodes at x = " << x;
            throw std::logic_error(msg.str());
        }
        return inner(x);
    });
}

bool is_pow2(std::size_t v) { return v != 0 && (v & (v - 1)) == 0; }

} // namespace

void FifProblem::validate() const {
    const int N = partition.size();
    if (static_cast<int>(scaling.size()) != N) {
        throw InvalidArgument("scaling vector length must equal the number of subintervals N");
    }
    require_contraction(scaling);
    operator_cfg.validate();
    const double span = partition.b() - partition.a();
    if (std::fabs(operator_cfg.a - partition.a()) > 1e-12 * span ||
        std::fabs(operator_cfg.b - partition.b()) > 1e-12 * span) {
        throw InvalidArgument("operator interval must match the partition interval");
    }
    if (variant != FifVariant::Smooth && operator_cfg.r != 0) {
        throw InvalidArgument("operator order r > 0 is only used by the smooth variant");
    }
    if (variant != FifVariant::Discrete && f.is_tabulated()) {
        throw InvalidArgument("tabulated input requires the discrete variant");
    }
    if (variant == FifVariant::Discrete && !partition.is_uniform()) {
        throw InvalidArgument("discrete variant requires a uniform partition");
    }
    if (variant == FifVariant::Smooth) check_smooth_gate(partition, scaling, operator_cfg.r);
}

// ---------------------------------------------------------------------------
// IfsMaps

IfsMaps::IfsMaps(const FifProblem& problem, int derivative_order)
    : partition_(problem.partition),
      scaling_(problem.scaling),
      variant_(problem.variant),
      order_(derivative_order),
      f_(problem.f) {
    problem.validate();
    if (order_ < 0 || order_ > problem.operator_cfg.r) {
        throw InvalidArgument("derivative order must satisfy 0 <= k <= r");
    }
    const OperatorConfig& cfg = problem.operator_cfg;
    if (variant_ == FifVariant::Discrete) {
        f_ = node_only(problem.f, cfg.a, cfg.b, cfg.n, partition_.size());
        OperatorConfig height_cfg = cfg;
        height_cfg.n = partition_.size();
        height_op_ = std::make_shared<NnOperator>(height_cfg, f_);
    }
    base_ = std::make_shared<NnOperator>(cfg, f_);
    fd_step_ = cfg.step() * 1e-3;

    contraction_ = 0.0;
    for (int i = 0; i < partition_.size(); ++i) {
        contraction_ = std::max(contraction_, scaling_.sup_norm(static_cast<std::size_t>(i)) /
                                                  std::pow(partition_.slope(i), order_));
    }

    if (order_ == 0) {
        beta_left_ = height(partition_.a());
        beta_right_ = height(partition_.b());
    } else {
        // fixed points of the first and last maps at x_0 and x_N
        const int last = partition_.size() - 1;
        const double s0 = scale(0, partition_.a());
        const double sN = scale(last, partition_.b());
        beta_left_ = (height(partition_.a()) - s0 * base(partition_.a())) / (1.0 - s0);
        beta_right_ = (height(partition_.b()) - sN * base(partition_.b())) / (1.0 - sN);
    }
}

double IfsMaps::scale(int i, double x) const {
    const double alpha = scaling_.value(static_cast<std::size_t>(i), x);
    if (order_ == 0) return alpha;
    return alpha / std::pow(partition_.slope(i), order_);
}

double IfsMaps::height(double x) const {
    if (height_op_) return height_op_->eval(x);
    bool used_fd = false;
    return f_.derivative(order_, x, fd_step_, used_fd);
}

double IfsMaps::base(double x) const {
    if (order_ > 0) return base_->derivative(order_, x);
    return variant_ == FifVariant::Smooth ? base_->eval_four_layer(x) : base_->eval(x);
}

double IfsMaps::apply(int i, double x, double y) const {
    const double s = scale(i, x);
    return s * y + height(partition_.forward(i, x)) - s * base(x);
}

bool IfsMaps::used_finite_differences() const noexcept {
    const bool height_fd = !height_op_ && f_.is_analytic() && order_ > f_.exact_derivative_order();
    return base_->used_finite_differences() || height_fd;
}

// ---------------------------------------------------------------------------
// RbOperator

RbOperator::RbOperator(const FifProblem& problem, std::size_t grid_intervals, int derivative_order)
    : maps_(problem, derivative_order), grid_{problem.partition.a(), problem.partition.b(), grid_intervals} {
    const Partition& part = maps_.partition();
    const auto N = static_cast<std::size_t>(part.size());
    const std::size_t G = grid_intervals;
    if (G % N != 0 || !is_pow2(G / N)) {
        throw InvalidArgument("grid size must be a power-of-two multiple of N");
    }
    if (G < 16 * N) throw InvalidArgument("grid size must be at least 16 N");

    const double step = grid_.step();
    knot_index_.resize(N + 1);
    for (std::size_t i = 0; i <= N; ++i) {
        const double x = part.knot(static_cast<int>(i));
        const auto j = static_cast<std::size_t>(std::llround((x - grid_.a) / step));
        if (std::fabs(grid_.x(j) - x) > 1e-9 * step || (i > 0 && j <= knot_index_[i - 1])) {
            throw InvalidArgument("partition knots must lie on the render grid");
        }
        knot_index_[i] = j;
    }

    plan_.lo.resize(G + 1);
    plan_.w.resize(G + 1);
    plan_.coef.resize(G + 1);
    plan_.offset.resize(G + 1);
    std::size_t i = 0;
    for (std::size_t j = 0; j <= G; ++j) {
        while (j > knot_index_[i + 1]) ++i;
        // source position of L_i^{-1}(x_j) in grid units, as an exact rational
        const std::size_t num = (j - knot_index_[i]) * G;
        const std::size_t den = knot_index_[i + 1] - knot_index_[i];
        const std::size_t lo = num / den;
        const std::size_t rem = num % den;
        const int map = static_cast<int>(i);
        const double u = rem == 0 ? grid_.x(lo) : part.inverse(map, grid_.x(j));
        if (rem != 0) exact_ = false;
        const double s = maps_.scale(map, u);
        plan_.lo[j] = lo;
        plan_.w[j] = static_cast<double>(rem) / static_cast<double>(den);
        plan_.coef[j] = s;
        plan_.offset[j] = maps_.height(grid_.x(j)) - s * maps_.base(u);
    }

    // Interior knots are owned by the map on their left; the map on the
    // right must agree there.
    for (std::size_t k = 1; k < N; ++k) {
        const double x = grid_.x(knot_index_[k]);
        const double left = maps_.apply(static_cast<int>(k) - 1, grid_.b, maps_.beta_right());
        const double right = maps_.apply(static_cast<int>(k), grid_.a, maps_.beta_left());
        if (std::fabs(left - right) > 1e-9 * std::max(1.0, std::fabs(left))) {
            std::ostringstream msg;
            msg << "RB continuity check failed at knot x = " << x << ": left map " << left << ", right map "
                << right;
            throw std::logic_error(msg.str());
        }
    }
}

SampledFunction RbOperator::initial_guess() const {
    std::vector<double> v(grid_.size());
    for (std::size_t j = 0; j < v.size(); ++j) v[j] = maps_.height(grid_.x(j));
    v.front() = maps_.beta_left();
    v.back() = maps_.beta_right();
    return {grid_, std::move(v)};
}

void RbOperator::check_membership(const SampledFunction& phi) const {
    if (!(phi.grid() == grid_)) throw InvalidArgument("iterate grid does not match the operator grid");
    auto close = [](double a, double b) { return std::fabs(a - b) <= 1e-9 * std::max(1.0, std::fabs(b)); };
    if (!close(phi[0], maps_.beta_left()) || !close(phi[grid_.intervals], maps_.beta_right())) {
        throw InvalidArgument("not in X_{β1}^{β2}: iterate endpoints differ from (β1, β2)");
    }
}

SampledFunction RbOperator::apply(const SampledFunction& phi) const {
    check_membership(phi);
    std::vector<double> out(grid_.size());
    kernels::sweep_parallel(plan_, phi.values(), out);
    out.front() = maps_.beta_left();
    out.back() = maps_.beta_right();
    return {grid_, std::move(out)};
}

SampledFunction RbOperator::apply_serial(const SampledFunction& phi) const {
    check_membership(phi);
    std::vector<double> out(grid_.size());
    kernels::sweep_serial(plan_, phi.values(), out);
    out.front() = maps_.beta_left();
    out.back() = maps_.beta_right();
    return {grid_, std::move(out)};
}

namespace {

SampledFunction direct_sweep(const IfsMaps& maps, const SampledFunction& phi) {
    const UniformGrid& g = phi.grid();
    std::vector<double> out(g.size());
    for (std::size_t j = 0; j < out.size(); ++j) {
        const double x = g.x(j);
        const int i = maps.partition().owner(x);
        const double u = maps.partition().inverse(i, x);
        out[j] = maps.apply(i, u, phi(u));
    }
    return {g, std::move(out)};
}

} // namespace

SampledFunction RbOperator::apply_reference(const SampledFunction& phi) const {
    check_membership(phi);
    return direct_sweep(maps_, phi);
}

double RbOperator::interpolation_slack(const SampledFunction& phi) const {
    if (exact_) return 0.0;
    const auto v = phi.values();
    double osc = 0.0;
    for (std::size_t j = 0; j + 1 < v.size(); ++j) {
        const std::size_t lo = j == 0 ? 0 : j - 1;
        const std::size_t hi = std::min(v.size() - 1, j + 2);
        const auto [mn, mx] = std::minmax_element(v.begin() + static_cast<std::ptrdiff_t>(lo),
                                                  v.begin() + static_cast<std::ptrdiff_t>(hi) + 1);
        osc = std::max(osc, *mx - *mn);
    }
    return contraction() * osc;
}

// ---------------------------------------------------------------------------
// Solvers

namespace {

struct PicardOutcome {
    SampledFunction values;
    int iterations;
    double residual;
};

PicardOutcome picard(const RbOperator& op, SampledFunction phi, double tol, int max_iters) {
    const double threshold = tol * (1.0 - op.contraction());
    double change = 0.0;
    for (int it = 1; it <= max_iters; ++it) {
        SampledFunction next = op.apply(phi);
        change = kernels::max_abs_diff_parallel(next.values(), phi.values());
        phi = std::move(next);
        if (change <= threshold) {
            const SampledFunction check = op.apply(phi);
            const double residual = kernels::max_abs_diff_parallel(check.values(), phi.values());
            return {std::move(phi), it, residual};
        }
    }
    std::ostringstream msg;
    msg << "Picard iteration did not reach tol = " << tol << " within " << max_iters
        << " sweeps (last change " << change << ")";
    throw NonConvergenceError(msg.str(), std::move(phi), change, max_iters);
}

void check_options(const SolveOptions& options) {
    if (!(options.tol > 0.0)) throw InvalidArgument("tolerance must be positive");
    if (options.max_iters < 1) throw InvalidArgument("max_iters must be >= 1");
}

SampledFunction starting_iterate(const RbOperator& op, const SolveOptions& options) {
    SampledFunction phi = op.initial_guess();
    if (options.initial) {
        if (options.initial->size() != phi.size()) throw InvalidArgument("initial iterate has the wrong size");
        auto& v = phi.mutable_values();
        std::copy(options.initial->begin() + 1, options.initial->end() - 1, v.begin() + 1);
    }
    return phi;
}

int predicted_sweeps(double q, double tol) {
    if (q <= 0.0) return 1;
    return static_cast<int>(std::ceil(std::log(tol) / std::log(q))) + 1;
}

FifResult solve_order_zero(const FifProblem& problem, const SolveOptions& options) {
    check_options(options);
    const RbOperator op(problem, options.grid_intervals);
    PicardOutcome out = picard(op, starting_iterate(op, options), options.tol, options.max_iters);

    FifResult res{.values = std::move(out.values)};
    res.residual = out.residual;
    res.iterations = out.iterations;
    res.contraction = op.contraction();
    res.predicted_iterations = predicted_sweeps(res.contraction, options.tol);
    res.interpolation_slack = op.interpolation_slack(res.values);
    res.used_finite_differences = op.maps().used_finite_differences();
    const auto v = res.values.values();
    const auto [mn, mx] = std::minmax_element(v.begin(), v.end());
    res.y_min = *mn;
    res.y_max = *mx;
    const auto knots = op.knot_indices();
    for (std::size_t i = 0; i < knots.size(); ++i) {
        const double data = op.maps().height(problem.partition.knot(static_cast<int>(i)));
        res.knot_error = std::max(res.knot_error, std::fabs(v[knots[i]] - data));
    }
    res.provenance = std::make_shared<const FifProblem>(problem);
    return res;
}

} // namespace

SampledFunction rb_apply(const FifProblem& problem, const SampledFunction& phi) {
    const RbOperator op(problem, phi.grid().intervals);
    return op.apply(phi);
}

FifResult solve_fif(const FifProblem& problem, const SolveOptions& options) {
    if (problem.variant == FifVariant::Smooth) return solve_fif_smooth(problem, options);
    return solve_order_zero(problem, options);
}

FifResult solve_fif_discrete(const FifProblem& problem, const SolveOptions& options) {
    if (problem.variant != FifVariant::Discrete) throw InvalidArgument("problem is not a discrete variant");
    return solve_order_zero(problem, options);
}

FifResult solve_fif_smooth(const FifProblem& problem, const SolveOptions& options) {
    if (problem.variant != FifVariant::Smooth) throw InvalidArgument("problem is not a smooth variant");
    problem.validate();
    check_options(options);
    const Partition& part = problem.partition;
    const int N = part.size();
    const int r = problem.operator_cfg.r;
    const double x0 = part.a();
    const double xN = part.b();

    std::vector<SmoothOrderReport> reports;
    for (int k = 1; k <= r; ++k) {
        const IfsMaps maps(problem, k);
        auto alpha = [&](int i) { return problem.scaling.constant_value(static_cast<std::size_t>(i)); };
        auto ak = [&](int i) { return std::pow(part.slope(i), k); };
        // q_i^(k)(x) = a_i^k f^(k)(L_i(x)) - alpha_i S^(k)_{n,r}(f, x)
        auto q = [&](int i, double x) { return ak(i) * maps.height(part.forward(i, x)) - alpha(i) * maps.base(x); };
        auto F = [&](int i, double x, double y) { return (alpha(i) * y + q(i, x)) / ak(i); };

        SmoothOrderReport rep;
        rep.order = k;
        rep.y_left = q(0, x0) / (ak(0) - alpha(0));
        rep.y_right = q(N - 1, xN) / (ak(N - 1) - alpha(N - 1));
        rep.f_left = maps.height(x0);
        rep.f_right = maps.height(xN);
        rep.endpoint_residual = std::max(std::fabs(rep.y_left - rep.f_left), std::fabs(rep.y_right - rep.f_right));
        double scale = 1.0;
        for (int i = 1; i < N; ++i) {
            const double from_left = F(i - 1, xN, rep.y_right);
            const double from_right = F(i, x0, rep.y_left);
            const double target = maps.height(part.knot(i));
            rep.matching_residual = std::max(rep.matching_residual, std::fabs(from_left - from_right));
            rep.knot_residual = std::max(rep.knot_residual, std::fabs(from_right - target));
            scale = std::max(scale, std::fabs(target));
        }
        if (rep.matching_residual > 1e-8 * scale) {
            std::ostringstream msg;
            msg << "Barnsley–Harrington hypothesis failed for derivative order " << k
                << ": matching residual " << rep.matching_residual;
            throw HypothesisFailure(msg.str());
        }
        reports.push_back(rep);
    }

    FifResult res = solve_order_zero(problem, options);
    for (auto& rep : reports) {
        const RbOperator op(problem, options.grid_intervals, rep.order);
        PicardOutcome out = picard(op, op.initial_guess(), options.tol, options.max_iters);
        rep.contraction = op.contraction();
        rep.residual = out.residual;
        rep.iterations = out.iterations;
        res.used_finite_differences = res.used_finite_differences || op.maps().used_finite_differences();
        res.derivatives.push_back(std::move(out.values));
    }
    res.smooth = std::move(reports);
    return res;
}

double self_referential_residual(const FifProblem& problem, const SampledFunction& phi, int derivative_order) {
    const IfsMaps maps(problem, derivative_order);
    const SampledFunction t = direct_sweep(maps, phi);
    return kernels::max_abs_diff_serial(t.values(), phi.values());
}

std::vector<double> knot_interpolant(const FifProblem& problem, const UniformGrid& grid) {
    const Partition& part = problem.partition;
    const IfsMaps maps(problem);
    std::vector<double> data(static_cast<std::size_t>(part.size()) + 1);
    for (int i = 0; i <= part.size(); ++i) data[static_cast<std::size_t>(i)] = maps.height(part.knot(i));
    std::vector<double> out(grid.size());
    for (std::size_t j = 0; j < out.size(); ++j) {
        const double x = grid.x(j);
        const int i = part.owner(x);
        const double t = (x - part.knot(i)) / (part.knot(i + 1) - part.knot(i));
        out[j] = std::lerp(data[static_cast<std::size_t>(i)], data[static_cast<std::size_t>(i) + 1], t);
    }
    return out;
}

} // namespace nnfif
