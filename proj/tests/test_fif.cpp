#include "nnfif/analysis.hpp"
#include "nnfif/chaos_game.hpp"
#include "nnfif/error.hpp"
#include "nnfif/fif.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

using namespace nnfif;

namespace {

const double pi = std::numbers::pi;

FunctionInput sin_input() {
    return FunctionInput::analytic([](double x) { return std::sin(x); },
                                   {[](double x) { return std::cos(x); }, [](double x) { return -std::sin(x); }});
}

FifProblem alpha_problem(FunctionInput f, double a, double b, int N, int n, std::vector<double> alpha,
                         SigmoidalKernel kernel = SigmoidalKernel::ramp()) {
    return FifProblem{.variant = FifVariant::AlphaFractal,
                      .partition = Partition::uniform(a, b, N),
                      .scaling = ScalingVector::constant(std::move(alpha)),
                      .operator_cfg = OperatorConfig{kernel, a, b, n, 0},
                      .f = std::move(f)};
}

std::vector<double> const_alpha(int N, double v) { return std::vector<double>(static_cast<std::size_t>(N), v); }

} // namespace

TEST_CASE("alpha = 0 reproduces f") {
    const auto p = alpha_problem(sin_input(), 0.0, pi, 4, 32, const_alpha(4, 0.0));
    const auto r = solve_fif(p, {.grid_intervals = 1 << 12});
    for (std::size_t j = 0; j < r.values.size(); ++j) CHECK(std::fabs(r.values[j] - std::sin(r.values.grid().x(j))) <= 1e-12);
    const auto t = rb_apply(p, SampledFunction::sample(r.values.grid(), [](double x) { return std::sin(x) + x * (pi - x); }));
    for (std::size_t j = 0; j < t.size(); ++j) CHECK(t[j] == std::sin(t.grid().x(j)));
}

TEST_CASE("fixed point agrees with the forward-map oracle") {
    const oracle::Fn f = [](double x) { return std::exp(x) * std::sin(4 * x); };
    const oracle::Sigmoid ramp{0, 0, 0.5};
    const oracle::Fn base = [&](double x) { return oracle::nn_sum(ramp, f, 0.0, 1.0, 8, x); };
    const std::vector<double> alpha = {0.3, -0.5, 0.6, 0.2};
    const auto ref = oracle::fif_forward(0.0, 1.0, 4, alpha, f, base, 1024, 80);
    const auto p = alpha_problem(FunctionInput::analytic(f), 0.0, 1.0, 4, 8, alpha);
    const auto r = solve_fif(p, {.grid_intervals = 1024, .tol = 1e-12});
    double diff = 0.0;
    for (std::size_t j = 0; j < ref.size(); ++j) diff = std::max(diff, std::fabs(ref[j] - r.values[j]));
    CHECK(diff <= 1e-10);
    CHECK(r.interpolation_slack == 0.0);
}

TEST_CASE("parallel, serial and direct sweeps agree") {
    const auto p = alpha_problem(sin_input(), 0.0, pi, 5, 17, {0.3, -0.2, 0.5, 0.1, -0.6}, SigmoidalKernel::smooth_bump());
    const RbOperator op(p, 5 * 256);
    auto phi = op.initial_guess();
    for (int s = 0; s < 3; ++s) {
        const auto a = op.apply(phi);
        const auto b = op.apply_serial(phi);
        const auto c = op.apply_reference(phi);
        for (std::size_t j = 0; j < a.size(); ++j) {
            CHECK(a[j] == b[j]);
            CHECK(std::fabs(a[j] - c[j]) <= 1e-14);
        }
        phi = a;
    }
}

TEST_CASE("knot interpolation, residual and the alpha bound") {
    const auto p = alpha_problem(sin_input(), 0.0, pi, 4, 32, const_alpha(4, 0.3));
    const auto r = solve_fif(p, {.grid_intervals = 1 << 14});
    CHECK(r.knot_error <= 1e-9);
    const RbOperator op(p, 1 << 14);
    for (std::size_t k : op.knot_indices()) {
        CHECK(std::fabs(r.values[k] - std::sin(r.values.grid().x(k))) <= 1e-9);
    }
    CHECK(r.residual <= 1e-10);
    CHECK(self_referential_residual(p, r.values) <= 1e-10 + r.interpolation_slack);
    CHECK(r.iterations <= r.predicted_iterations);
    const auto f = SampledFunction::sample(r.values.grid(), [](double x) { return std::sin(x); });
    NnOperator base(p.operator_cfg, p.f);
    double gap = 0.0;
    for (std::size_t j = 0; j < f.size(); ++j) gap = std::max(gap, std::fabs(f[j] - base.eval(f.grid().x(j))));
    CHECK(sup_norm_diff(r.values, f) <= 0.3 / 0.7 * gap + 1e-9);
}

TEST_CASE("one sweep contracts by |alpha|") {
    const auto p = alpha_problem(sin_input(), 0.0, pi, 4, 8, {0.5, -0.7, 0.2, 0.4});
    const RbOperator op(p, 4 * 64);
    const auto phi0 = op.initial_guess();
    std::vector<double> b(phi0.size());
    for (std::size_t j = 0; j < b.size(); ++j) b[j] = op.maps().base(phi0.grid().x(j));
    const SampledFunction psi0(phi0.grid(), b);
    const double before = sup_norm_diff(phi0, psi0);
    const double after = sup_norm_diff(op.apply(phi0), op.apply(psi0));
    CHECK(after <= 0.7 * before + 1e-15);
}

TEST_CASE("membership and grid preconditions") {
    const auto p = alpha_problem(sin_input(), 0.0, pi, 4, 8, const_alpha(4, 0.3));
    const auto bad = SampledFunction::sample({0.0, pi, 256}, [](double x) { return std::sin(x) + 1.0; });
    CHECK_THROWS_WITH_AS((void)rb_apply(p, bad), doctest::Contains("not in X_{β1}^{β2}"), InvalidArgument);
    CHECK_THROWS_AS((void)solve_fif(p, {.grid_intervals = 48}), InvalidArgument);
    CHECK_THROWS_AS((void)solve_fif(p, {.grid_intervals = 4 * 24}), InvalidArgument);
    const FifProblem wrong_interval{.variant = FifVariant::AlphaFractal,
                                    .partition = Partition::uniform(0.0, 1.0, 4),
                                    .scaling = ScalingVector::constant(const_alpha(4, 0.3)),
                                    .operator_cfg = OperatorConfig{SigmoidalKernel::ramp(), 0.0, 2.0, 8, 0},
                                    .f = sin_input()};
    CHECK_THROWS_AS(wrong_interval.validate(), InvalidArgument);
    CHECK_THROWS_AS(alpha_problem(sin_input(), 0.0, pi, 4, 8, const_alpha(3, 0.3)).validate(), InvalidArgument);
}

TEST_CASE("non-convergence carries the last iterate") {
    const auto p = alpha_problem(sin_input(), 0.0, pi, 4, 8, const_alpha(4, 0.9));
    try {
        (void)solve_fif(p, {.grid_intervals = 1024, .tol = 1e-14, .max_iters = 2});
        FAIL("expected NonConvergenceError");
    } catch (const NonConvergenceError& e) {
        CHECK(e.iterations() == 2);
        CHECK(e.best().size() == 1025);
        CHECK(e.residual() > 0.0);
    }
}

TEST_CASE("fixed point does not depend on the starting iterate") {
    const auto p = alpha_problem(sin_input(), 0.0, pi, 4, 16, {0.4, -0.3, 0.5, 0.2});
    const double tol = 1e-11;
    const auto a = solve_fif(p, {.grid_intervals = 1 << 12, .tol = tol});
    const auto b = solve_fif(p, {.grid_intervals = 1 << 12, .tol = tol, .initial = knot_interpolant(p, a.values.grid())});
    CHECK(sup_norm_diff(a.values, b.values) <= 2 * tol);
}

TEST_CASE("linearity in f") {
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> u(-2.0, 2.0);
    const double tol = 1e-11;
    const auto fp = alpha_problem(sin_input(), 0.0, pi, 4, 16, {0.4, -0.3, 0.5, 0.2});
    auto gp = fp;
    gp.f = FunctionInput::analytic([](double x) { return std::exp(-x) * x; });
    const auto F = solve_fif(fp, {.grid_intervals = 1 << 12, .tol = tol});
    const auto G = solve_fif(gp, {.grid_intervals = 1 << 12, .tol = tol});
    for (int t = 0; t < 5; ++t) {
        const double l = u(rng), m = u(rng);
        auto hp = fp;
        hp.f = FunctionInput::analytic([=](double x) { return l * std::sin(x) + m * std::exp(-x) * x; });
        const auto H = solve_fif(hp, {.grid_intervals = 1 << 12, .tol = tol});
        double diff = 0.0;
        for (std::size_t j = 0; j < H.values.size(); ++j) diff = std::max(diff, std::fabs(H.values[j] - l * F.values[j] - m * G.values[j]));
        CHECK(diff <= 5 * tol);
    }
}

TEST_CASE("boundedness over a corpus") {
    const std::vector<RealFn> corpus = {
        [](double x) { return std::sin(x); },         [](double x) { return std::cos(3 * x); },
        [](double x) { return std::exp(x); },         [](double x) { return x * x - 1.0; },
        [](double x) { return std::sqrt(x); },        [](double x) { return std::fabs(x - 1.0); },
        [](double x) { return std::tanh(4 * x - 2); }, [](double x) { return 1.0 / (1.0 + x * x); },
        [](double x) { return std::sin(7 * x) * x; }, [](double x) { return std::log1p(x); },
    };
    const double alpha = 0.6;
    const UniformGrid g{0.0, 2.0, 1 << 12};
    std::vector<double> ratio, fnorm, fifnorm;
    for (const auto& fn : corpus) {
        const auto p = alpha_problem(FunctionInput::analytic(fn), 0.0, 2.0, 4, 8, const_alpha(4, alpha));
        const auto r = solve_fif(p, {.grid_intervals = g.intervals});
        const auto f = SampledFunction::sample(g, fn);
        NnOperator base(p.operator_cfg, p.f);
        double gap = 0.0;
        for (std::size_t j = 0; j < g.size(); ++j) gap = std::max(gap, std::fabs(f[j] - base.eval(g.x(j))));
        ratio.push_back(gap / sup_norm(f));
        fnorm.push_back(sup_norm(f));
        fifnorm.push_back(sup_norm(r.values));
    }
    const double M = *std::max_element(ratio.begin(), ratio.end());
    for (std::size_t i = 0; i < corpus.size(); ++i) CHECK(fifnorm[i] <= fnorm[i] * (1.0 + alpha * M / (1.0 - alpha)) + 1e-12);
}

TEST_CASE("variable scaling functions") {
    const auto s = ScalingVector::functions(std::vector<RealFn>(4, [](double x) { return 0.3 * std::sin(pi * x); }), 0.0, 1.0);
    const FifProblem p{.variant = FifVariant::AlphaFractal,
                       .partition = Partition::uniform(0.0, 1.0, 4),
                       .scaling = s,
                       .operator_cfg = OperatorConfig{SigmoidalKernel::ramp(), 0.0, 1.0, 8, 0},
                       .f = FunctionInput::analytic([](double x) { return std::sqrt(x); })};
    const double M = check_holder_gate(p.partition, p.scaling, 0.5);
    CHECK(M == doctest::Approx(0.6).epsilon(1e-6));
    const auto r = solve_fif(p, {.grid_intervals = 1 << 12});
    CHECK(r.iterations <= static_cast<int>(std::ceil(std::log(1e-10) / std::log(M))) + 5);
    CHECK(self_referential_residual(p, r.values) <= 1e-10);
    const auto h = holder_seminorm(holder_subsample(r.values), {0.5});
    CHECK(std::isfinite(h.seminorm));
}

TEST_CASE("discrete variant") {
    auto make = [](FunctionInput f, int N, int n, double alpha) {
        return FifProblem{.variant = FifVariant::Discrete,
                          .partition = Partition::uniform(0.0, 1.0, N),
                          .scaling = ScalingVector::constant(const_alpha(N, alpha)),
                          .operator_cfg = OperatorConfig{SigmoidalKernel::ramp(), 0.0, 1.0, n, 0},
                          .f = std::move(f)};
    };
    const RealFn expf = [](double x) { return std::exp(x); };

    SUBCASE("alpha = 0 gives S_N") {
        const auto r = solve_fif(make(FunctionInput::analytic(expf), 8, 24, 0.0), {.grid_intervals = 1 << 12});
        NnOperator sN({SigmoidalKernel::ramp(), 0.0, 1.0, 8, 0}, FunctionInput::analytic(expf));
        for (std::size_t j = 0; j < r.values.size(); ++j) CHECK(r.values[j] == doctest::Approx(sN.eval(r.values.grid().x(j))).epsilon(1e-15));
    }
    SUBCASE("error bound for exp") {
        const auto r = solve_fif_discrete(make(FunctionInput::analytic(expf), 16, 16, 0.2), {.grid_intervals = 1 << 12});
        const auto f = SampledFunction::sample(r.values.grid(), expf);
        const double w = modulus_of_continuity(f, 1.0 / 16);
        CHECK(sup_norm_diff(r.values, f) <= 0.25 * w + 1.25 * w + 1e-9);
        CHECK(r.knot_error <= 1e-9);
    }
    SUBCASE("tabulated input matches the analytic height construction") {
        std::vector<double> xs, ys;
        for (int k = 0; k <= 16; ++k) {
            xs.push_back(k == 16 ? 1.0 : k / 16.0);
            ys.push_back(expf(xs.back()));
        }
        const auto tab = solve_fif(make(FunctionInput::tabulated(xs, ys), 16, 16, 0.3), {.grid_intervals = 1 << 12});
        NnOperator sN({SigmoidalKernel::ramp(), 0.0, 1.0, 16, 0}, FunctionInput::analytic(expf));
        const auto ana = solve_fif(alpha_problem(FunctionInput::analytic([&](double x) { return sN.eval(x); }), 0.0, 1.0, 16, 16,
                                                 const_alpha(16, 0.3)),
                                   {.grid_intervals = 1 << 12});
        CHECK(sup_norm_diff(tab.values, ana.values) <= 1e-10);
    }
    SUBCASE("f is only read at nodes") {
        std::vector<double> seen;
        const auto r = solve_fif(make(FunctionInput::analytic([&](double x) {
                                          seen.push_back(x);
                                          return expf(x);
                                      }),
                                      8, 12, 0.4),
                                 {.grid_intervals = 1 << 10});
        CHECK(r.residual <= 1e-10);
        for (double x : seen) {
            const bool on8 = std::fabs(x * 8 - std::round(x * 8)) <= 1e-9;
            const bool on12 = std::fabs(x * 12 - std::round(x * 12)) <= 1e-9;
            CHECK((on8 || on12));
        }
    }
    SUBCASE("tabulated input needs the discrete variant") {
        auto p = alpha_problem(FunctionInput::tabulated({0, 0.5, 1}, {0, 1, 0}), 0.0, 1.0, 2, 2, const_alpha(2, 0.1));
        CHECK_THROWS_AS(p.validate(), InvalidArgument);
    }
}

TEST_CASE("smooth variant") {
    auto make = [](double alpha, int r, SigmoidalKernel k, int n) {
        return FifProblem{.variant = FifVariant::Smooth,
                          .partition = Partition::uniform(0.0, pi, 4),
                          .scaling = ScalingVector::constant(const_alpha(4, alpha)),
                          .operator_cfg = OperatorConfig{k, 0.0, pi, n, r},
                          .f = sin_input()};
    };
    SUBCASE("alpha = 0 collapses to f and f'") {
        const auto r = solve_fif_smooth(make(0.0, 1, SigmoidalKernel::smoothstep(1), 16), {.grid_intervals = 1 << 12});
        REQUIRE(r.derivatives.size() == 1);
        for (std::size_t j = 0; j < r.values.size(); ++j) {
            const double x = r.values.grid().x(j);
            CHECK(std::fabs(r.values[j] - std::sin(x)) <= 1e-8);
            CHECK(std::fabs(r.derivatives[0][j] - std::cos(x)) <= 1e-8);
        }
    }
    SUBCASE("matching conditions and endpoint identities") {
        const auto r = solve_fif_smooth(make(0.2, 1, SigmoidalKernel::smoothstep(1), 32), {.grid_intervals = 1 << 12});
        REQUIRE(r.smooth.size() == 1);
        const auto& s = r.smooth[0];
        CHECK(s.matching_residual <= 1e-8);
        CHECK(s.endpoint_residual <= 1e-8);
        CHECK(s.knot_residual <= 1e-8);
        CHECK(s.y_left == doctest::Approx(1.0).epsilon(1e-8));
        CHECK(s.y_right == doctest::Approx(-1.0).epsilon(1e-8));
        // derivative FIF passes through f'(x_i)
        const RbOperator op(make(0.2, 1, SigmoidalKernel::smoothstep(1), 32), 1 << 12, 1);
        for (std::size_t k : op.knot_indices()) CHECK(std::fabs(r.derivatives[0][k] - std::cos(r.values.grid().x(k))) <= 1e-8);
    }
    SUBCASE("order 2") {
        const auto r = solve_fif_smooth(make(0.05, 2, SigmoidalKernel::smoothstep(2), 32), {.grid_intervals = 1 << 12});
        REQUIRE(r.derivatives.size() == 2);
        for (const auto& s : r.smooth) CHECK(s.matching_residual <= 1e-8);
    }
    SUBCASE("gates") {
        CHECK_THROWS_AS(make(0.25, 1, SigmoidalKernel::smoothstep(1), 16).validate(), InvalidArgument);
        CHECK_THROWS_WITH_AS(make(0.05, 2, SigmoidalKernel::ramp(), 16).validate(), "insufficient kernel smoothness", InvalidArgument);
        auto p = make(0.2, 1, SigmoidalKernel::smoothstep(1), 16);
        p.variant = FifVariant::AlphaFractal;
        CHECK_THROWS_AS(p.validate(), InvalidArgument);
    }
}

TEST_CASE("chaos game") {
    SUBCASE("alpha = 0 with linear f stays on the line") {
        const auto p = alpha_problem(FunctionInput::analytic([](double x) { return 2 * x + 1; }), 0.0, 1.0, 3, 6, const_alpha(3, 0.0));
        for (const auto& q : chaos_game_render(p, 5000, 1)) CHECK(std::fabs(q.y - (2 * q.x + 1)) <= 1e-9);
    }
    SUBCASE("orbit is dense in x") {
        const auto p = alpha_problem(FunctionInput::analytic([](double x) { return x * (1 - x); }), 0.0, 1.0, 2, 8, {0.4, 0.4});
        const auto pts = chaos_game_render(p, 100000, 9);
        std::vector<int> hist(100, 0);
        for (const auto& q : pts) hist[std::min<std::size_t>(99, static_cast<std::size_t>(q.x * 100))]++;
        CHECK(*std::min_element(hist.begin(), hist.end()) >= 1);
    }
    SUBCASE("agrees with the render and is reproducible") {
        const auto p = alpha_problem(sin_input(), 0.0, pi, 4, 32, const_alpha(4, 0.3));
        const auto r = solve_fif(p, {.grid_intervals = 1 << 14});
        const auto pts = chaos_game_render(p, 100000, 42);
        const double h = r.values.grid().step();
        double worst = 0.0;
        for (const auto& q : pts) worst = std::max(worst, std::fabs(q.y - r.values[static_cast<std::size_t>(std::llround(q.x / h))]));
        CHECK(worst <= 1e-3);
        const auto again = chaos_game_render(p, 100000, 42);
        CHECK(again.size() == pts.size());
        CHECK(again.back().x == pts.back().x);
        CHECK(again.back().y == pts.back().y);
        CHECK_THROWS_AS((void)chaos_game_render(p, 10, 1), InvalidArgument);
    }
}
