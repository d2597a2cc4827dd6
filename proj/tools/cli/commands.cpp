#include "commands.hpp"

#include "function_registry.hpp"
#include "nnfif/analysis.hpp"
#include "nnfif/chaos_game.hpp"
#include "nnfif/error.hpp"
#include "nnfif/kernels.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

namespace fifcli {

using nlohmann::json;
namespace fs = std::filesystem;

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

namespace {

class CsvWriter {
public:
    CsvWriter(const fs::path& path, const std::vector<std::string>& header) : out_(path) {
        if (!out_) throw std::runtime_error("cannot write " + path.string());
        row_strings(header);
    }
    void row(const std::vector<double>& values) {
        std::vector<std::string> s;
        s.reserve(values.size());
        for (double v : values) s.push_back(format_double(v));
        row_strings(s);
    }

private:
    void row_strings(const std::vector<std::string>& cells) {
        for (std::size_t i = 0; i < cells.size(); ++i) {
            if (i) out_ << ',';
            out_ << cells[i];
        }
        out_ << '\n';
    }
    std::ofstream out_;
};

void write_json(const fs::path& path, const json& j) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    out << j.dump(2) << '\n';
}

json config_json(const RunConfig& cfg) {
    json j = to_json(cfg);
    j.erase("output");  // outputs must not depend on where they are written
    return j;
}

json num_or_null(const std::optional<double>& v) { return v ? json(*v) : json(nullptr); }

nnfif::SolveOptions solve_options(const RunConfig& cfg, int N, int n_floor = 0) {
    int e = cfg.grid_exp;
    // the modulus of continuity at (b - a) / n needs 16 samples per node cell
    while (n_floor > 0 && (std::size_t{1} << e) < static_cast<std::size_t>(16) * static_cast<std::size_t>(n_floor)) ++e;
    nnfif::SolveOptions o;
    o.grid_intervals = grid_intervals(e, N);
    o.tol = cfg.tol;
    o.max_iters = cfg.max_iters;
    return o;
}

nnfif::SampledFunction sample_f(const nnfif::FifProblem& p, const nnfif::UniformGrid& g) {
    const auto& fn = p.f.as_analytic().value;
    return nnfif::SampledFunction::sample(g, fn);
}

std::optional<double> omega_or_null(const nnfif::SampledFunction& f, double delta) {
    if (f.grid().step() > delta / 16.0 * (1.0 + 1e-12)) return std::nullopt;
    return nnfif::modulus_of_continuity(f, delta);
}

json result_json(const nnfif::FifResult& r) {
    return {
        {"residual", r.residual},
        {"iterations", r.iterations},
        {"predicted_iterations", r.predicted_iterations},
        {"contraction", r.contraction},
        {"interpolation_slack", r.interpolation_slack},
        {"knot_error", r.knot_error},
        {"y_min", r.y_min},
        {"y_max", r.y_max},
        {"grid_intervals", r.values.grid().intervals},
    };
}

void ensure_dir(const RunConfig& cfg) { fs::create_directories(cfg.output); }

// ---------------------------------------------------------------------------

void cmd_build(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    const auto problem = make_problem(cfg, cfg.N, cfg.n);
    const auto opts = solve_options(cfg, cfg.N);
    const auto res = nnfif::solve_fif(problem, opts);
    const nnfif::IfsMaps maps(problem, 0);
    const auto& grid = res.values.grid();

    std::optional<nnfif::NnOperator> height_op;
    if (problem.f.is_tabulated()) {
        height_op.emplace(nnfif::OperatorConfig{problem.operator_cfg.kernel, cfg.a, cfg.b, cfg.N, 0}, problem.f);
    }
    std::vector<double> fcol(grid.size());
    std::vector<double> base(grid.size());
    for (std::size_t j = 0; j < grid.size(); ++j) {
        const double x = grid.x(j);
        fcol[j] = height_op ? height_op->eval(x) : problem.f.as_analytic().value(x);
        base[j] = maps.base(x);
    }

    ensure_dir(cfg);
    {
        CsvWriter csv(fs::path(cfg.output) / "fif.csv", {"x", "f", "base", "fif"});
        for (std::size_t j = 0; j < grid.size(); ++j) csv.row({grid.x(j), fcol[j], base[j], res.values[j]});
    }

    json results = result_json(res);
    json diagnostics;
    const double alpha = problem.scaling.max_norm();
    results["self_referential_residual"] = nnfif::self_referential_residual(problem, res.values);
    if (problem.f.is_analytic()) {
        double sup_err = 0.0;
        double gap = 0.0;
        for (std::size_t j = 0; j < grid.size(); ++j) {
            sup_err = std::max(sup_err, std::fabs(res.values[j] - fcol[j]));
            gap = std::max(gap, std::fabs(fcol[j] - base[j]));
        }
        results["sup_error"] = sup_err;
        results["base_gap"] = gap;
        const nnfif::SampledFunction fs_(grid, fcol);
        const auto om_n = omega_or_null(fs_, (cfg.b - cfg.a) / cfg.n);
        if (problem.variant == nnfif::FifVariant::Discrete) {
            const auto om_N = omega_or_null(fs_, (cfg.b - cfg.a) / cfg.N);
            results["bound"] = (om_n && om_N) ? json(nnfif::error_bound_discrete(alpha, *om_n, *om_N)) : json(nullptr);
        } else {
            results["bound"] = nnfif::error_bound_alpha(alpha, gap);
            results["bound_modulus"] = om_n ? json(nnfif::error_bound_alpha(alpha, *om_n)) : json(nullptr);
        }
    } else {
        results["sup_error"] = nullptr;
        results["bound"] = nullptr;
        diagnostics["note"] = "tabulated input: f column is the node interpolant S_N(f)";
    }
    diagnostics["used_finite_differences"] = res.used_finite_differences;
    diagnostics["exact_lookups"] = res.interpolation_slack == 0.0;

    std::optional<double> deviation;
    if (cfg.chaos_points > 0) {
        const auto pts = nnfif::chaos_game_render(problem, cfg.chaos_points, cfg.seed);
        double worst = 0.0;
        const double h = grid.step();
        CsvWriter csv(fs::path(cfg.output) / "chaos.csv", {"x", "y"});
        for (const auto& p : pts) {
            const double t = std::clamp((p.x - grid.a) / h, 0.0, static_cast<double>(grid.intervals));
            const auto j = static_cast<std::size_t>(std::llround(t));
            worst = std::max(worst, std::fabs(p.y - res.values[j]));
            csv.row({p.x, p.y});
        }
        deviation = worst;
        results["chaos_deviation"] = worst;
    }

    write_json(fs::path(cfg.output) / "meta.json",
               {{"config", config_json(cfg)}, {"results", results}, {"diagnostics", diagnostics}});
    out << "fif: residual " << format_double(res.residual) << " after " << res.iterations << " sweeps, grid "
        << grid.intervals << "\n";
    if (deviation && *deviation > 1e-3) {
        err << "chaos-game orbit deviates from the render by " << format_double(*deviation) << "\n";
        throw CrossCheckFailure("chaos-game cross-check failed");
    }
}

void cmd_converge(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    const bool discrete = cfg.discrete;
    struct Row {
        int n, N;
        double sup, bound, slack;
    };
    std::vector<Row> rows;
    json per_row = json::array();
    for (std::size_t i = 0; i < cfg.n_ladder.size(); ++i) {
        const int n = cfg.n_ladder[i];
        const int N = discrete ? (cfg.N_ladder.empty() ? n : cfg.N_ladder[i]) : (cfg.N_ladder.empty() ? cfg.N : cfg.N_ladder[i]);
        const auto problem = make_problem(cfg, N, n);
        if (!problem.f.is_analytic()) throw nnfif::InvalidArgument("converge needs an analytic function");
        const auto res = nnfif::solve_fif(problem, solve_options(cfg, N, std::max(n, N)));
        const auto f = sample_f(problem, res.values.grid());
        const double sup = nnfif::sup_norm_diff(res.values, f);
        const double alpha = problem.scaling.max_norm();
        const double om_n = nnfif::modulus_of_continuity(f, (cfg.b - cfg.a) / n);
        const double bound = discrete
                                 ? nnfif::error_bound_discrete(alpha, om_n, nnfif::modulus_of_continuity(f, (cfg.b - cfg.a) / N))
                                 : nnfif::error_bound_alpha(alpha, om_n);
        rows.push_back({n, N, sup, bound, res.interpolation_slack});
        json r = result_json(res);
        r["n"] = n;
        r["N"] = N;
        r["sup_error"] = sup;
        r["bound"] = bound;
        per_row.push_back(r);
    }

    ensure_dir(cfg);
    {
        std::vector<std::string> header = {"n"};
        if (discrete) header.push_back("N");
        for (const char* h : {"sup_error", "bound", "ratio"}) header.push_back(h);
        CsvWriter csv(fs::path(cfg.output) / "converge.csv", header);
        for (const auto& r : rows) {
            std::vector<double> v = {static_cast<double>(r.n)};
            if (discrete) v.push_back(r.N);
            v.push_back(r.sup);
            v.push_back(r.bound);
            v.push_back(r.bound > 0.0 ? r.sup / r.bound : 0.0);
            csv.row(v);
        }
    }
    bool decreasing = true;
    bool bounded = true;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (i > 0 && !(rows[i].sup < rows[i - 1].sup)) decreasing = false;
        if (rows[i].sup > rows[i].bound + 2.0 * rows[i].slack) bounded = false;
    }
    write_json(fs::path(cfg.output) / "meta.json",
               {{"config", config_json(cfg)},
                {"results", {{"rows", per_row}, {"strictly_decreasing", decreasing}, {"within_bound", bounded}}},
                {"diagnostics", json::object()}});
    for (const auto& r : rows) {
        out << "n=" << r.n;
        if (discrete) out << " N=" << r.N;
        out << " sup_error=" << format_double(r.sup) << " bound=" << format_double(r.bound) << "\n";
    }
    if (!decreasing || !bounded) {
        err << (decreasing ? "" : "sup error is not strictly decreasing along the ladder\n")
            << (bounded ? "" : "sup error exceeds its bound\n");
        throw CrossCheckFailure("convergence cross-check failed");
    }
}

void cmd_dimension(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    RunConfig c = cfg;
    if (!c.origin.contains("grid_exp")) c.grid_exp = 18;
    const auto problem = make_problem(c, c.N, c.n);
    if (!problem.scaling.is_constant()) throw nnfif::InvalidArgument(c.origin.contains("alpha") ? c.origin.at("alpha") + ": box dimension needs constant scalings" : "box dimension needs constant scalings");
    const auto res = nnfif::solve_fif(problem, solve_options(c, c.N));
    const auto pts = nnfif::graph_points(res.values);
    auto report = nnfif::box_counting_dimension(pts, nnfif::default_box_scales());

    const auto& knots = problem.partition.knots();
    std::vector<double> ky;
    for (double x : knots) ky.push_back(problem.f.value(x));
    const bool collinear = nnfif::knots_collinear(knots, ky);
    const double kappa = problem.scaling.kappa();
    report.kappa = kappa;
    if (collinear) {
        report.theoretical.reset();
        report.note = "not applicable: collinear knot data";
    } else {
        report.theoretical = nnfif::theoretical_box_dimension(problem.scaling, c.N);
        report.note = "uniform partition assumed";
    }

    json results = {
        {"theoretical", num_or_null(report.theoretical)},
        {"estimated", report.estimated},
        {"kappa", report.kappa},
        {"scales", report.scales},
        {"counts", report.counts},
        {"r_squared", report.r_squared},
        {"uniform_partition_assumed", report.uniform_partition_assumed},
        {"note", report.note},
    };
    ensure_dir(c);
    const json doc = {{"config", config_json(c)}, {"results", results}, {"diagnostics", result_json(res)}};
    write_json(fs::path(c.output) / "dimension.json", doc);
    write_json(fs::path(c.output) / "meta.json", doc);
    out << "dimension: estimated " << format_double(report.estimated) << ", theoretical "
        << (report.theoretical ? format_double(*report.theoretical) : std::string("not applicable")) << ", r2 "
        << format_double(report.r_squared) << "\n";
    if (collinear) {
        err << "warning: knot data are collinear; the dimension formula does not apply\n";
        return;
    }
    if (std::fabs(report.estimated - *report.theoretical) > 0.15) {
        throw CrossCheckFailure("box-counting estimate differs from the theoretical dimension by more than 0.15");
    }
}

void cmd_smooth(const RunConfig& cfg, std::ostream& out, std::ostream&) {
    const auto problem = make_problem(cfg, cfg.N, cfg.n);
    const auto res = nnfif::solve_fif_smooth(problem, solve_options(cfg, cfg.N));
    const auto& grid = res.values.grid();
    const std::size_t G = grid.intervals;
    const double h = grid.step();
    const int r = cfg.r;

    std::vector<const nnfif::SampledFunction*> orders = {&res.values};
    for (const auto& d : res.derivatives) orders.push_back(&d);

    // fd[k-1][j]: difference quotient of order k-1 at j
    std::vector<std::vector<double>> fd(static_cast<std::size_t>(r), std::vector<double>(grid.size()));
    std::vector<double> mismatch(static_cast<std::size_t>(r), 0.0);
    for (int k = 1; k <= r; ++k) {
        const auto& lo = *orders[static_cast<std::size_t>(k - 1)];
        const auto& hi = *orders[static_cast<std::size_t>(k)];
        auto& col = fd[static_cast<std::size_t>(k - 1)];
        col[0] = (lo[1] - lo[0]) / h;
        col[G] = (lo[G] - lo[G - 1]) / h;
        for (std::size_t j = 1; j < G; ++j) {
            col[j] = (lo[j + 1] - lo[j - 1]) / (2.0 * h);
            mismatch[static_cast<std::size_t>(k - 1)] = std::max(mismatch[static_cast<std::size_t>(k - 1)], std::fabs(col[j] - hi[j]));
        }
    }

    ensure_dir(cfg);
    {
        std::vector<std::string> header = {"x", "fif"};
        for (int k = 1; k <= r; ++k) header.push_back("fif_d" + std::to_string(k));
        for (int k = 1; k <= r; ++k) header.push_back("fd_check_d" + std::to_string(k));
        CsvWriter csv(fs::path(cfg.output) / "smooth.csv", header);
        std::vector<double> row;
        for (std::size_t j = 0; j < grid.size(); ++j) {
            row.assign({grid.x(j)});
            for (const auto* o : orders) row.push_back((*o)[j]);
            for (const auto& col : fd) row.push_back(col[j]);
            csv.row(row);
        }
    }
    json orders_json = json::array();
    for (const auto& s : res.smooth) {
        orders_json.push_back({
            {"order", s.order},
            {"y_left", s.y_left},
            {"y_right", s.y_right},
            {"f_left", s.f_left},
            {"f_right", s.f_right},
            {"endpoint_residual", s.endpoint_residual},
            {"matching_residual", s.matching_residual},
            {"knot_residual", s.knot_residual},
            {"contraction", s.contraction},
            {"residual", s.residual},
            {"iterations", s.iterations},
        });
    }
    json results = result_json(res);
    results["orders"] = orders_json;
    results["fd_mismatch"] = mismatch;
    write_json(fs::path(cfg.output) / "meta.json",
               {{"config", config_json(cfg)},
                {"results", results},
                {"diagnostics", {{"used_finite_differences", res.used_finite_differences}}}});
    for (const auto& s : res.smooth) {
        out << "order " << s.order << ": matching residual " << format_double(s.matching_residual)
            << ", endpoint residual " << format_double(s.endpoint_residual) << "\n";
    }
}

void cmd_holder(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    struct Row {
        int n;
        double sup, semi, combined;
        int iterations, predicted, holder_predicted;
    };
    std::vector<Row> rows;
    double gate = 0.0;
    for (int n : cfg.n_ladder) {
        const auto problem = make_problem(cfg, cfg.N, n);
        if (!problem.f.is_analytic()) throw nnfif::InvalidArgument("holder needs an analytic function");
        try {
            gate = nnfif::check_holder_gate(problem.partition, problem.scaling, cfg.mu);
        } catch (const nnfif::HypothesisFailure& e) {
            throw nnfif::HypothesisFailure((cfg.origin.contains("alpha") ? cfg.origin.at("alpha") + ": " : "") + e.what());
        }
        const auto res = nnfif::solve_fif(problem, solve_options(cfg, cfg.N));
        const auto f = sample_f(problem, res.values.grid());
        std::vector<double> e(f.size());
        for (std::size_t j = 0; j < e.size(); ++j) e[j] = res.values[j] - f[j];
        const auto sub = nnfif::holder_subsample(nnfif::SampledFunction(f.grid(), std::move(e)));
        const auto rep = nnfif::holder_seminorm(sub, {cfg.mu});
        const int hp = gate > 0.0 ? static_cast<int>(std::ceil(std::log(cfg.tol) / std::log(gate))) + 1 : 1;
        rows.push_back({n, rep.sup, rep.seminorm, rep.combined, res.iterations, res.predicted_iterations, hp});
    }
    ensure_dir(cfg);
    {
        CsvWriter csv(fs::path(cfg.output) / "holder.csv",
                      {"n", "sup_error", "holder_seminorm_error", "combined_0mu_error"});
        for (const auto& r : rows) csv.row({static_cast<double>(r.n), r.sup, r.semi, r.combined});
    }
    bool decreasing = true;
    bool sweeps_ok = true;
    json rj = json::array();
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const auto& r = rows[i];
        if (i > 0 && !(r.combined < rows[i - 1].combined)) decreasing = false;
        if (r.iterations > r.holder_predicted + 5) sweeps_ok = false;
        rj.push_back({{"n", r.n},
                      {"sup_error", r.sup},
                      {"holder_seminorm_error", r.semi},
                      {"combined_0mu_error", r.combined},
                      {"iterations", r.iterations},
                      {"predicted_iterations", r.predicted},
                      {"holder_predicted_iterations", r.holder_predicted}});
    }
    write_json(fs::path(cfg.output) / "meta.json",
               {{"config", config_json(cfg)},
                {"results", {{"rows", rj}, {"holder_factor", gate}, {"decreasing", decreasing}}},
                {"diagnostics", {{"subsample_max_points", 4000}}}});
    for (const auto& r : rows) {
        out << "n=" << r.n << " combined_0mu_error=" << format_double(r.combined) << " sweeps=" << r.iterations << "\n";
    }
    if (!decreasing || !sweeps_ok) {
        err << (decreasing ? "" : "combined Hölder error is not decreasing along the ladder\n")
            << (sweeps_ok ? "" : "Picard iteration exceeded the contraction-predicted sweep count\n");
        throw CrossCheckFailure("Hölder cross-check failed");
    }
}

void cmd_bounds(const RunConfig& cfg, std::ostream& out, std::ostream&) {
    struct Row {
        int n, N;
        double om_n, om_N, b16, b27;
    };
    std::vector<Row> rows;
    for (std::size_t i = 0; i < cfg.n_ladder.size(); ++i) {
        const int n = cfg.n_ladder[i];
        const int N = cfg.N_ladder.empty() ? (cfg.discrete ? n : cfg.N) : cfg.N_ladder[i];
        const auto problem = make_problem(cfg, N, n);
        if (!problem.f.is_analytic()) throw nnfif::InvalidArgument("bounds needs an analytic function");
        const auto opts = solve_options(cfg, N, std::max(n, N));
        const nnfif::UniformGrid g{cfg.a, cfg.b, opts.grid_intervals};
        const auto f = sample_f(problem, g);
        const double alpha = problem.scaling.max_norm();
        const double om_n = nnfif::modulus_of_continuity(f, (cfg.b - cfg.a) / n);
        const double om_N = nnfif::modulus_of_continuity(f, (cfg.b - cfg.a) / N);
        rows.push_back({n, N, om_n, om_N, nnfif::error_bound_alpha(alpha, om_n),
                        nnfif::error_bound_discrete(alpha, om_n, om_N)});
    }
    ensure_dir(cfg);
    CsvWriter csv(fs::path(cfg.output) / "bounds.csv",
                  {"n", "N", "omega_n", "omega_N", "bound_alpha", "bound_discrete"});
    out << "n,N,omega_n,omega_N,bound_alpha,bound_discrete\n";
    json rj = json::array();
    for (const auto& r : rows) {
        rj.push_back({{"n", r.n}, {"N", r.N}, {"omega_n", r.om_n}, {"omega_N", r.om_N}, {"bound_alpha", r.b16},
                      {"bound_discrete", r.b27}});
        const std::vector<double> v = {static_cast<double>(r.n), static_cast<double>(r.N), r.om_n, r.om_N, r.b16, r.b27};
        csv.row(v);
        for (std::size_t i = 0; i < v.size(); ++i) out << (i ? "," : "") << format_double(v[i]);
        out << "\n";
    }
    write_json(fs::path(cfg.output) / "meta.json",
               {{"config", config_json(cfg)}, {"results", {{"rows", rj}}}, {"diagnostics", json::object()}});
}

} // namespace

void run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    validate(cfg);
    switch (cfg.command) {
    case Command::Build: cmd_build(cfg, out, err); break;
    case Command::Converge: cmd_converge(cfg, out, err); break;
    case Command::Dimension: cmd_dimension(cfg, out, err); break;
    case Command::Smooth: cmd_smooth(cfg, out, err); break;
    case Command::Holder: cmd_holder(cfg, out, err); break;
    case Command::Bounds: cmd_bounds(cfg, out, err); break;
    }
}

int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    nnfif::kernels::apply_thread_env();

    CLI::App app{"Fractal interpolation functions with neural-network base operators", "fif"};
    std::string command;
    std::string config_path;
    std::optional<std::string> function, alpha, kernel, output;
    std::vector<double> interval;
    std::optional<int> N, n, r, grid_exp, max_iters;
    std::optional<double> m, tol, mu;
    std::optional<std::uint64_t> seed;
    std::optional<std::size_t> chaos_points;
    std::vector<int> n_ladder, N_ladder;
    bool discrete = false;

    app.add_option("command", command, "build | converge | dimension | smooth | holder | bounds");
    app.add_option("--config", config_path, "JSON config file (or a meta.json); flags override it");
    app.add_option("--function", function, "sin, cos, exp, poly(c0,...), abspow(c,mu), weier, table:<path>");
    app.add_option("--interval", interval, "a b")->expected(2);
    app.add_option("--N", N, "number of partition subintervals");
    app.add_option("--n", n, "operator nodes minus one");
    app.add_option("--r", r, "derivative order of the base operator");
    app.add_option("--alpha", alpha, "constant, comma list, sinbump(amp) or linear(c0,c1)");
    app.add_option("--kernel", kernel, "ramp, smoothstep<k>, smoothbump");
    app.add_option("--m", m, "sigmoid transition half-width");
    app.add_option("--grid-exp", grid_exp, "render grid has at least 2^grid_exp intervals");
    app.add_option("--tol", tol, "Picard tolerance");
    app.add_option("--max-iters", max_iters, "Picard sweep limit");
    app.add_option("--seed", seed, "chaos-game seed");
    app.add_option("--output,-o", output, "output directory");
    app.add_flag("--discrete", discrete, "node-data variant (height S_N f)");
    app.add_option("--n-ladder", n_ladder, "n values for converge/holder/bounds")->delimiter(',');
    app.add_option("--N-ladder", N_ladder, "N values paired with --n-ladder")->delimiter(',');
    app.add_option("--mu", mu, "Hölder exponent");
    app.add_option("--chaos-points", chaos_points, "build: chaos-game cross-check orbit length");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kInvalidConfig;
    }

    try {
        RunConfig cfg;
        if (!config_path.empty()) {
            std::ifstream in(config_path);
            if (!in) throw nnfif::InvalidArgument("cannot open config '" + config_path + "'");
            json j;
            try {
                j = json::parse(in);
            } catch (const json::parse_error& e) {
                throw nnfif::InvalidArgument(config_path + ": " + e.what());
            }
            merge_json(cfg, j, config_path);
        }
        auto set = [&](const char* key, const char* flag, auto& dst, const auto& src) {
            if (src) {
                dst = *src;
                cfg.origin[key] = flag;
            }
        };
        if (!command.empty()) {
            cfg.command = parse_command(command);
            cfg.origin["command"] = "command";
        } else if (!cfg.origin.contains("command")) {
            throw nnfif::InvalidArgument("no command given");
        }
        set("function", "--function", cfg.function, function);
        set("alpha", "--alpha", cfg.alpha, alpha);
        set("kernel", "--kernel", cfg.kernel, kernel);
        set("output", "--output", cfg.output, output);
        set("N", "--N", cfg.N, N);
        set("n", "--n", cfg.n, n);
        set("r", "--r", cfg.r, r);
        set("grid_exp", "--grid-exp", cfg.grid_exp, grid_exp);
        set("max_iters", "--max-iters", cfg.max_iters, max_iters);
        set("tol", "--tol", cfg.tol, tol);
        set("mu", "--mu", cfg.mu, mu);
        set("seed", "--seed", cfg.seed, seed);
        set("chaos_points", "--chaos-points", cfg.chaos_points, chaos_points);
        if (m) {
            cfg.m = *m;
            cfg.origin["m"] = "--m";
        }
        if (!interval.empty()) {
            cfg.a = interval[0];
            cfg.b = interval[1];
            cfg.origin["interval"] = "--interval";
        }
        if (!n_ladder.empty()) {
            cfg.n_ladder = n_ladder;
            cfg.origin["n_ladder"] = "--n-ladder";
        }
        if (!N_ladder.empty()) {
            cfg.N_ladder = N_ladder;
            cfg.origin["N_ladder"] = "--N-ladder";
        }
        if (discrete) {
            cfg.discrete = true;
            cfg.origin["discrete"] = "--discrete";
        }
        run(cfg, out, err);
        return kOk;
    } catch (const nnfif::NonConvergenceError& e) {
        err << "error: " << e.what() << "\n";
        return kNonConvergence;
    } catch (const CrossCheckFailure& e) {
        err << "error: " << e.what() << "\n";
        return kCrossCheck;
    } catch (const nnfif::Error& e) {
        err << "error: " << e.what() << "\n";
        return kInvalidConfig;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kFailure;
    }
}

} // namespace fifcli
