#include "run_config.hpp"

#include "function_registry.hpp"
#include "nnfif/error.hpp"

#include <cmath>
#include <regex>

namespace fifcli {

using nlohmann::json;
using nnfif::InvalidArgument;

namespace {

const std::map<std::string, Command>& command_table() {
    static const std::map<std::string, Command> t = {
        {"build", Command::Build},   {"converge", Command::Converge}, {"dimension", Command::Dimension},
        {"smooth", Command::Smooth}, {"holder", Command::Holder},     {"bounds", Command::Bounds},
    };
    return t;
}

std::string where(const RunConfig& cfg, const std::string& field) {
    auto it = cfg.origin.find(field);
    return it == cfg.origin.end() ? "default " + field : it->second;
}

template <class Fn>
auto located(const RunConfig& cfg, const std::string& field, Fn&& fn) {
    try {
        return fn();
    } catch (const nnfif::Error& e) {
        throw InvalidArgument(where(cfg, field) + ": " + e.what());
    }
}

template <class T>
void take(const json& j, const char* key, T& dst, RunConfig& cfg, const std::string& source) {
    if (!j.contains(key)) return;
    try {
        dst = j.at(key).get<T>();
    } catch (const json::exception& e) {
        throw InvalidArgument(source + ":" + key + ": " + e.what());
    }
    cfg.origin[key] = source + ":" + key;
}

} // namespace

std::string command_name(Command c) {
    for (const auto& [name, value] : command_table()) {
        if (value == c) return name;
    }
    return "build";
}

Command parse_command(const std::string& name) {
    auto it = command_table().find(name);
    if (it == command_table().end()) throw InvalidArgument("unknown command '" + name + "'");
    return it->second;
}

json to_json(const RunConfig& cfg) {
    json j;
    j["command"] = command_name(cfg.command);
    j["function"] = cfg.function;
    j["interval"] = {cfg.a, cfg.b};
    j["N"] = cfg.N;
    j["n"] = cfg.n;
    j["r"] = cfg.r;
    j["alpha"] = cfg.alpha;
    j["kernel"] = cfg.kernel;
    j["m"] = cfg.m ? json(*cfg.m) : json(nullptr);
    j["grid_exp"] = cfg.grid_exp;
    j["tol"] = cfg.tol;
    j["max_iters"] = cfg.max_iters;
    j["seed"] = cfg.seed;
    j["output"] = cfg.output;
    j["discrete"] = cfg.discrete;
    j["n_ladder"] = cfg.n_ladder;
    j["N_ladder"] = cfg.N_ladder;
    j["mu"] = cfg.mu;
    j["chaos_points"] = cfg.chaos_points;
    return j;
}

void merge_json(RunConfig& cfg, const json& in, const std::string& source) {
    const json& j = (in.is_object() && in.contains("config") && in["config"].is_object()) ? in["config"] : in;
    if (!j.is_object()) throw InvalidArgument(source + ": configuration must be a JSON object");
    static const char* known[] = {"command", "function", "interval", "N",        "n",        "r",
                                  "alpha",   "kernel",   "m",        "grid_exp", "tol",      "max_iters",
                                  "seed",    "output",   "discrete", "n_ladder", "N_ladder", "mu",
                                  "chaos_points"};
    for (const auto& [key, value] : j.items()) {
        bool ok = false;
        for (const char* k : known) ok = ok || key == k;
        if (!ok) throw InvalidArgument(source + ":" + key + ": unknown configuration key");
    }
    if (j.contains("command")) {
        try {
            cfg.command = parse_command(j["command"].get<std::string>());
        } catch (const std::exception& e) {
            throw InvalidArgument(source + ":command: " + e.what());
        }
        cfg.origin["command"] = source + ":command";
    }
    if (j.contains("interval")) {
        std::vector<double> iv;
        take(j, "interval", iv, cfg, source);
        if (iv.size() != 2) throw InvalidArgument(source + ":interval: expected [a, b]");
        cfg.a = iv[0];
        cfg.b = iv[1];
    }
    if (j.contains("alpha") && j["alpha"].is_number()) {
        // A bare number is accepted for convenience.
        cfg.alpha = j["alpha"].dump();
        cfg.origin["alpha"] = source + ":alpha";
    } else {
        take(j, "alpha", cfg.alpha, cfg, source);
    }
    if (j.contains("m")) {
        if (j["m"].is_null()) {
            cfg.m.reset();
        } else {
            double m = 0.0;
            take(j, "m", m, cfg, source);
            cfg.m = m;
        }
    }
    take(j, "function", cfg.function, cfg, source);
    take(j, "N", cfg.N, cfg, source);
    take(j, "n", cfg.n, cfg, source);
    take(j, "r", cfg.r, cfg, source);
    take(j, "kernel", cfg.kernel, cfg, source);
    take(j, "grid_exp", cfg.grid_exp, cfg, source);
    take(j, "tol", cfg.tol, cfg, source);
    take(j, "max_iters", cfg.max_iters, cfg, source);
    take(j, "seed", cfg.seed, cfg, source);
    take(j, "output", cfg.output, cfg, source);
    take(j, "discrete", cfg.discrete, cfg, source);
    take(j, "n_ladder", cfg.n_ladder, cfg, source);
    take(j, "N_ladder", cfg.N_ladder, cfg, source);
    take(j, "mu", cfg.mu, cfg, source);
    take(j, "chaos_points", cfg.chaos_points, cfg, source);
}

nnfif::SigmoidalKernel parse_kernel(const std::string& name, std::optional<double> m) {
    const double mm = m.value_or(0.5);
    if (name == "ramp") return nnfif::SigmoidalKernel::ramp(mm);
    if (name == "smoothbump") return nnfif::SigmoidalKernel::smooth_bump(mm);
    static const std::regex smooth(R"(smoothstep(?:<(\d+)>|(\d+)))");
    std::smatch match;
    if (std::regex_match(name, match, smooth)) {
        const std::string digits = match[1].matched ? match[1].str() : match[2].str();
        if (digits.size() > 3) throw InvalidArgument("smoothstep order too large");
        return nnfif::SigmoidalKernel::smoothstep(std::stoi(digits), mm);
    }
    throw InvalidArgument("unknown kernel '" + name + "' (ramp, smoothstep<k>, smoothbump)");
}

std::size_t grid_intervals(int grid_exp, int N) {
    if (grid_exp < 4 || grid_exp > 26) throw InvalidArgument("grid exponent must lie in [4, 26]");
    const std::size_t target = std::size_t{1} << grid_exp;
    std::size_t G = static_cast<std::size_t>(N) << 4;
    while (G < target) G <<= 1;
    return G;
}

nnfif::FifVariant variant_of(const RunConfig& cfg) {
    if (cfg.command == Command::Smooth) return nnfif::FifVariant::Smooth;
    if (cfg.discrete) return nnfif::FifVariant::Discrete;
    if (cfg.r > 0) return nnfif::FifVariant::Smooth;
    return nnfif::FifVariant::AlphaFractal;
}

nnfif::FifProblem make_problem(const RunConfig& cfg, int N, int n) {
    if (!(std::isfinite(cfg.a) && std::isfinite(cfg.b) && cfg.a < cfg.b)) {
        throw InvalidArgument(where(cfg, "interval") + ": interval must satisfy a < b");
    }
    if (N < 2) throw InvalidArgument(where(cfg, "N") + ": N must be >= 2");
    if (n < 1) throw InvalidArgument(where(cfg, "n") + ": n must be >= 1");

    const auto variant = variant_of(cfg);
    auto scaling = located(cfg, "alpha", [&] {
        auto s = parse_alpha(cfg.alpha, N, cfg.a, cfg.b);
        nnfif::require_contraction(s);
        return s;
    });
    const auto kernel = located(cfg, "kernel", [&] { return parse_kernel(cfg.kernel, cfg.m); });
    nnfif::OperatorConfig op{kernel, cfg.a, cfg.b, n, variant == nnfif::FifVariant::Smooth ? cfg.r : 0};
    located(cfg, "r", [&] { op.validate(); });
    auto f = located(cfg, "function", [&] { return parse_function(cfg.function, cfg.a, cfg.b); });
    if (f.is_tabulated() && variant != nnfif::FifVariant::Discrete) {
        throw InvalidArgument(where(cfg, "function") + ": tabulated input requires the discrete variant (--discrete)");
    }
    nnfif::FifProblem p{.variant = variant,
                        .partition = nnfif::Partition::uniform(cfg.a, cfg.b, N),
                        .scaling = std::move(scaling),
                        .operator_cfg = op,
                        .f = std::move(f)};
    located(cfg, "alpha", [&] { p.validate(); });
    return p;
}

void validate(const RunConfig& cfg) {
    located(cfg, "tol", [&] {
        if (!(cfg.tol > 0.0 && std::isfinite(cfg.tol))) throw InvalidArgument("tolerance must be positive");
    });
    located(cfg, "max_iters", [&] {
        if (cfg.max_iters < 1) throw InvalidArgument("max_iters must be >= 1");
    });
    located(cfg, "grid_exp", [&] { (void)grid_intervals(cfg.grid_exp, std::max(cfg.N, 2)); });
    located(cfg, "r", [&] {
        if (cfg.r < 0) throw InvalidArgument("r must be >= 0");
        if (cfg.command == Command::Smooth && cfg.r < 1) throw InvalidArgument("smooth needs r >= 1");
    });
    located(cfg, "mu", [&] {
        if (!(cfg.mu > 0.0 && cfg.mu <= 1.0)) throw InvalidArgument("Hölder exponent must satisfy 0 < mu <= 1");
    });
    const bool ladder = cfg.command == Command::Converge || cfg.command == Command::Holder ||
                        cfg.command == Command::Bounds;
    if (ladder) {
        located(cfg, "n_ladder", [&] {
            if (cfg.n_ladder.empty()) throw InvalidArgument("n ladder must not be empty");
            for (int n : cfg.n_ladder) {
                if (n < 1) throw InvalidArgument("ladder entries must be >= 1");
            }
        });
        if (cfg.discrete || !cfg.N_ladder.empty()) {
            located(cfg, "N_ladder", [&] {
                if (!cfg.N_ladder.empty() && cfg.N_ladder.size() != cfg.n_ladder.size()) {
                    throw InvalidArgument("N ladder must pair with the n ladder");
                }
            });
        }
    }
}

} // namespace fifcli
