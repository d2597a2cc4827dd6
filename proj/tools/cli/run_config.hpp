#pragma once

#include "nnfif/fif.hpp"

#include <json.hpp>

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace fifcli {

enum class Command { Build, Converge, Dimension, Smooth, Holder, Bounds };

std::string command_name(Command c);
Command parse_command(const std::string& name);

struct RunConfig {
    Command command = Command::Build;
    std::string function = "sin";
    double a = 0.0;
    double b = 1.0;
    int N = 4;
    int n = 32;
    int r = 0;
    std::string alpha = "0.3";
    std::string kernel = "ramp";
    std::optional<double> m;
    int grid_exp = 14;
    double tol = 1e-10;
    int max_iters = 1000;
    std::uint64_t seed = 42;
    std::string output = ".";
    bool discrete = false;
    std::vector<int> n_ladder = {8, 16, 32, 64};
    std::vector<int> N_ladder;
    double mu = 1.0;
    /// build: also render a chaos-game orbit of this many points (0 = off).
    std::size_t chaos_points = 0;

    /// Where each field was set ("default", "--flag", "file:key").
    std::map<std::string, std::string> origin;
};

nlohmann::json to_json(const RunConfig& cfg);
/// Fields missing from j keep their current values. Accepts a bare config
/// object or a meta file with a "config" key.
void merge_json(RunConfig& cfg, const nlohmann::json& j, const std::string& source);

/// Kernel from "ramp", "smoothstep<k>" / "smoothstepK", "smoothbump" and m.
nnfif::SigmoidalKernel parse_kernel(const std::string& name, std::optional<double> m);

/// Smallest N 2^p >= 2^grid_exp with p >= 4.
std::size_t grid_intervals(int grid_exp, int N);

/// Builds the problem for one (N, n) pair, re-validating every module
/// invariant. Errors carry the origin of the offending field.
nnfif::FifProblem make_problem(const RunConfig& cfg, int N, int n);

/// Checks that do not need a solve (gates, ladders, ranges).
void validate(const RunConfig& cfg);

nnfif::FifVariant variant_of(const RunConfig& cfg);

} // namespace fifcli
