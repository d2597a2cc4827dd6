#include "function_registry.hpp"

#include "nnfif/error.hpp"

#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>

namespace fifcli {

using nnfif::FunctionInput;
using nnfif::InvalidArgument;
using nnfif::RealFn;

namespace {

std::string trim(const std::string& s) {
    const auto lo = s.find_first_not_of(" \t\r\n");
    if (lo == std::string::npos) return {};
    const auto hi = s.find_last_not_of(" \t\r\n");
    return s.substr(lo, hi - lo + 1);
}

double parse_number(const std::string& text) {
    const std::string t = trim(text);
    std::size_t used = 0;
    double v = 0.0;
    try {
        v = std::stod(t, &used);
    } catch (const std::exception&) {
        throw InvalidArgument("not a number: '" + t + "'");
    }
    if (used != t.size() || !std::isfinite(v)) throw InvalidArgument("not a number: '" + t + "'");
    return v;
}

std::vector<double> parse_list(const std::string& text) {
    std::vector<double> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(parse_number(item));
    return out;
}

FunctionInput trig(bool is_sin) {
    // d^k sin = sin(x + k pi/2)
    const double phase0 = is_sin ? 0.0 : std::numbers::pi / 2;
    auto make = [phase0](int k) -> RealFn {
        const double ph = phase0 + k * std::numbers::pi / 2;
        return [ph](double x) { return std::sin(x + ph); };
    };
    std::vector<RealFn> d;
    for (int k = 1; k <= kRegistryDerivatives; ++k) d.push_back(make(k));
    if (is_sin) return FunctionInput::analytic([](double x) { return std::sin(x); }, std::move(d));
    return FunctionInput::analytic([](double x) { return std::cos(x); }, std::move(d));
}

FunctionInput poly(std::vector<double> c) {
    if (c.empty()) throw InvalidArgument("poly needs at least one coefficient");
    auto make = [](std::vector<double> coef) -> RealFn {
        return [coef = std::move(coef)](double x) {
            double acc = 0.0;
            for (auto it = coef.rbegin(); it != coef.rend(); ++it) acc = acc * x + *it;
            return acc;
        };
    };
    std::vector<RealFn> d;
    std::vector<double> cur = c;
    for (int k = 1; k <= kRegistryDerivatives; ++k) {
        std::vector<double> next;
        for (std::size_t i = 1; i < cur.size(); ++i) next.push_back(cur[i] * static_cast<double>(i));
        if (next.empty()) next.push_back(0.0);
        d.push_back(make(next));
        cur = std::move(next);
    }
    return FunctionInput::analytic(make(std::move(c)), std::move(d));
}

FunctionInput abspow(double c, double mu) {
    if (!(mu > 0.0)) throw InvalidArgument("abspow exponent must be positive");
    // d^k |x-c|^mu = mu (mu-1) ... (mu-k+1) |x-c|^(mu-k) sgn(x-c)^k, away from c
    auto make = [c, mu](int k) -> RealFn {
        double coef = 1.0;
        for (int i = 0; i < k; ++i) coef *= mu - i;
        return [c, mu, k, coef](double x) {
            const double t = x - c;
            const double s = (k % 2 == 1 && t < 0.0) ? -1.0 : 1.0;
            return coef * s * std::pow(std::fabs(t), mu - k);
        };
    };
    std::vector<RealFn> d;
    for (int k = 1; k <= kRegistryDerivatives; ++k) d.push_back(make(k));
    return FunctionInput::analytic(make(0), std::move(d));
}

FunctionInput weier(double amp, double freq) {
    if (!(amp > 0.0 && amp < 1.0) || !(freq > 1.0)) throw InvalidArgument("weier needs 0 < a < 1 and b > 1");
    return FunctionInput::analytic([amp, freq](double x) {
        double acc = 0.0;
        double w = 1.0;
        double f = 1.0;
        for (int k = 0; k < 24; ++k) {
            acc += w * std::cos(f * std::numbers::pi * x);
            w *= amp;
            f *= freq;
        }
        return acc;
    });
}

} // namespace

bool split_call(const std::string& spec, std::string& name, std::vector<double>& args) {
    const auto open = spec.find('(');
    if (open == std::string::npos) return false;
    if (spec.back() != ')') throw InvalidArgument("unbalanced parentheses in '" + spec + "'");
    name = trim(spec.substr(0, open));
    const std::string inner = spec.substr(open + 1, spec.size() - open - 2);
    args = trim(inner).empty() ? std::vector<double>{} : parse_list(inner);
    return true;
}

nnfif::TabulatedFunction read_table(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InvalidArgument("cannot open table '" + path + "'");
    nnfif::TabulatedFunction t;
    std::string line;
    int row = 0;
    while (std::getline(in, line)) {
        ++row;
        line = trim(line);
        if (line.empty() || line[0] == '#') continue;
        const auto comma = line.find(',');
        if (comma == std::string::npos) {
            throw InvalidArgument(path + ":" + std::to_string(row) + ": expected two comma-separated columns");
        }
        try {
            const double x = parse_number(line.substr(0, comma));
            const double y = parse_number(line.substr(comma + 1));
            t.x.push_back(x);
            t.y.push_back(y);
        } catch (const InvalidArgument& e) {
            if (t.x.empty() && row == 1) continue;  // header
            throw InvalidArgument(path + ":" + std::to_string(row) + ": " + e.what());
        }
    }
    return t;
}

FunctionInput parse_function(const std::string& raw, double a, double b) {
    const std::string spec = trim(raw);
    if (spec.rfind("table:", 0) == 0) {
        const std::string path = spec.substr(6);
        auto t = read_table(path);
        if (t.x.size() < 2) throw InvalidArgument("table '" + path + "' needs at least two rows");
        const std::size_t M = t.x.size() - 1;
        for (std::size_t k = 0; k <= M; ++k) {
            const double expect = k == M ? b : a + (b - a) * (static_cast<double>(k) / static_cast<double>(M));
            if (std::fabs(t.x[k] - expect) > 1e-9) {
                std::ostringstream msg;
                msg.precision(17);
                msg << "table '" << path << "' row " << k + 1 << ": x = " << t.x[k]
                    << " does not match the uniform knot " << expect;
                throw InvalidArgument(msg.str());
            }
        }
        return FunctionInput::tabulated(std::move(t.x), std::move(t.y));
    }
    if (spec == "sin") return trig(true);
    if (spec == "cos") return trig(false);
    if (spec == "exp") {
        std::vector<RealFn> d(kRegistryDerivatives, [](double x) { return std::exp(x); });
        return FunctionInput::analytic([](double x) { return std::exp(x); }, std::move(d));
    }
    if (spec == "weier") return weier(0.5, 3.0);

    std::string name;
    std::vector<double> args;
    if (split_call(spec, name, args)) {
        if (name == "poly") return poly(std::move(args));
        if (name == "abspow") {
            if (args.size() != 2) throw InvalidArgument("abspow takes (c, mu)");
            return abspow(args[0], args[1]);
        }
        if (name == "weier") {
            if (args.size() != 2) throw InvalidArgument("weier takes (a, b)");
            return weier(args[0], args[1]);
        }
    }
    throw InvalidArgument("unknown function '" + spec + "'");
}

nnfif::ScalingVector parse_alpha(const std::string& raw, int N, double a, double b) {
    const std::string spec = trim(raw);
    if (N < 1) throw InvalidArgument("N must be >= 1");
    std::string name;
    std::vector<double> args;
    if (split_call(spec, name, args)) {
        const double span = b - a;
        RealFn fn;
        if (name == "sinbump") {
            if (args.size() != 1) throw InvalidArgument("sinbump takes (amp)");
            const double amp = args[0];
            fn = [=](double x) { return amp * std::sin(std::numbers::pi * (x - a) / span); };
        } else if (name == "linear") {
            if (args.size() != 2) throw InvalidArgument("linear takes (c0, c1)");
            const double c0 = args[0];
            const double c1 = args[1];
            fn = [=](double x) { return c0 + (c1 - c0) * (x - a) / span; };
        } else {
            throw InvalidArgument("unknown scaling family '" + name + "'");
        }
        return nnfif::ScalingVector::functions(std::vector<RealFn>(static_cast<std::size_t>(N), fn), a, b);
    }
    auto values = parse_list(spec);
    if (values.size() == 1) values.assign(static_cast<std::size_t>(N), values[0]);
    if (values.size() != static_cast<std::size_t>(N)) {
        throw InvalidArgument("scaling list has " + std::to_string(values.size()) + " entries, expected N = " +
                              std::to_string(N));
    }
    return nnfif::ScalingVector::constant(std::move(values));
}

} // namespace fifcli
