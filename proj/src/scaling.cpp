#include "nnfif/scaling.hpp"

#include "nnfif/error.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace nnfif {

namespace {
constexpr std::size_t kSupSamples = 10000;
}

ScalingVector ScalingVector::constant(std::vector<double> alphas) {
    if (alphas.empty()) throw InvalidArgument("scaling vector is empty");
    ScalingVector s;
    for (double v : alphas) {
        if (!std::isfinite(v)) throw InvalidArgument("scaling entries must be finite");
        s.entries_.emplace_back(v);
        s.sup_norms_.push_back(std::fabs(v));
    }
    return s;
}

ScalingVector ScalingVector::functions(std::vector<RealFn> alphas, double a, double b) {
    if (alphas.empty()) throw InvalidArgument("scaling vector is empty");
    if (!(b > a)) throw InvalidArgument("scaling domain must satisfy a < b");
    ScalingVector s;
    for (auto& fn : alphas) {
        if (!fn) throw InvalidArgument("scaling function is empty");
        double sup = 0.0;
        for (std::size_t j = 0; j < kSupSamples; ++j) {
            const double x = std::lerp(a, b, static_cast<double>(j) / static_cast<double>(kSupSamples - 1));
            const double v = fn(x);
            if (!std::isfinite(v)) throw InvalidArgument("scaling function is not finite on [a, b]");
            sup = std::max(sup, std::fabs(v));
        }
        s.entries_.emplace_back(std::move(fn));
        s.sup_norms_.push_back(sup);
    }
    return s;
}

bool ScalingVector::is_constant() const noexcept {
    return std::all_of(entries_.begin(), entries_.end(),
                       [](const auto& e) { return std::holds_alternative<double>(e); });
}

double ScalingVector::value(std::size_t i, double x) const {
    const auto& e = entries_.at(i);
    if (const auto* c = std::get_if<double>(&e)) return *c;
    return std::get<RealFn>(e)(x);
}

double ScalingVector::constant_value(std::size_t i) const {
    const auto* c = std::get_if<double>(&entries_.at(i));
    if (c == nullptr) throw InvalidArgument("constant scalings required");
    return *c;
}

std::vector<double> ScalingVector::constant_values() const {
    std::vector<double> out(size());
    for (std::size_t i = 0; i < size(); ++i) out[i] = constant_value(i);
    return out;
}

double ScalingVector::max_norm() const noexcept {
    return *std::max_element(sup_norms_.begin(), sup_norms_.end());
}

double ScalingVector::kappa() const noexcept {
    double k = 0.0;
    for (double s : sup_norms_) k += s;
    return k;
}

double ScalingVector::holder_factor(const Partition& partition, double mu) const {
    if (static_cast<int>(size()) != partition.size()) {
        throw InvalidArgument("scaling vector length must equal the number of subintervals");
    }
    double m = 0.0;
    for (std::size_t i = 0; i < size(); ++i) {
        m = std::max(m, sup_norms_[i] / std::pow(partition.slope(static_cast<int>(i)), mu));
    }
    return m;
}

void require_contraction(const ScalingVector& scaling) {
    if (!(scaling.max_norm() < 1.0)) throw InvalidArgument("scaling must satisfy |α|<1");
}

double check_holder_gate(const Partition& partition, const ScalingVector& scaling, double mu) {
    if (!(mu > 0.0 && mu <= 1.0)) throw InvalidArgument("Hölder exponent must satisfy 0 < mu <= 1");
    if (static_cast<int>(scaling.size()) != partition.size()) {
        throw InvalidArgument("scaling vector length must equal the number of subintervals");
    }
    for (std::size_t i = 0; i < scaling.size(); ++i) {
        const double bound = std::pow(partition.slope(static_cast<int>(i)), mu);
        if (!(scaling.sup_norm(i) < bound)) {
            std::ostringstream msg;
            msg << "Hölder contraction gate failed at subinterval " << (i + 1) << ": |alpha_" << (i + 1)
                << "| = " << scaling.sup_norm(i) << " is not below a_" << (i + 1) << "^mu = " << bound;
            throw HypothesisFailure(msg.str());
        }
    }
    return scaling.holder_factor(partition, mu);
}

void check_smooth_gate(const Partition& partition, const ScalingVector& scaling, int r) {
    if (!partition.is_uniform()) throw InvalidArgument("smooth construction requires a uniform partition");
    if (!scaling.is_constant()) throw InvalidArgument("smooth construction requires constant scalings");
    const double bound = 1.0 / std::pow(static_cast<double>(partition.size()), r);
    for (std::size_t i = 0; i < scaling.size(); ++i) {
        if (!(std::fabs(scaling.constant_value(i)) < bound)) {
            std::ostringstream msg;
            msg << "scaling must satisfy |alpha_i| < 1/N^r = " << bound << " (violated at subinterval "
                << (i + 1) << ")";
            throw InvalidArgument(msg.str());
        }
    }
}

} // namespace nnfif
