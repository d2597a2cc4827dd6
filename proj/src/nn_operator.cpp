#include "nnfif/nn_operator.hpp"

#include "nnfif/detail/summation.hpp"
#include "nnfif/error.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>

namespace nnfif {

namespace {

double factorial(int j) {
    double r = 1.0;
    for (int i = 2; i <= j; ++i) r *= i;
    return r;
}

double falling(int j, int l) {
    double r = 1.0;
    for (int i = 0; i < l; ++i) r *= static_cast<double>(j - i);
    return r;
}

double binomial(int n, int k) {
    double r = 1.0;
    for (int i = 1; i <= k; ++i) r = r * static_cast<double>(n - k + i) / static_cast<double>(i);
    return r;
}

} // namespace

void OperatorConfig::validate() const {
    if (!std::isfinite(a) || !std::isfinite(b) || !(b > a)) {
        throw InvalidArgument("operator interval must satisfy a < b");
    }
    if (n < 1) throw InvalidArgument("operator node count n must be >= 1");
    if (r < 0) throw InvalidArgument("operator order r must be >= 0");
    if (r > kernel.smoothness()) throw InvalidArgument("insufficient kernel smoothness");
}

NnOperator::NnOperator(OperatorConfig cfg, const FunctionInput& f) : cfg_(std::move(cfg)) {
    cfg_.validate();
    if (cfg_.r >= 1 && f.is_tabulated()) throw InvalidArgument("derivatives unavailable");

    const double h = cfg_.step();
    scale_ = 2.0 * cfg_.kernel.m() / h;
    nodes_.resize(static_cast<std::size_t>(cfg_.n) + 1);
    for (int k = 0; k <= cfg_.n; ++k) nodes_[static_cast<std::size_t>(k)] = cfg_.node(k);

    const double fd_step = h * 1e-3;
    derivs_.assign(static_cast<std::size_t>(cfg_.r) + 1, std::vector<double>(nodes_.size()));
    omega_ = derivs_;
    for (int j = 0; j <= cfg_.r; ++j) {
        const double w = std::pow(h / (2.0 * cfg_.kernel.m()), j) / factorial(j);
        for (std::size_t k = 0; k < nodes_.size(); ++k) {
            const double v = f.derivative(j, nodes_[k], fd_step, used_fd_);
            if (!std::isfinite(v)) throw InvalidArgument("function value at operator node is not finite");
            derivs_[static_cast<std::size_t>(j)][k] = v;
            omega_[static_cast<std::size_t>(j)][k] = w * v;
        }
    }
}

double NnOperator::node_derivative(int j, int k) const {
    return derivs_.at(static_cast<std::size_t>(j)).at(static_cast<std::size_t>(k));
}

std::pair<int, int> NnOperator::bracket(double x) const {
    const double slack = 1e-12 * (cfg_.b - cfg_.a);
    if (!(x >= cfg_.a - slack && x <= cfg_.b + slack)) throw DomainError("outside domain");
    const double t = (x - cfg_.a) / cfg_.step();
    const int lo = std::clamp(static_cast<int>(std::floor(t)), 0, cfg_.n - 1);
    return {lo, lo + 1};
}

double NnOperator::sum(double x, int max_layer, int k) const {
    const auto [lo, hi] = bracket(x);
    const SigmoidalKernel& kernel = cfg_.kernel;
    const double chain = std::pow(scale_, k);
    detail::CompensatedSum acc;
    for (int q = lo; q <= hi; ++q) {
        const double u = scale_ * (x - nodes_[static_cast<std::size_t>(q)]);
        for (int j = 0; j <= max_layer; ++j) {
            // k-th derivative of Psi_j(u) = u^j xi(u) by Leibniz.
            double psi = 0.0;
            for (int l = 0; l <= std::min(k, j); ++l) {
                psi += binomial(k, l) * falling(j, l) * std::pow(u, j - l) * kernel.xi_derivative(k - l, u);
            }
            acc.add(omega_[static_cast<std::size_t>(j)][static_cast<std::size_t>(q)] * chain * psi);
        }
    }
    return acc.value();
}

double NnOperator::eval(double x) const { return sum(x, 0, 0); }

double NnOperator::eval_four_layer(double x) const { return sum(x, cfg_.r, 0); }

double NnOperator::derivative(int k, double x) const {
    if (k < 0 || k > cfg_.r) throw InvalidArgument("derivative order k must satisfy 0 <= k <= r");
    return sum(x, cfg_.r, k);
}

double nn_eval(const OperatorConfig& cfg, const FunctionInput& f, double x) {
    OperatorConfig plain = cfg;
    plain.r = 0;
    return NnOperator(plain, f).eval(x);
}

double nn_eval_four_layer(const OperatorConfig& cfg, const FunctionInput& f, double x) {
    return NnOperator(cfg, f).eval_four_layer(x);
}

double nn_eval_derivative(const OperatorConfig& cfg, const FunctionInput& f, int k, double x) {
    return NnOperator(cfg, f).derivative(k, x);
}

} // namespace nnfif
