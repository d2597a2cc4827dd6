#pragma once

#include "nnfif/function_input.hpp"
#include "nnfif/kernel.hpp"

#include <span>
#include <utility>
#include <vector>

namespace nnfif {

/// Node layout of the quasi-interpolation operator: n + 1 uniform nodes
/// a_k = a + k h on [a, b], h = (b - a) / n, and the derivative order r
/// of the four-layer variant (r = 0 gives the plain operator).
struct OperatorConfig {
    SigmoidalKernel kernel = SigmoidalKernel::ramp();
    double a = 0.0;
    double b = 1.0;
    int n = 1;
    int r = 0;

    void validate() const;
    [[nodiscard]] double step() const noexcept { return (b - a) / n; }
    /// a_k, with a_0 = a and a_n = b exactly.
    [[nodiscard]] double node(int k) const noexcept { return k == n ? b : a + (b - a) * (static_cast<double>(k) / n); }
};

/// Neural-network quasi-interpolation operator
///
///     S_{n,r}(f, x) = sum_{j=0..r} sum_{k=0..n} Omega_{k,j} Psi_j(u_k),
///     u_k = (2m/h)(x - a_k),  Psi_j(u) = u^j xi(u),
///     Omega_{k,j} = h^j / ((2m)^j j!) f^(j)(a_k).
///
/// f is sampled (value and derivatives) at the nodes only, once, on
/// construction. Since xi((2m/h)(x - a_k)) vanishes for |x - a_k| >= h, each
/// evaluation touches the two nodes bracketing x.
class NnOperator {
public:
    NnOperator(OperatorConfig cfg, const FunctionInput& f);

    /// S_{n,sigma}(f, x), the j = 0 layer.
    [[nodiscard]] double eval(double x) const;
    /// S_{n,r,sigma}(f, x); equals eval() when r = 0.
    [[nodiscard]] double eval_four_layer(double x) const;
    /// k-th derivative of eval_four_layer, k <= r.
    [[nodiscard]] double derivative(int k, double x) const;

    [[nodiscard]] const OperatorConfig& config() const noexcept { return cfg_; }
    [[nodiscard]] std::span<const double> nodes() const noexcept { return nodes_; }
    /// f^(j)(a_k) as sampled on construction.
    [[nodiscard]] double node_derivative(int j, int k) const;
    /// True when some f^(j)(a_k) came from the finite-difference fallback.
    [[nodiscard]] bool used_finite_differences() const noexcept { return used_fd_; }

private:
    [[nodiscard]] std::pair<int, int> bracket(double x) const;
    [[nodiscard]] double sum(double x, int max_layer, int k) const;

    OperatorConfig cfg_;
    double scale_;  // 2m / h
    std::vector<double> nodes_;
    std::vector<std::vector<double>> derivs_;  // derivs_[j][k] = f^(j)(a_k)
    std::vector<std::vector<double>> omega_;   // omega_[j][k]
    bool used_fd_ = false;
};

double nn_eval(const OperatorConfig& cfg, const FunctionInput& f, double x);
double nn_eval_four_layer(const OperatorConfig& cfg, const FunctionInput& f, double x);
double nn_eval_derivative(const OperatorConfig& cfg, const FunctionInput& f, int k, double x);

} // namespace nnfif
