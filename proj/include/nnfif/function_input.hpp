#pragma once

#include <functional>
#include <variant>
#include <vector>

namespace nnfif {

using RealFn = std::function<double(double)>;

/// A closed-form function with optional exact derivatives.
/// derivatives[j - 1] is f^(j).
struct AnalyticFunction {
    RealFn value;
    std::vector<RealFn> derivatives;
};

/// Node data only: samples (x_k, f(x_k)). Operators look up each node they
/// need by abscissa and refuse to run when one is missing.
struct TabulatedFunction {
    std::vector<double> x;
    std::vector<double> y;
};

/// The function handed to operators and solvers, either analytic or tabulated.
class FunctionInput {
public:
    static FunctionInput analytic(RealFn value, std::vector<RealFn> derivatives = {});
    static FunctionInput tabulated(std::vector<double> x, std::vector<double> y);

    [[nodiscard]] bool is_analytic() const noexcept;
    [[nodiscard]] bool is_tabulated() const noexcept { return !is_analytic(); }
    [[nodiscard]] const AnalyticFunction& as_analytic() const;
    [[nodiscard]] const TabulatedFunction& as_tabulated() const;

    /// Highest derivative order with an exact callable (0 for tabulated input).
    [[nodiscard]] int exact_derivative_order() const noexcept;

    /// f(x). For tabulated input x must be one of the tabulated abscissae
    /// within `match_tol`.
    [[nodiscard]] double value(double x, double match_tol = 1e-9) const;

    /// f^(k)(x): the exact callable when present, otherwise a central finite
    /// difference of the value with step `fd_step` (sets `used_fd`).
    /// Tabulated input supports k = 0 only.
    [[nodiscard]] double derivative(int k, double x, double fd_step, bool& used_fd) const;

private:
    std::variant<AnalyticFunction, TabulatedFunction> data_;
};

/// Central finite difference of order k:
///     sum_i (-1)^i C(k, i) f(x + (k/2 - i) s) / s^k
double central_difference(const RealFn& f, int k, double x, double step);

} // namespace nnfif
