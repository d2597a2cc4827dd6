#include "nnfif/function_input.hpp"

#include "nnfif/error.hpp"

#include <cmath>
#include <cstddef>
#include <string>

namespace nnfif {

FunctionInput FunctionInput::analytic(RealFn value, std::vector<RealFn> derivatives) {
    if (!value) throw InvalidArgument("analytic function requires a value callable");
    for (const auto& d : derivatives) {
        if (!d) throw InvalidArgument("derivative callables must be non-empty");
    }
    FunctionInput in;
    in.data_ = AnalyticFunction{std::move(value), std::move(derivatives)};
    return in;
}

FunctionInput FunctionInput::tabulated(std::vector<double> x, std::vector<double> y) {
    if (x.size() != y.size()) throw InvalidArgument("tabulated x and y sizes differ");
    if (x.size() < 2) throw InvalidArgument("tabulated input needs at least two samples");
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (!std::isfinite(x[i]) || !std::isfinite(y[i])) {
            throw InvalidArgument("tabulated values must be finite");
        }
    }
    FunctionInput in;
    in.data_ = TabulatedFunction{std::move(x), std::move(y)};
    return in;
}

bool FunctionInput::is_analytic() const noexcept {
    return std::holds_alternative<AnalyticFunction>(data_);
}

const AnalyticFunction& FunctionInput::as_analytic() const { return std::get<AnalyticFunction>(data_); }

const TabulatedFunction& FunctionInput::as_tabulated() const { return std::get<TabulatedFunction>(data_); }

int FunctionInput::exact_derivative_order() const noexcept {
    if (const auto* a = std::get_if<AnalyticFunction>(&data_)) {
        return static_cast<int>(a->derivatives.size());
    }
    return 0;
}

double FunctionInput::value(double x, double match_tol) const {
    if (const auto* a = std::get_if<AnalyticFunction>(&data_)) return a->value(x);
    const auto& t = std::get<TabulatedFunction>(data_);
    for (std::size_t i = 0; i < t.x.size(); ++i) {
        if (std::fabs(t.x[i] - x) <= match_tol) return t.y[i];
    }
    throw InvalidArgument("tabulated input has no sample at x = " + std::to_string(x));
}

double FunctionInput::derivative(int k, double x, double fd_step, bool& used_fd) const {
    if (k < 0) throw InvalidArgument("derivative order must be nonnegative");
    if (k == 0) return value(x);
    const auto* a = std::get_if<AnalyticFunction>(&data_);
    if (a == nullptr) throw InvalidArgument("derivatives unavailable");
    if (static_cast<std::size_t>(k) <= a->derivatives.size()) {
        return a->derivatives[static_cast<std::size_t>(k - 1)](x);
    }
    used_fd = true;
    return central_difference(a->value, k, x, fd_step);
}

double central_difference(const RealFn& f, int k, double x, double step) {
    double acc = 0.0;
    double binom = 1.0;
    for (int i = 0; i <= k; ++i) {
        const double sign = (i % 2 == 0) ? 1.0 : -1.0;
        acc += sign * binom * f(x + (0.5 * k - i) * step);
        binom = binom * static_cast<double>(k - i) / static_cast<double>(i + 1);
    }
    return acc / std::pow(step, k);
}

} // namespace nnfif
