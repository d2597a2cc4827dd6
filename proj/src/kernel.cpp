#include "nnfif/kernel.hpp"

#include "nnfif/detail/jet.hpp"
#include "nnfif/error.hpp"

#include <cmath>
#include <cstddef>

namespace nnfif {

namespace {

double binomial(int n, int k) {
    double r = 1.0;
    for (int i = 1; i <= k; ++i) {
        r = r * static_cast<double>(n - k + i) / static_cast<double>(i);
    }
    return r;
}

// S_k(t) = sum_{j=0..k} C(k+j, j) C(2k+1, k-j) (-1)^j t^(k+1+j)
std::vector<double> smoothstep_coefficients(int k) {
    std::vector<double> c(static_cast<std::size_t>(2 * k + 2), 0.0);
    for (int j = 0; j <= k; ++j) {
        const double sign = (j % 2 == 0) ? 1.0 : -1.0;
        c[static_cast<std::size_t>(k + 1 + j)] = sign * binomial(k + j, j) * binomial(2 * k + 1, k - j);
    }
    return c;
}

// d^k/dt^k of sum c_d t^d by Horner on the differentiated coefficients.
double poly_derivative(const std::vector<double>& c, int k, double t) {
    const int degree = static_cast<int>(c.size()) - 1;
    if (k > degree) return 0.0;
    double acc = 0.0;
    for (int d = degree; d >= k; --d) {
        double falling = 1.0;
        for (int i = 0; i < k; ++i) falling *= static_cast<double>(d - i);
        acc = acc * t + falling * c[static_cast<std::size_t>(d)];
    }
    return acc;
}

void require_finite(double x) {
    if (!std::isfinite(x)) throw InvalidArgument("non-finite input");
}

// exp(-1/t) vanishes to double precision (with every derivative) below this.
constexpr double kBumpCutoff = 1.0 / 600.0;

detail::Jet bump_half(std::size_t order, double t, bool reflected) {
    detail::Jet u(order);
    if (t < kBumpCutoff) return u;  // identically zero
    // Taylor coefficients of -1/(t + s) or, reflected, -1/(t - s).
    double inv = 1.0 / t;
    double p = inv;
    for (std::size_t j = 0; j <= order; ++j) {
        const double sign = (!reflected && (j % 2 == 1)) ? 1.0 : -1.0;
        u[j] = sign * p;
        p *= inv;
    }
    return exp(u);
}

} // namespace

SigmoidalKernel::SigmoidalKernel(SigmoidFamily family, int order, double m)
    : family_(family), order_(order), m_(m) {
    if (!(m > 0.0) || !std::isfinite(m)) {
        throw InvalidArgument("kernel parameter m must be a positive finite real");
    }
    if (order < 0) throw InvalidArgument("smoothstep order must be nonnegative");
    if (family == SigmoidFamily::Smoothstep) poly_ = smoothstep_coefficients(order);
}

SigmoidalKernel SigmoidalKernel::ramp(double m) { return {SigmoidFamily::Ramp, 0, m}; }

SigmoidalKernel SigmoidalKernel::smoothstep(int order, double m) {
    return {SigmoidFamily::Smoothstep, order, m};
}

SigmoidalKernel SigmoidalKernel::smooth_bump(double m) { return {SigmoidFamily::SmoothBump, 0, m}; }

int SigmoidalKernel::smoothness() const noexcept {
    switch (family_) {
    case SigmoidFamily::Ramp: return 0;
    case SigmoidFamily::Smoothstep: return order_;
    case SigmoidFamily::SmoothBump: return kUnboundedSmoothness;
    }
    return 0;
}

std::string SigmoidalKernel::name() const {
    switch (family_) {
    case SigmoidFamily::Ramp: return "ramp";
    case SigmoidFamily::Smoothstep: return "smoothstep" + std::to_string(order_);
    case SigmoidFamily::SmoothBump: return "smoothbump";
    }
    return "unknown";
}

double SigmoidalKernel::sigma(double x) const {
    require_finite(x);
    if (x >= m_) return 1.0;
    if (x <= -m_) return 0.0;
    const double t = (x + m_) / (2.0 * m_);
    switch (family_) {
    case SigmoidFamily::Ramp: return t;
    case SigmoidFamily::Smoothstep: return poly_derivative(poly_, 0, t);
    case SigmoidFamily::SmoothBump: return bump_derivative(0, t);
    }
    return 0.0;
}

double SigmoidalKernel::sigma_derivative(int k, double x) const {
    if (k < 0) throw InvalidArgument("derivative order must be nonnegative");
    if (k == 0) return sigma(x);
    require_finite(x);
    if (x >= m_ || x <= -m_) return 0.0;
    const double t = (x + m_) / (2.0 * m_);
    const double chain = std::pow(1.0 / (2.0 * m_), k);
    switch (family_) {
    case SigmoidFamily::Ramp: return k == 1 ? chain : 0.0;
    case SigmoidFamily::Smoothstep: return chain * poly_derivative(poly_, k, t);
    case SigmoidFamily::SmoothBump: return chain * bump_derivative(k, t);
    }
    return 0.0;
}

double SigmoidalKernel::bump_derivative(int k, double t) const {
    const auto order = static_cast<std::size_t>(k);
    const detail::Jet left = bump_half(order, t, false);
    const detail::Jet right = bump_half(order, 1.0 - t, true);
    const detail::Jet s = left / (left + right);
    double factorial = 1.0;
    for (int i = 2; i <= k; ++i) factorial *= static_cast<double>(i);
    return factorial * s[order];
}

double SigmoidalKernel::xi(double x) const {
    require_finite(x);
    if (std::fabs(x) >= 2.0 * m_) return 0.0;
    return sigma(x + m_) - sigma(x - m_);
}

double SigmoidalKernel::xi_derivative(int k, double x) const {
    if (k < 0) throw InvalidArgument("derivative order must be nonnegative");
    if (k > smoothness()) throw InvalidArgument("insufficient kernel smoothness");
    if (k == 0) return xi(x);
    require_finite(x);
    if (std::fabs(x) >= 2.0 * m_) return 0.0;
    return sigma_derivative(k, x + m_) - sigma_derivative(k, x - m_);
}

double sigma_eval(const SigmoidalKernel& kernel, double x) { return kernel.sigma(x); }
double xi_eval(const SigmoidalKernel& kernel, double x) { return kernel.xi(x); }
double xi_derivative(const SigmoidalKernel& kernel, int k, double x) { return kernel.xi_derivative(k, x); }

} // namespace nnfif
