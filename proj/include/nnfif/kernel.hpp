#pragma once

#include <string>
#include <vector>

namespace nnfif {

enum class SigmoidFamily { Ramp, Smoothstep, SmoothBump };

/// Smoothness order reported for the C-infinity family.
inline constexpr int kUnboundedSmoothness = 1 << 20;

/// A sigmoidal function in the class A(m): nondecreasing, exactly 0 for
/// x <= -m and exactly 1 for x >= m. Also provides the derived bump kernel
///
///     xi(x) = sigma(x + m) - sigma(x - m),
///
/// supported on [-2m, 2m] with xi(x) + xi(x - 2m) = 1 on [0, 2m].
///
/// Only analytic families are offered, since the four-layer operator needs
/// exact kernel derivatives:
///   - Ramp:          clamp((x + m) / 2m, 0, 1), C^0.
///   - Smoothstep(k): degree 2k+1 Hermite smoothstep in t = (x + m) / 2m, C^k.
///   - SmoothBump:    g(t) / (g(t) + g(1 - t)) with g(t) = exp(-1/t), C^inf.
class SigmoidalKernel {
public:
    static SigmoidalKernel ramp(double m = 0.5);
    static SigmoidalKernel smoothstep(int order, double m = 0.5);
    static SigmoidalKernel smooth_bump(double m = 0.5);

    [[nodiscard]] SigmoidFamily family() const noexcept { return family_; }
    [[nodiscard]] int smoothstep_order() const noexcept { return order_; }
    [[nodiscard]] double m() const noexcept { return m_; }
    /// Guaranteed continuous-derivative order r of sigma (and xi).
    [[nodiscard]] int smoothness() const noexcept;
    /// "ramp", "smoothstep<k>" or "smoothbump".
    [[nodiscard]] std::string name() const;

    [[nodiscard]] double sigma(double x) const;
    /// k-th derivative of sigma; k is not checked against smoothness().
    [[nodiscard]] double sigma_derivative(int k, double x) const;
    [[nodiscard]] double xi(double x) const;
    /// k-th derivative of xi. Throws InvalidArgument when k > smoothness().
    [[nodiscard]] double xi_derivative(int k, double x) const;

private:
    SigmoidalKernel(SigmoidFamily family, int order, double m);

    [[nodiscard]] double bump_derivative(int k, double t) const;

    SigmoidFamily family_;
    int order_;
    double m_;
    // Smoothstep polynomial coefficients in t, lowest power first.
    std::vector<double> poly_;
};

double sigma_eval(const SigmoidalKernel& kernel, double x);
double xi_eval(const SigmoidalKernel& kernel, double x);
double xi_derivative(const SigmoidalKernel& kernel, int k, double x);

} // namespace nnfif
