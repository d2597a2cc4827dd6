#pragma once

#include <cmath>
#include <cstddef>
#include <vector>

namespace nnfif::detail {

// Truncated Taylor series c[j] = f^(j)(t0) / j!, used to get exact derivatives
// of closed-form kernels without hand-expanding every order.
class Jet {
public:
    explicit Jet(std::size_t order) : c_(order + 1, 0.0) {}

    static Jet constant(std::size_t order, double v) {
        Jet j(order);
        j.c_[0] = v;
        return j;
    }

    [[nodiscard]] std::size_t order() const noexcept { return c_.size() - 1; }
    double& operator[](std::size_t i) { return c_[i]; }
    double operator[](std::size_t i) const { return c_[i]; }

    friend Jet operator+(const Jet& a, const Jet& b) {
        Jet r(a.order());
        for (std::size_t i = 0; i < r.c_.size(); ++i) r.c_[i] = a.c_[i] + b.c_[i];
        return r;
    }

    friend Jet operator*(const Jet& a, const Jet& b) {
        Jet r(a.order());
        for (std::size_t k = 0; k < r.c_.size(); ++k) {
            double s = 0.0;
            for (std::size_t i = 0; i <= k; ++i) s += a.c_[i] * b.c_[k - i];
            r.c_[k] = s;
        }
        return r;
    }

    // Requires b[0] != 0.
    friend Jet operator/(const Jet& a, const Jet& b) {
        Jet q(a.order());
        for (std::size_t k = 0; k < q.c_.size(); ++k) {
            double s = a.c_[k];
            for (std::size_t j = 1; j <= k; ++j) s -= b.c_[j] * q.c_[k - j];
            q.c_[k] = s / b.c_[0];
        }
        return q;
    }

    // exp of a series: k e_k = sum_{j=1..k} j u_j e_{k-j}
    friend Jet exp(const Jet& u) {
        Jet e(u.order());
        e.c_[0] = std::exp(u.c_[0]);
        for (std::size_t k = 1; k < e.c_.size(); ++k) {
            double s = 0.0;
            for (std::size_t j = 1; j <= k; ++j) {
                s += static_cast<double>(j) * u.c_[j] * e.c_[k - j];
            }
            e.c_[k] = s / static_cast<double>(k);
        }
        return e;
    }

private:
    std::vector<double> c_;
};

} // namespace nnfif::detail
