#include "nnfif/partition.hpp"

#include "nnfif/error.hpp"

#include <algorithm>
#include <cmath>

namespace nnfif {

Partition::Partition(std::vector<double> knots) : knots_(std::move(knots)) {
    if (knots_.size() < 3) throw InvalidArgument("partition needs at least 3 knots (N >= 2)");
    for (std::size_t i = 0; i < knots_.size(); ++i) {
        if (!std::isfinite(knots_[i])) throw InvalidArgument("partition knots must be finite");
        if (i > 0 && !(knots_[i] > knots_[i - 1])) {
            throw InvalidArgument("degenerate subinterval: knots must be strictly increasing");
        }
    }
}

Partition Partition::uniform(double a, double b, int N) {
    if (N < 2) throw InvalidArgument("partition needs N >= 2");
    if (!(b > a)) throw InvalidArgument("partition interval must satisfy a < b");
    // Same rounding as UniformGrid::x, so knots coincide bitwise with grid points.
    std::vector<double> k(static_cast<std::size_t>(N) + 1);
    for (int i = 0; i <= N; ++i) k[static_cast<std::size_t>(i)] = (i == N) ? b : a + (b - a) * (static_cast<double>(i) / N);
    return Partition(std::move(k));
}

AffineMap Partition::map(int i) const {
    if (i < 0 || i >= size()) throw InvalidArgument("subinterval index out of range");
    const double x0 = a();
    const double xN = b();
    const double lo = knots_[static_cast<std::size_t>(i)];
    const double hi = knots_[static_cast<std::size_t>(i) + 1];
    return {(hi - lo) / (xN - x0), (xN * lo - x0 * hi) / (xN - x0)};
}

double Partition::forward(int i, double x) const {
    const double lo = knots_.at(static_cast<std::size_t>(i));
    const double hi = knots_.at(static_cast<std::size_t>(i) + 1);
    return std::lerp(lo, hi, (x - a()) / (b() - a()));
}

double Partition::inverse(int i, double x) const {
    const double lo = knots_.at(static_cast<std::size_t>(i));
    const double hi = knots_.at(static_cast<std::size_t>(i) + 1);
    return std::lerp(a(), b(), (x - lo) / (hi - lo));
}

int Partition::owner(double x) const {
    // first knot >= x, excluding x_0
    const auto it = std::lower_bound(knots_.begin() + 1, knots_.end(), x);
    if (it == knots_.end()) return size() - 1;
    return static_cast<int>(it - knots_.begin()) - 1;
}

bool Partition::is_uniform(double rel_tol) const {
    const double h = (b() - a()) / size();
    for (int i = 0; i < size(); ++i) {
        if (std::fabs((knots_[static_cast<std::size_t>(i) + 1] - knots_[static_cast<std::size_t>(i)]) - h) >
            rel_tol * (b() - a())) {
            return false;
        }
    }
    return true;
}

std::vector<AffineMap> affine_maps(const Partition& partition) {
    std::vector<AffineMap> maps;
    maps.reserve(static_cast<std::size_t>(partition.size()));
    for (int i = 0; i < partition.size(); ++i) maps.push_back(partition.map(i));
    return maps;
}

} // namespace nnfif
