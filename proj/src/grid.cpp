#include "nlwave/grid.hpp"

#include <cmath>
#include <stdexcept>

namespace nlwave {

std::vector<double> Grid::nodes() const {
    std::vector<double> xs(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) xs[static_cast<std::size_t>(i)] = node(i);
    return xs;
}

Grid make_grid(double a, double h_target) {
    if (!(a > 0.0)) throw std::invalid_argument("make_grid: a must be positive");
    if (!(h_target > 0.0) || h_target >= a)
        throw std::invalid_argument("make_grid: need 0 < h_target < a");
    const int half = static_cast<int>(std::ceil(a / h_target - 1e-12));
    Grid g;
    g.h = a / static_cast<double>(half);
    g.n = 2 * half + 1;
    g.a = static_cast<double>(half) * g.h;
    return g;
}

double extend_value(const Profile& p, const Grid& g, double x) {
    if (x < -g.a) return p.left_ext;
    if (x > g.a) return p.right_ext;
    const double s = (x + g.a) / g.h;
    int i = static_cast<int>(std::floor(s));
    if (i < 0) i = 0;
    if (i > g.n - 2) i = g.n - 2;
    const double w = s - static_cast<double>(i);
    const auto& v = p.values;
    return (1.0 - w) * v[static_cast<std::size_t>(i)] + w * v[static_cast<std::size_t>(i) + 1];
}

}  // namespace nlwave
