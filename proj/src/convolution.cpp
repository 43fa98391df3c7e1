#include "nlwave/convolution.hpp"

#include <algorithm>
#include <cmath>

namespace nlwave {

ConvolutionOperator::ConvolutionOperator(const Kernel& k, const Grid& g) : g_(g) {
    const double T = k.truncation_radius();
    const double q0 = std::min(g.h, T / 200.0);
    int K = static_cast<int>(std::ceil(2.0 * T / q0));
    if (K < 2) K = 2;
    if (K % 2 != 0) ++K;  // keep y = 0 a quadrature node (kernels may kink there)
    q_ = 2.0 * T / static_cast<double>(K);

    y_.resize(static_cast<std::size_t>(K) + 1);
    w_.resize(static_cast<std::size_t>(K) + 1);
    double mass = 0.0;
    for (int j = 0; j <= K; ++j) {
        const double y = -T + q_ * static_cast<double>(j);
        y_[static_cast<std::size_t>(j)] = y;
        double w = k.eval(y) * q_;
        if (j == 0 || j == K) w *= 0.5;
        w_[static_cast<std::size_t>(j)] = w;
        mass += w;
    }
    for (double& w : w_) w /= mass;

    // nodal stencil: W[m] = sum_j w_j hat(m h - y_j), hat the linear nodal basis
    band_half_ = static_cast<int>(std::ceil((T + g.h) / g.h)) + 1;
    band_.assign(static_cast<std::size_t>(2 * band_half_ + 1), 0.0);
    for (int m = -band_half_; m <= band_half_; ++m) {
        const double xm = static_cast<double>(m) * g.h;
        double acc = 0.0;
        for (std::size_t j = 0; j < y_.size(); ++j) {
            const double s = std::abs(xm - y_[j]);
            if (s < g.h) acc += w_[j] * (1.0 - s / g.h);
        }
        band_[static_cast<std::size_t>(m + band_half_)] = acc;
    }
}

double ConvolutionOperator::nodal_weight(int offset) const {
    if (offset < -band_half_ || offset > band_half_) return 0.0;
    return band_[static_cast<std::size_t>(offset + band_half_)];
}

double ConvolutionOperator::apply_at(const Profile& p, int i) const {
    const double xi = g_.node(i);
    double acc = 0.0;
    for (std::size_t j = 0; j < y_.size(); ++j) {
        acc += w_[j] * extend_value(p, g_, xi - y_[j]);
    }
    return acc;
}

Profile ConvolutionOperator::apply(const Profile& p) const {
    Profile out;
    out.left_ext = p.left_ext;
    out.right_ext = p.right_ext;
    out.values.resize(p.values.size());
    const int n = g_.n;
    const bool ends_match = p.values.front() == p.left_ext && p.values.back() == p.right_ext;
    if (!ends_match) {
        for (int i = 0; i < n; ++i) out.values[static_cast<std::size_t>(i)] = apply_at(p, i);
        return out;
    }
    for (int i = 0; i < n; ++i) {
        double acc = 0.0;
        for (int m = -band_half_; m <= band_half_; ++m) {
            const int j = i - m;
            double uj;
            if (j < 0)
                uj = p.left_ext;
            else if (j >= n)
                uj = p.right_ext;
            else
                uj = p.values[static_cast<std::size_t>(j)];
            acc += band_[static_cast<std::size_t>(m + band_half_)] * uj;
        }
        out.values[static_cast<std::size_t>(i)] = acc;
    }
    return out;
}

Profile convolve(const Kernel& k, const Profile& p, const Grid& g) {
    ConvolutionOperator op(k, g);
    Profile out;
    out.left_ext = p.left_ext;
    out.right_ext = p.right_ext;
    out.values.resize(p.values.size());
    for (int i = 0; i < g.n; ++i) out.values[static_cast<std::size_t>(i)] = op.apply_at(p, i);
    return out;
}

}  // namespace nlwave
