#include "nlwave/local_wave.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace nlwave {

double explicit_u0(double c, double a, double x) {
    if (!(a > 0.0)) throw std::invalid_argument("explicit_u0: a must be positive");
    if (std::abs(x) > a * (1.0 + 1e-12))
        throw std::invalid_argument("explicit_u0: |x| must not exceed a");
    if (std::abs(c) * a < 1e-8) return -x / (2.0 * a) + 0.5;
    if (c < 0.0) return 1.0 - explicit_u0(-c, a, -x);
    // (e^{-cx} - e^{-ca}) / (e^{ca} - e^{-ca}), scaled by e^{-ca} to avoid overflow
    const double num = std::exp(-c * (x + a)) - std::exp(-2.0 * c * a);
    const double den = 1.0 - std::exp(-2.0 * c * a);
    return num / den;
}

double find_c0_box(double theta, double a) {
    if (!(theta > 0.0 && theta < 1.0))
        throw std::invalid_argument("find_c0_box: theta must lie in (0,1)");
    if (!(a > 0.0)) throw std::invalid_argument("find_c0_box: a must be positive");
    auto g = [&](double c) { return explicit_u0(c, a, 0.0) - theta; };
    // u0^c(0) decreases from 1 to 0 as c runs over the reals
    double lo = -1.0, hi = 1.0;
    while (g(lo) < 0.0) lo *= 2.0;
    while (g(hi) > 0.0) hi *= 2.0;
    double mid = 0.0;
    for (int it = 0; it < 200; ++it) {
        mid = 0.5 * (lo + hi);
        const double gm = g(mid);
        if (std::abs(gm) < 1e-10) return mid;
        if (gm > 0.0)
            lo = mid;
        else
            hi = mid;
    }
    return mid;
}

double LocalWaveRef::value(double x) const {
    return 1.0 / (1.0 + coef_ * std::exp(x / std::numbers::sqrt2));
}

double LocalWaveRef::deriv(double x) const {
    const double u = value(x);
    return -u * (1.0 - u) / std::numbers::sqrt2;
}

double LocalWaveRef::deriv2(double x) const {
    const double u = value(x);
    return 0.5 * u * (1.0 - u) * (1.0 - 2.0 * u);
}

double LocalWaveRef::ode_residual(double x) const {
    const double u = value(x);
    return deriv2(x) + c0 * deriv(x) + u * (u - theta) * (1.0 - u);
}

LocalWaveRef exact_cubic_wave(double theta) {
    if (!(theta > 0.0 && theta < 1.0))
        throw std::invalid_argument("exact_cubic_wave: theta must lie in (0,1)");
    LocalWaveRef w;
    w.theta = theta;
    w.c0 = (1.0 - 2.0 * theta) / std::numbers::sqrt2;
    w.coef_ = 1.0 / theta - 1.0;  // pins U(0) = theta
    if (std::abs(w.value(0.0) - theta) > 1e-12)
        throw std::logic_error("exact_cubic_wave: normalization check failed");
    for (int i = 0; i < 200; ++i) {
        const double x = -30.0 + 60.0 * static_cast<double>(i) / 199.0;
        if (std::abs(w.ode_residual(x)) > 1e-8)
            throw std::logic_error("exact_cubic_wave: substitution check failed");
    }
    return w;
}

}  // namespace nlwave
