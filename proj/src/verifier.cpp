#include "nlwave/verifier.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace nlwave {

namespace {

constexpr double kCrossTol = 1e-6;
constexpr int kDeadBandNodes = 3;

double max_value(const Profile& p) {
    return *std::max_element(p.values.begin(), p.values.end());
}

// smallest r with M * tail_mass(r) <= target, by bisection on the kernel tail
double tail_radius(const Kernel& k, double M, double target) {
    const double T = k.truncation_radius();
    if (M * k.tail_mass(0.0) <= target) return 0.0;
    double lo = 0.0, hi = T;
    while (hi - lo > 1e-10) {
        const double mid = 0.5 * (lo + hi);
        if (M * k.tail_mass(mid) <= target)
            hi = mid;
        else
            lo = mid;
    }
    return hi;
}

}  // namespace

double amplitude_bound(const Kernel& k) {
    const KernelMoments m = moments(k);
    const double base = (8.0 / 3.0) * (1.0 + (3.0 / 32.0) * m.sup_deriv_unit) / m.value_at_zero;
    return std::max(4.0 / 3.0, base * base);
}

double left_state_mean(const WaveSolution& sol) {
    const Grid& g = sol.grid;
    double sum = 0.0;
    int count = 0;
    for (int i = 0; i < g.n; ++i) {
        const double x = g.node(i);
        if (x <= -g.a + 2.0) {
            sum += sol.profile.values[static_cast<std::size_t>(i)];
            ++count;
        }
    }
    return count ? sum / static_cast<double>(count) : 0.0;
}

CheckRecord check_amplitude_bound(const WaveSolution& sol, const Kernel& k) {
    CheckRecord rec;
    rec.name = "amplitude_bound";
    const double M_meas = max_value(sol.profile);
    const double M_bound = amplitude_bound(k);
    rec.passed = M_meas <= M_bound + 1e-6;
    rec.measured = {{"max_u", M_meas}};
    rec.bounds = {{"M_bound", M_bound}};
    return rec;
}

CheckRecord check_speed_bounds(const WaveSolution& sol, const Kernel& k, double theta) {
    CheckRecord rec;
    rec.name = "speed_bounds";
    const double M = max_value(sol.profile);
    const double c_max = 2.0 * std::sqrt(2.0 * M);
    const double Q = M * (M + theta) * (1.0 + M);
    const double R = tail_radius(k, M, (1.0 - theta) / 8.0);
    const double c_min = -128.0 * Q * R / (theta * (1.0 - theta) * (1.0 - theta));
    rec.passed = sol.c >= c_min - 1e-9 && sol.c <= c_max + 1e-9;
    rec.measured = {{"c", sol.c}, {"M", M}};
    rec.bounds = {{"c_min", c_min}, {"c_max", c_max}, {"Q", Q}, {"R", R}};
    return rec;
}

CheckRecord check_theta_crossing(const WaveSolution& sol, double theta) {
    CheckRecord rec;
    rec.name = "theta_crossing";
    const Grid& g = sol.grid;
    const auto& u = sol.profile.values;
    const int i0 = g.center_index();

    double left_margin = std::numeric_limits<double>::infinity();
    double right_margin = std::numeric_limits<double>::infinity();
    for (int i = 1; i <= i0 - kDeadBandNodes; ++i)
        left_margin = std::min(left_margin, u[static_cast<std::size_t>(i)] - theta);
    for (int i = i0 + kDeadBandNodes; i <= g.n - 2; ++i)
        right_margin = std::min(right_margin, theta - u[static_cast<std::size_t>(i)]);

    // sign changes of u - theta, ignoring nodes inside the tolerance band
    int sign_changes = 0;
    int prev = 0;
    for (int i = 0; i < g.n; ++i) {
        const double d = u[static_cast<std::size_t>(i)] - theta;
        if (std::abs(d) <= kCrossTol) continue;
        const int s = d > 0.0 ? 1 : -1;
        if (prev != 0 && s != prev) ++sign_changes;
        prev = s;
    }

    rec.passed = left_margin > kCrossTol && right_margin > kCrossTol && sign_changes == 1;
    rec.measured = {{"min_left_margin", left_margin},
                    {"min_right_margin", right_margin},
                    {"sign_changes", static_cast<double>(sign_changes)}};
    rec.bounds = {{"tol_cross", kCrossTol}, {"dead_band_nodes", static_cast<double>(kDeadBandNodes)}};
    return rec;
}

CheckRecord check_tail_and_plateau(const WaveSolution& sol, double theta) {
    CheckRecord rec;
    rec.name = "tail_and_plateau";
    const Grid& g = sol.grid;
    const auto& u = sol.profile.values;
    const int n = g.n;

    // onset of the strictly decreasing tail
    int m = 0;
    for (int i = n - 2; i >= 0; --i) {
        if (u[static_cast<std::size_t>(i) + 1] - u[static_cast<std::size_t>(i)] >= 0.0) {
            m = i + 1;
            break;
        }
    }
    const double xbar = m < n ? g.node(m) : g.a;
    const bool xbar_ok = xbar < 0.5 * g.a;

    // decay at the right edge
    double edge_max = 0.0;
    for (int i = 0; i < n; ++i) {
        const double x = g.node(i);
        if (x >= g.a - 5.0 && x < g.a)
            edge_max = std::max(edge_max, u[static_cast<std::size_t>(i)]);
    }
    const bool edge_ok = edge_max < 1e-3;

    // largest eps with u >= theta + eps on [-a, -1/eps]
    double eps_left = 0.0;
    double run_min = std::numeric_limits<double>::infinity();
    for (int i = 0; i < g.center_index(); ++i) {
        const double x = g.node(i);
        run_min = std::min(run_min, u[static_cast<std::size_t>(i)] - theta);
        if (x > -g.h) break;
        eps_left = std::max(eps_left, std::min(run_min, 1.0 / std::abs(x)));
    }

    // smallest x beyond which u <= theta/2 all the way to a
    double onset = 0.0;
    bool right_ok = true;
    for (int i = n - 1; i >= g.center_index(); --i) {
        if (u[static_cast<std::size_t>(i)] > 0.5 * theta) {
            if (i == n - 1) right_ok = false;  // never drops below theta/2
            onset = g.node(i + 1 <= n - 1 ? i + 1 : i);
            break;
        }
        if (i == g.center_index()) onset = g.node(i);
    }
    double eps_right;
    if (!right_ok)
        eps_right = 0.0;
    else if (onset <= 0.0)
        eps_right = std::numeric_limits<double>::infinity();
    else
        eps_right = 1.0 / onset;

    const double eps = std::min(eps_left, eps_right);
    const bool eps_ok = eps > 0.0;

    rec.passed = xbar_ok && edge_ok && eps_ok;
    rec.measured = {{"xbar", xbar},
                    {"right_edge_max", edge_max},
                    {"eps", std::isfinite(eps) ? eps : eps_left},
                    {"theta_half_onset", onset}};
    rec.bounds = {{"xbar_limit", 0.5 * g.a}, {"edge_limit", 1e-3}};
    return rec;
}

CheckRecord check_focusing_criterion(const WaveSolution& sol, const Kernel& k) {
    CheckRecord rec;
    rec.name = "focusing_criterion";
    const double M = max_value(sol.profile);
    // sigma sqrt(m2_base) equals sqrt(m2 of the focused kernel)
    const double lhs = std::sqrt(moments(k).m2) * M * M;
    const double rhs = std::abs(sol.c);
    const bool criterion = lhs < rhs;
    const double left_state = left_state_mean(sol);
    const bool limit_one = left_state > 0.99;
    rec.passed = !criterion || limit_one;
    rec.measured = {{"lhs", lhs},
                    {"rhs", rhs},
                    {"criterion", criterion ? 1.0 : 0.0},
                    {"left_state", left_state}};
    rec.bounds = {{"left_state_threshold", 0.99}};
    rec.note = criterion ? "criterion holds: left state must approach 1"
                         : "criterion does not hold: nothing asserted";
    return rec;
}

VerificationReport full_report(const WaveSolution& sol, const Kernel& k, double theta) {
    VerificationReport rep;
    rep.checks.push_back(check_amplitude_bound(sol, k));
    rep.checks.push_back(check_speed_bounds(sol, k, theta));
    rep.checks.push_back(check_theta_crossing(sol, theta));
    rep.checks.push_back(check_tail_and_plateau(sol, theta));
    rep.checks.push_back(check_focusing_criterion(sol, k));
    rep.measured_M = rep.checks[0].measured_value("max_u");
    rep.Q_used = rep.checks[1].bound_value("Q");
    rep.R_used = rep.checks[1].bound_value("R");
    rep.measured_xbar = rep.checks[3].measured_value("xbar");
    rep.measured_eps = rep.checks[3].measured_value("eps");
    return rep;
}

}  // namespace nlwave
