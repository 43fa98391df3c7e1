#include "nlwave/kernel.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "nlwave/quadrature.hpp"

namespace nlwave {

namespace {

constexpr double kMassTol = 1e-13;
// Truncation radii keeping discarded mass below 1e-12.
constexpr double kGaussianTrunc = 7.4;   // erfc(7.4/sqrt(2)) ~ 1.4e-13
constexpr double kLaplaceTruncFactor = 28.0;  // exp(-28) ~ 6.9e-13

double interp_table(const std::vector<double>& xs, const std::vector<double>& vs, double y) {
    if (y <= xs.front() || y >= xs.back()) {
        // endpoints included: the table defines a compactly supported kernel
        if (y == xs.front()) return vs.front();
        if (y == xs.back()) return vs.back();
        return 0.0;
    }
    const auto it = std::upper_bound(xs.begin(), xs.end(), y);
    const std::size_t j = static_cast<std::size_t>(it - xs.begin());
    const double t = (y - xs[j - 1]) / (xs[j] - xs[j - 1]);
    return (1.0 - t) * vs[j - 1] + t * vs[j];
}

}  // namespace

Kernel Kernel::gaussian() {
    Kernel k;
    k.family_ = KernelFamily::gaussian;
    k.trunc_base_ = kGaussianTrunc;
    k.finalize();
    return k;
}

Kernel Kernel::tophat(double base_width) {
    if (!(base_width > 0.0)) throw std::invalid_argument("tophat: base width must be positive");
    Kernel k;
    k.family_ = KernelFamily::tophat;
    k.param_ = base_width;
    k.trunc_base_ = 0.5 * base_width;
    k.finalize();
    return k;
}

Kernel Kernel::laplace(double decay) {
    if (!(decay > 0.0)) throw std::invalid_argument("laplace: decay scale must be positive");
    Kernel k;
    k.family_ = KernelFamily::laplace;
    k.param_ = decay;
    k.trunc_base_ = kLaplaceTruncFactor * decay;
    k.finalize();
    return k;
}

Kernel Kernel::tabulated(std::vector<double> x, std::vector<double> v) {
    if (x.size() != v.size() || x.size() < 2)
        throw std::invalid_argument("tabulated kernel: need two columns of equal length >= 2");
    for (std::size_t i = 0; i + 1 < x.size(); ++i) {
        if (!(x[i] < x[i + 1]))
            throw std::invalid_argument("tabulated kernel: abscissas must be strictly increasing");
    }
    for (double vi : v) {
        if (!(vi >= 0.0)) throw std::invalid_argument("tabulated kernel: values must be nonnegative");
    }
    if (!(x.front() <= 0.0 && x.back() >= 0.0))
        throw std::invalid_argument("tabulated kernel: table must contain x = 0");
    Kernel k;
    k.family_ = KernelFamily::tabulated;
    auto tab = std::make_shared<Table>();
    tab->x = std::move(x);
    tab->v = std::move(v);
    k.table_ = std::move(tab);
    k.trunc_base_ = std::max(std::abs(k.table_->x.front()), std::abs(k.table_->x.back()));
    k.finalize();
    return k;
}

Kernel Kernel::tabulated_from_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open kernel CSV: " + path);
    std::vector<double> xs, vs;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::replace(line.begin(), line.end(), ',', ' ');
        std::istringstream row(line);
        double x, v;
        if (row >> x >> v) {
            xs.push_back(x);
            vs.push_back(v);
        }
        // non-numeric rows (headers) are skipped
    }
    return tabulated(std::move(xs), std::move(vs));
}

double Kernel::base_eval(double y) const {
    switch (family_) {
        case KernelFamily::gaussian:
            return std::exp(-0.5 * y * y) / std::sqrt(2.0 * std::numbers::pi);
        case KernelFamily::tophat:
            return std::abs(y) <= 0.5 * param_ ? 1.0 / param_ : 0.0;
        case KernelFamily::laplace:
            return std::exp(-std::abs(y) / param_) / (2.0 * param_);
        case KernelFamily::tabulated:
            return interp_table(table_->x, table_->v, y);
    }
    return 0.0;
}

void Kernel::finalize() {
    if (family_ == KernelFamily::tabulated) {
        // piecewise linear: the mass is an exact trapezoid sum over the table
        double mass = 0.0;
        const auto& xs = table_->x;
        const auto& vs = table_->v;
        for (std::size_t i = 0; i + 1 < xs.size(); ++i) {
            mass += 0.5 * (vs[i] + vs[i + 1]) * (xs[i + 1] - xs[i]);
        }
        norm_ = mass;
    } else {
        norm_ = quad::integrate_piecewise([this](double y) { return base_eval(y); },
                                          -trunc_base_, trunc_base_, smooth_breakpoints(), kMassTol);
    }
    if (!(norm_ > 0.0)) throw std::invalid_argument("kernel has no mass on its support");
    if (!(eval(0.0) > 0.0)) throw std::invalid_argument("kernel must be positive at 0");
}

double Kernel::eval(double x) const {
    if (std::abs(x) > truncation_radius()) return 0.0;
    return base_eval(x / sigma_) / (sigma_ * norm_);
}

double Kernel::mass_within(double r) const {
    if (!(r > 0.0)) return 0.0;
    const double T = truncation_radius();
    if (r >= T) return 1.0;
    if (family_ == KernelFamily::tabulated) {
        // clip the exact trapezoid sum to [-r, r] in base coordinates
        const double rb = r / sigma_;
        const auto& xs = table_->x;
        const auto& vs = table_->v;
        double mass = 0.0;
        for (std::size_t i = 0; i + 1 < xs.size(); ++i) {
            double lo = std::max(xs[i], -rb), hi = std::min(xs[i + 1], rb);
            if (hi <= lo) continue;
            const double vlo = interp_table(xs, vs, lo);
            const double vhi = interp_table(xs, vs, hi);
            mass += 0.5 * (vlo + vhi) * (hi - lo);
        }
        return mass / norm_;
    }
    return quad::integrate_piecewise([this](double x) { return eval(x); }, -r, r,
                                     smooth_breakpoints(), 1e-12);
}

double Kernel::tail_mass(double r) const { return std::max(0.0, 1.0 - mass_within(r)); }

std::vector<double> Kernel::smooth_breakpoints() const {
    std::vector<double> b;
    switch (family_) {
        case KernelFamily::gaussian:
            break;
        case KernelFamily::tophat:
            b = {-0.5 * param_ * sigma_, 0.5 * param_ * sigma_};
            break;
        case KernelFamily::laplace:
            b = {0.0};
            break;
        case KernelFamily::tabulated:
            for (double x : table_->x) b.push_back(x * sigma_);
            break;
    }
    return b;
}

std::string Kernel::describe() const {
    std::ostringstream os;
    switch (family_) {
        case KernelFamily::gaussian: os << "gaussian"; break;
        case KernelFamily::tophat: os << "tophat(w=" << param_ << ")"; break;
        case KernelFamily::laplace: os << "laplace(b=" << param_ << ")"; break;
        case KernelFamily::tabulated: os << "tabulated(" << table_->x.size() << " nodes)"; break;
    }
    os << ", sigma=" << sigma_;
    return os.str();
}

Kernel focus(const Kernel& k, double sigma) {
    if (!(sigma > 0.0)) throw std::invalid_argument("focus: sigma must be positive");
    Kernel out = k;
    out.sigma_ = k.sigma_ * sigma;
    return out;
}

namespace {

double sup_deriv_on_unit(const Kernel& k) {
    const double sigma = k.sigma();
    switch (k.family()) {
        case KernelFamily::gaussian: {
            // |phi0'(y)| = |y| exp(-y^2/2)/sqrt(2pi), maximal at |y| = 1
            const double inv = 1.0 / std::sqrt(2.0 * std::numbers::pi);
            const double ymax = 1.0 / sigma;
            const double g = ymax >= 1.0 ? std::exp(-0.5) : ymax * std::exp(-0.5 * ymax * ymax);
            return g * inv / (sigma * sigma);
        }
        case KernelFamily::tophat:
            return 0.0;  // a.e. derivative inside the support
        case KernelFamily::laplace:
            return 1.0 / (2.0 * k.shape_param() * k.shape_param() * sigma * sigma);
        case KernelFamily::tabulated: {
            const double step = 1e-4;
            double sup = 0.0;
            for (double x = -1.0 + step; x < 1.0 - step; x += step) {
                const double d = std::abs(k.eval(x + step) - k.eval(x - step)) / (2.0 * step);
                sup = std::max(sup, d);
            }
            return sup;
        }
    }
    return 0.0;
}

}  // namespace

KernelMoments moments(const Kernel& k) {
    KernelMoments m;
    const double T = k.truncation_radius();
    auto breaks = k.smooth_breakpoints();
    breaks.push_back(0.0);  // |z| has a kink at the origin
    m.m1_abs = quad::integrate_piecewise([&k](double z) { return std::abs(z) * k.eval(z); },
                                         -T, T, breaks, 1e-10);
    m.m2 = quad::integrate_piecewise([&k](double z) { return z * z * k.eval(z); },
                                     -T, T, breaks, 1e-10);
    m.sup_deriv_unit = sup_deriv_on_unit(k);
    m.value_at_zero = k.eval(0.0);
    return m;
}

}  // namespace nlwave
