#pragma once

#include <memory>
#include <string>
#include <vector>

namespace nlwave {

enum class KernelFamily { gaussian, tophat, laplace, tabulated };

// Scalar moments of a kernel used by the amplitude and focusing diagnostics.
struct KernelMoments {
    double m1_abs = 0.0;          // integral of |z| phi(z)
    double m2 = 0.0;              // integral of z^2 phi(z)
    double sup_deriv_unit = 0.0;  // sup of |phi'| on (-1,1)
    double value_at_zero = 0.0;
};

// A normalized nonnegative convolution kernel with a focusing scale sigma.
// Kernels are immutable values: focusing returns a rescaled copy. Mass outside
// the truncation radius is below 1e-12 by construction and the kernel is
// renormalized so that its truncated mass is exactly 1.
class Kernel {
  public:
    static Kernel gaussian();                      // unit variance
    static Kernel tophat(double base_width = 1.0); // uniform on [-w/2, w/2]
    static Kernel laplace(double decay = 1.0);     // exp(-|x|/b)/(2b)
    static Kernel tabulated(std::vector<double> x, std::vector<double> v);
    static Kernel tabulated_from_csv(const std::string& path);

    // phi_sigma(x) = phi(x/sigma)/sigma; zero beyond the truncation radius.
    double eval(double x) const;

    KernelFamily family() const { return family_; }
    double sigma() const { return sigma_; }
    double shape_param() const { return param_; }
    double truncation_radius() const { return trunc_base_ * sigma_; }

    // Mass of phi_sigma over [-r, r] (adaptive quadrature; exact for tables).
    double mass_within(double r) const;
    double tail_mass(double r) const;

    // Abscissas where phi_sigma is not smooth, used to split quadratures.
    std::vector<double> smooth_breakpoints() const;

    const std::vector<double>& table_x() const { return table_->x; }
    const std::vector<double>& table_v() const { return table_->v; }

    std::string describe() const;

  private:
    struct Table {
        std::vector<double> x, v;
    };

    Kernel() = default;
    double base_eval(double y) const;  // unnormalized family shape at sigma = 1
    void finalize();                   // computes norm_, validates hypotheses

    KernelFamily family_ = KernelFamily::gaussian;
    double sigma_ = 1.0;
    double param_ = 1.0;       // tophat base width / laplace decay
    double trunc_base_ = 0.0;  // truncation radius of the sigma = 1 kernel
    double norm_ = 1.0;        // truncated mass of the raw base shape
    std::shared_ptr<const Table> table_;

    friend Kernel focus(const Kernel& k, double sigma);
};

// phi_sigma from a base kernel: scales the kernel (and its truncation) by sigma.
Kernel focus(const Kernel& k, double sigma);

// Moments by adaptive quadrature over the truncated support.
KernelMoments moments(const Kernel& k);

}  // namespace nlwave
