#pragma once

#include "nlwave/grid.hpp"
#include "nlwave/kernel.hpp"

namespace nlwave {

// Nodal values of phi * ubar by composite trapezoid quadrature over the kernel
// support, sampling ubar through extend_value. The quadrature step is
// min(h, T/200) so kernels much narrower than the grid stay resolved; the
// discrete weights are renormalized to unit mass, which makes the operator
// reproduce constants exactly.
//
// When the profile endpoints equal its extensions (every box profile), the sum
// collapses to a short nodal stencil W so that conv_i = sum_m W[m] u_{i-m};
// the same weights give the Jacobian of the convolution. Otherwise apply()
// falls back to direct sampling.
class ConvolutionOperator {
  public:
    ConvolutionOperator(const Kernel& k, const Grid& g);

    Profile apply(const Profile& p) const;
    double apply_at(const Profile& p, int i) const;  // direct sampling at node i

    // d conv_i / d u_j for an interior node j is nodal_weight(i - j).
    double nodal_weight(int offset) const;
    int band_halfwidth() const { return band_half_; }
    double quad_step() const { return q_; }
    const Grid& grid() const { return g_; }

  private:
    Grid g_;
    std::vector<double> y_;     // quadrature abscissas on [-T, T]
    std::vector<double> w_;     // renormalized trapezoid weights
    std::vector<double> band_;  // nodal weights, index m + band_half_
    int band_half_ = 0;
    double q_ = 0.0;
};

// Reference path: direct quadrature at every node.
Profile convolve(const Kernel& k, const Profile& p, const Grid& g);

}  // namespace nlwave
