#pragma once

#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "nlwave/convolution.hpp"
#include "nlwave/grid.hpp"
#include "nlwave/kernel.hpp"
#include "nlwave/reaction.hpp"
#include "nlwave/report.hpp"

namespace nlwave {

// Damped-Newton / tau-continuation settings for the box problem with the
// speed c as a global unknown and the pinning u(0) = theta.
struct SolverConfig {
    double tau_start = 0.0;
    double tau_end = 1.0;
    double dtau_init = 0.1;
    double dtau_min = 1e-3;
    double newton_tol = 1e-8;  // max norm of the reduced residual
    int newton_max_iters = 50;
    double damping_factor = 0.5;
    double min_step = 1.0 / 1024.0;
    Nonlinearity nonlinearity = Nonlinearity::bistable;

    void validate() const;  // throws std::invalid_argument
};

struct WaveSolution {
    Grid grid;
    Profile profile;
    double c = 0.0;
    double tau = 0.0;
    double theta = 0.0;
    double residual_norm = std::numeric_limits<double>::infinity();
    int newton_iterations_total = 0;
    int continuation_steps = 0;
    double jacobian_condition_estimate = 0.0;
    std::string provenance;
};

// Assembled residual, one row per node: the two Dirichlet rows, the pinning
// row u(0) - theta at the center node, and the centered second-order stencil
// -(u_{i+1}-2u_i+u_{i-1})/h^2 - c (u_{i+1}-u_{i-1})/(2h) - tau f(u_i, conv_i)
// elsewhere. The square system Newton actually solves keeps the stencil row
// at the center node too and eliminates u(0) = theta instead; see residual
// docs in the implementation.
std::vector<double> residual(const Profile& p, double c, double tau, double theta,
                             const Kernel& k, const Grid& g, Nonlinearity nl);

// Max norm of the reduced (square) residual: stencil rows at every interior
// node with the boundary values and the pinned center substituted.
double reduced_residual_norm(const Profile& p, double c, double tau, double theta,
                             const ConvolutionOperator& conv, Nonlinearity nl);

struct NewtonResult {
    bool converged = false;
    WaveSolution solution;  // last iterate; the converged one on success
    std::vector<double> residual_history;
    std::string message;
};

NewtonResult newton_solve(const WaveSolution& initial, double tau, double theta,
                          const Kernel& k, const SolverConfig& cfg);

struct ContinuationResult {
    bool converged = false;
    WaveSolution solution;  // final solution, or the last good one on breakdown
    double last_good_tau = 0.0;
    std::string message;
};

// Seeds tau = tau_start from the explicit local solution and advances tau with
// adaptive steps (halving on Newton failure, doubling after two clean steps).
ContinuationResult continuation(const SolverConfig& cfg, double theta, const Kernel& k,
                                const Grid& g);

// Newton directly at cfg.tau_end from a given seed (used when sweeping sigma);
// falls back to a full continuation if the seeded solve fails.
ContinuationResult continue_from(const WaveSolution& seed, const SolverConfig& cfg,
                                 double theta, const Kernel& k);

struct SolveResult {
    ContinuationResult continuation;
    std::optional<VerificationReport> report;  // present when converged
};

// make_grid + continuation to tau_end + full verification report.
SolveResult solve_wave(double theta, const Kernel& k, double a, double h,
                       const SolverConfig& cfg);

}  // namespace nlwave
