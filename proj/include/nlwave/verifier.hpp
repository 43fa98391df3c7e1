#pragma once

#include "nlwave/bvp_solver.hpp"
#include "nlwave/kernel.hpp"
#include "nlwave/report.hpp"

namespace nlwave {

// Amplitude bound from kernel metadata alone:
// max(4/3, ((8/3)(1 + (3/32) sup|phi'|_(-1,1)) / phi(0))^2).
double amplitude_bound(const Kernel& k);

// Mean of u over [-a, -a+2], the left-state probe used by the focusing check.
double left_state_mean(const WaveSolution& sol);

CheckRecord check_amplitude_bound(const WaveSolution& sol, const Kernel& k);
CheckRecord check_speed_bounds(const WaveSolution& sol, const Kernel& k, double theta);
CheckRecord check_theta_crossing(const WaveSolution& sol, double theta);
CheckRecord check_tail_and_plateau(const WaveSolution& sol, double theta);
CheckRecord check_focusing_criterion(const WaveSolution& sol, const Kernel& k);

VerificationReport full_report(const WaveSolution& sol, const Kernel& k, double theta);

}  // namespace nlwave
