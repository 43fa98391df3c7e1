#pragma once

#include <functional>
#include <vector>

namespace nlwave::quad {

// Adaptive Simpson integration to an absolute tolerance.
double adaptive_simpson(const std::function<double(double)>& f, double lo, double hi,
                        double tol, int max_depth = 48);

// Same, but the interval is first split at the given interior breakpoints so the
// integrand is smooth on every subinterval (kinks/jumps at breakpoints are fine).
double integrate_piecewise(const std::function<double(double)>& f, double lo, double hi,
                           const std::vector<double>& breakpoints, double tol);

}  // namespace nlwave::quad
