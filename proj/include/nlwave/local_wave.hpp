#pragma once

namespace nlwave {

// Explicit solution of the tau = 0 box problem -u'' - c u' = 0, u(-a) = 1,
// u(a) = 0. Switches to the linear branch when |c| a is below 1e-8.
double explicit_u0(double c, double a, double x);

// The unique c with explicit_u0(c, a, 0) = theta, by bisection on an expanding
// bracket; u0^c(0) is strictly decreasing in c.
double find_c0_box(double theta, double a);

// Closed form of the classical local bistable wave: speed (1-2*theta)/sqrt(2)
// and logistic profile pinned so that U(0) = theta. Derivatives are exact.
struct LocalWaveRef {
    double theta = 0.0;
    double c0 = 0.0;

    double value(double x) const;
    double deriv(double x) const;
    double deriv2(double x) const;
    // U'' + c0 U' + U (U - theta) (1 - U)
    double ode_residual(double x) const;

  private:
    double coef_ = 1.0;  // U(x) = 1 / (1 + coef * exp(x/sqrt(2)))
    friend LocalWaveRef exact_cubic_wave(double theta);
};

// Validates the closed form by substitution before returning it.
LocalWaveRef exact_cubic_wave(double theta);

}  // namespace nlwave
