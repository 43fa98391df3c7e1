#pragma once

#include <functional>

namespace nlwave {

// A scalar function with exact first and second derivatives, so differential
// inequalities can be certified without finite-difference noise.
struct C2Function {
    std::function<double(double)> value;
    std::function<double(double)> deriv;
    std::function<double(double)> deriv2;
};

// kappa = theta (1 - theta) / 8
double kappa_of(double theta);

// Bump on [0, X] with psi(0) = 0, psi(x_tilde) = 1 and -psi'' - c psi' <= kappa psi.
// Oscillatory branch (|c| < 2 sqrt(kappa)) satisfies the identity with equality;
// for c >= 2 sqrt(kappa) the inequality is strict and X is located by bisection
// on the margin beyond x_tilde.
struct Bump {
    double kappa = 0.0;
    double c = 0.0;
    double x_tilde = 0.0;
    double X = 0.0;
    C2Function psi;
};

Bump make_bump(double kappa, double c);  // requires c > -2 sqrt(kappa)

// Decreasing solution of -chi'' - c chi' = -rho chi with chi(0) = 1, chi(b) = 0.
struct AuxChi {
    double rho = 0.0;
    double b = 0.0;
    double c = 0.0;
    C2Function chi;
};

AuxChi make_chi(double rho, double b, double c);

enum class IneqDirection { le, ge, eq };

struct CertifyResult {
    bool passed = false;
    double worst_margin = 0.0;
    double worst_x = 0.0;
};

// Samples E(x) = -f'' - c f' - kappa f on [lo, hi] and checks E <= 0, E >= 0 or
// E == 0 according to the direction; margins below -tol fail.
CertifyResult certify_inequality(const C2Function& f, double c, double kappa, double lo,
                                 double hi, IneqDirection dir, int samples = 10000,
                                 double tol = 1e-8);

}  // namespace nlwave
