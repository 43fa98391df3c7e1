#pragma once

namespace nlwave {

enum class Nonlinearity { bistable, ignition };

// Reaction term f(u, v) with v the convolution value, and its partials.
// Both variants vanish identically below their cutoff; the derivatives there
// are taken as zero (semi-smooth treatment of the indicator).
struct ReactionEval {
    double f = 0.0;
    double df_du = 0.0;
    double df_dv = 0.0;
};

inline ReactionEval reaction(Nonlinearity nl, double u, double v, double theta) {
    ReactionEval r;
    if (nl == Nonlinearity::bistable) {
        if (u < 0.0) return r;
        r.f = u * (u - theta) * (1.0 - v);
        r.df_du = (2.0 * u - theta) * (1.0 - v);
        r.df_dv = -u * (u - theta);
    } else {
        if (u < theta) return r;
        r.f = (u - theta) * (1.0 - v);
        r.df_du = 1.0 - v;
        r.df_dv = -(u - theta);
    }
    return r;
}

}  // namespace nlwave
