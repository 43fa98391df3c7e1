#include "nlwave/bvp_solver.hpp"

#include <Eigen/Sparse>
#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>
#include <stdexcept>

#include "nlwave/local_wave.hpp"
#include "nlwave/verifier.hpp"

namespace nlwave {

void SolverConfig::validate() const {
    if (!(tau_start >= 0.0 && tau_start <= tau_end && tau_end <= 1.0))
        throw std::invalid_argument("solver config: need 0 <= tau_start <= tau_end <= 1");
    if (!(dtau_init > 0.0 && dtau_min > 0.0))
        throw std::invalid_argument("solver config: tau steps must be positive");
    if (!(newton_tol > 0.0)) throw std::invalid_argument("solver config: newton_tol must be positive");
    if (newton_max_iters < 1) throw std::invalid_argument("solver config: newton_max_iters < 1");
    if (!(damping_factor > 0.0 && damping_factor < 1.0))
        throw std::invalid_argument("solver config: damping factor must lie in (0,1)");
    if (!(min_step > 0.0)) throw std::invalid_argument("solver config: min_step must be positive");
}

namespace {

// The square system Newton solves: stencil rows at every interior node with
// u(-a) = 1, u(a) = 0 and the pinned center u(0) = theta substituted, so the
// unknowns are the remaining interior values plus the speed c.
class BoxSystem {
  public:
    BoxSystem(const Grid& g, double theta, Nonlinearity nl, const Kernel& k)
        : g_(g), theta_(theta), nl_(nl), conv_(k, g) {
        n_ = g.n;
        i0_ = g.center_index();
        if (n_ < 5) throw std::invalid_argument("box system: grid too small");
        dim_ = n_ - 2;  // one row per interior node; unknowns: (n-3) values + c
    }

    int dim() const { return dim_; }
    int center() const { return i0_; }
    const ConvolutionOperator& conv() const { return conv_; }

    void enforce_pins(Profile& p) const {
        p.values.front() = 1.0;
        p.values.back() = 0.0;
        p.values[static_cast<std::size_t>(i0_)] = theta_;
        p.left_ext = 1.0;
        p.right_ext = 0.0;
    }

    Eigen::VectorXd residual_vec(const Profile& p, double c, double tau) const {
        const Profile v = conv_.apply(p);
        Eigen::VectorXd F(dim_);
        const double h = g_.h, h2 = h * h;
        const auto& u = p.values;
        for (int i = 1; i <= n_ - 2; ++i) {
            const auto iu = static_cast<std::size_t>(i);
            const double lap = (u[iu + 1] - 2.0 * u[iu] + u[iu - 1]) / h2;
            const double adv = (u[iu + 1] - u[iu - 1]) / (2.0 * h);
            const ReactionEval r = reaction(nl_, u[iu], v.values[iu], theta_);
            F(i - 1) = -lap - c * adv - tau * r.f;
        }
        return F;
    }

    // column index of the unknown attached to node j, or -1 if j is pinned
    int col_of(int j) const {
        if (j <= 0 || j >= n_ - 1 || j == i0_) return -1;
        return j < i0_ ? j - 1 : j - 2;
    }
    int col_c() const { return dim_ - 1; }

    Eigen::SparseMatrix<double> jacobian(const Profile& p, double c, double tau) const {
        const Profile v = conv_.apply(p);
        const double h = g_.h, h2 = h * h;
        const auto& u = p.values;
        const int bh = conv_.band_halfwidth();
        std::vector<Eigen::Triplet<double>> trip;
        trip.reserve(static_cast<std::size_t>(dim_) * static_cast<std::size_t>(2 * bh + 5));
        for (int i = 1; i <= n_ - 2; ++i) {
            const int row = i - 1;
            const auto iu = static_cast<std::size_t>(i);
            const ReactionEval r = reaction(nl_, u[iu], v.values[iu], theta_);
            // diffusion/advection stencil
            if (int cj = col_of(i); cj >= 0)
                trip.emplace_back(row, cj, 2.0 / h2 - tau * r.df_du);
            if (int cj = col_of(i - 1); cj >= 0)
                trip.emplace_back(row, cj, -1.0 / h2 + c / (2.0 * h));
            if (int cj = col_of(i + 1); cj >= 0)
                trip.emplace_back(row, cj, -1.0 / h2 - c / (2.0 * h));
            // convolution band
            if (tau != 0.0 && r.df_dv != 0.0) {
                for (int m = -bh; m <= bh; ++m) {
                    const int j = i - m;
                    const int cj = col_of(j);
                    if (cj < 0) continue;
                    const double w = conv_.nodal_weight(m);
                    if (w != 0.0) trip.emplace_back(row, cj, -tau * r.df_dv * w);
                }
            }
            // speed column
            trip.emplace_back(row, col_c(), -(u[iu + 1] - u[iu - 1]) / (2.0 * h));
        }
        Eigen::SparseMatrix<double> J(dim_, dim_);
        J.setFromTriplets(trip.begin(), trip.end());
        return J;
    }

    void apply_step(Profile& p, double& c, const Eigen::VectorXd& delta, double s) const {
        for (int j = 1; j <= n_ - 2; ++j) {
            const int cj = col_of(j);
            if (cj >= 0) p.values[static_cast<std::size_t>(j)] += s * delta(cj);
        }
        c += s * delta(col_c());
    }

  private:
    Grid g_;
    double theta_;
    Nonlinearity nl_;
    ConvolutionOperator conv_;
    int n_ = 0, i0_ = 0, dim_ = 0;
};

double inf_norm(const Eigen::VectorXd& v) { return v.size() ? v.cwiseAbs().maxCoeff() : 0.0; }

double condition_estimate(const Eigen::SparseMatrix<double>& J,
                          Eigen::SparseLU<Eigen::SparseMatrix<double>>& lu) {
    // crude lower bound: ||J||_inf * ||J^{-1} r||_inf for a fixed random unit r
    double norm_j = 0.0;
    Eigen::VectorXd rowsum = Eigen::VectorXd::Zero(J.rows());
    for (int k = 0; k < J.outerSize(); ++k)
        for (Eigen::SparseMatrix<double>::InnerIterator it(J, k); it; ++it)
            rowsum(it.row()) += std::abs(it.value());
    norm_j = rowsum.maxCoeff();
    std::mt19937 rng(12345);
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    Eigen::VectorXd r(J.rows());
    for (int i = 0; i < r.size(); ++i) r(i) = dist(rng);
    r /= inf_norm(r);
    const Eigen::VectorXd x = lu.solve(r);
    return norm_j * inf_norm(x);
}

struct IterateOutcome {
    bool converged = false;
    int iterations = 0;
    double cond = 0.0;
    std::vector<double> history;
    std::string message;
};

IterateOutcome newton_iterate(const BoxSystem& sys, Profile& p, double& c, double tau,
                              const SolverConfig& cfg) {
    IterateOutcome out;
    Eigen::VectorXd F = sys.residual_vec(p, c, tau);
    double norm = inf_norm(F);
    out.history.push_back(norm);
    Eigen::SparseLU<Eigen::SparseMatrix<double>> lu;
    for (int it = 0; it < cfg.newton_max_iters; ++it) {
        if (norm <= cfg.newton_tol) {
            out.converged = true;
            return out;
        }
        Eigen::SparseMatrix<double> J = sys.jacobian(p, c, tau);
        lu.compute(J);
        if (lu.info() != Eigen::Success) {
            out.message = "jacobian factorization failed";
            return out;
        }
        out.cond = condition_estimate(J, lu);
        const Eigen::VectorXd delta = lu.solve(-F);
        double s = 1.0;
        bool accepted = false;
        while (s >= cfg.min_step) {
            Profile trial = p;
            double trial_c = c;
            sys.apply_step(trial, trial_c, delta, s);
            const Eigen::VectorXd Ft = sys.residual_vec(trial, trial_c, tau);
            const double nt = inf_norm(Ft);
            if (nt < norm) {
                p = std::move(trial);
                c = trial_c;
                F = Ft;
                norm = nt;
                accepted = true;
                break;
            }
            s *= cfg.damping_factor;
        }
        ++out.iterations;
        out.history.push_back(norm);
        if (!accepted) {
            out.message = "backtracking stalled (no residual decrease at minimum step)";
            return out;
        }
    }
    out.converged = norm <= cfg.newton_tol;
    if (!out.converged) out.message = "newton iteration limit reached";
    return out;
}

WaveSolution pack_solution(const Grid& g, Profile p, double c, double tau, double theta,
                           double residual_norm) {
    WaveSolution s;
    s.grid = g;
    s.profile = std::move(p);
    s.c = c;
    s.tau = tau;
    s.theta = theta;
    s.residual_norm = residual_norm;
    return s;
}

}  // namespace

std::vector<double> residual(const Profile& p, double c, double tau, double theta,
                             const Kernel& k, const Grid& g, Nonlinearity nl) {
    if (static_cast<int>(p.values.size()) != g.n)
        throw std::invalid_argument("residual: profile length does not match grid");
    ConvolutionOperator conv(k, g);
    const Profile v = conv.apply(p);
    std::vector<double> F(static_cast<std::size_t>(g.n), 0.0);
    const double h = g.h, h2 = h * h;
    const auto& u = p.values;
    const int i0 = g.center_index();
    F[0] = u.front() - 1.0;
    F[static_cast<std::size_t>(g.n - 1)] = u.back();
    for (int i = 1; i <= g.n - 2; ++i) {
        const auto iu = static_cast<std::size_t>(i);
        if (i == i0) {
            F[iu] = u[iu] - theta;
            continue;
        }
        const double lap = (u[iu + 1] - 2.0 * u[iu] + u[iu - 1]) / h2;
        const double adv = (u[iu + 1] - u[iu - 1]) / (2.0 * h);
        const ReactionEval r = reaction(nl, u[iu], v.values[iu], theta);
        F[iu] = -lap - c * adv - tau * r.f;
    }
    return F;
}

double reduced_residual_norm(const Profile& p, double c, double tau, double theta,
                             const ConvolutionOperator& conv, Nonlinearity nl) {
    const Grid& g = conv.grid();
    const Profile v = conv.apply(p);
    const double h = g.h, h2 = h * h;
    const auto& u = p.values;
    double norm = 0.0;
    for (int i = 1; i <= g.n - 2; ++i) {
        const auto iu = static_cast<std::size_t>(i);
        const double lap = (u[iu + 1] - 2.0 * u[iu] + u[iu - 1]) / h2;
        const double adv = (u[iu + 1] - u[iu - 1]) / (2.0 * h);
        const ReactionEval r = reaction(nl, u[iu], v.values[iu], theta);
        norm = std::max(norm, std::abs(-lap - c * adv - tau * r.f));
    }
    return norm;
}

NewtonResult newton_solve(const WaveSolution& initial, double tau, double theta,
                          const Kernel& k, const SolverConfig& cfg) {
    cfg.validate();
    BoxSystem sys(initial.grid, theta, cfg.nonlinearity, k);
    Profile p = initial.profile;
    if (static_cast<int>(p.values.size()) != initial.grid.n)
        throw std::invalid_argument("newton_solve: profile length does not match grid");
    sys.enforce_pins(p);
    double c = initial.c;
    IterateOutcome out = newton_iterate(sys, p, c, tau, cfg);
    NewtonResult res;
    res.converged = out.converged;
    res.residual_history = out.history;
    res.message = out.message;
    res.solution = pack_solution(initial.grid, std::move(p), c, tau, theta, out.history.back());
    res.solution.newton_iterations_total = initial.newton_iterations_total + out.iterations;
    res.solution.continuation_steps = initial.continuation_steps;
    res.solution.jacobian_condition_estimate = out.cond;
    return res;
}

ContinuationResult continuation(const SolverConfig& cfg, double theta, const Kernel& k,
                                const Grid& g) {
    cfg.validate();
    if (!(theta > 0.0 && theta < 1.0))
        throw std::invalid_argument("continuation: theta must lie in (0,1)");
    ContinuationResult res;

    BoxSystem sys(g, theta, cfg.nonlinearity, k);
    Profile p;
    p.values.resize(static_cast<std::size_t>(g.n));
    double c = find_c0_box(theta, g.a);
    for (int i = 0; i < g.n; ++i)
        p.values[static_cast<std::size_t>(i)] = explicit_u0(c, g.a, g.node(i));
    sys.enforce_pins(p);

    int total_iters = 0;
    int steps = 0;
    double cond = 0.0;

    // polish the seed at tau_start
    double tau = cfg.tau_start;
    IterateOutcome out = newton_iterate(sys, p, c, tau, cfg);
    total_iters += out.iterations;
    cond = out.cond;
    if (!out.converged) {
        res.solution = pack_solution(g, std::move(p), c, tau, theta, out.history.back());
        res.solution.newton_iterations_total = total_iters;
        res.last_good_tau = -1.0;
        res.message = "seed solve failed at tau_start: " + out.message;
        return res;
    }

    double dtau = cfg.dtau_init;
    const double dtau_cap = std::max(0.1, cfg.dtau_init);
    int consecutive_full = 0;
    Profile good_p = p;
    double good_c = c, good_tau = tau, good_norm = out.history.back();

    while (tau < cfg.tau_end - 1e-14) {
        const double step = std::min(dtau, cfg.tau_end - tau);
        const double trial_tau = tau + step;
        Profile trial_p = good_p;
        double trial_c = good_c;
        IterateOutcome it = newton_iterate(sys, trial_p, trial_c, trial_tau, cfg);
        total_iters += it.iterations;
        if (it.converged) {
            good_p = std::move(trial_p);
            good_c = trial_c;
            good_tau = trial_tau;
            good_norm = it.history.back();
            cond = it.cond != 0.0 ? it.cond : cond;
            tau = trial_tau;
            ++steps;
            if (step >= dtau - 1e-15) {
                if (++consecutive_full >= 2) {
                    dtau = std::min(2.0 * dtau, dtau_cap);
                    consecutive_full = 0;
                }
            }
        } else {
            dtau *= 0.5;
            consecutive_full = 0;
            if (dtau < cfg.dtau_min) {
                res.solution = pack_solution(g, std::move(good_p), good_c, good_tau, theta, good_norm);
                res.solution.newton_iterations_total = total_iters;
                res.solution.continuation_steps = steps;
                res.solution.jacobian_condition_estimate = cond;
                res.last_good_tau = good_tau;
                std::ostringstream msg;
                msg << "continuation breakdown at tau=" << trial_tau << " (dtau below minimum): "
                    << it.message;
                res.message = msg.str();
                return res;
            }
        }
    }

    res.converged = true;
    res.solution = pack_solution(g, std::move(good_p), good_c, good_tau, theta, good_norm);
    res.solution.newton_iterations_total = total_iters;
    res.solution.continuation_steps = steps;
    res.solution.jacobian_condition_estimate = cond;
    res.last_good_tau = good_tau;
    std::ostringstream prov;
    prov << "continuation tau " << cfg.tau_start << " -> " << cfg.tau_end << " in " << steps
         << " steps, " << total_iters << " newton iterations, kernel " << k.describe();
    res.solution.provenance = prov.str();
    return res;
}

ContinuationResult continue_from(const WaveSolution& seed, const SolverConfig& cfg,
                                 double theta, const Kernel& k) {
    cfg.validate();
    NewtonResult direct = newton_solve(seed, cfg.tau_end, theta, k, cfg);
    if (direct.converged) {
        ContinuationResult res;
        res.converged = true;
        res.solution = std::move(direct.solution);
        res.solution.provenance = "seeded newton at tau_end from previous solution";
        res.last_good_tau = cfg.tau_end;
        return res;
    }
    ContinuationResult full = continuation(cfg, theta, k, seed.grid);
    full.message = "seeded solve failed (" + direct.message + "); " +
                   (full.message.empty() ? std::string("recovered by full continuation")
                                         : full.message);
    return full;
}

SolveResult solve_wave(double theta, const Kernel& k, double a, double h,
                       const SolverConfig& cfg) {
    const Grid g = make_grid(a, h);
    if (g.h > g.a / 20.0 + 1e-15)
        throw std::invalid_argument("solve_wave: grid too coarse, need h <= a/20");
    SolveResult out;
    out.continuation = continuation(cfg, theta, k, g);
    if (out.continuation.converged) {
        out.report = full_report(out.continuation.solution, k, theta);
    }
    return out;
}

}  // namespace nlwave
