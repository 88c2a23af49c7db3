#include "qclone/optimize.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <stdexcept>

#include "qclone/closed_form.hpp"
#include "qclone/rng.hpp"

namespace qclone::opt {

using engine::CloningMachine;
using engine::CloningProblem;
using engine::ComponentData;
using Eigen::MatrixXd;
using Eigen::VectorXd;

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// ---------------------------------------------------------------------------
// Exact single-component solver: maximize lambda^T Q lambda over the unit
// sphere subject to lambda^T D lambda = t, D = diag(coef_a).

struct ComponentSolution {
    double value = -kInf;
    VectorXd lambda;
    bool feasible = false;
};

ComponentSolution solve_dim1(const ComponentData& c, double t) {
    ComponentSolution s;
    if (std::abs(c.coef_a(0) - t) > 1e-11) return s;
    s.value = c.qform_b(0, 0);
    s.lambda = VectorXd::Ones(1);
    s.feasible = true;
    return s;
}

ComponentSolution solve_dim2(const ComponentData& c, double t) {
    ComponentSolution s;
    double a0 = c.coef_a(0), a1 = c.coef_a(1);
    double u1 = (a0 - t) / (a0 - a1);  // coef_a entries are always distinct
    if (u1 < -1e-13 || u1 > 1.0 + 1e-13) return s;
    u1 = std::clamp(u1, 0.0, 1.0);
    double l0 = std::sqrt(1.0 - u1), l1 = std::sqrt(u1);
    for (double sign : {1.0, -1.0}) {
        VectorXd lam(2);
        lam << l0, sign * l1;
        double v = lam.dot(c.qform_b * lam);
        if (v > s.value) {
            s.value = v;
            s.lambda = lam;
        }
    }
    s.feasible = true;
    return s;
}

// For three or more labels: dual bisection over nu in
// max_{|l|=1} l^T (Q - nu D) l. The attainable (l^T D l, l^T Q l) region is
// convex here, so the dual is tight; near-degenerate top eigenpairs are
// resolved by mixing inside the top eigenspace.
ComponentSolution solve_dual(const ComponentData& c, double t) {
    ComponentSolution s;
    const MatrixXd D = MatrixXd(c.coef_a.asDiagonal());
    const MatrixXd& Q = c.qform_b;
    const int n = static_cast<int>(c.coef_a.size());

    auto top = [&](double nu, VectorXd& v, double& gap) {
        Eigen::SelfAdjointEigenSolver<MatrixXd> es(Q - nu * D);
        v = es.eigenvectors().col(n - 1);
        gap = es.eigenvalues()(n - 1) - es.eigenvalues()(n - 2);
        return es.eigenvalues()(n - 1);
    };

    // h(nu) = v^T D v is non-increasing; bisect on nu = tan(phi).
    double lo = -std::atan(1e12), hi = std::atan(1e12);
    VectorXd v;
    double gap;
    for (int iter = 0; iter < 200; ++iter) {
        double phi = 0.5 * (lo + hi);
        top(std::tan(phi), v, gap);
        double h = v.dot(D * v);
        if (h > t)
            lo = phi;
        else
            hi = phi;
    }
    double nu = std::tan(0.5 * (lo + hi));
    top(nu, v, gap);
    double h = v.dot(D * v);
    if (std::abs(h - t) > 1e-10) {
        // Top eigenvalue is (near) degenerate at the crossing; mix the two
        // leading eigenvectors to meet the constraint exactly.
        Eigen::SelfAdjointEigenSolver<MatrixXd> es(Q - nu * D);
        VectorXd v1 = es.eigenvectors().col(n - 1);
        VectorXd v2 = es.eigenvectors().col(n - 2);
        auto hmix = [&](double phi) {
            VectorXd w = std::cos(phi) * v1 + std::sin(phi) * v2;
            return w.dot(D * w);
        };
        double plo = 0.0, phi_hi = M_PI;
        // Find a sign-change bracket over [0, pi).
        double f0 = hmix(0.0) - t;
        bool bracketed = false;
        const int grid = 256;
        for (int i = 1; i <= grid; ++i) {
            double p = M_PI * i / grid;
            double f = hmix(p) - t;
            if (f0 * f <= 0.0) {
                plo = M_PI * (i - 1) / grid;
                phi_hi = p;
                bracketed = true;
                break;
            }
            f0 = f;
        }
        if (!bracketed) return s;  // constraint unreachable
        for (int iter = 0; iter < 200; ++iter) {
            double p = 0.5 * (plo + phi_hi);
            if ((hmix(plo) - t) * (hmix(p) - t) <= 0.0)
                phi_hi = p;
            else
                plo = p;
        }
        double p = 0.5 * (plo + phi_hi);
        v = std::cos(p) * v1 + std::sin(p) * v2;
    }
    s.lambda = v;
    s.value = v.dot(Q * v);
    s.feasible = true;
    return s;
}

// Best omega_B of one component at omega_A = t, or infeasible.
ComponentSolution component_best(const ComponentData& c, double t) {
    double lo = c.coef_a.minCoeff(), hi = c.coef_a.maxCoeff();
    if (t < lo - 1e-12 || t > hi + 1e-12) return {};
    double tc = std::clamp(t, lo, hi);
    if (c.coef_a.size() == 1) return solve_dim1(c, tc);
    // Exact endpoints force lambda onto a single label.
    if (std::abs(tc - lo) < 1e-13 || std::abs(tc - hi) < 1e-13) {
        Eigen::Index idx;
        if (std::abs(tc - lo) < 1e-13)
            c.coef_a.minCoeff(&idx);
        else
            c.coef_a.maxCoeff(&idx);
        ComponentSolution s;
        s.lambda = VectorXd::Zero(c.coef_a.size());
        s.lambda(idx) = 1.0;
        s.value = c.qform_b(idx, idx);
        s.feasible = true;
        return s;
    }
    if (c.coef_a.size() == 2) return solve_dim2(c, tc);
    return solve_dual(c, tc);
}

// ---------------------------------------------------------------------------
// Concave envelope over the per-component trade-off curves.

struct EnvelopePoint {
    double t = 0.0;
    double v = -kInf;
    int comp = -1;
    VectorXd lambda;
};

struct EnvelopeResult {
    double value = -kInf;
    std::vector<std::pair<double, std::pair<int, VectorXd>>> parts;  // weight -> (comp, lambda)
    bool feasible = false;
};

std::vector<EnvelopePoint> upper_hull(std::vector<EnvelopePoint> pts) {
    std::sort(pts.begin(), pts.end(), [](const auto& a, const auto& b) {
        return a.t < b.t || (a.t == b.t && a.v > b.v);
    });
    std::vector<EnvelopePoint> hull;
    for (const auto& p : pts) {
        if (!hull.empty() && std::abs(hull.back().t - p.t) < 1e-14) continue;
        while (hull.size() >= 2) {
            const auto& a = hull[hull.size() - 2];
            const auto& b = hull[hull.size() - 1];
            // Drop b when it lies on or below chord a-p.
            if ((b.v - a.v) * (p.t - a.t) <= (p.v - a.v) * (b.t - a.t) + 1e-16)
                hull.pop_back();
            else
                break;
        }
        hull.push_back(p);
    }
    return hull;
}

EnvelopeResult envelope_solve(const std::vector<ComponentData>& comps, double t) {
    EnvelopeResult out;

    // Exact single-component candidates right at the target.
    std::vector<ComponentSolution> at_target(comps.size());
    for (size_t i = 0; i < comps.size(); ++i) {
        at_target[i] = component_best(comps[i], t);
        if (at_target[i].feasible && at_target[i].value > out.value) {
            out.value = at_target[i].value;
            out.parts = {{1.0, {static_cast<int>(i), at_target[i].lambda}}};
            out.feasible = true;
        }
    }

    // Sampled curves for cross-component mixtures.
    std::vector<EnvelopePoint> pts;
    const int samples = 129;
    for (size_t i = 0; i < comps.size(); ++i) {
        double lo = comps[i].coef_a.minCoeff(), hi = comps[i].coef_a.maxCoeff();
        for (int k = 0; k < samples; ++k) {
            double frac = 0.5 * (1.0 - std::cos(M_PI * k / (samples - 1)));
            double tk = lo + (hi - lo) * frac;
            auto sol = component_best(comps[i], tk);
            if (sol.feasible) pts.push_back({tk, sol.value, static_cast<int>(i), sol.lambda});
        }
        if (at_target[i].feasible)
            pts.push_back({t, at_target[i].value, static_cast<int>(i), at_target[i].lambda});
    }
    auto hull = upper_hull(std::move(pts));
    if (hull.empty() || t < hull.front().t - 1e-12 || t > hull.back().t + 1e-12) return out;

    // Locate the hull segment containing t.
    size_t seg = 0;
    while (seg + 1 < hull.size() && hull[seg + 1].t < t) ++seg;
    if (seg + 1 >= hull.size()) return out;
    EnvelopePoint a = hull[seg], b = hull[seg + 1];
    if (a.comp == b.comp) return out;  // single-component chord; exact candidate already covers it

    // Refine the two touching points along their own curves so the chord
    // through t is maximal.
    auto chord = [&](const ComponentData& ca, double ta, const ComponentData& cb, double tb,
                     ComponentSolution& sa, ComponentSolution& sb) {
        sa = component_best(ca, ta);
        sb = component_best(cb, tb);
        if (!sa.feasible || !sb.feasible || std::abs(tb - ta) < 1e-13 ||
            (t - ta) * (t - tb) > 0.0)
            return -kInf;
        double w = (tb - t) / (tb - ta);
        return w * sa.value + (1.0 - w) * sb.value;
    };
    const ComponentData& ca = comps[a.comp];
    const ComponentData& cb = comps[b.comp];
    double ta = a.t, tb = b.t;
    ComponentSolution sa, sb;
    double best = chord(ca, ta, cb, tb, sa, sb);
    for (int round = 0; round < 4; ++round) {
        for (bool left : {true, false}) {
            double lo = left ? ca.coef_a.minCoeff() : std::max(t, cb.coef_a.minCoeff());
            double hi = left ? std::min(t, ca.coef_a.maxCoeff()) : cb.coef_a.maxCoeff();
            double g = 0.5 * (std::sqrt(5.0) - 1.0);
            double x1 = hi - g * (hi - lo), x2 = lo + g * (hi - lo);
            for (int it = 0; it < 60; ++it) {
                ComponentSolution s1a, s1b, s2a, s2b;
                double f1 = left ? chord(ca, x1, cb, tb, s1a, s1b) : chord(ca, ta, cb, x1, s1a, s1b);
                double f2 = left ? chord(ca, x2, cb, tb, s2a, s2b) : chord(ca, ta, cb, x2, s2a, s2b);
                if (f1 < f2) {
                    lo = x1;
                    x1 = x2;
                    x2 = lo + g * (hi - lo);
                } else {
                    hi = x2;
                    x2 = x1;
                    x1 = hi - g * (hi - lo);
                }
            }
            double xm = 0.5 * (lo + hi);
            ComponentSolution sma, smb;
            double fm = left ? chord(ca, xm, cb, tb, sma, smb) : chord(ca, ta, cb, xm, sma, smb);
            if (fm > best) {
                best = fm;
                if (left)
                    ta = xm;
                else
                    tb = xm;
            }
        }
    }
    ComponentSolution fa, fb;
    double v = chord(ca, ta, cb, tb, fa, fb);
    if (v > out.value + 1e-12) {
        double w = (tb - t) / (tb - ta);
        out.value = v;
        out.parts = {{w, {a.comp, fa.lambda}}, {1.0 - w, {b.comp, fb.lambda}}};
        out.feasible = true;
    }
    return out;
}

// ---------------------------------------------------------------------------
// Penalty + coordinate-descent route.

VectorXd hyperspherical(const VectorXd& angles) {
    int n = static_cast<int>(angles.size()) + 1;
    VectorXd lam(n);
    double prod = 1.0;
    for (int i = 0; i < n - 1; ++i) {
        lam(i) = prod * std::cos(angles(i));
        prod *= std::sin(angles(i));
    }
    lam(n - 1) = prod;
    return lam;
}

// Derivative-free descent over an adaptive direction set: coordinate sweeps
// whose direction basis is updated with the net displacement of each sweep,
// so narrow curved valleys (the high-penalty regime) remain traversable.
template <class F>
double coordinate_descent(const F& f, VectorXd& x, double tol, int max_sweeps) {
    const int n = static_cast<int>(x.size());
    std::vector<VectorXd> dirs(n);
    for (int i = 0; i < n; ++i) dirs[i] = VectorXd::Unit(n, i);
    VectorXd step = VectorXd::Constant(n, 0.35);

    double fx = f(x);
    auto line_probe = [&](const VectorXd& d, double& h) {
        bool moved = false;
        for (int tries = 0; tries < 24; ++tries) {
            VectorXd trial = x + h * d;
            double fp = f(trial);
            if (fp < fx) {
                x = trial;
                fx = fp;
                h *= 1.6;
                moved = true;
                // keep walking while it pays
                for (int walk = 0; walk < 40; ++walk) {
                    trial = x + h * d;
                    fp = f(trial);
                    if (fp >= fx) break;
                    x = trial;
                    fx = fp;
                    h *= 1.6;
                }
                return moved;
            }
            trial = x - h * d;
            double fm = f(trial);
            if (fm < fx) {
                x = trial;
                fx = fm;
                h = -h * 1.6;
                moved = true;
                for (int walk = 0; walk < 40; ++walk) {
                    trial = x + h * d;
                    fp = f(trial);
                    if (fp >= fx) break;
                    x = trial;
                    fx = fp;
                    h *= 1.6;
                }
                return moved;
            }
            h *= 0.5;
            if (std::abs(h) < 1e-13) return moved;
        }
        return moved;
    };

    int quiet = 0;
    for (int sweep = 0; sweep < max_sweeps; ++sweep) {
        VectorXd x_before = x;
        double f_before = fx;
        int best_dir = 0;
        double best_drop = 0.0;
        for (int i = 0; i < n; ++i) {
            double f0 = fx;
            double h = step(i);
            line_probe(dirs[i], h);
            step(i) = std::max(std::abs(h), 1e-10);
            if (f0 - fx > best_drop) {
                best_drop = f0 - fx;
                best_dir = i;
            }
        }
        VectorXd net = x - x_before;
        if (n > 1 && net.norm() > 1e-12) {
            VectorXd d = net.normalized();
            double h = net.norm();
            line_probe(d, h);
            dirs[best_dir] = d;
            step(best_dir) = std::max(std::abs(h), 1e-10);
        }
        if (f_before - fx < tol * (1.0 + std::abs(fx))) {
            if (++quiet >= 2 && step.cwiseAbs().maxCoeff() < 1e-8) break;
        } else {
            quiet = 0;
        }
    }
    return fx;
}

struct DescentResult {
    double omega_B = -kInf;
    double omega_A = 0.0;
    std::vector<VectorXd> lambdas;
    VectorXd weights;
};

DescentResult descent_solve(const std::vector<ComponentData>& comps, double t,
                            const OptimizerConfig& config, std::mt19937_64& rng) {
    const int ncomp = static_cast<int>(comps.size());
    std::vector<int> angle_offset(ncomp);
    int nangles = 0;
    for (int i = 0; i < ncomp; ++i) {
        angle_offset[i] = nangles;
        nangles += static_cast<int>(comps[i].coef_a.size()) - 1;
    }
    const int dim = nangles + ncomp;

    std::vector<VectorXd> lambdas(ncomp);
    for (int i = 0; i < ncomp; ++i) lambdas[i] = VectorXd::Ones(comps[i].coef_a.size());
    VectorXd weights(ncomp);

    auto unpack = [&](const VectorXd& x) {
        for (int i = 0; i < ncomp; ++i) {
            int na = static_cast<int>(comps[i].coef_a.size());
            if (na > 1) lambdas[i] = hyperspherical(x.segment(angle_offset[i], na - 1));
        }
        double zmax = x.tail(ncomp).maxCoeff();
        double sum = 0.0;
        for (int i = 0; i < ncomp; ++i) {
            weights(i) = std::exp(x(nangles + i) - zmax);
            sum += weights(i);
        }
        weights /= sum;
    };

    double penalty = config.penalty_initial;
    auto objective = [&](const VectorXd& x) {
        unpack(x);
        double wa = 0.0, wb = 0.0;
        for (int i = 0; i < ncomp; ++i) {
            wa += weights(i) * comps[i].omega_A(lambdas[i]);
            wb += weights(i) * comps[i].omega_B(lambdas[i]);
        }
        double r = wa - t;
        return -wb + penalty * r * r;
    };

    std::uniform_real_distribution<double> uni(0.0, 2.0 * M_PI);
    std::normal_distribution<double> gauss(0.0, 1.0);
    VectorXd x(dim);
    for (int i = 0; i < nangles; ++i) x(i) = uni(rng);
    for (int i = 0; i < ncomp; ++i) x(nangles + i) = gauss(rng);

    const int sweeps = std::clamp(config.max_iters / std::max(1, 8 * dim), 8, 48);
    DescentResult res;
    for (int round = 0; round < 24; ++round) {
        coordinate_descent(objective, x, config.tol, sweeps);
        unpack(x);
        double wa = 0.0;
        for (int i = 0; i < ncomp; ++i) wa += weights(i) * comps[i].omega_A(lambdas[i]);
        if (std::abs(wa - t) < 1e-10) break;
        penalty *= 2.0;
    }
    unpack(x);

    // Sign sweep: omega_A only sees lambda^2, so flipping signs keeps the
    // constraint while possibly improving omega_B. This moves every restart
    // onto the best mirror branch.
    for (int i = 0; i < ncomp; ++i) {
        int na = static_cast<int>(lambdas[i].size());
        if (na == 1 || weights(i) < 1e-14) continue;
        VectorXd best = lambdas[i];
        double best_b = comps[i].omega_B(best);
        VectorXd cand = lambdas[i];
        for (int mask = 1; mask < (1 << na); ++mask) {
            for (int a = 0; a < na; ++a)
                cand(a) = (mask & (1 << a)) ? -lambdas[i](a) : lambdas[i](a);
            double b = comps[i].omega_B(cand);
            if (b > best_b) {
                best_b = b;
                best = cand;
            }
        }
        lambdas[i] = best;
    }

    res.lambdas = lambdas;
    res.weights = weights;
    res.omega_A = 0.0;
    res.omega_B = 0.0;
    for (int i = 0; i < ncomp; ++i) {
        res.omega_A += weights(i) * comps[i].omega_A(lambdas[i]);
        res.omega_B += weights(i) * comps[i].omega_B(lambdas[i]);
    }
    return res;
}

// Projected-gradient norm of the Lagrangian at the returned machine, over the
// lambda coordinates of the active components.
double kkt_residual(const std::vector<ComponentData>& comps, const EnvelopeResult& env) {
    double worst = 0.0;
    for (const auto& [w, part] : env.parts) {
        if (w < 1e-9) continue;
        const ComponentData& c = comps[part.first];
        const VectorXd& lam = part.second;
        // At an endpoint of the achievable omega_A interval the feasible set
        // degenerates to an isolated point and carries no tangent directions.
        if (lam.cwiseAbs().maxCoeff() > 1.0 - 1e-12) continue;
        VectorXd gB = 2.0 * c.qform_b * lam;
        VectorXd gA = 2.0 * c.coef_a.asDiagonal() * lam;
        VectorXd gN = 2.0 * lam;
        // Least-squares multipliers for the two constraints.
        MatrixXd J(lam.size(), 2);
        J.col(0) = gA;
        J.col(1) = gN;
        VectorXd mult = J.colPivHouseholderQr().solve(gB);
        worst = std::max(worst, (gB - J * mult).norm());
    }
    return worst;
}

}  // namespace

GridSpec default_grid(const CloningProblem& problem, int count) {
    problem.validate();
    return GridSpec{1.0 / problem.d, engine::symmetric_fidelity(problem.N, problem.M_A), count};
}

TradeoffPoint maximize_FB_given_FA(const CloningProblem& problem, double F_A_target,
                                   const OptimizerConfig& config) {
    problem.validate();
    if (problem.d != 2)
        throw std::domain_error("maximize_FB_given_FA: only qubit problems are supported");
    if (problem.M_B < 1)
        throw std::domain_error("maximize_FB_given_FA: M_B must be >= 1 for a trade-off");
    const double f_lo = 1.0 / problem.d;
    const double f_hi = engine::symmetric_fidelity(problem.N, problem.M_A);
    if (F_A_target < f_lo - 1e-9 || F_A_target > f_hi + 1e-9)
        throw std::domain_error("maximize_FB_given_FA: F_A target outside the feasible range");
    const double target_clamped = std::clamp(F_A_target, f_lo, f_hi);
    const double t = engine::omega_from_fidelity(target_clamped, problem.N, problem.M_A, problem.d);

    auto labels = engine::enumerate_components(problem);
    std::vector<ComponentData> comps;
    comps.reserve(labels.size());
    for (const auto& l : labels) comps.push_back(engine::build_component(problem, l));

    TradeoffPoint point;
    point.F_A_target = F_A_target;
    point.restarts_used = config.restarts;

    // Route 1: penalty descent with restarts.
    DescentResult best_descent;
    for (int r = 0; r < config.restarts; ++r) {
        auto rng = seeded_rng(config.seed, 0x5eedull + r);
        DescentResult res = descent_solve(comps, t, config, rng);
        bool feasible = std::abs(res.omega_A - t) < 1e-7;
        point.restart_values.push_back(feasible ? res.omega_B : -kInf);
        if (feasible && res.omega_B > best_descent.omega_B) best_descent = res;
    }

    // Route 2: exact envelope.
    EnvelopeResult env = envelope_solve(comps, t);

    // The envelope solution sits exactly on the constraint; the penalty route
    // is only approximately feasible, so it serves as a fallback and as a
    // cross-check, never as an override.
    CloningMachine machine;
    machine.problem = problem;
    if (env.feasible) {
        for (const auto& [w, part] : env.parts) {
            if (w < 1e-15) continue;
            machine.components.push_back({w, {labels[part.first], part.second}});
        }
        point.kkt_residual = kkt_residual(comps, env);
    } else if (best_descent.omega_B > -kInf) {
        for (int i = 0; i < static_cast<int>(comps.size()); ++i) {
            if (best_descent.weights(i) < 1e-12) continue;
            machine.components.push_back({best_descent.weights(i), {labels[i], best_descent.lambdas[i]}});
        }
        // Renormalize the kept weights.
        double sum = 0.0;
        for (auto& wc : machine.components) sum += wc.weight;
        for (auto& wc : machine.components) wc.weight /= sum;
        point.kkt_residual = std::numeric_limits<double>::quiet_NaN();
    } else {
        throw std::domain_error("maximize_FB_given_FA: no feasible machine found");
    }

    auto fid = engine::machine_fidelities(machine);
    point.machine = std::move(machine);
    point.F_A = fid.F_A;
    point.F_B = fid.F_B;
    point.converged = std::abs(fid.F_A - target_clamped) < 1e-7;
    return point;
}

Frontier frontier(const CloningProblem& problem, const GridSpec& grid,
                  const OptimizerConfig& config) {
    problem.validate();
    if (grid.count < 2 && problem.M_B > 0)
        throw std::domain_error("frontier: grid count must be >= 2");
    Frontier out;
    out.problem = problem;
    out.grid = grid;

    if (problem.M_B == 0) {
        // Degenerate plain N -> M_A machine: a single point, no B fidelity.
        TradeoffPoint p;
        p.F_A_target = engine::symmetric_fidelity(problem.N, problem.M_A);
        p.F_A = p.F_A_target;
        p.converged = true;
        out.points.push_back(std::move(p));
        return out;
    }

    for (int i = 0; i < grid.count; ++i) {
        double f = grid.F_A_min +
                   (grid.F_A_max - grid.F_A_min) * (grid.count == 1 ? 0.0 : double(i) / (grid.count - 1));
        OptimizerConfig cfg = config;
        cfg.seed = mix64(config.seed ^ mix64(static_cast<std::uint64_t>(i)));
        out.points.push_back(maximize_FB_given_FA(problem, f, cfg));
    }
    // Running max from the high-F_A side keeps F_B non-increasing.
    for (int i = static_cast<int>(out.points.size()) - 2; i >= 0; --i) {
        if (out.points[i].F_B && out.points[i + 1].F_B &&
            *out.points[i].F_B < *out.points[i + 1].F_B) {
            if (*out.points[i + 1].F_B - *out.points[i].F_B > 1e-12)
                out.points[i].converged = false;
            out.points[i].F_B = *out.points[i + 1].F_B;
        }
    }
    return out;
}

ThreeWayResult maximize_three_way(const Eigen::Vector3d& weights, const OptimizerConfig& config) {
    const double s2 = std::sqrt(2.0), s3 = std::sqrt(3.0);

    // Each block's weighted objective is a quadratic form on a unit sphere:
    // maximize by taking the top eigenvector.
    Eigen::Matrix2d m0 = Eigen::Matrix2d::Zero();
    {
        Eigen::Matrix2d qa = Eigen::Matrix2d::Zero();
        qa(0, 0) = 4.0;
        Eigen::Vector2d ub(1.0, s3), uc(1.0, -s3);
        Eigen::Matrix2d qb = ub * ub.transpose();
        Eigen::Matrix2d qc = uc * uc.transpose();
        m0 = (weights(0) * qa + weights(1) * qb + weights(2) * qc -
              weights.sum() * Eigen::Matrix2d::Identity()) /
             3.0;
    }
    Eigen::Matrix3d m1 = Eigen::Matrix3d::Zero();
    {
        Eigen::Matrix3d qa = Eigen::Matrix3d::Zero();
        qa(0, 0) = 4.0;
        Eigen::Vector3d ub(1.0, s2, -1.0), uc(1.0, s2, 1.0);
        Eigen::Matrix3d qb = ub * ub.transpose();
        Eigen::Matrix3d qc = uc * uc.transpose();
        m1 = (weights(0) * qa + weights(1) * qb + weights(2) * qc -
              weights.sum() * Eigen::Matrix3d::Identity()) /
             3.0;
    }
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix2d> es0(m0);
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix3d> es1(m1);
    double v0 = es0.eigenvalues()(1);
    double v1 = es1.eigenvalues()(2);

    ThreeWayResult res;
    res.r1_dominant = v1 >= v0 - 1e-12;
    if (res.r1_dominant) {
        res.r0 = 0.0;
        res.r1 = 1.0;
        res.lam_bar = es1.eigenvectors().col(2);
        if (res.lam_bar(0) < 0.0) res.lam_bar = -res.lam_bar;
    } else {
        res.r0 = 1.0;
        res.r1 = 0.0;
        res.lam = es0.eigenvectors().col(1);
        if (res.lam(0) < 0.0) res.lam = -res.lam;
    }
    auto w = closed_form::fid_1to111_qubit(res.r0, res.r1, res.lam, res.lam_bar);
    res.F_A = 0.5 * (1.0 + w.a);
    res.F_B = 0.5 * (1.0 + w.b);
    res.F_C = 0.5 * (1.0 + w.c);
    res.objective = weights(0) * res.F_A + weights(1) * res.F_B + weights(2) * res.F_C;

    if (config.restarts > 0) {
        // Descent cross-check over (logit, angle, angle, angle).
        double best = -kInf;
        for (int r = 0; r < config.restarts; ++r) {
            auto rng = seeded_rng(config.seed, 0x3a0ull + r);
            std::uniform_real_distribution<double> uni(0.0, 2.0 * M_PI);
            VectorXd x(4);
            x << std::normal_distribution<double>(0.0, 1.0)(rng), uni(rng), uni(rng), uni(rng);
            auto f = [&](const VectorXd& p) {
                double r1 = 1.0 / (1.0 + std::exp(-p(0)));
                Eigen::Vector2d lam(std::cos(p(1)), std::sin(p(1)));
                Eigen::Vector3d lb(std::cos(p(2)), std::sin(p(2)) * std::cos(p(3)),
                                   std::sin(p(2)) * std::sin(p(3)));
                auto t = closed_form::fid_1to111_qubit(1.0 - r1, r1, lam, lb);
                return -(weights(0) * 0.5 * (1 + t.a) + weights(1) * 0.5 * (1 + t.b) +
                         weights(2) * 0.5 * (1 + t.c));
            };
            best = std::max(best, -coordinate_descent(f, x, config.tol, 400));
        }
        res.descent_gap = std::abs(best - res.objective);
    }
    return res;
}

}  // namespace qclone::opt
