#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include <Eigen/Dense>

#include "qclone/engine.hpp"

namespace qclone::opt {

struct OptimizerConfig {
    int restarts = 20;
    std::uint64_t seed = 0;
    double penalty_initial = 1e4;
    double tol = 1e-9;
    int max_iters = 5000;
};

struct TradeoffPoint {
    double F_A_target = 0.0;
    double F_A = 0.0;
    std::optional<double> F_B;
    engine::CloningMachine machine;
    bool converged = false;
    int restarts_used = 0;
    double kkt_residual = 0.0;
    // Best objective found by each random restart of the penalty descent,
    // kept for convergence diagnostics.
    std::vector<double> restart_values;
};

struct GridSpec {
    double F_A_min = 0.5;
    double F_A_max = 1.0;
    int count = 101;
};

struct Frontier {
    engine::CloningProblem problem;
    GridSpec grid;
    std::vector<TradeoffPoint> points;
};

// Grid spanning [1/d, F_sym(N -> M_A)].
GridSpec default_grid(const engine::CloningProblem& problem, int count = 101);

// Maximize F_B over machines with F_A pinned to the target. The target must
// lie in [1/d, F_sym(N -> M_A) + 1e-9]. Two routes are run: the penalty /
// coordinate-descent search with random restarts, and an exact
// per-component solve combined through the concave envelope over components;
// the better result is returned.
TradeoffPoint maximize_FB_given_FA(const engine::CloningProblem& problem, double F_A_target,
                                   const OptimizerConfig& config = {});

// One trade-off point per grid value, with a final sweep enforcing that F_B
// is non-increasing in F_A. For M_B = 0 the frontier degenerates to the
// single best-A point.
Frontier frontier(const engine::CloningProblem& problem, const GridSpec& grid,
                  const OptimizerConfig& config = {});

// 1 -> 1+1+1 qubit machines: maximize weights . (F_A, F_B, F_C) over the
// two-block family. Each block is a quadratic form on a small sphere, so the
// per-block optimum is an eigenvalue problem; a descent cross-check runs when
// config.restarts > 0.
struct ThreeWayResult {
    double F_A = 0.0, F_B = 0.0, F_C = 0.0;
    double r0 = 0.0, r1 = 0.0;
    Eigen::Vector2d lam = Eigen::Vector2d::UnitX();
    Eigen::Vector3d lam_bar = Eigen::Vector3d::UnitX();
    bool r1_dominant = false;
    double objective = 0.0;
    double descent_gap = 0.0;  // |eigen route - descent route|
};

ThreeWayResult maximize_three_way(const Eigen::Vector3d& weights,
                                  const OptimizerConfig& config = {});

}  // namespace qclone::opt
