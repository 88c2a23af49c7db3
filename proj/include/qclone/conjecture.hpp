#pragma once

#include <vector>

#include <Eigen/Dense>

#include "qclone/engine.hpp"
#include "qclone/optimize.hpp"

namespace qclone::conjecture {

// Machines of the form rho^{(N)} -> V (rho^{(N)} x 1) V^dagger with V a real
// combination of the projectors onto the irreducible blocks of
// sym(M_A) x sym(M_B). The block spins and their projectors are built
// explicitly on the 2^M-dimensional output space.
struct ProjectorFamily {
    engine::CloningProblem problem;
    std::vector<su2::Spin> gammas;
    std::vector<Eigen::MatrixXd> projectors;  // E_gamma
    Eigen::MatrixXd rho_in;                   // P_0^{xN} x 1
    Eigen::VectorXd traces;                   // tr(E_gamma rho_in)

    // Fidelities of the machine with coefficients c (normalized internally so
    // the map is trace preserving).
    std::pair<double, double> fidelities(const Eigen::VectorXd& c) const;
};

ProjectorFamily build_family(const engine::CloningProblem& problem);

// Best F_B within the projector family at the given F_A. Exact root-finding
// over the one-angle family when two blocks appear; dense scan plus local
// refinement otherwise.
double family_best_FB(const ProjectorFamily& family, double F_A_target);

struct Report {
    engine::CloningProblem problem;
    std::vector<double> F_A_grid;
    std::vector<double> frontier_F_B;
    std::vector<double> family_F_B;
    double max_gap = 0.0;  // max |frontier - family| over the grid
};

// Compare an optimizer frontier against the best machines of the projector
// family at the same grid values.
Report verify_conjecture(const engine::CloningProblem& problem, const opt::Frontier& frontier);

}  // namespace qclone::conjecture
