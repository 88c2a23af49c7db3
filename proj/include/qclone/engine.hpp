#pragma once

#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "qclone/su2.hpp"

namespace qclone::engine {

// N input copies cloned into a set of M_A clones and a set of M_B clones of a
// d-level system. M_B = 0 is the degenerate plain N -> M_A machine.
struct CloningProblem {
    int N = 1;
    int M_A = 1;
    int M_B = 1;
    int d = 2;

    void validate() const;
};

struct ComponentLabels {
    su2::Spin alpha1, alpha2, beta;

    auto operator<=>(const ComponentLabels&) const = default;
    std::string str() const;
};

// One irreducible summand with everything the trade-off needs precomputed:
// the per-label Casimir coefficients and the recoupling matrix linking the
// two coupling orders.
struct ComponentData {
    ComponentLabels labels;
    std::vector<su2::Spin> a_set, b_set;
    Eigen::VectorXd coef_a;   // omega_A(lambda) = sum_a lambda_a^2 coef_a(a)
    Eigen::VectorXd coef_b;   // omega_B(mu)     = sum_b mu_b^2     coef_b(b)
    Eigen::MatrixXd racah;    // tr(W_b^dagger V_a)
    Eigen::MatrixXd qform_b;  // omega_B(lambda) = lambda^T qform_b lambda

    double omega_A(const Eigen::VectorXd& lambdas) const;
    double omega_B(const Eigen::VectorXd& lambdas) const;
};

struct MapComponent {
    ComponentLabels labels;
    Eigen::VectorXd lambdas;  // unit normalized, indexed by a_set
};

struct WeightedComponent {
    double weight = 1.0;
    MapComponent component;
};

struct CloningMachine {
    CloningProblem problem;
    std::vector<WeightedComponent> components;
};

struct FidelityPair {
    double F_A = 0.0;
    std::optional<double> F_B;  // absent when M_B = 0
    double omega_A = 0.0;
    double omega_B = 0.0;
};

// All valid (alpha1, alpha2, beta) triples for the problem; qubits only.
// Repeated copies of an irrep inside a tensor power are collapsed to one
// representative.
std::vector<ComponentLabels> enumerate_components(const CloningProblem& problem);

ComponentData build_component(const CloningProblem& problem, const ComponentLabels& labels);

// F = (1/d)(1 + (N/M) omega (d-1)).
double fidelity_from_omega(double omega, int N, int M, int d);
double omega_from_fidelity(double F, int N, int M, int d);

// Convex combination of the component omegas, converted to fidelities.
// Validates weight and lambda normalization.
FidelityPair machine_fidelities(const CloningMachine& machine);

// Single-clone fidelity of the best symmetric N -> M qubit machine, obtained
// by maximizing F_A over the engine's own components at M_B = 0.
double symmetric_fidelity(int N, int M);

// True when no lambda gives the component a positive omega_A or omega_B, so
// it can never beat preparing clones in a random state.
bool useless_for_cloning(const ComponentData& component);

}  // namespace qclone::engine
