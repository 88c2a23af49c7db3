#pragma once

#include <cstdint>
#include <vector>

#include <Eigen/Dense>

#include "qclone/su2.hpp"

namespace qclone::oracle {

// Independent Clebsch-Gordan evaluation: the coupled basis is constructed by
// repeated lowering from the stretched state, with each new highest-weight
// vector obtained by orthogonalization (Condon-Shortley sign fixed on the
// m1-maximal component). Same contract as su2::cg, different algorithm.
double cg_ladder(su2::Spin j1, su2::Mag m1, su2::Spin j2, su2::Mag m2, su2::Spin J, su2::Mag M);

// Haar-averaged single-clone fidelity machinery for explicit Stinespring
// isometries V : sym(N qudits) -> (d-level)^M x ancilla. Rows of V are
// indexed by (word, ancilla) = word * K + kappa with qudit slot 0 the most
// significant digit; columns by the symmetric occupation basis.
class FidelityModel {
  public:
    FidelityModel(int N, int M, int d);

    int N() const { return n_; }
    int M() const { return m_; }
    int d() const { return d_; }
    long long sym_dim() const { return sym_dim_; }

    // Average over Haar-random inputs of the fidelity of clone `slot`,
    // evaluated exactly through the symmetric projector identity.
    double clone_fidelity(const Eigen::MatrixXcd& V, int slot) const;

    // Mean of clone_fidelity over a set of slots.
    double set_fidelity(const Eigen::MatrixXcd& V, const std::vector<int>& slots) const;

    // Gradient-style superoperator of sum_k w_k F_k: L(V) with
    // F = <V, L(V)>. Positive semidefinite, so V <- polar(L(V)) ascends.
    Eigen::MatrixXcd apply_form(const Eigen::MatrixXcd& V,
                                const std::vector<std::pair<int, double>>& slot_weights) const;

    // Exact fidelity of clone `slot` for one explicit input state psi.
    double fidelity_at_state(const Eigen::MatrixXcd& V, int slot,
                             const Eigen::VectorXcd& psi) const;

    // Isometric embedding of the symmetric subspace into the full N-qudit
    // space (columns orthonormal).
    const Eigen::MatrixXd& sym_embedding() const { return b_n_; }

  private:
    int n_, m_, d_;
    long long sym_dim_;
    Eigen::MatrixXd b_n_;
    std::vector<Eigen::MatrixXd> w_;  // d x d blocks of the averaged input form
};

struct OracleConfig {
    int restarts = 10;
    std::uint64_t seed = 0;
    int max_iters = 20000;
    double tol = 1e-13;
    int K = -1;  // ancilla dimension; -1 means sym_dim * d^M
};

struct AscentResult {
    Eigen::MatrixXcd V;
    double objective = 0.0;
    double F_A = 0.0;
    double F_B = 0.0;
    int iters = 0;
};

// Maximize F_B + kappa * F_A over isometries by the monotone polar fixed
// point, with random restarts.
AscentResult maximize_weighted(const FidelityModel& model, const std::vector<int>& set_a,
                               const std::vector<int>& set_b, double kappa,
                               const OracleConfig& config,
                               const Eigen::MatrixXcd* warm_start = nullptr);

struct FrontierPoint {
    double F_A_target = 0.0;
    double F_B = 0.0;
    double kappa = 0.0;
    double F_A_achieved = 0.0;
};

struct OracleFrontier {
    int N = 0, M_A = 0, M_B = 0, d = 2;
    std::vector<FrontierPoint> points;
};

// Frontier values at the requested F_A targets, found by bisecting the
// scalarization weight kappa and correcting to the target along the tangent.
OracleFrontier oracle_frontier(int N, int M_A, int M_B, int d,
                               const std::vector<double>& F_A_targets,
                               const OracleConfig& config = {});

// Best uniform average fidelity over all M clones (the symmetric machine).
double symmetric_fidelity(int N, int M, int d, const OracleConfig& config = {});

// The isometry of the trace-preserving symmetrization cloner.
Eigen::MatrixXcd symmetric_cloner_isometry(int N, int M, int d);

// Spread of the per-state fidelity around its Haar average over random
// inputs; small spread at an optimum confirms the covariance of the found
// machine.
std::pair<double, double> worst_case_range(const FidelityModel& model, const Eigen::MatrixXcd& V,
                                           const std::vector<int>& slots, int samples,
                                           std::uint64_t seed);

}  // namespace qclone::oracle
