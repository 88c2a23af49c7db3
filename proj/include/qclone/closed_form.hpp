#pragma once

#include <utility>

#include <Eigen/Dense>

namespace qclone::closed_form {

// Point on the unit quarter-circle parametrizing a trade-off curve. Only the
// branch with both coordinates non-negative is exposed; the other sign
// branches are mirror images of no interest for the trade-off.
struct CurveParam {
    double x = 1.0;
    double y = 0.0;

    CurveParam() = default;
    CurveParam(double x_, double y_);  // validates x^2+y^2 = 1, x,y >= 0
    static CurveParam from_y(double y);
    static CurveParam from_x(double x);
};

struct Pair {
    double F_A;
    double F_B;
};

struct Triple {
    double a;
    double b;
    double c;
};

// n -> n+1 qubit machines: fidelity of the first n clones and of the last
// one. At y = 0 the first n clones are perfect; at y = sqrt(n/(2(n+1))) all
// n+1 fidelities coincide; at y = sqrt((n+2)/(2(n+1))) the last clone is
// perfect.
Pair fid_n_to_n_plus_1(int n, const CurveParam& p);

// 1 -> 1+n qubit machines (single clone A, n clones B).
Pair fid_1_to_1_plus_n(long long n, const CurveParam& p);

// n -> infinity limit of the 1 -> 1+n family: the trade-off between leaving
// the input intact and estimating it destructively. Valid for
// 0 <= y <= 1/sqrt(2).
Pair fid_measurement_limit(double y);

// 1 -> 1+1 qubit curve parametrized by lambda1 in [0, 1].
Pair fid_1to11_qubit(double lambda1);

// 1 -> 1+1 qudit machine built from the symmetric and antisymmetric
// projectors with amplitudes (alpha, beta); requires the trace-preservation
// normalization ((d+1)/2) alpha^2 + ((d-1)/2) beta^2 = 1.
Pair fid_qudit_1to11(int d, double alpha, double beta);

// 1 -> 1+1+1 qubit machines: returns (omega_A, omega_B, omega_C) for the
// two-block convex combination with weights (r0, r1), a unit 2-vector lam
// for the first block and a unit 3-vector lam_bar = (l0, l1, l1') for the
// second.
Triple fid_1to111_qubit(double r0, double r1, const Eigen::Vector2d& lam,
                        const Eigen::Vector3d& lam_bar);

// Optimal symmetric N -> M single-clone fidelity for qubits (computed from
// the engine's components, see engine::symmetric_fidelity).
double fid_symmetric(int N, int M);

}  // namespace qclone::closed_form
