#pragma once

#include <vector>

#include <Eigen/Dense>

#include "qclone/su2.hpp"

namespace qclone::itw {

// Which pair is coupled first when reducing A x B x X down to the target spin.
enum class CouplingOrder { AWithBX, BWithAX };

// Isometry from the spin-N/2 target space into the A x B x X product space.
//
// Rows run over the product basis in A-major order (then B, then X), with
// magnetic numbers descending from +j to -j inside each factor. Columns run
// over |N/2, m> with m descending. Clebsch-Gordan coefficients are real in
// the Condon-Shortley convention, so the matrix is real.
//
// The overall sign is fixed by requiring the matrix element between the
// stretched product state and the highest-weight target to be positive,
// falling back to the first nonzero element in row order.
struct Intertwiner {
    Eigen::MatrixXd mat;
    CouplingOrder order;
    su2::Spin alpha1, alpha2, beta;
    su2::Spin inner;   // spin a (order AWithBX) or b (order BWithAX)
    su2::Spin target;  // N/2

    bool same_block(const Intertwiner& other) const {
        return alpha1 == other.alpha1 && alpha2 == other.alpha2 && beta == other.beta &&
               target == other.target;
    }
};

// V_a: couple B with X to spin a, then A with the pair to the target.
// Requires a in the series of (alpha2, beta) and N/2 in the series of
// (alpha1, a); throws std::domain_error otherwise.
Intertwiner build_V(su2::Spin alpha1, su2::Spin alpha2, su2::Spin beta, su2::Spin a, int N);

// W_b: couple A with X to spin b, then B with the pair to the target.
Intertwiner build_W(su2::Spin alpha1, su2::Spin alpha2, su2::Spin beta, su2::Spin b, int N);

// Valid inner labels for each coupling order.
std::vector<su2::Spin> a_labels(su2::Spin alpha1, su2::Spin alpha2, su2::Spin beta, int N);
std::vector<su2::Spin> b_labels(su2::Spin alpha1, su2::Spin alpha2, su2::Spin beta, int N);

// tr(W^dagger V). Both operands must carry identical (alpha1, alpha2, beta,
// target) labels; throws std::domain_error otherwise.
double racah_overlap(const Intertwiner& W, const Intertwiner& V);

// Matrix of tr(W_b^dagger V_a), rows indexed by b_labels, columns by a_labels.
Eigen::MatrixXd overlap_matrix(su2::Spin alpha1, su2::Spin alpha2, su2::Spin beta, int N);

// mu_b = (1/(N+1)) sum_a overlaps(b,a) lambda_a. The input must be unit
// normalized within 1e-10; the output is checked to be unit normalized
// within 1e-9.
Eigen::VectorXd mu_from_lambda(const Eigen::VectorXd& lambdas, const Eigen::MatrixXd& overlaps,
                               int N);

// Representation of the group element exp(-i(ax Jx + ay Jy + az Jz)) on the
// full A x B x X product space, in the row ordering used by Intertwiner.
Eigen::MatrixXcd product_rotation(su2::Spin alpha1, su2::Spin alpha2, su2::Spin beta, double ax,
                                  double ay, double az);

}  // namespace qclone::itw
