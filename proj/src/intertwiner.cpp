#include "qclone/intertwiner.hpp"

#include <cmath>
#include <stdexcept>

#include <unsupported/Eigen/KroneckerProduct>

namespace qclone::itw {

using su2::Mag;
using su2::Spin;

namespace {

void fix_phase(Eigen::MatrixXd& m) {
    // Stretched product state is row 0 (all m maximal); highest-weight target
    // is column 0.
    constexpr double tol = 1e-12;
    double pivot = m(0, 0);
    if (std::abs(pivot) <= tol) {
        pivot = 0.0;
        for (Eigen::Index r = 0; r < m.rows() && pivot == 0.0; ++r)
            for (Eigen::Index c = 0; c < m.cols(); ++c)
                if (std::abs(m(r, c)) > tol) { pivot = m(r, c); break; }
    }
    if (pivot < 0.0) m = -m;
}

Intertwiner build(CouplingOrder order, Spin alpha1, Spin alpha2, Spin beta, Spin inner, int N) {
    Spin target{N};
    // outer = the factor coupled last, pair = the two factors coupled first.
    const bool a_order = (order == CouplingOrder::AWithBX);
    Spin outer = a_order ? alpha1 : alpha2;
    Spin pair1 = a_order ? alpha2 : alpha1;  // first slot of the inner coupling
    Spin pair2 = beta;

    if (!su2::series_contains(pair1, pair2, inner))
        throw std::domain_error("intertwiner: inner spin not in the coupling series of the pair");
    if (!su2::series_contains(outer, inner, target))
        throw std::domain_error("intertwiner: target spin not reachable from the outer coupling");

    const auto msA = su2::mags_descending(alpha1);
    const auto msB = su2::mags_descending(alpha2);
    const auto msX = su2::mags_descending(beta);
    const auto msT = su2::mags_descending(target);

    Eigen::MatrixXd m =
        Eigen::MatrixXd::Zero(alpha1.dim() * alpha2.dim() * beta.dim(), target.dim());
    for (int ia = 0; ia < alpha1.dim(); ++ia) {
        for (int ib = 0; ib < alpha2.dim(); ++ib) {
            for (int ix = 0; ix < beta.dim(); ++ix) {
                int row = (ia * alpha2.dim() + ib) * beta.dim() + ix;
                Mag mo = a_order ? msA[ia] : msB[ib];
                Mag mp = a_order ? msB[ib] : msA[ia];
                Mag mt{mp.twice + msX[ix].twice};
                if (std::abs(mt.twice) > inner.twice) continue;
                double inner_cg = su2::cg(pair1, mp, pair2, msX[ix], inner, mt);
                if (inner_cg == 0.0) continue;
                for (int it = 0; it < target.dim(); ++it) {
                    double outer_cg = su2::cg(outer, mo, inner, mt, target, msT[it]);
                    if (outer_cg != 0.0) m(row, it) += outer_cg * inner_cg;
                }
            }
        }
    }
    fix_phase(m);
    return Intertwiner{std::move(m), order, alpha1, alpha2, beta, inner, target};
}

}  // namespace

Intertwiner build_V(Spin alpha1, Spin alpha2, Spin beta, Spin a, int N) {
    return build(CouplingOrder::AWithBX, alpha1, alpha2, beta, a, N);
}

Intertwiner build_W(Spin alpha1, Spin alpha2, Spin beta, Spin b, int N) {
    return build(CouplingOrder::BWithAX, alpha1, alpha2, beta, b, N);
}

std::vector<Spin> a_labels(Spin alpha1, Spin alpha2, Spin beta, int N) {
    std::vector<Spin> out;
    for (Spin a : su2::clebsch_gordan_series(alpha2, beta))
        if (su2::series_contains(alpha1, a, Spin{N})) out.push_back(a);
    return out;
}

std::vector<Spin> b_labels(Spin alpha1, Spin alpha2, Spin beta, int N) {
    std::vector<Spin> out;
    for (Spin b : su2::clebsch_gordan_series(alpha1, beta))
        if (su2::series_contains(alpha2, b, Spin{N})) out.push_back(b);
    return out;
}

double racah_overlap(const Intertwiner& W, const Intertwiner& V) {
    if (!W.same_block(V)) throw std::domain_error("racah_overlap: label mismatch");
    return (W.mat.transpose() * V.mat).trace();
}

Eigen::MatrixXd overlap_matrix(Spin alpha1, Spin alpha2, Spin beta, int N) {
    auto as = a_labels(alpha1, alpha2, beta, N);
    auto bs = b_labels(alpha1, alpha2, beta, N);
    if (as.empty() || bs.empty())
        throw std::domain_error("overlap_matrix: no intertwiners for these labels");
    std::vector<Intertwiner> vs, ws;
    vs.reserve(as.size());
    ws.reserve(bs.size());
    for (Spin a : as) vs.push_back(build_V(alpha1, alpha2, beta, a, N));
    for (Spin b : bs) ws.push_back(build_W(alpha1, alpha2, beta, b, N));
    Eigen::MatrixXd out(bs.size(), as.size());
    for (size_t ib = 0; ib < bs.size(); ++ib)
        for (size_t ia = 0; ia < as.size(); ++ia) out(ib, ia) = racah_overlap(ws[ib], vs[ia]);
    return out;
}

Eigen::VectorXd mu_from_lambda(const Eigen::VectorXd& lambdas, const Eigen::MatrixXd& overlaps,
                               int N) {
    if (overlaps.cols() != lambdas.size())
        throw std::domain_error("mu_from_lambda: size mismatch");
    if (std::abs(lambdas.squaredNorm() - 1.0) > 1e-10)
        throw std::domain_error("mu_from_lambda: lambda not unit normalized");
    Eigen::VectorXd mu = overlaps * lambdas / static_cast<double>(N + 1);
    if (std::abs(mu.squaredNorm() - 1.0) > 1e-9)
        throw std::runtime_error("mu_from_lambda: recoupling lost normalization");
    return mu;
}

Eigen::MatrixXcd product_rotation(Spin alpha1, Spin alpha2, Spin beta, double ax, double ay,
                                  double az) {
    Eigen::MatrixXcd ua = su2::rotation(alpha1, ax, ay, az);
    Eigen::MatrixXcd ub = su2::rotation(alpha2, ax, ay, az);
    Eigen::MatrixXcd ux = su2::rotation(beta, ax, ay, az);
    return Eigen::kroneckerProduct(ua, Eigen::kroneckerProduct(ub, ux).eval()).eval();
}

}  // namespace qclone::itw
