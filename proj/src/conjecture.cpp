#include "qclone/conjecture.hpp"

#include <cmath>
#include <stdexcept>

namespace qclone::conjecture {

using Eigen::MatrixXd;
using Eigen::VectorXd;
using su2::Mag;
using su2::Spin;

namespace {

long long binom(int n, int k) {
    if (k < 0 || k > n) return 0;
    long long r = 1;
    for (int i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
    return r;
}

// Normalized Dicke state of n qubits with k excited (bit 1) positions, as a
// vector over bitstrings; bit s of the index is qubit s counted from the
// most significant end.
VectorXd dicke(int n, int k) {
    VectorXd v = VectorXd::Zero(1ll << n);
    double amp = 1.0 / std::sqrt(static_cast<double>(binom(n, k)));
    for (int idx = 0; idx < (1 << n); ++idx)
        if (__builtin_popcount(static_cast<unsigned>(idx)) == k) v(idx) = amp;
    return v;
}

}  // namespace

ProjectorFamily build_family(const engine::CloningProblem& problem) {
    problem.validate();
    if (problem.d != 2) throw std::domain_error("build_family: qubits only");
    if (problem.M_B < 1) throw std::domain_error("build_family: M_B must be >= 1");
    const int ma = problem.M_A, mb = problem.M_B, m = ma + mb;
    if (m > 12) throw std::domain_error("build_family: output space too large");

    ProjectorFamily fam;
    fam.problem = problem;
    Spin ja{ma}, jb{mb};
    fam.gammas = su2::clebsch_gordan_series(ja, jb);

    // Dicke vectors per magnetic number, descending m (k excitations has
    // m = j - k).
    std::vector<VectorXd> da(ja.dim()), db(jb.dim());
    for (int k = 0; k <= ma; ++k) da[k] = dicke(ma, k);
    for (int k = 0; k <= mb; ++k) db[k] = dicke(mb, k);
    auto msa = su2::mags_descending(ja);
    auto msb = su2::mags_descending(jb);

    const long long dim = 1ll << m;
    for (Spin g : fam.gammas) {
        MatrixXd e = MatrixXd::Zero(dim, dim);
        for (Mag M : su2::mags_descending(g)) {
            VectorXd w = VectorXd::Zero(dim);
            for (int ia = 0; ia < ja.dim(); ++ia) {
                for (int ib = 0; ib < jb.dim(); ++ib) {
                    if (msa[ia].twice + msb[ib].twice != M.twice) continue;
                    double cg = su2::cg(ja, msa[ia], jb, msb[ib], g, M);
                    if (cg == 0.0) continue;
                    // kron(da, db): index = ia_bits * 2^mb + ib_bits
                    for (long long ra = 0; ra < (1ll << ma); ++ra) {
                        if (da[ia](ra) == 0.0) continue;
                        for (long long rb = 0; rb < (1ll << mb); ++rb)
                            if (db[ib](rb) != 0.0)
                                w(ra * (1ll << mb) + rb) += cg * da[ia](ra) * db[ib](rb);
                    }
                }
            }
            e += w * w.transpose();
        }
        fam.projectors.push_back(std::move(e));
    }

    // Input: |0><0| on the first N slots, identity on the rest. Qubit 0 is
    // the most significant bit, so the first N slots are |0> when the index
    // has no high bits set.
    fam.rho_in = MatrixXd::Zero(dim, dim);
    const long long free_dim = 1ll << (m - problem.N);
    for (long long r = 0; r < free_dim; ++r) fam.rho_in(r, r) = 1.0;

    fam.traces.resize(fam.gammas.size());
    for (size_t i = 0; i < fam.gammas.size(); ++i)
        fam.traces(i) = (fam.projectors[i] * fam.rho_in).trace();
    return fam;
}

std::pair<double, double> ProjectorFamily::fidelities(const VectorXd& c) const {
    const int m = problem.M_A + problem.M_B;
    const long long dim = 1ll << m;
    double norm2 = 0.0;
    for (Eigen::Index i = 0; i < c.size(); ++i) norm2 += c(i) * c(i) * traces(i);
    if (norm2 <= 0.0) throw std::domain_error("ProjectorFamily: degenerate coefficients");
    MatrixXd v = MatrixXd::Zero(dim, dim);
    for (Eigen::Index i = 0; i < c.size(); ++i) v += (c(i) / std::sqrt(norm2)) * projectors[i];
    MatrixXd x = v * rho_in * v.transpose();

    auto clone_fid = [&](int slot) {
        // tr(x (|0><0| at slot)) = sum over indices with bit(slot) = 0.
        double f = 0.0;
        for (long long r = 0; r < dim; ++r)
            if (((r >> (m - 1 - slot)) & 1ll) == 0) f += x(r, r);
        return f;
    };
    double fa = clone_fid(0);
    double fb = clone_fid(problem.M_A);
    return {fa, fb};
}

double family_best_FB(const ProjectorFamily& family, double F_A_target) {
    const int ng = static_cast<int>(family.gammas.size());
    if (ng == 1) {
        auto [fa, fb] = family.fidelities(VectorXd::Ones(1));
        if (std::abs(fa - F_A_target) > 1e-9)
            throw std::domain_error("family_best_FB: target unreachable for one-block family");
        return fb;
    }
    if (ng != 2)
        throw std::domain_error("family_best_FB: only one- and two-block families supported");

    auto eval = [&](double theta) {
        VectorXd c(2);
        c << std::cos(theta), std::sin(theta);
        return family.fidelities(c);
    };
    // Scan the angle; refine every bracket where F_A crosses the target.
    const int n = 4096;
    double best = -1.0;
    double prev_fa = eval(0.0).first;
    for (int i = 1; i <= n; ++i) {
        double th1 = M_PI * i / n;
        double fa1 = eval(th1).first;
        double th0 = M_PI * (i - 1) / n;
        if ((prev_fa - F_A_target) * (fa1 - F_A_target) <= 0.0) {
            double lo = th0, hi = th1, flo = prev_fa;
            for (int it = 0; it < 100; ++it) {
                double mid = 0.5 * (lo + hi);
                double fm = eval(mid).first;
                if ((flo - F_A_target) * (fm - F_A_target) <= 0.0)
                    hi = mid;
                else {
                    lo = mid;
                    flo = fm;
                }
            }
            best = std::max(best, eval(0.5 * (lo + hi)).second);
        }
        prev_fa = fa1;
    }
    if (best < 0.0) throw std::domain_error("family_best_FB: F_A target not reached by the family");
    return best;
}

Report verify_conjecture(const engine::CloningProblem& problem, const opt::Frontier& frontier) {
    Report rep;
    rep.problem = problem;
    ProjectorFamily fam = build_family(problem);
    for (const auto& p : frontier.points) {
        if (!p.F_B) continue;
        rep.F_A_grid.push_back(p.F_A_target);
        rep.frontier_F_B.push_back(*p.F_B);
        rep.family_F_B.push_back(family_best_FB(fam, p.F_A_target));
        rep.max_gap = std::max(rep.max_gap,
                               std::abs(rep.frontier_F_B.back() - rep.family_F_B.back()));
    }
    return rep;
}

}  // namespace qclone::conjecture
