#include "qclone/oracle.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <map>
#include <stdexcept>

#include "qclone/rng.hpp"

namespace qclone::oracle {

using Eigen::MatrixXcd;
using Eigen::MatrixXd;
using Eigen::VectorXcd;
using Eigen::VectorXd;
using su2::Mag;
using su2::Spin;

// ---------------------------------------------------------------------------
// Ladder-built Clebsch-Gordan coefficients.

namespace {

struct LadderTable {
    // For each J (twice-value), a matrix of shape (product dim) x (2J+1);
    // columns ordered by M descending. Product rows: (i1 * dim2 + i2) with m
    // descending inside each factor.
    std::map<int, MatrixXd> blocks;
};

LadderTable build_ladder(Spin j1, Spin j2) {
    const int d1 = j1.dim(), d2 = j2.dim(), dd = d1 * d2;
    auto ms1 = su2::mags_descending(j1);
    auto ms2 = su2::mags_descending(j2);
    auto lower_amp = [](Spin j, Mag m) {
        // <j,m-1| J- |j,m>
        double jj = j.value() * (j.value() + 1.0);
        return std::sqrt(jj - m.value() * (m.value() - 1.0));
    };

    LadderTable table;
    auto series = su2::clebsch_gordan_series(j1, j2);
    std::sort(series.begin(), series.end(), [](Spin a, Spin b) { return a.twice > b.twice; });

    for (Spin J : series) {
        MatrixXd block = MatrixXd::Zero(dd, J.dim());
        VectorXd top;
        if (J.twice == j1.twice + j2.twice) {
            top = VectorXd::Zero(dd);
            top(0) = 1.0;  // stretched state: both factors at maximal m
        } else {
            // Seed on the m1-maximal product state of weight M = J and
            // orthogonalize against the higher-J vectors of the same weight.
            top = VectorXd::Zero(dd);
            for (int i1 = 0; i1 < d1; ++i1) {
                int tm2 = J.twice - ms1[i1].twice;
                if (std::abs(tm2) > j2.twice) continue;
                top((i1 * d2) + (j2.twice - tm2) / 2) = 1.0;
                break;
            }
            for (const auto& [tj, blk] : table.blocks) {
                if (tj <= J.twice) continue;
                int col = (tj - J.twice) / 2;  // column with M = J
                VectorXd u = blk.col(col);
                top -= u.dot(top) * u;
            }
            double n = top.norm();
            if (n < 1e-9)
                throw std::runtime_error("cg_ladder: orthogonalization degenerated");
            top /= n;
            // Condon-Shortley: the coefficient on the m1-maximal pair is
            // positive.
            for (int i1 = 0; i1 < d1; ++i1) {
                int tm2 = J.twice - ms1[i1].twice;
                if (std::abs(tm2) > j2.twice || ((j2.twice - tm2) % 2) != 0) continue;
                double c = top((i1 * d2) + (j2.twice - tm2) / 2);
                if (std::abs(c) > 1e-12) {
                    if (c < 0.0) top = -top;
                    break;
                }
            }
        }
        block.col(0) = top;
        // Lower through the M ladder.
        for (int col = 1; col < J.dim(); ++col) {
            Mag M{J.twice - 2 * (col - 1)};
            VectorXd next = VectorXd::Zero(dd);
            const VectorXd& cur = block.col(col - 1);
            for (int i1 = 0; i1 < d1; ++i1) {
                for (int i2 = 0; i2 < d2; ++i2) {
                    double c = cur((i1 * d2) + i2);
                    if (c == 0.0) continue;
                    if (i1 + 1 < d1) next(((i1 + 1) * d2) + i2) += c * lower_amp(j1, ms1[i1]);
                    if (i2 + 1 < d2) next((i1 * d2) + (i2 + 1)) += c * lower_amp(j2, ms2[i2]);
                }
            }
            block.col(col) = next / lower_amp(J, M);
        }
        table.blocks[J.twice] = std::move(block);
    }
    return table;
}

}  // namespace

double cg_ladder(Spin j1, Mag m1, Spin j2, Mag m2, Spin J, Mag M) {
    if (!su2::valid_pair(j1, m1) || !su2::valid_pair(j2, m2) || !su2::valid_pair(J, M))
        throw std::domain_error("cg_ladder: invalid (j,m) pairing");
    if (m1.twice + m2.twice != M.twice) return 0.0;
    if (!su2::series_contains(j1, j2, J)) return 0.0;
    LadderTable table = build_ladder(j1, j2);
    const auto& blk = table.blocks.at(J.twice);
    int i1 = (j1.twice - m1.twice) / 2;
    int i2 = (j2.twice - m2.twice) / 2;
    int col = (J.twice - M.twice) / 2;
    return blk((i1 * j2.dim()) + i2, col);
}

// ---------------------------------------------------------------------------
// Haar-averaged fidelity model.

namespace {

long long ipow(long long b, int e) {
    long long r = 1;
    while (e-- > 0) r *= b;
    return r;
}

// Columns: orthonormal occupation basis of the symmetric subspace of n
// qudits.
MatrixXd symmetric_embedding(int n, int d) {
    const long long dim = ipow(d, n);
    std::map<std::vector<int>, int> col_of;
    std::vector<std::vector<long long>> members;
    for (long long w = 0; w < dim; ++w) {
        std::vector<int> counts(d, 0);
        long long x = w;
        for (int s = 0; s < n; ++s) {
            counts[x % d]++;
            x /= d;
        }
        auto it = col_of.find(counts);
        if (it == col_of.end()) {
            col_of.emplace(counts, static_cast<int>(members.size()));
            members.push_back({w});
        } else {
            members[it->second].push_back(w);
        }
    }
    MatrixXd b = MatrixXd::Zero(dim, members.size());
    for (size_t c = 0; c < members.size(); ++c) {
        double amp = 1.0 / std::sqrt(static_cast<double>(members[c].size()));
        for (long long w : members[c]) b(w, static_cast<int>(c)) = amp;
    }
    return b;
}

}  // namespace

FidelityModel::FidelityModel(int N, int M, int d) : n_(N), m_(M), d_(d) {
    if (N < 1 || M < N || d < 2) throw std::domain_error("FidelityModel: bad dimensions");
    b_n_ = symmetric_embedding(N, d);
    sym_dim_ = b_n_.cols();

    // Average of |psi><psi|^{(N+1)} = S_{N+1} / dim sym(N+1), sliced on the
    // auxiliary first factor and compressed to the symmetric input basis.
    MatrixXd b_np1 = symmetric_embedding(N + 1, d);
    MatrixXd s = b_np1 * b_np1.transpose() / static_cast<double>(b_np1.cols());
    const long long dn = ipow(d, N);
    w_.resize(d * d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
            w_[i * d + j] = b_n_.transpose() * s.block(i * dn, j * dn, dn, dn) * b_n_;
}

namespace {

// out += scale * (|i><j| at slot) V, acting on rows (word * K + kappa).
void accumulate_slot_shift(MatrixXcd& out, const Eigen::MatrixXcd& v, int slot, int i, int j,
                           int M, int d, long long K, double scale) {
    const long long dim = v.rows() / K;
    const long long stride = ipow(d, M - 1 - slot);
    for (long long q = 0; q < dim; ++q) {
        if ((q / stride) % d != static_cast<long long>(j)) continue;
        long long q_out = q + (static_cast<long long>(i) - j) * stride;
        out.middleRows(q_out * K, K) += scale * v.middleRows(q * K, K);
    }
}

}  // namespace

double FidelityModel::clone_fidelity(const MatrixXcd& V, int slot) const {
    const long long K = V.rows() / ipow(d_, m_);
    if (V.rows() != ipow(d_, m_) * K || V.cols() != sym_dim_)
        throw std::domain_error("clone_fidelity: isometry has wrong shape");
    double f = 0.0;
    for (int i = 0; i < d_; ++i) {
        for (int j = 0; j < d_; ++j) {
            MatrixXcd av = MatrixXcd::Zero(V.rows(), V.cols());
            accumulate_slot_shift(av, V, slot, i, j, m_, d_, K, 1.0);
            f += ((V.adjoint() * av) * w_[i * d_ + j]).trace().real();
        }
    }
    return f;
}

double FidelityModel::set_fidelity(const MatrixXcd& V, const std::vector<int>& slots) const {
    double f = 0.0;
    for (int s : slots) f += clone_fidelity(V, s);
    return f / static_cast<double>(slots.size());
}

MatrixXcd FidelityModel::apply_form(const MatrixXcd& V,
                                    const std::vector<std::pair<int, double>>& slot_weights) const {
    const long long K = V.rows() / ipow(d_, m_);
    MatrixXcd out = MatrixXcd::Zero(V.rows(), V.cols());
    for (const auto& [slot, weight] : slot_weights) {
        for (int i = 0; i < d_; ++i) {
            for (int j = 0; j < d_; ++j) {
                MatrixXcd av = MatrixXcd::Zero(V.rows(), V.cols());
                accumulate_slot_shift(av, V, slot, i, j, m_, d_, K, weight);
                out += av * w_[i * d_ + j];
            }
        }
    }
    return out;
}

double FidelityModel::fidelity_at_state(const MatrixXcd& V, int slot,
                                        const VectorXcd& psi) const {
    if (psi.size() != d_) throw std::domain_error("fidelity_at_state: psi has wrong dimension");
    const long long K = V.rows() / ipow(d_, m_);
    // Symmetric-basis coordinates of psi^{(x N)}.
    const long long dn = ipow(d_, n_);
    VectorXcd prod(dn);
    for (long long w = 0; w < dn; ++w) {
        std::complex<double> a = 1.0;
        long long x = w;
        for (int s = 0; s < n_; ++s) {
            a *= psi(x % d_);
            x /= d_;
        }
        prod(w) = a;
    }
    VectorXcd phi = b_n_.transpose() * prod;
    VectorXcd out = V * phi;
    // Project the clone slot onto psi and take the squared norm of the rest.
    const long long stride = ipow(d_, m_ - 1 - slot);
    const long long dim = ipow(d_, m_);
    double f = 0.0;
    std::map<long long, std::complex<double>> reduced;
    for (long long q = 0; q < dim; ++q) {
        int dig = static_cast<int>((q / stride) % d_);
        long long rest = q - dig * stride;
        for (long long k = 0; k < K; ++k) {
            auto key = rest * K + k;
            auto it = reduced.find(key);
            std::complex<double> add = std::conj(psi(dig)) * out(q * K + k);
            if (it == reduced.end())
                reduced.emplace(key, add);
            else
                it->second += add;
        }
    }
    for (const auto& [key, a] : reduced) f += std::norm(a);
    return f;
}

namespace {

MatrixXcd polar_factor(const MatrixXcd& m) {
    Eigen::JacobiSVD<MatrixXcd> svd(m, Eigen::ComputeThinU | Eigen::ComputeThinV);
    return svd.matrixU() * svd.matrixV().adjoint();
}

MatrixXcd random_isometry(long long rows, long long cols, std::mt19937_64& rng) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    MatrixXcd m(rows, cols);
    for (long long r = 0; r < rows; ++r)
        for (long long c = 0; c < cols; ++c) m(r, c) = std::complex<double>(gauss(rng), gauss(rng));
    return polar_factor(m);
}

}  // namespace

AscentResult maximize_weighted(const FidelityModel& model, const std::vector<int>& set_a,
                               const std::vector<int>& set_b, double kappa,
                               const OracleConfig& config, const MatrixXcd* warm_start) {
    const long long K =
        config.K > 0 ? config.K : model.sym_dim() * ipow(model.d(), model.M());
    const long long rows = ipow(model.d(), model.M()) * K;
    if (ipow(model.d(), model.M()) * K > (1 << 20))
        throw std::domain_error("maximize_weighted: problem exceeds the desk-scale budget");

    std::vector<std::pair<int, double>> weights;
    for (int s : set_b) weights.emplace_back(s, 1.0 / set_b.size());
    for (int s : set_a) weights.emplace_back(s, kappa / set_a.size());

    auto ascend = [&](MatrixXcd v, int max_iters, AscentResult& best) {
        MatrixXcd lv = model.apply_form(v, weights);
        double f = (v.adjoint() * lv).trace().real();
        int stall = 0;
        int it = 0;
        for (; it < max_iters; ++it) {
            v = polar_factor(lv);
            lv = model.apply_form(v, weights);
            double fn = (v.adjoint() * lv).trace().real();
            if (fn - f < config.tol * std::max(1.0, std::abs(fn))) {
                if (++stall >= 4) break;
            } else {
                stall = 0;
            }
            f = fn;
        }
        if (f > best.objective) {
            best.objective = f;
            best.V = v;
            best.iters = it;
        }
    };

    AscentResult best;
    best.objective = -1.0;
    if (warm_start != nullptr) ascend(*warm_start, config.max_iters, best);
    int restarts = warm_start != nullptr ? config.restarts : std::max(1, config.restarts);
    for (int r = 0; r < restarts; ++r) {
        auto rng = seeded_rng(config.seed, 0x0'0c1eull + r);
        ascend(random_isometry(rows, model.sym_dim(), rng), config.max_iters, best);
    }
    best.F_A = model.set_fidelity(best.V, set_a);
    best.F_B = model.set_fidelity(best.V, set_b);
    return best;
}

OracleFrontier oracle_frontier(int N, int M_A, int M_B, int d,
                               const std::vector<double>& F_A_targets,
                               const OracleConfig& config) {
    FidelityModel model(N, M_A + M_B, d);
    std::vector<int> set_a, set_b;
    for (int s = 0; s < M_A; ++s) set_a.push_back(s);
    for (int s = M_A; s < M_A + M_B; ++s) set_b.push_back(s);

    OracleFrontier out;
    out.N = N;
    out.M_A = M_A;
    out.M_B = M_B;
    out.d = d;

    AscentResult base = maximize_weighted(model, set_a, set_b, 0.0, config);
    MatrixXcd warm = base.V;

    for (double target : F_A_targets) {
        FrontierPoint p;
        p.F_A_target = target;
        if (target <= base.F_A + 1e-12) {
            // Left of the unconstrained B optimum the frontier is flat.
            p.kappa = 0.0;
            p.F_A_achieved = base.F_A;
            p.F_B = base.F_B;
            out.points.push_back(p);
            continue;
        }
        // F_A(kappa) is non-decreasing; bisect kappa = tan(phi). Bisection
        // steps reuse the previous solution as a warm start.
        double lo = 0.0, hi = std::atan(1e7);
        AscentResult sol = base;
        for (int it = 0; it < 48; ++it) {
            double kappa = std::tan(0.5 * (lo + hi));
            OracleConfig cfg = config;
            cfg.seed = mix64(config.seed ^ mix64(it));
            cfg.restarts = it == 0 ? std::max(1, config.restarts / 3) : 0;
            sol = maximize_weighted(model, set_a, set_b, kappa, cfg, &warm);
            warm = sol.V;
            p.kappa = kappa;
            if (std::abs(sol.F_A - target) < 1e-8) break;
            if (sol.F_A < target)
                lo = 0.5 * (lo + hi);
            else
                hi = 0.5 * (lo + hi);
        }
        // First-order tangent correction onto the target.
        p.F_A_achieved = sol.F_A;
        p.F_B = sol.F_B + p.kappa * (sol.F_A - target);
        out.points.push_back(p);
    }
    return out;
}

double symmetric_fidelity(int N, int M, int d, const OracleConfig& config) {
    FidelityModel model(N, M, d);
    std::vector<int> all;
    for (int s = 0; s < M; ++s) all.push_back(s);
    AscentResult res = maximize_weighted(model, all, all, 0.0, config);
    return res.F_B;
}

MatrixXcd symmetric_cloner_isometry(int N, int M, int d) {
    MatrixXd b_n = symmetric_embedding(N, d);
    MatrixXd b_m = symmetric_embedding(M, d);
    MatrixXd s_m = b_m * b_m.transpose();
    const long long dn = ipow(d, N), dk = ipow(d, M - N), dm = ipow(d, M);
    const double scale = std::sqrt(static_cast<double>(b_n.cols()) / b_m.cols());
    MatrixXcd v = MatrixXcd::Zero(dm * dk, b_n.cols());
    for (long long c = 0; c < b_n.cols(); ++c) {
        for (long long w = 0; w < dk; ++w) {
            // S_M (phi_c x |w>), ancilla records w.
            VectorXd in = VectorXd::Zero(dm);
            for (long long r = 0; r < dn; ++r)
                if (b_n(r, c) != 0.0) in(r * dk + w) = b_n(r, c);
            VectorXd outv = s_m * in;
            for (long long q = 0; q < dm; ++q) v(q * dk + w, c) += scale * outv(q);
        }
    }
    return v;
}

std::pair<double, double> worst_case_range(const FidelityModel& model, const MatrixXcd& V,
                                           const std::vector<int>& slots, int samples,
                                           std::uint64_t seed) {
    auto rng = seeded_rng(seed, 0xfadeull);
    std::normal_distribution<double> gauss(0.0, 1.0);
    double lo = 1.0, hi = 0.0;
    for (int i = 0; i < samples; ++i) {
        VectorXcd psi(model.d());
        for (int k = 0; k < model.d(); ++k) psi(k) = std::complex<double>(gauss(rng), gauss(rng));
        psi.normalize();
        double f = 0.0;
        for (int s : slots) f += model.fidelity_at_state(V, s, psi);
        f /= slots.size();
        lo = std::min(lo, f);
        hi = std::max(hi, f);
    }
    return {lo, hi};
}

}  // namespace qclone::oracle
