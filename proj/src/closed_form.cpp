#include "qclone/closed_form.hpp"

#include <cmath>
#include <stdexcept>

#include "qclone/engine.hpp"

namespace qclone::closed_form {

CurveParam::CurveParam(double x_, double y_) : x(x_), y(y_) {
    if (x < 0.0 || y < 0.0) throw std::domain_error("CurveParam: coordinates must be >= 0");
    if (std::abs(x * x + y * y - 1.0) > 1e-12)
        throw std::domain_error("CurveParam: not on the unit circle");
}

CurveParam CurveParam::from_y(double y) {
    if (y < 0.0 || y > 1.0) throw std::domain_error("CurveParam: y must be in [0, 1]");
    return CurveParam(std::sqrt(std::max(0.0, 1.0 - y * y)), y);
}

CurveParam CurveParam::from_x(double x) {
    if (x < 0.0 || x > 1.0) throw std::domain_error("CurveParam: x must be in [0, 1]");
    return CurveParam(x, std::sqrt(std::max(0.0, 1.0 - x * x)));
}

Pair fid_n_to_n_plus_1(int n, const CurveParam& p) {
    if (n < 1) throw std::domain_error("fid_n_to_n_plus_1: n must be >= 1");
    double first = 1.0 - 2.0 * p.y * p.y / (static_cast<double>(n) * (n + 2));
    double diff = std::sqrt(static_cast<double>(n) / (n + 2)) * p.y - p.x;
    double last = 1.0 - 0.5 * diff * diff;
    return {first, last};
}

Pair fid_1_to_1_plus_n(long long n, const CurveParam& p) {
    if (n < 1) throw std::domain_error("fid_1_to_1_plus_n: n must be >= 1");
    double nn = static_cast<double>(n);
    double fa = 1.0 - (2.0 / 3.0) * p.y * p.y;
    double fb = 0.5 + (p.y * p.y + std::sqrt(nn * (nn + 2.0)) * p.x * p.y) / (3.0 * nn);
    return {fa, fb};
}

Pair fid_measurement_limit(double y) {
    if (y < 0.0 || y > 1.0 / std::sqrt(2.0) + 1e-15)
        throw std::domain_error("fid_measurement_limit: y must be in [0, 1/sqrt(2)]");
    double fa = 1.0 - (2.0 / 3.0) * y * y;
    double fmeas = 0.5 + y * std::sqrt(std::max(0.0, 1.0 - y * y)) / 3.0;
    return {fa, fmeas};
}

Pair fid_1to11_qubit(double lambda1) {
    if (lambda1 < 0.0 || lambda1 > 1.0)
        throw std::domain_error("fid_1to11_qubit: lambda1 must be in [0, 1]");
    double lambda0 = std::sqrt(std::max(0.0, 1.0 - lambda1 * lambda1));
    double omega_a = 1.0 - (4.0 / 3.0) * lambda1 * lambda1;
    double mu1 = 0.5 * std::sqrt(3.0) * lambda0 - 0.5 * lambda1;
    double omega_b = 1.0 - (4.0 / 3.0) * mu1 * mu1;
    return {(1.0 + omega_a) / 2.0, (1.0 + omega_b) / 2.0};
}

Pair fid_qudit_1to11(int d, double alpha, double beta) {
    if (d < 2) throw std::domain_error("fid_qudit_1to11: d must be >= 2");
    double norm = 0.5 * (d + 1) * alpha * alpha + 0.5 * (d - 1) * beta * beta;
    if (std::abs(norm - 1.0) > 1e-10)
        throw std::domain_error("fid_qudit_1to11: amplitudes violate trace preservation");
    double common = 0.25 * (d + 3) * alpha * alpha + 0.25 * (d - 1) * beta * beta;
    double cross = 0.5 * (d - 1) * alpha * beta;
    return {common + cross, common - cross};
}

Triple fid_1to111_qubit(double r0, double r1, const Eigen::Vector2d& lam,
                        const Eigen::Vector3d& lam_bar) {
    if (r0 < -1e-12 || r1 < -1e-12 || std::abs(r0 + r1 - 1.0) > 1e-10)
        throw std::domain_error("fid_1to111_qubit: weights must be a convex pair");
    if (std::abs(lam.squaredNorm() - 1.0) > 1e-10 || std::abs(lam_bar.squaredNorm() - 1.0) > 1e-10)
        throw std::domain_error("fid_1to111_qubit: coefficient blocks must be unit normalized");
    const double l0 = lam(0), l1 = lam(1);
    const double b0 = lam_bar(0), b1 = lam_bar(1), b1p = lam_bar(2);
    const double s3 = std::sqrt(3.0), s2 = std::sqrt(2.0);
    double wa = r0 * (4.0 * l0 * l0 - 1.0) / 3.0 + r1 * (4.0 * b0 * b0 - 1.0) / 3.0;
    double wb = r0 * ((l0 + s3 * l1) * (l0 + s3 * l1) - 1.0) / 3.0 +
                r1 * ((b0 + s2 * b1 - b1p) * (b0 + s2 * b1 - b1p) - 1.0) / 3.0;
    double wc = r0 * ((l0 - s3 * l1) * (l0 - s3 * l1) - 1.0) / 3.0 +
                r1 * ((b0 + s2 * b1 + b1p) * (b0 + s2 * b1 + b1p) - 1.0) / 3.0;
    return {wa, wb, wc};
}

double fid_symmetric(int N, int M) { return engine::symmetric_fidelity(N, M); }

}  // namespace qclone::closed_form
