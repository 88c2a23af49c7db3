#include "qclone/su2.hpp"

#include <array>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

namespace qclone::su2 {

bool valid_pair(Spin j, Mag m) {
    if (j.twice < 0) return false;
    if (std::abs(m.twice) > j.twice) return false;
    return ((j.twice - m.twice) % 2) == 0;
}

Rational casimir(Spin j) {
    if (j.twice < 0) throw std::domain_error("casimir: negative spin");
    // j(j+1) = tj(tj+2)/4 with tj = 2j
    long long tj = j.twice;
    long long num = tj * (tj + 2);
    long long den = 4;
    long long g = std::gcd(num, den);
    if (g > 0) { num /= g; den /= g; }
    return Rational{num, den};
}

double casimir_d(Spin j) { return casimir(j).to_double(); }

std::vector<Spin> clebsch_gordan_series(Spin j1, Spin j2) {
    if (j1.twice < 0 || j2.twice < 0) throw std::domain_error("clebsch_gordan_series: negative spin");
    std::vector<Spin> out;
    for (int t = std::abs(j1.twice - j2.twice); t <= j1.twice + j2.twice; t += 2)
        out.push_back(Spin{t});
    return out;
}

bool series_contains(Spin j1, Spin j2, Spin j) {
    if (j.twice < std::abs(j1.twice - j2.twice)) return false;
    if (j.twice > j1.twice + j2.twice) return false;
    return ((j1.twice + j2.twice - j.twice) % 2) == 0;
}

long long IrrepMultiset::total_dimension() const {
    long long sum = 0;
    for (const auto& [s, mult] : entries) sum += static_cast<long long>(mult) * s.dim();
    return sum;
}

namespace {

long long binomial_ll(int n, int k) {
    if (k < 0 || k > n) return 0;
    long long r = 1;
    for (int i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
    return r;
}

}  // namespace

IrrepMultiset decompose_tensor_power(int n) {
    if (n < 1) throw std::domain_error("decompose_tensor_power: n must be >= 1");
    IrrepMultiset out;
    // Multiplicity of spin s in (1/2)^n is C(n, n/2-s) - C(n, n/2-s-1).
    for (int ts = n % 2; ts <= n; ts += 2) {
        int k = (n - ts) / 2;
        long long mult = binomial_ll(n, k) - binomial_ll(n, k - 1);
        if (mult > 0) out.entries[Spin{ts}] = static_cast<int>(mult);
    }
    return out;
}

long long sym_subspace_dim(int N, int d) {
    if (N < 0 || d < 2) throw std::domain_error("sym_subspace_dim: need N >= 0, d >= 2");
    return binomial_ll(N + d - 1, d - 1);
}

std::vector<Spin> d_set(int M) {
    if (M < 0) throw std::domain_error("d_set: M must be >= 0");
    if (M == 0) return {Spin{0}};
    std::vector<Spin> out;
    for (const auto& [s, mult] : decompose_tensor_power(M).entries) out.push_back(s);
    return out;
}

std::vector<Spin> d_n_set(Spin alpha1, Spin alpha2, int N) {
    std::vector<Spin> out;
    int tmax = alpha1.twice + alpha2.twice + N;
    for (int tb = 0; tb <= tmax; ++tb) {
        Spin beta{tb};
        bool hit = false;
        for (Spin c : clebsch_gordan_series(alpha1, alpha2)) {
            if (series_contains(c, beta, Spin{N})) { hit = true; break; }
        }
        if (hit) out.push_back(beta);
    }
    return out;
}

namespace {

// n! for n <= 41, built as an exact odd integer times a power of two and then
// converted once. The odd part of 41! still fits in unsigned __int128.
long double factorial_ld(int n) {
    constexpr int kMax = 41;
    static const auto table = [] {
        std::array<long double, kMax + 1> t{};
        unsigned __int128 mant = 1;
        int e = 0;
        t[0] = 1.0L;
        for (int k = 1; k <= kMax; ++k) {
            unsigned long long kk = k;
            while ((kk & 1ull) == 0) { kk >>= 1; ++e; }
            mant *= kk;
            t[k] = std::ldexp(static_cast<long double>(mant), e);
        }
        return t;
    }();
    if (n < 0 || n > kMax) throw std::domain_error("factorial_ld: out of supported range");
    return table[n];
}

}  // namespace

double cg(Spin j1, Mag m1, Spin j2, Mag m2, Spin J, Mag M) {
    if (!valid_pair(j1, m1) || !valid_pair(j2, m2) || !valid_pair(J, M))
        throw std::domain_error("cg: invalid (j,m) pairing");
    if (m1.twice + m2.twice != M.twice) return 0.0;
    if (!series_contains(j1, j2, J)) return 0.0;

    // Racah closed-sum formula; every factorial argument below is an integer.
    auto f = [](int twice) { return factorial_ld(twice / 2); };
    int tj1 = j1.twice, tj2 = j2.twice, tJ = J.twice;
    int tm1 = m1.twice, tm2 = m2.twice, tM = M.twice;

    long double delta = f(tj1 + tj2 - tJ) * f(tj1 - tj2 + tJ) * f(-tj1 + tj2 + tJ) /
                        f(tj1 + tj2 + tJ + 2);
    long double pref2 = (tJ + 1) * delta * f(tj1 + tm1) * f(tj1 - tm1) * f(tj2 + tm2) *
                        f(tj2 - tm2) * f(tJ + tM) * f(tJ - tM);

    int k_lo = std::max({0, (tj2 - tJ - tm1) / 2, (tj1 - tJ + tm2) / 2});
    int k_hi = std::min({(tj1 + tj2 - tJ) / 2, (tj1 - tm1) / 2, (tj2 + tm2) / 2});
    long double sum = 0.0L;
    for (int k = k_lo; k <= k_hi; ++k) {
        long double den = factorial_ld(k) * f(tj1 + tj2 - tJ - 2 * k) * f(tj1 - tm1 - 2 * k) *
                          f(tj2 + tm2 - 2 * k) * f(tJ - tj2 + tm1 + 2 * k) *
                          f(tJ - tj1 - tm2 + 2 * k);
        sum += ((k % 2) ? -1.0L : 1.0L) / den;
    }
    return static_cast<double>(std::sqrt(pref2) * sum);
}

std::vector<Mag> mags_descending(Spin j) {
    std::vector<Mag> out;
    for (int t = j.twice; t >= -j.twice; t -= 2) out.push_back(Mag{t});
    return out;
}

Eigen::MatrixXcd generator_jz(Spin j) {
    int n = j.dim();
    Eigen::MatrixXcd jz = Eigen::MatrixXcd::Zero(n, n);
    auto ms = mags_descending(j);
    for (int i = 0; i < n; ++i) jz(i, i) = ms[i].value();
    return jz;
}

Eigen::MatrixXcd generator_jplus(Spin j) {
    int n = j.dim();
    Eigen::MatrixXcd jp = Eigen::MatrixXcd::Zero(n, n);
    auto ms = mags_descending(j);
    double jj = j.value() * (j.value() + 1.0);
    // J+|j,m> = sqrt(j(j+1)-m(m+1)) |j,m+1>; m+1 sits one row above in
    // descending order.
    for (int i = 1; i < n; ++i) {
        double m = ms[i].value();
        jp(i - 1, i) = std::sqrt(jj - m * (m + 1.0));
    }
    return jp;
}

Eigen::MatrixXcd generator_jx(Spin j) {
    Eigen::MatrixXcd jp = generator_jplus(j);
    return 0.5 * (jp + jp.adjoint());
}

Eigen::MatrixXcd generator_jy(Spin j) {
    Eigen::MatrixXcd jp = generator_jplus(j);
    return std::complex<double>(0.0, -0.5) * (jp - jp.adjoint());
}

Eigen::MatrixXcd rotation(Spin j, double ax, double ay, double az) {
    Eigen::MatrixXcd h = ax * generator_jx(j) + ay * generator_jy(j) + az * generator_jz(j);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(h);
    Eigen::VectorXcd phases(j.dim());
    for (int i = 0; i < j.dim(); ++i)
        phases(i) = std::exp(std::complex<double>(0.0, -es.eigenvalues()(i)));
    return es.eigenvectors() * phases.asDiagonal() * es.eigenvectors().adjoint();
}

}  // namespace qclone::su2
