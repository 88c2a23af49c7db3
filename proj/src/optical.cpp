#include "qclone/optical.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>

namespace qclone::optical {

using std::complex;

namespace {

double factorial(int n) {
    static const auto table = [] {
        std::array<double, 65> t{};
        t[0] = 1.0;
        for (int i = 1; i < 65; ++i) t[i] = t[i - 1] * i;
        return t;
    }();
    return table.at(n);
}

double binom(int n, int k) {
    if (k < 0 || k > n) return 0.0;
    return factorial(n) / (factorial(k) * factorial(n - k));
}

}  // namespace

double OpticalState::norm2() const {
    double s = 0.0;
    for (const auto& [occ, a] : amp) s += std::norm(a);
    return s;
}

void OpticalState::normalize() {
    double n = std::sqrt(norm2());
    if (n == 0.0) throw std::runtime_error("OpticalState: cannot normalize the zero state");
    for (auto& [occ, a] : amp) a /= n;
}

void OpticalState::prune(double eps) {
    for (auto it = amp.begin(); it != amp.end();)
        it = (std::abs(it->second) < eps) ? amp.erase(it) : std::next(it);
}

OpticalState pdc_output(int N, int M) {
    if (N < 1 || M < N) throw std::domain_error("pdc_output: need M >= N >= 1");
    OpticalState st;
    st.n_spatial = 2;
    if (2 * M - N > st.cutoff)
        throw std::domain_error("pdc_output: total photon number exceeds the Fock cutoff");
    for (int j = 0; j <= M - N; ++j) {
        Occupation occ = {static_cast<std::uint8_t>(M - j), static_cast<std::uint8_t>(j),
                          static_cast<std::uint8_t>(j), static_cast<std::uint8_t>(M - N - j)};
        double a = std::sqrt(binom(M - j, N));
        st.amp[occ] = (j % 2 == 0) ? a : -a;
    }
    st.normalize();
    return st;
}

OpticalState with_spatial_modes(const OpticalState& state, int n_spatial) {
    if (n_spatial < state.n_spatial)
        throw std::domain_error("with_spatial_modes: cannot drop occupied modes");
    OpticalState out;
    out.n_spatial = n_spatial;
    out.cutoff = state.cutoff;
    for (const auto& [occ, a] : state.amp) {
        Occupation e = occ;
        e.resize(2 * n_spatial, 0);
        out.amp[std::move(e)] = a;
    }
    return out;
}

OpticalState apply_beam_splitter(const OpticalState& state, const BeamSplitterSpec& bs) {
    const double T = bs.transmittivity;
    if (T < 0.0 || T > 1.0)
        throw std::domain_error("apply_beam_splitter: transmittivity must be in [0, 1]");
    if (bs.mode_a < 0 || bs.mode_b < 0 || bs.mode_a >= state.n_spatial ||
        bs.mode_b >= state.n_spatial || bs.mode_a == bs.mode_b)
        throw std::domain_error("apply_beam_splitter: bad spatial mode pair");

    const double rt = std::sqrt(T), rr = std::sqrt(1.0 - T);
    OpticalState out;
    out.n_spatial = state.n_spatial;
    out.cutoff = state.cutoff;

    // One polarization at a time: (a^dag)^na (b^dag)^nb expands binomially in
    // the transformed operators.
    auto split_one = [&](std::map<Occupation, complex<double>>& dst, const Occupation& occ,
                         complex<double> a0, int ia, int ib) {
        int na = occ[ia], nb = occ[ib];
        for (int k = 0; k <= na; ++k) {
            for (int l = 0; l <= nb; ++l) {
                int p = k + l, q = na + nb - k - l;
                double coeff = binom(na, k) * binom(nb, l) * std::pow(rt, k + nb - l) *
                               std::pow(rr, na - k + l) * (l % 2 == 0 ? 1.0 : -1.0) *
                               std::sqrt(factorial(p) * factorial(q)) /
                               std::sqrt(factorial(na) * factorial(nb));
                if (coeff == 0.0) continue;
                if (p > state.cutoff || q > state.cutoff)
                    throw std::runtime_error(
                        "apply_beam_splitter: occupation exceeds the Fock cutoff; raise it");
                Occupation e = occ;
                e[ia] = static_cast<std::uint8_t>(p);
                e[ib] = static_cast<std::uint8_t>(q);
                dst[std::move(e)] += a0 * coeff;
            }
        }
    };

    std::map<Occupation, complex<double>> mid;
    for (const auto& [occ, a] : state.amp)
        split_one(mid, occ, a, 2 * bs.mode_a + 0, 2 * bs.mode_b + 0);
    for (const auto& [occ, a] : mid)
        split_one(out.amp, occ, a, 2 * bs.mode_a + 1, 2 * bs.mode_b + 1);
    out.prune();
    return out;
}

OpticalState rotate_polarization(const OpticalState& state, const Eigen::Matrix2cd& u) {
    OpticalState cur = state;
    for (int s = 0; s < state.n_spatial; ++s) {
        OpticalState next;
        next.n_spatial = cur.n_spatial;
        next.cutoff = cur.cutoff;
        const int iv = 2 * s, ih = 2 * s + 1;
        for (const auto& [occ, a] : cur.amp) {
            int nv = occ[iv], nh = occ[ih];
            // (a_V^dag)^nv (a_H^dag)^nh with a_V^dag -> u00 a_V^dag + u10 a_H^dag
            // and a_H^dag -> u01 a_V^dag + u11 a_H^dag.
            for (int k = 0; k <= nv; ++k) {
                for (int l = 0; l <= nh; ++l) {
                    int p = k + l, q = nv + nh - k - l;
                    complex<double> coeff =
                        binom(nv, k) * binom(nh, l) * std::pow(u(0, 0), k) *
                        std::pow(u(1, 0), nv - k) * std::pow(u(0, 1), l) * std::pow(u(1, 1), nh - l);
                    coeff *= std::sqrt(factorial(p) * factorial(q)) /
                             std::sqrt(factorial(nv) * factorial(nh));
                    if (coeff == 0.0) continue;
                    Occupation e = occ;
                    e[iv] = static_cast<std::uint8_t>(p);
                    e[ih] = static_cast<std::uint8_t>(q);
                    next.amp[std::move(e)] += a * coeff;
                }
            }
        }
        next.prune();
        cur = std::move(next);
    }
    return cur;
}

std::pair<OpticalState, double> post_select(const OpticalState& state,
                                            const std::map<int, int>& pattern) {
    for (const auto& [s, n] : pattern)
        if (s < 0 || s >= state.n_spatial)
            throw std::domain_error("post_select: pattern refers to a missing spatial mode");
    OpticalState out;
    out.n_spatial = state.n_spatial;
    out.cutoff = state.cutoff;
    double prob = 0.0;
    for (const auto& [occ, a] : state.amp) {
        bool keep = true;
        for (const auto& [s, n] : pattern) {
            if (occ[2 * s] + occ[2 * s + 1] != n) {
                keep = false;
                break;
            }
        }
        if (keep) {
            out.amp[occ] = a;
            prob += std::norm(a);
        }
    }
    if (prob > 0.0) out.normalize();
    return {std::move(out), prob};
}

Eigen::Matrix2cd reduced_qubit(const OpticalState& state, int spatial) {
    if (spatial < 0 || spatial >= state.n_spatial)
        throw std::domain_error("reduced_qubit: missing spatial mode");
    if (std::abs(state.norm2() - 1.0) > 1e-9)
        throw std::domain_error("reduced_qubit: state must be normalized");
    const int iv = 2 * spatial, ih = 2 * spatial + 1;
    Eigen::Matrix2cd rho = Eigen::Matrix2cd::Zero();
    for (const auto& [occ, a] : state.amp) {
        int nv = occ[iv], nh = occ[ih];
        int k = nv + nh;
        if (k == 0) throw std::domain_error("reduced_qubit: empty mode in a support term");
        rho(0, 0) += std::norm(a) * nv / double(k);
        rho(1, 1) += std::norm(a) * nh / double(k);
        if (nv > 0) {
            // Coherence against the term with one V photon moved to H.
            Occupation other = occ;
            other[iv] = static_cast<std::uint8_t>(nv - 1);
            other[ih] = static_cast<std::uint8_t>(nh + 1);
            auto it = state.amp.find(other);
            if (it != state.amp.end()) {
                // <a_H^dag a_V> contribution: the V-row, H-column coherence.
                complex<double> c =
                    std::conj(it->second) * a * std::sqrt(double(nv) * (nh + 1)) / double(k);
                rho(0, 1) += c;
                rho(1, 0) += std::conj(c);
            }
        }
    }
    return rho;
}

double single_clone_fidelity(const OpticalState& state, int spatial) {
    if (spatial < 0 || spatial >= state.n_spatial)
        throw std::domain_error("single_clone_fidelity: missing spatial mode");
    if (std::abs(state.norm2() - 1.0) > 1e-9)
        throw std::domain_error("single_clone_fidelity: state must be normalized");
    const int iv = 2 * spatial, ih = 2 * spatial + 1;
    double f = 0.0;
    for (const auto& [occ, a] : state.amp) {
        int k = occ[iv] + occ[ih];
        if (k == 0) throw std::domain_error("single_clone_fidelity: empty mode in a support term");
        f += std::norm(a) * occ[iv] / double(k);
    }
    return f;
}

SchemeResult two_way_scheme(int N, int M_A, int M_B, double T, double clone_split_T) {
    if (M_A < 1 || M_B < 1) throw std::domain_error("two_way_scheme: need M_A, M_B >= 1");
    if (T <= 0.0 || T > 1.0) throw std::domain_error("two_way_scheme: T must be in (0, 1]");
    const int M = M_A + M_B;
    double ts = clone_split_T > 0.0 ? clone_split_T : static_cast<double>(M_A) / M;
    if (ts <= 0.0 || ts >= 1.0)
        throw std::domain_error("two_way_scheme: clone splitter must be strictly between 0 and 1");

    OpticalState st = with_spatial_modes(pdc_output(N, M), 3);
    st = apply_beam_splitter(st, {0, 2, ts});  // mode 0 = A clones, mode 2 = B clones
    st = apply_beam_splitter(st, {2, 1, T});   // B clones against the anti-clones
    auto [sel, prob] = post_select(st, {{0, M_A}, {2, M_B}});

    SchemeResult res;
    res.success_probability = prob;
    if (prob <= 0.0) return res;
    res.F_A = single_clone_fidelity(sel, 0);
    res.F_B = single_clone_fidelity(sel, 2);
    res.ok = true;
    return res;
}

std::pair<double, double> optical_formula(int N, int M_A, int M_B, double T) {
    if (T <= 0.0) throw std::domain_error("optical_formula: T must be positive");
    if (N == 1 && M_A == 1 && M_B == 2) {
        double den = 12.0 * T * T - 12.0 * T + 9.0;
        return {(4.0 * T * T - 4.0 * T + 7.0) / den, (8.0 * T * T - 4.0 * T + 3.0) / den};
    }
    if (N >= 1 && M_A == N && M_B == 1) {
        double den = (N + 2.0) * (2.0 * N * T * T - 2.0 * N * T + N + 1.0);
        double fa = 1.0 - (2.0 * T - 1.0) * (2.0 * T - 1.0) / den;
        double nb = N * (1.0 - T) + 1.0;
        double fb = 1.0 - nb * nb / den;
        return {fa, fb};
    }
    if (N == 1 && M_A == 2 && M_B == 1) {
        auto [fa, fb] = optical_formula(1, 1, 2, 1.0 / T);
        return {fb, fa};
    }
    if (N >= 1 && M_A == 1 && M_B == N && N != 1) {
        auto [fa, fb] = optical_formula(N, N, 1, 1.0 / T);
        return {fb, fa};
    }
    throw std::domain_error("optical_formula: unsupported (N, M_A, M_B)");
}

ThreeWayResult three_way_scheme(double T1, double T2) {
    if (T1 <= 0.0 || T1 > 1.0 || T2 <= 0.0 || T2 > 1.0)
        throw std::domain_error("three_way_scheme: T1, T2 must be in (0, 1]");

    OpticalState st = with_spatial_modes(pdc_output(1, 3), 4);
    st = apply_beam_splitter(st, {0, 2, 1.0 / 3.0});  // one clone stays in mode 0
    st = apply_beam_splitter(st, {2, 1, T1});         // pair against the anti-clones
    st = apply_beam_splitter(st, {2, 3, 0.5});        // pair split into modes 2 and 3
    st = apply_beam_splitter(st, {3, 1, T2});         // third clone against the remnant
    auto [sel, prob] = post_select(st, {{0, 1}, {2, 1}, {3, 1}});

    ThreeWayResult res;
    res.success_probability = prob;
    if (prob <= 0.0) return res;
    double f[3] = {single_clone_fidelity(sel, 0), single_clone_fidelity(sel, 2),
                   single_clone_fidelity(sel, 3)};
    std::sort(f, f + 3, std::greater<double>());
    res.F_A = f[0];
    res.F_B = f[1];
    res.F_C = f[2];
    res.ok = true;
    return res;
}

}  // namespace qclone::optical
