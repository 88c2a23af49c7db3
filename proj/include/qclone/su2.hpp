#pragma once

#include <compare>
#include <complex>
#include <cstdint>
#include <map>
#include <vector>

#include <Eigen/Dense>

namespace qclone::su2 {

// Irrep label of SU(2), stored as twice its value so half-integers stay exact.
struct Spin {
    int twice = 0;

    constexpr int dim() const { return twice + 1; }
    constexpr double value() const { return 0.5 * twice; }
    auto operator<=>(const Spin&) const = default;
};

constexpr Spin spin_twice(int t) { return Spin{t}; }

// Magnetic quantum number, also stored doubled. Valid against a spin j when
// |m| <= j and m has the same parity as j.
struct Mag {
    int twice = 0;

    constexpr double value() const { return 0.5 * twice; }
    auto operator<=>(const Mag&) const = default;
};

bool valid_pair(Spin j, Mag m);

// Exact value of j(j+1).
struct Rational {
    long long num = 0;
    long long den = 1;

    double to_double() const { return static_cast<double>(num) / static_cast<double>(den); }
    auto operator<=>(const Rational&) const = default;
};

Rational casimir(Spin j);
double casimir_d(Spin j);

// |j1-j2|, |j1-j2|+1, ..., j1+j2 in ascending order.
std::vector<Spin> clebsch_gordan_series(Spin j1, Spin j2);

bool series_contains(Spin j1, Spin j2, Spin j);

struct IrrepMultiset {
    std::map<Spin, int> entries;

    long long total_dimension() const;
};

// Decomposition of (1/2)^{tensor n} into irreps with multiplicities.
IrrepMultiset decompose_tensor_power(int n);

// dim of the symmetric subspace of N qudits: binomial(N+d-1, d-1).
long long sym_subspace_dim(int N, int d);

// Distinct spins appearing in (1/2)^{tensor M}; {0} for M = 0.
std::vector<Spin> d_set(int M);

// All beta such that spin N/2 appears in alpha1 x alpha2 x beta.
std::vector<Spin> d_n_set(Spin alpha1, Spin alpha2, int N);

// <j1 m1; j2 m2 | J M> in the Condon-Shortley convention. Zero when
// m1+m2 != M or J lies outside the coupling series. Throws std::domain_error
// on an invalid (j,m) pairing.
double cg(Spin j1, Mag m1, Spin j2, Mag m2, Spin J, Mag M);

// Magnetic numbers of spin j, descending from +j to -j. This ordering is the
// basis convention used throughout.
std::vector<Mag> mags_descending(Spin j);

// Hermitian generators on the spin-j irrep in the descending-m basis.
Eigen::MatrixXcd generator_jz(Spin j);
Eigen::MatrixXcd generator_jplus(Spin j);
Eigen::MatrixXcd generator_jx(Spin j);
Eigen::MatrixXcd generator_jy(Spin j);

// exp(-i (ax Jx + ay Jy + az Jz)) on the spin-j irrep.
Eigen::MatrixXcd rotation(Spin j, double ax, double ay, double az);

}  // namespace qclone::su2
