#include <doctest.h>

#include <Eigen/Dense>

#include "qclone/su2.hpp"

using namespace qclone;
using su2::Mag;
using su2::Spin;

TEST_SUITE_BEGIN("su2");

TEST_CASE("casimir is j(j+1) as an exact rational") {
    CHECK(su2::casimir(Spin{1}) == su2::Rational{3, 4});
    CHECK(su2::casimir(Spin{0}) == su2::Rational{0, 1});
    CHECK(su2::casimir(Spin{3}) == su2::Rational{15, 4});
    CHECK(su2::casimir(Spin{4}) == su2::Rational{6, 1});
    CHECK(su2::casimir_d(Spin{1}) == doctest::Approx(0.75).epsilon(1e-15));
}

TEST_CASE("coupling series") {
    auto s = su2::clebsch_gordan_series(Spin{1}, Spin{1});
    REQUIRE(s.size() == 2);
    CHECK(s[0] == Spin{0});
    CHECK(s[1] == Spin{2});

    CHECK(su2::clebsch_gordan_series(Spin{5}, Spin{0}) == std::vector<Spin>{Spin{5}});

    auto s2 = su2::clebsch_gordan_series(Spin{2}, Spin{1});
    CHECK(s2 == std::vector<Spin>{Spin{1}, Spin{3}});

    // dimension sum: sum_J (2J+1) = (2j1+1)(2j2+1)
    for (int t1 = 0; t1 <= 8; ++t1) {
        for (int t2 = 0; t2 <= 8; ++t2) {
            long long total = 0;
            for (Spin j : su2::clebsch_gordan_series(Spin{t1}, Spin{t2})) total += j.dim();
            CHECK(total == Spin{t1}.dim() * Spin{t2}.dim());
        }
    }
}

namespace {

// Independent route for the tensor-power decomposition: diagonalize the total
// spin squared on the full 2^n space and bin the eigenvalues.
std::map<int, int> multiplicities_by_diagonalization(int n) {
    const int dim = 1 << n;
    Eigen::MatrixXcd sx = Eigen::MatrixXcd::Zero(dim, dim), sy = sx, sz = sx;
    Eigen::Matrix2cd px, py, pz;
    px << 0, 0.5, 0.5, 0;
    py << 0, std::complex<double>(0, -0.5), std::complex<double>(0, 0.5), 0;
    pz << 0.5, 0, 0, -0.5;
    for (int site = 0; site < n; ++site) {
        for (int r = 0; r < dim; ++r) {
            int rb = (r >> (n - 1 - site)) & 1;
            for (int cb = 0; cb < 2; ++cb) {
                int c = rb == cb ? r : r ^ (1 << (n - 1 - site));
                sx(r, c) += px(rb, cb);
                sy(r, c) += py(rb, cb);
                sz(r, c) += pz(rb, cb);
            }
        }
    }
    Eigen::MatrixXcd s2 = sx * sx + sy * sy + sz * sz;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(s2);
    std::map<int, int> counts;  // twice_j -> dimension count
    for (int i = 0; i < dim; ++i) {
        double jj = es.eigenvalues()(i);
        int twice = static_cast<int>(std::lround(std::sqrt(4.0 * jj + 1.0) - 1.0));
        counts[twice]++;
    }
    std::map<int, int> mult;
    for (auto [twice, count] : counts) mult[twice] = count / (twice + 1);
    return mult;
}

}  // namespace

TEST_CASE("tensor power decomposition") {
    auto d2 = su2::decompose_tensor_power(2);
    CHECK(d2.entries == std::map<Spin, int>{{Spin{0}, 1}, {Spin{2}, 1}});
    CHECK(su2::decompose_tensor_power(1).entries == std::map<Spin, int>{{Spin{1}, 1}});

    // n = 3 against the diagonalization oracle: {1/2: 2, 3/2: 1}
    auto oracle = multiplicities_by_diagonalization(3);
    auto d3 = su2::decompose_tensor_power(3);
    REQUIRE(d3.entries.size() == oracle.size());
    for (auto [s, mult] : d3.entries) CHECK(oracle.at(s.twice) == mult);
    CHECK(d3.entries.at(Spin{1}) == 2);
    CHECK(d3.entries.at(Spin{3}) == 1);

    for (int n = 1; n <= 12; ++n)
        CHECK(su2::decompose_tensor_power(n).total_dimension() == (1ll << n));

    CHECK_THROWS_AS(su2::decompose_tensor_power(0), std::domain_error);
}

TEST_CASE("symmetric subspace dimension") {
    CHECK(su2::sym_subspace_dim(2, 2) == 3);
    CHECK(su2::sym_subspace_dim(1, 7) == 7);
    CHECK(su2::sym_subspace_dim(2, 3) == 6);
    CHECK(su2::sym_subspace_dim(0, 5) == 1);
}

TEST_CASE("spin label sets") {
    CHECK(su2::d_set(2) == std::vector<Spin>{Spin{0}, Spin{2}});
    CHECK(su2::d_set(1) == std::vector<Spin>{Spin{1}});
    CHECK(su2::d_set(4) == std::vector<Spin>{Spin{0}, Spin{2}, Spin{4}});

    CHECK(su2::d_n_set(Spin{1}, Spin{1}, 1) == std::vector<Spin>{Spin{1}, Spin{3}});
    CHECK(su2::d_n_set(Spin{2}, Spin{1}, 2) == std::vector<Spin>{Spin{1}, Spin{3}, Spin{5}});
    CHECK(su2::d_n_set(Spin{0}, Spin{1}, 2) == std::vector<Spin>{Spin{1}, Spin{3}});
}

TEST_CASE("clebsch-gordan values") {
    // singlet component, frozen from the independent ladder construction
    CHECK(su2::cg(Spin{1}, Mag{1}, Spin{1}, Mag{-1}, Spin{0}, Mag{0}) ==
          doctest::Approx(0.70710678118654752).epsilon(1e-14));
    CHECK(su2::cg(Spin{1}, Mag{-1}, Spin{1}, Mag{1}, Spin{0}, Mag{0}) ==
          doctest::Approx(-0.70710678118654752).epsilon(1e-14));
    // coupling with the trivial irrep
    for (int tj : {1, 2, 5})
        CHECK(su2::cg(Spin{tj}, Mag{tj}, Spin{0}, Mag{0}, Spin{tj}, Mag{tj}) ==
              doctest::Approx(1.0).epsilon(1e-14));
    // stretched state is unique
    CHECK(su2::cg(Spin{1}, Mag{1}, Spin{1}, Mag{1}, Spin{2}, Mag{2}) ==
          doctest::Approx(1.0).epsilon(1e-14));
    // zero when M != m1+m2
    CHECK(su2::cg(Spin{1}, Mag{1}, Spin{1}, Mag{1}, Spin{2}, Mag{0}) == 0.0);
    CHECK_THROWS_AS(su2::cg(Spin{1}, Mag{2}, Spin{1}, Mag{0}, Spin{2}, Mag{2}),
                    std::domain_error);
    CHECK_THROWS_AS(su2::cg(Spin{2}, Mag{1}, Spin{0}, Mag{0}, Spin{2}, Mag{1}),
                    std::domain_error);
}

TEST_CASE("clebsch-gordan exchange symmetry") {
    // <j1 m1; j2 m2|J M> = (-1)^(j1+j2-J) <j2 m2; j1 m1|J M>
    for (int t1 : {1, 2, 3}) {
        for (int t2 : {1, 2, 4}) {
            for (Spin J : su2::clebsch_gordan_series(Spin{t1}, Spin{t2})) {
                for (Mag m1 : su2::mags_descending(Spin{t1})) {
                    for (Mag m2 : su2::mags_descending(Spin{t2})) {
                        if (std::abs(m1.twice + m2.twice) > J.twice) continue;
                        Mag M{m1.twice + m2.twice};
                        double lhs = su2::cg(Spin{t1}, m1, Spin{t2}, m2, J, M);
                        double rhs = su2::cg(Spin{t2}, m2, Spin{t1}, m1, J, M);
                        int phase = ((t1 + t2 - J.twice) / 2) % 2 ? -1 : 1;
                        CHECK(lhs == doctest::Approx(phase * rhs).epsilon(1e-13));
                    }
                }
            }
        }
    }
}

TEST_CASE("rotations are unitary and compose on generators") {
    Spin j{3};
    auto u = su2::rotation(j, 0.3, -0.7, 1.1);
    Eigen::MatrixXcd id = Eigen::MatrixXcd::Identity(j.dim(), j.dim());
    CHECK((u * u.adjoint() - id).cwiseAbs().maxCoeff() < 1e-13);
    // [Jx, Jy] = i Jz
    auto jx = su2::generator_jx(j), jy = su2::generator_jy(j), jz = su2::generator_jz(j);
    CHECK((jx * jy - jy * jx - std::complex<double>(0, 1) * jz).cwiseAbs().maxCoeff() < 1e-13);
}

TEST_SUITE_END();
