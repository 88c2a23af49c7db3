#include <doctest.h>

#include <cmath>
#include <complex>

#include "qclone/optical.hpp"
#include "qclone/rng.hpp"

using namespace qclone;
using optical::Occupation;
using optical::OpticalState;

TEST_SUITE_BEGIN("optical");

TEST_CASE("post-selected pair-production output") {
    auto trivial = optical::pdc_output(1, 1);
    REQUIRE(trivial.amp.size() == 1);
    CHECK(std::abs(trivial.amp.at(Occupation{1, 0, 0, 0}) - 1.0) < 1e-15);

    auto one_two = optical::pdc_output(1, 2);
    REQUIRE(one_two.amp.size() == 2);
    double n = std::sqrt(3.0);
    CHECK(std::abs(one_two.amp.at(Occupation{2, 0, 0, 1}) - std::sqrt(2.0) / n) < 1e-14);
    CHECK(std::abs(one_two.amp.at(Occupation{1, 1, 1, 0}) + 1.0 / n) < 1e-14);

    // N=2, M=3: two terms with weights sqrt(binom(3,2)) and -sqrt(binom(2,2))
    auto two_three = optical::pdc_output(2, 3);
    REQUIRE(two_three.amp.size() == 2);
    CHECK(std::abs(two_three.amp.at(Occupation{3, 0, 0, 1}) - std::sqrt(3.0) / 2.0) < 1e-14);
    CHECK(std::abs(two_three.amp.at(Occupation{2, 1, 1, 0}) + 0.5) < 1e-14);

    CHECK_THROWS_AS(optical::pdc_output(3, 2), std::domain_error);
}

TEST_CASE("beam splitter basics") {
    OpticalState st;
    st.n_spatial = 2;
    st.amp[{1, 0, 0, 0}] = 1.0;

    auto same = optical::apply_beam_splitter(st, {0, 1, 1.0});
    REQUIRE(same.amp.size() == 1);
    CHECK(std::abs(same.amp.at(Occupation{1, 0, 0, 0}) - 1.0) < 1e-15);

    auto half = optical::apply_beam_splitter(st, {0, 1, 0.5});
    double s = 1.0 / std::sqrt(2.0);
    CHECK(std::abs(half.amp.at(Occupation{1, 0, 0, 0}) - s) < 1e-14);
    CHECK(std::abs(half.amp.at(Occupation{0, 0, 1, 0}) - s) < 1e-14);

    CHECK_THROWS_AS(optical::apply_beam_splitter(st, {0, 0, 0.5}), std::domain_error);
    CHECK_THROWS_AS(optical::apply_beam_splitter(st, {0, 3, 0.5}), std::domain_error);
    CHECK_THROWS_AS(optical::apply_beam_splitter(st, {0, 1, 1.5}), std::domain_error);
}

TEST_CASE("beam splitter preserves the norm of random states") {
    auto rng = seeded_rng(21, 0);
    std::normal_distribution<double> gauss(0.0, 1.0);
    std::uniform_real_distribution<double> uniT(0.02, 0.98);
    for (int trial = 0; trial < 100; ++trial) {
        OpticalState st;
        st.n_spatial = 2;
        for (int a = 0; a <= 3; ++a)
            for (int b = 0; a + b <= 3; ++b)
                for (int c = 0; a + b + c <= 3; ++c) {
                    Occupation occ = {static_cast<std::uint8_t>(a), static_cast<std::uint8_t>(b),
                                      static_cast<std::uint8_t>(c),
                                      static_cast<std::uint8_t>(3 - a - b - c)};
                    st.amp[occ] = {gauss(rng), gauss(rng)};
                }
        st.normalize();
        auto out = optical::apply_beam_splitter(st, {0, 1, uniT(rng)});
        CHECK(std::abs(out.norm2() - 1.0) < 1e-12);
    }
}

TEST_CASE("post-selection") {
    auto st = optical::pdc_output(1, 2);
    auto [all, p_all] = optical::post_select(st, {{0, 2}});
    CHECK(p_all == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(all.amp.size() == st.amp.size());

    auto [none, p_none] = optical::post_select(st, {{0, 5}});
    CHECK(p_none == 0.0);
    CHECK(none.amp.empty());

    CHECK_THROWS_AS(optical::post_select(st, {{7, 1}}), std::domain_error);

    // every two-mode split of the clones can fire for T in (0, 1]
    for (double t : {0.2, 0.5, 1.0}) {
        auto res = optical::two_way_scheme(1, 1, 1, t);
        CHECK(res.ok);
        CHECK(res.success_probability > 0.0);
    }
}

TEST_CASE("single-clone fidelity extraction") {
    OpticalState st;
    st.n_spatial = 1;
    st.amp[{2, 0}] = 1.0;
    CHECK(optical::single_clone_fidelity(st, 0) == doctest::Approx(1.0));

    OpticalState mixed;
    mixed.n_spatial = 1;
    mixed.amp[{1, 1}] = 1.0;
    CHECK(optical::single_clone_fidelity(mixed, 0) == doctest::Approx(0.5));

    // the symmetric 1->2 output carries fidelity 5/6 in the signal mode
    auto pdc = optical::pdc_output(1, 2);
    CHECK(optical::single_clone_fidelity(pdc, 0) == doctest::Approx(5.0 / 6.0).epsilon(1e-14));

    OpticalState empty_mode;
    empty_mode.n_spatial = 2;
    empty_mode.amp[{0, 0, 1, 0}] = 1.0;
    CHECK_THROWS_AS(optical::single_clone_fidelity(empty_mode, 0), std::domain_error);
}

TEST_CASE("anti-clone bookkeeping") {
    // After post-selecting M clones, every surviving term holds exactly M-N
    // photons in the idler.
    for (auto [n, m] : std::vector<std::array<int, 2>>{{1, 2}, {1, 3}, {2, 3}, {3, 4}}) {
        auto st = optical::pdc_output(n, m);
        auto [sel, p] = optical::post_select(st, {{0, m}});
        REQUIRE(p > 0.0);
        for (const auto& [occ, amp] : sel.amp) CHECK(occ[2] + occ[3] == m - n);
    }
}

TEST_CASE("pipeline fidelities match the closed formulas") {
    for (auto [n, ma, mb] : std::vector<std::array<int, 3>>{
             {1, 1, 1}, {1, 1, 2}, {1, 2, 1}, {2, 2, 1}, {2, 1, 2}, {3, 3, 1}, {4, 4, 1}}) {
        for (double t : {0.55, 0.75, 1.0}) {
            auto sim = optical::two_way_scheme(n, ma, mb, t);
            auto [fa, fb] = optical::optical_formula(n, ma, mb, t);
            REQUIRE(sim.ok);
            CHECK(sim.F_A == doctest::Approx(fa).epsilon(1e-11));
            CHECK(sim.F_B == doctest::Approx(fb).epsilon(1e-11));
        }
    }
    CHECK_THROWS_AS(optical::optical_formula(2, 2, 2, 0.7), std::domain_error);
}

TEST_CASE("fidelities do not depend on the clone splitter setting") {
    for (double split : {0.2, 0.5, 0.8}) {
        auto res = optical::two_way_scheme(2, 2, 1, 0.7, split);
        auto ref = optical::two_way_scheme(2, 2, 1, 0.7);
        CHECK(res.F_A == doctest::Approx(ref.F_A).epsilon(1e-12));
        CHECK(res.F_B == doctest::Approx(ref.F_B).epsilon(1e-12));
        CHECK(res.success_probability <= ref.success_probability + 1e-12);
    }
}

TEST_CASE("pipeline is covariant under polarization rotations") {
    auto rng = seeded_rng(5, 9);
    std::uniform_real_distribution<double> uni(-1.0, 1.0);
    for (int trial = 0; trial < 3; ++trial) {
        // random SU(2) from a normalized complex spinor pair
        std::complex<double> a(uni(rng), uni(rng)), b(uni(rng), uni(rng));
        double norm = std::sqrt(std::norm(a) + std::norm(b));
        a /= norm;
        b /= norm;
        Eigen::Matrix2cd u;
        u << a, -std::conj(b), b, std::conj(a);

        const double T = 0.7;
        auto st = optical::with_spatial_modes(optical::pdc_output(1, 3), 3);
        st = optical::apply_beam_splitter(st, {0, 2, 1.0 / 3.0});
        st = optical::apply_beam_splitter(st, {2, 1, T});
        auto rotated = optical::rotate_polarization(st, u);
        auto [sel, p] = optical::post_select(st, {{0, 1}, {2, 2}});
        auto [sel_r, p_r] = optical::post_select(rotated, {{0, 1}, {2, 2}});
        CHECK(p_r == doctest::Approx(p).epsilon(1e-12));

        Eigen::Vector2cd ref = u.col(0);  // rotated |V>
        for (int mode : {0, 2}) {
            auto rho = optical::reduced_qubit(sel_r, mode);
            double f_rot = (ref.adjoint() * rho * ref)(0, 0).real();
            double f_base = optical::single_clone_fidelity(sel, mode);
            CHECK(f_rot == doctest::Approx(f_base).epsilon(1e-9));
        }
    }
}

TEST_CASE("three-clone scheme") {
    auto sym = optical::three_way_scheme(1.0, 1.0);
    CHECK(sym.F_A == doctest::Approx(7.0 / 9.0).epsilon(1e-12));
    CHECK(sym.F_C == doctest::Approx(7.0 / 9.0).epsilon(1e-12));

    auto erase = optical::three_way_scheme(0.5, 1.0);
    CHECK(erase.F_A == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(erase.F_B == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(erase.F_C == doctest::Approx(0.5).epsilon(1e-12));

    for (double t1 : {0.6, 0.85}) {
        auto red = optical::three_way_scheme(t1, 1.0);
        auto [fa, fb] = optical::optical_formula(1, 1, 2, t1);
        CHECK(red.F_A == doctest::Approx(fa).epsilon(1e-11));
        CHECK(red.F_B == doctest::Approx(fb).epsilon(1e-11));
        CHECK(red.F_C == doctest::Approx(fb).epsilon(1e-11));
    }

    CHECK_THROWS_AS(optical::three_way_scheme(0.0, 1.0), std::domain_error);
}

TEST_SUITE_END();
