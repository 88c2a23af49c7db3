#include <doctest.h>

#include <cmath>

#include "qclone/closed_form.hpp"

using namespace qclone::closed_form;

TEST_SUITE_BEGIN("closed_form");

TEST_CASE("curve parameter validation") {
    CHECK_THROWS_AS(CurveParam(0.5, 0.5), std::domain_error);
    CHECK_THROWS_AS(CurveParam(-1.0, 0.0), std::domain_error);
    auto p = CurveParam::from_y(0.6);
    CHECK(p.x == doctest::Approx(0.8).epsilon(1e-15));
}

TEST_CASE("n -> n+1 family") {
    auto ends = fid_n_to_n_plus_1(2, CurveParam::from_y(0.0));
    CHECK(ends.F_A == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(ends.F_B == doctest::Approx(0.5).epsilon(1e-15));

    auto sym = fid_n_to_n_plus_1(2, CurveParam::from_y(std::sqrt(1.0 / 3.0)));
    CHECK(sym.F_A == doctest::Approx(11.0 / 12.0).epsilon(1e-14));
    CHECK(sym.F_B == doctest::Approx(11.0 / 12.0).epsilon(1e-14));

    auto perfect_last = fid_n_to_n_plus_1(2, CurveParam::from_y(std::sqrt(2.0 / 3.0)));
    CHECK(perfect_last.F_A == doctest::Approx(5.0 / 6.0).epsilon(1e-14));
    CHECK(perfect_last.F_B == doctest::Approx(1.0).epsilon(1e-14));

    CHECK_THROWS_AS(fid_n_to_n_plus_1(0, CurveParam::from_y(0.1)), std::domain_error);
}

TEST_CASE("1 -> 1+n family") {
    for (int n : {1, 2, 5}) {
        auto keep = fid_1_to_1_plus_n(n, CurveParam::from_y(0.0));
        CHECK(keep.F_A == doctest::Approx(1.0).epsilon(1e-15));
        CHECK(keep.F_B == doctest::Approx(0.5).epsilon(1e-15));

        auto symb = fid_1_to_1_plus_n(n, CurveParam::from_y(std::sqrt((n + 2.0) / (2.0 * n + 2.0))));
        CHECK(symb.F_B == doctest::Approx((2.0 * n + 1.0) / (3.0 * n)).epsilon(1e-14));
        CHECK(symb.F_A == doctest::Approx((2.0 * n + 1.0) / (3.0 * (n + 1.0))).epsilon(1e-14));
    }
}

TEST_CASE("measurement limit") {
    auto a = fid_measurement_limit(0.0);
    CHECK(a.F_A == 1.0);
    CHECK(a.F_B == 0.5);
    auto b = fid_measurement_limit(1.0 / std::sqrt(2.0));
    CHECK(b.F_A == doctest::Approx(2.0 / 3.0).epsilon(1e-15));
    CHECK(b.F_B == doctest::Approx(2.0 / 3.0).epsilon(1e-15));
    CHECK_THROWS_AS(fid_measurement_limit(0.9), std::domain_error);
    CHECK_THROWS_AS(fid_measurement_limit(-0.1), std::domain_error);
}

TEST_CASE("qubit trade-off curve") {
    auto a = fid_1to11_qubit(0.0);
    CHECK(a.F_A == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(a.F_B == doctest::Approx(0.5).epsilon(1e-15));
    auto sym = fid_1to11_qubit(0.5);
    CHECK(sym.F_A == doctest::Approx(5.0 / 6.0).epsilon(1e-14));
    CHECK(sym.F_B == doctest::Approx(5.0 / 6.0).epsilon(1e-14));
    // the tail past the trade-off branch drops below the random-guess point
    CHECK(fid_1to11_qubit(1.0).F_A == doctest::Approx(1.0 / 3.0).epsilon(1e-14));

    // coincides with the 1 -> 1+n family at n = 1
    for (int i = 0; i <= 100; ++i) {
        double y = i / 100.0;
        auto lhs = fid_1to11_qubit(y);
        auto rhs = fid_1_to_1_plus_n(1, CurveParam::from_y(y));
        CHECK(std::abs(lhs.F_A - rhs.F_A) < 1e-12);
        CHECK(std::abs(lhs.F_B - rhs.F_B) < 1e-12);
    }
}

TEST_CASE("qudit machine") {
    auto sym2 = fid_qudit_1to11(2, std::sqrt(2.0 / 3.0), 0.0);
    CHECK(sym2.F_A == doctest::Approx(5.0 / 6.0).epsilon(1e-14));
    CHECK(sym2.F_B == doctest::Approx(5.0 / 6.0).epsilon(1e-14));
    auto sym3 = fid_qudit_1to11(3, std::sqrt(0.5), 0.0);
    CHECK(sym3.F_A == doctest::Approx(0.75).epsilon(1e-14));
    CHECK_THROWS_AS(fid_qudit_1to11(3, 1.0, 1.0), std::domain_error);

    // F_A = 1 forces F_B = 1/d: locate the F_A-maximal angle and check.
    for (int d : {2, 3, 5}) {
        double na = std::sqrt(2.0 / (d + 1)), nb = std::sqrt(2.0 / (d - 1));
        double best_fa = 0.0, fb_at_best = 0.0;
        double lo = 0.0, hi = M_PI;
        for (int it = 0; it < 200; ++it) {
            double m1 = lo + (hi - lo) / 3.0, m2 = hi - (hi - lo) / 3.0;
            double f1 = fid_qudit_1to11(d, na * std::cos(m1), nb * std::sin(m1)).F_A;
            double f2 = fid_qudit_1to11(d, na * std::cos(m2), nb * std::sin(m2)).F_A;
            if (f1 < f2)
                lo = m1;
            else
                hi = m2;
        }
        double phi = 0.5 * (lo + hi);
        auto f = fid_qudit_1to11(d, na * std::cos(phi), nb * std::sin(phi));
        best_fa = f.F_A;
        fb_at_best = f.F_B;
        CHECK(best_fa == doctest::Approx(1.0).epsilon(1e-9));
        CHECK(fb_at_best == doctest::Approx(1.0 / d).epsilon(1e-8));
    }

    // At d = 2 the trade-off arc (from the symmetric point up to a perfect A
    // clone) retraces the qubit curve: compare F_B at equal F_A. Past the
    // F_A maximum the two one-parameter families follow different
    // non-optimal machines, so the comparison stops there.
    double prev_fa = 5.0 / 6.0;
    for (int i = 1; i < 200; ++i) {
        double phi = 0.5 * M_PI * i / 200.0;
        auto f = fid_qudit_1to11(2, std::sqrt(2.0 / 3.0) * std::cos(phi),
                                 std::sqrt(2.0) * std::sin(phi));
        if (f.F_A < prev_fa || f.F_B < 0.5) break;
        prev_fa = f.F_A;
        double lam1 = std::sqrt(std::max(0.0, 1.5 * (1.0 - f.F_A)));
        CHECK(f.F_B == doctest::Approx(fid_1to11_qubit(lam1).F_B).epsilon(1e-9));
    }
}

TEST_CASE("three-clone block") {
    auto keep = fid_1to111_qubit(1.0, 0.0, Eigen::Vector2d(1.0, 0.0),
                                 Eigen::Vector3d(1.0, 0.0, 0.0));
    CHECK(keep.a == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(keep.b == doctest::Approx(0.0).epsilon(1e-15));
    CHECK(keep.c == doctest::Approx(0.0).epsilon(1e-15));

    auto sym = fid_1to111_qubit(0.0, 1.0, Eigen::Vector2d(1.0, 0.0),
                                Eigen::Vector3d(std::sqrt(2.0 / 3.0), std::sqrt(1.0 / 3.0), 0.0));
    CHECK(sym.a == doctest::Approx(5.0 / 9.0).epsilon(1e-14));
    CHECK(sym.b == doctest::Approx(5.0 / 9.0).epsilon(1e-14));
    CHECK(sym.c == doctest::Approx(5.0 / 9.0).epsilon(1e-14));

    // dropping the third coefficient reduces to the 1 -> 1+2 values
    for (double y : {0.1, 0.4, 0.8}) {
        auto p = CurveParam::from_y(y);
        auto w = fid_1to111_qubit(0.0, 1.0, Eigen::Vector2d(1.0, 0.0),
                                  Eigen::Vector3d(p.x, p.y, 0.0));
        auto pair = fid_1_to_1_plus_n(2, p);
        CHECK(0.5 * (1.0 + w.a) == doctest::Approx(pair.F_A).epsilon(1e-13));
        CHECK(0.5 * (1.0 + w.b) == doctest::Approx(pair.F_B).epsilon(1e-13));
        CHECK(w.b == doctest::Approx(w.c).epsilon(1e-13));
    }

    CHECK_THROWS_AS(fid_1to111_qubit(0.5, 0.6, Eigen::Vector2d(1.0, 0.0),
                                     Eigen::Vector3d(1.0, 0.0, 0.0)),
                    std::domain_error);
    CHECK_THROWS_AS(fid_1to111_qubit(0.5, 0.5, Eigen::Vector2d(1.0, 1.0),
                                     Eigen::Vector3d(1.0, 0.0, 0.0)),
                    std::domain_error);
}

TEST_CASE("symmetric fidelities") {
    CHECK(fid_symmetric(1, 2) == doctest::Approx(5.0 / 6.0).epsilon(1e-14));
    CHECK(fid_symmetric(2, 3) == doctest::Approx(11.0 / 12.0).epsilon(1e-14));
    CHECK(fid_symmetric(1, 3) == doctest::Approx(7.0 / 9.0).epsilon(1e-14));
}

TEST_SUITE_END();
