#include <doctest.h>

#include <cmath>
#include <set>

#include "qclone/engine.hpp"

using namespace qclone;
using engine::CloningProblem;
using engine::ComponentLabels;
using su2::Spin;

TEST_SUITE_BEGIN("engine");

TEST_CASE("component enumeration") {
    auto c111 = engine::enumerate_components({1, 1, 1, 2});
    REQUIRE(c111.size() == 2);
    CHECK(c111[0] == ComponentLabels{Spin{1}, Spin{1}, Spin{1}});
    CHECK(c111[1] == ComponentLabels{Spin{1}, Spin{1}, Spin{3}});

    auto c221 = engine::enumerate_components({2, 2, 1, 2});
    std::set<std::string> names;
    for (const auto& l : c221) names.insert(l.str());
    CHECK(names == std::set<std::string>{"(0,1/2,1/2)", "(0,1/2,3/2)", "(1,1/2,1/2)",
                                         "(1,1/2,3/2)", "(1,1/2,5/2)"});

    // Degenerate M_B = 0: the identity channel is present, everything else in
    // the enumeration is useless for cloning.
    auto c110 = engine::enumerate_components({1, 1, 0, 2});
    bool has_identity = false;
    for (const auto& l : c110) {
        if (l == ComponentLabels{Spin{1}, Spin{0}, Spin{0}})
            has_identity = true;
        else
            CHECK(engine::useless_for_cloning(engine::build_component({1, 1, 0, 2}, l)));
    }
    CHECK(has_identity);

    CHECK_THROWS_AS(engine::enumerate_components({1, 1, 1, 3}), std::domain_error);
    CHECK_THROWS_AS(engine::enumerate_components({2, 1, 0, 2}), std::domain_error);
}

TEST_CASE("component omegas") {
    CloningProblem p111{1, 1, 1, 2};
    auto junk = engine::build_component(p111, {Spin{1}, Spin{1}, Spin{3}});
    REQUIRE(junk.a_set.size() == 1);
    Eigen::VectorXd one = Eigen::VectorXd::Ones(1);
    CHECK(junk.omega_A(one) == doctest::Approx(-1.0 / 3.0).epsilon(1e-14));
    CHECK(junk.omega_B(one) == doctest::Approx(-1.0 / 3.0).epsilon(1e-14));
    CHECK(engine::useless_for_cloning(junk));

    CloningProblem p221{2, 2, 1, 2};
    auto keep = engine::build_component(p221, {Spin{0}, Spin{1}, Spin{1}});
    CHECK(keep.omega_A(one) == doctest::Approx(0.0).epsilon(1e-14));
    CHECK(keep.omega_B(one) == doctest::Approx(0.5).epsilon(1e-14));
    CHECK_FALSE(engine::useless_for_cloning(keep));

    auto drop = engine::build_component(p221, {Spin{2}, Spin{1}, Spin{5}});
    CHECK(drop.omega_A(one) == doctest::Approx(-0.5).epsilon(1e-14));
    CHECK(drop.omega_B(one) == doctest::Approx(-0.25).epsilon(1e-14));
    CHECK(engine::useless_for_cloning(drop));

    auto noise = engine::build_component(p221, {Spin{0}, Spin{1}, Spin{3}});
    CHECK(noise.omega_B(one) == doctest::Approx(-0.25).epsilon(1e-14));
    CHECK(engine::useless_for_cloning(noise));

    // main 2->2+1 block: omega_A = lambda_0^2 + lambda_1^2/2
    auto main = engine::build_component(p221, {Spin{2}, Spin{1}, Spin{1}});
    REQUIRE(main.a_set.size() == 2);
    CHECK(main.coef_a(0) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(main.coef_a(1) == doctest::Approx(0.5).epsilon(1e-14));
    CHECK(main.coef_b(0) == doctest::Approx(0.5).epsilon(1e-14));
    CHECK(main.coef_b(1) == doctest::Approx(-0.25).epsilon(1e-14));
}

TEST_CASE("single-input block against the closed expression") {
    // omega_B(s,s) = (2/3)(1 - l0^2) + (4/3) l0 l1 sqrt(s(s+1))
    for (int ts : {1, 2, 3, 6}) {
        CloningProblem p{1, 1, ts == 1 ? 1 : ts, 2};
        auto block = engine::build_component(p, {Spin{1}, Spin{ts}, Spin{ts}});
        double sv = 0.5 * ts;
        for (double l1 : {0.0, 0.3, 0.7, 1.0}) {
            Eigen::VectorXd lam(2);
            lam << std::sqrt(1.0 - l1 * l1), l1;
            double expect =
                (2.0 / 3.0) * (1.0 - lam(0) * lam(0)) +
                (4.0 / 3.0) * lam(0) * lam(1) * std::sqrt(sv * (sv + 1.0));
            CHECK(block.omega_B(lam) == doctest::Approx(expect).epsilon(1e-12));
            CHECK(block.omega_A(lam) ==
                  doctest::Approx(1.0 - (4.0 / 3.0) * l1 * l1).epsilon(1e-12));
        }
    }
}

TEST_CASE("fidelity conversion") {
    CHECK(engine::fidelity_from_omega(0.0, 1, 1, 2) == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(engine::fidelity_from_omega(1.0, 3, 3, 2) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(engine::omega_from_fidelity(engine::fidelity_from_omega(0.37, 2, 3, 2), 2, 3, 2) ==
          doctest::Approx(0.37).epsilon(1e-13));
}

TEST_CASE("machine fidelities") {
    CloningProblem p{1, 1, 1, 2};
    engine::CloningMachine machine;
    machine.problem = p;
    Eigen::VectorXd lam(2);
    lam << 1.0, 0.0;
    machine.components.push_back({1.0, {{Spin{1}, Spin{1}, Spin{1}}, lam}});
    auto f = engine::machine_fidelities(machine);
    CHECK(f.F_A == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(*f.F_B == doctest::Approx(0.5).epsilon(1e-14));

    // symmetric point lambda = (sqrt3/2, 1/2)
    lam << std::sqrt(3.0) / 2.0, 0.5;
    machine.components[0].component.lambdas = lam;
    f = engine::machine_fidelities(machine);
    CHECK(f.F_A == doctest::Approx(5.0 / 6.0).epsilon(1e-14));
    CHECK(*f.F_B == doctest::Approx(5.0 / 6.0).epsilon(1e-14));

    // the all-junk block lands below the random-guess point
    Eigen::VectorXd one = Eigen::VectorXd::Ones(1);
    machine.components[0] = {1.0, {{Spin{1}, Spin{1}, Spin{3}}, one}};
    f = engine::machine_fidelities(machine);
    CHECK(f.F_A == doctest::Approx(1.0 / 3.0).epsilon(1e-14));

    machine.components[0].weight = 0.9;
    CHECK_THROWS_AS(engine::machine_fidelities(machine), std::domain_error);
}

TEST_CASE("omega additivity and exchange symmetry") {
    CloningProblem p{1, 1, 1, 2};
    auto data = engine::build_component(p, {Spin{1}, Spin{1}, Spin{1}});
    auto junk = engine::build_component(p, {Spin{1}, Spin{1}, Spin{3}});
    Eigen::VectorXd lam(2);
    lam << 0.6, -0.8;
    Eigen::VectorXd one = Eigen::VectorXd::Ones(1);

    engine::CloningMachine machine;
    machine.problem = p;
    machine.components.push_back({0.7, {{Spin{1}, Spin{1}, Spin{1}}, lam}});
    machine.components.push_back({0.3, {{Spin{1}, Spin{1}, Spin{3}}, one}});
    auto f = engine::machine_fidelities(machine);
    CHECK(f.omega_A ==
          doctest::Approx(0.7 * data.omega_A(lam) + 0.3 * junk.omega_A(one)).epsilon(1e-14));
    CHECK(f.omega_B ==
          doctest::Approx(0.7 * data.omega_B(lam) + 0.3 * junk.omega_B(one)).epsilon(1e-14));

    // M_A = M_B: replacing lambda by mu swaps the two fidelities
    Eigen::VectorXd mu = (data.racah * lam) / 2.0;
    CHECK(data.omega_A(mu) == doctest::Approx(data.omega_B(lam)).epsilon(1e-12));
    CHECK(data.omega_B(mu) == doctest::Approx(data.omega_A(lam)).epsilon(1e-12));
}

TEST_CASE("symmetric machine fidelity") {
    CHECK(engine::symmetric_fidelity(1, 2) == doctest::Approx(5.0 / 6.0).epsilon(1e-14));
    CHECK(engine::symmetric_fidelity(2, 3) == doctest::Approx(11.0 / 12.0).epsilon(1e-14));
    CHECK(engine::symmetric_fidelity(1, 1) == doctest::Approx(1.0).epsilon(1e-14));
    for (int n = 2; n <= 6; ++n)
        CHECK(engine::symmetric_fidelity(1, n) ==
              doctest::Approx((2.0 * n + 1.0) / (3.0 * n)).epsilon(1e-14));
}

TEST_CASE("M_B = 0 reports no B fidelity") {
    engine::CloningMachine machine;
    machine.problem = {1, 1, 0, 2};
    Eigen::VectorXd one = Eigen::VectorXd::Ones(1);
    machine.components.push_back({1.0, {{Spin{1}, Spin{0}, Spin{0}}, one}});
    auto f = engine::machine_fidelities(machine);
    CHECK(f.F_A == doctest::Approx(1.0).epsilon(1e-14));
    CHECK_FALSE(f.F_B.has_value());
}

TEST_SUITE_END();
