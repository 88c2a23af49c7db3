#include "qclone/engine.hpp"

#include <cmath>
#include <stdexcept>

#include "qclone/intertwiner.hpp"

namespace qclone::engine {

using su2::Spin;

void CloningProblem::validate() const {
    if (N < 1) throw std::domain_error("CloningProblem: N must be >= 1");
    if (M_A < 1) throw std::domain_error("CloningProblem: M_A must be >= 1");
    if (M_B < 0) throw std::domain_error("CloningProblem: M_B must be >= 0");
    if (M_A + M_B < N) throw std::domain_error("CloningProblem: M_A + M_B must be >= N");
    if (d < 2) throw std::domain_error("CloningProblem: d must be >= 2");
}

namespace {

std::string spin_str(Spin s) {
    if (s.twice % 2 == 0) return std::to_string(s.twice / 2);
    return std::to_string(s.twice) + "/2";
}

}  // namespace

std::string ComponentLabels::str() const {
    return "(" + spin_str(alpha1) + "," + spin_str(alpha2) + "," + spin_str(beta) + ")";
}

std::vector<ComponentLabels> enumerate_components(const CloningProblem& problem) {
    problem.validate();
    if (problem.d != 2)
        throw std::domain_error("enumerate_components: only qubit problems are supported");
    std::vector<ComponentLabels> out;
    for (Spin a1 : su2::d_set(problem.M_A)) {
        for (Spin a2 : su2::d_set(problem.M_B)) {
            for (Spin beta : su2::d_n_set(a1, a2, problem.N)) {
                ComponentLabels labels{a1, a2, beta};
                // Keep only triples whose intertwiner space is nonempty in
                // both coupling orders.
                if (itw::a_labels(a1, a2, beta, problem.N).empty()) continue;
                if (itw::b_labels(a1, a2, beta, problem.N).empty()) continue;
                out.push_back(labels);
            }
        }
    }
    return out;
}

ComponentData build_component(const CloningProblem& problem, const ComponentLabels& labels) {
    problem.validate();
    const int N = problem.N;
    ComponentData c;
    c.labels = labels;
    c.a_set = itw::a_labels(labels.alpha1, labels.alpha2, labels.beta, N);
    c.b_set = itw::b_labels(labels.alpha1, labels.alpha2, labels.beta, N);
    if (c.a_set.empty() || c.b_set.empty())
        throw std::domain_error("build_component: no intertwiners for these labels");

    const double c2_target = su2::casimir_d(Spin{N});
    c.coef_a.resize(c.a_set.size());
    for (size_t i = 0; i < c.a_set.size(); ++i)
        c.coef_a(i) =
            0.5 * (1.0 + (su2::casimir_d(labels.alpha1) - su2::casimir_d(c.a_set[i])) / c2_target);
    c.coef_b.resize(c.b_set.size());
    for (size_t i = 0; i < c.b_set.size(); ++i)
        c.coef_b(i) =
            0.5 * (1.0 + (su2::casimir_d(labels.alpha2) - su2::casimir_d(c.b_set[i])) / c2_target);

    c.racah = itw::overlap_matrix(labels.alpha1, labels.alpha2, labels.beta, N);
    Eigen::MatrixXd r = c.racah / static_cast<double>(N + 1);
    c.qform_b = r.transpose() * c.coef_b.asDiagonal() * r;
    return c;
}

double ComponentData::omega_A(const Eigen::VectorXd& lambdas) const {
    return lambdas.array().square().matrix().dot(coef_a);
}

double ComponentData::omega_B(const Eigen::VectorXd& lambdas) const {
    return lambdas.dot(qform_b * lambdas);
}

double fidelity_from_omega(double omega, int N, int M, int d) {
    if (M < 1) throw std::domain_error("fidelity_from_omega: M must be >= 1");
    return (1.0 + (static_cast<double>(N) / M) * omega * (d - 1)) / d;
}

double omega_from_fidelity(double F, int N, int M, int d) {
    return (F * d - 1.0) * M / (static_cast<double>(N) * (d - 1));
}

FidelityPair machine_fidelities(const CloningMachine& machine) {
    machine.problem.validate();
    double weight_sum = 0.0;
    double omega_a = 0.0, omega_b = 0.0;
    for (const auto& [weight, comp] : machine.components) {
        if (weight < -1e-12) throw std::domain_error("machine_fidelities: negative weight");
        if (std::abs(comp.lambdas.squaredNorm() - 1.0) > 1e-10)
            throw std::domain_error("machine_fidelities: lambda not unit normalized");
        ComponentData data = build_component(machine.problem, comp.labels);
        omega_a += weight * data.omega_A(comp.lambdas);
        omega_b += weight * data.omega_B(comp.lambdas);
        weight_sum += weight;
    }
    if (std::abs(weight_sum - 1.0) > 1e-10)
        throw std::domain_error("machine_fidelities: weights must sum to 1");

    FidelityPair out;
    out.omega_A = omega_a;
    out.omega_B = omega_b;
    out.F_A = fidelity_from_omega(omega_a, machine.problem.N, machine.problem.M_A, machine.problem.d);
    if (machine.problem.M_B > 0)
        out.F_B =
            fidelity_from_omega(omega_b, machine.problem.N, machine.problem.M_B, machine.problem.d);
    return out;
}

double symmetric_fidelity(int N, int M) {
    if (M < N || N < 1) throw std::domain_error("symmetric_fidelity: need M >= N >= 1");
    CloningProblem problem{N, M, 0, 2};
    double best = 0.0;
    for (const auto& labels : enumerate_components(problem)) {
        ComponentData c = build_component(problem, labels);
        best = std::max(best, c.coef_a.maxCoeff());
    }
    return fidelity_from_omega(best, N, M, 2);
}

bool useless_for_cloning(const ComponentData& component) {
    double best_a = component.coef_a.maxCoeff();
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(component.qform_b);
    double best_b = es.eigenvalues().maxCoeff();
    return best_a <= 1e-12 && best_b <= 1e-12;
}

}  // namespace qclone::engine
