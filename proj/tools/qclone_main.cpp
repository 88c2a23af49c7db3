// Command-line front end: trade-off frontiers, closed-form curves, optical
// simulations, verification suites, and Clebsch-Gordan tables, emitted as
// CSV/TSV.

#include <cmath>
#include <cstdio>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qclone/cli_util.hpp"
#include "qclone/closed_form.hpp"
#include "qclone/csv.hpp"
#include "qclone/engine.hpp"
#include "qclone/optical.hpp"
#include "qclone/optimize.hpp"
#include "qclone/su2.hpp"
#include "qclone/verification.hpp"

namespace {

using qclone::csv::Table;

struct GlobalOpts {
    std::string out;
    std::string format = "csv";
    std::uint64_t seed = 0;
};

char separator(const GlobalOpts& g) { return g.format == "tsv" ? '\t' : ','; }

std::string spin_str(qclone::su2::Spin s) {
    char buf[16];
    std::snprintf(buf, sizeof(buf), "%g", s.value());
    return buf;
}

int cmd_tradeoff(const GlobalOpts& g, int N, int M_A, int M_B, int d, int grid_count) {
    qclone::engine::CloningProblem problem{N, M_A, M_B, d};
    problem.validate();
    qclone::opt::OptimizerConfig cfg;
    cfg.seed = g.seed;

    Table table({"N", "M_A", "M_B", "d", "seed", "F_A_target", "F_A", "F_B", "converged",
                 "is_symmetric_point", "kkt_residual", "r_weights", "lambda_values"},
                separator(g));
    auto grid = M_B == 0 ? qclone::opt::GridSpec{1.0 / d, 1.0, 1}
                         : qclone::opt::default_grid(problem, grid_count);
    auto frontier = qclone::opt::frontier(problem, grid, cfg);
    double fsym_all = M_B == 0 ? grid.F_A_max
                               : qclone::engine::symmetric_fidelity(N, M_A + M_B);
    double halfstep = grid.count > 1 ? 0.5 * (grid.F_A_max - grid.F_A_min) / (grid.count - 1) : 0.0;
    for (const auto& p : frontier.points) {
        std::string rw, lv;
        for (const auto& [w, comp] : p.machine.components) {
            if (!rw.empty()) {
                rw += ';';
                lv += ';';
            }
            rw += comp.labels.str() + "=" + Table::num(w);
            lv += comp.labels.str() + "=[";
            for (int i = 0; i < comp.lambdas.size(); ++i) {
                if (i) lv += ' ';
                lv += Table::num(comp.lambdas(i));
            }
            lv += "]";
        }
        bool sym = M_B > 0 && std::abs(p.F_A_target - fsym_all) <= halfstep + 1e-12;
        table.add_row({std::to_string(N), std::to_string(M_A), std::to_string(M_B),
                       std::to_string(d), std::to_string(g.seed), Table::num(p.F_A_target),
                       Table::num(p.F_A), Table::cell(p.F_B), p.converged ? "1" : "0",
                       sym ? "1" : "0",
                       std::isnan(p.kkt_residual) ? std::string() : Table::num(p.kkt_residual),
                       rw, lv});
    }
    table.write(g.out);
    return 0;
}

int cmd_closed_form(const GlobalOpts& g, const std::string& family, int n, int d,
                    int grid_count) {
    using namespace qclone::closed_form;
    auto grid = [&](double lo, double hi) {
        std::vector<double> out;
        for (int i = 0; i < grid_count; ++i)
            out.push_back(lo + (hi - lo) * (grid_count == 1 ? 0.0 : double(i) / (grid_count - 1)));
        return out;
    };
    char sep = separator(g);
    if (family == "n-to-n+1") {
        Table table({"y", "F_first_n", "F_last"}, sep);
        for (double y : grid(0.0, 1.0)) {
            auto f = fid_n_to_n_plus_1(n, CurveParam::from_y(y));
            table.add_row({Table::num(y), Table::num(f.F_A), Table::num(f.F_B)});
        }
        table.write(g.out);
    } else if (family == "1-to-1+n") {
        Table table({"y", "F_A", "F_B"}, sep);
        for (double y : grid(0.0, 1.0)) {
            auto f = fid_1_to_1_plus_n(n, CurveParam::from_y(y));
            table.add_row({Table::num(y), Table::num(f.F_A), Table::num(f.F_B)});
        }
        table.write(g.out);
    } else if (family == "measurement-limit") {
        Table table({"y", "F_A", "F_meas"}, sep);
        for (double y : grid(0.0, 1.0 / std::sqrt(2.0))) {
            auto f = fid_measurement_limit(y);
            table.add_row({Table::num(y), Table::num(f.F_A), Table::num(f.F_B)});
        }
        table.write(g.out);
    } else if (family == "qubit-1to11") {
        Table table({"lambda1", "F_A", "F_B"}, sep);
        for (double l : grid(0.0, 1.0)) {
            auto f = fid_1to11_qubit(l);
            table.add_row({Table::num(l), Table::num(f.F_A), Table::num(f.F_B)});
        }
        table.write(g.out);
    } else if (family == "qudit-1to11") {
        Table table({"phi", "alpha", "beta", "F_A", "F_B"}, sep);
        for (double phi : grid(0.0, M_PI / 2.0)) {
            double alpha = std::cos(phi) * std::sqrt(2.0 / (d + 1));
            double beta = std::sin(phi) * std::sqrt(2.0 / (d - 1));
            auto f = fid_qudit_1to11(d, alpha, beta);
            table.add_row({Table::num(phi), Table::num(alpha), Table::num(beta), Table::num(f.F_A),
                           Table::num(f.F_B)});
        }
        table.write(g.out);
    } else if (family == "1to111-reduction") {
        // Dominant-block family with the third coefficient dropped: clones B
        // and C coincide and trace the 1 -> 1+2 trade-off.
        Table table({"y", "F_A", "F_B", "F_C"}, sep);
        for (double y : grid(0.0, 1.0)) {
            auto p = CurveParam::from_y(y);
            auto w = fid_1to111_qubit(0.0, 1.0, Eigen::Vector2d(1.0, 0.0),
                                      Eigen::Vector3d(p.x, p.y, 0.0));
            table.add_row({Table::num(y), Table::num(0.5 * (1 + w.a)), Table::num(0.5 * (1 + w.b)),
                           Table::num(0.5 * (1 + w.c))});
        }
        table.write(g.out);
    } else {
        std::cerr << "unknown family: " << family << "\n";
        return 2;
    }
    return 0;
}

int cmd_optical(const GlobalOpts& g, int N, int M_A, int M_B, const std::string& t_grid, double t,
                bool three_way, double t1, double t2) {
    char sep = separator(g);
    if (three_way) {
        Table table({"T1", "T2", "F_A", "F_B", "F_C", "success_prob"}, sep);
        auto res = qclone::optical::three_way_scheme(t1, t2);
        table.add_row({Table::num(t1), Table::num(t2), Table::num(res.F_A), Table::num(res.F_B),
                       Table::num(res.F_C), Table::num(res.success_probability)});
        table.write(g.out);
        return 0;
    }
    std::vector<double> ts = t_grid.empty() ? std::vector<double>{t}
                                            : qclone::cli::parse_span(t_grid);
    Table table({"T", "F_A_sim", "F_B_sim", "F_A_formula", "F_B_formula", "success_prob",
                 "max_abs_diff"},
                sep);
    for (double tv : ts) {
        auto sim = qclone::optical::two_way_scheme(N, M_A, M_B, tv);
        std::optional<double> fa, fb, diff;
        try {
            auto [a, b] = qclone::optical::optical_formula(N, M_A, M_B, tv);
            fa = a;
            fb = b;
            diff = std::max(std::abs(sim.F_A - a), std::abs(sim.F_B - b));
        } catch (const std::domain_error&) {
            // no closed form for this problem; simulator-only columns
        }
        table.add_row({Table::num(tv), Table::num(sim.F_A), Table::num(sim.F_B), Table::cell(fa),
                       Table::cell(fb), Table::num(sim.success_probability), Table::cell(diff)});
    }
    table.write(g.out);
    return 0;
}

int cmd_cg_table(const GlobalOpts& g, double j1v, double j2v) {
    using qclone::su2::Mag;
    using qclone::su2::Spin;
    auto to_spin = [](double v) {
        int twice = static_cast<int>(std::lround(2.0 * v));
        if (twice < 0 || std::abs(2.0 * v - twice) > 1e-9)
            throw std::domain_error("spins must be non-negative half-integers");
        if (twice > 20) throw std::domain_error("spins up to 10 are supported");
        return Spin{twice};
    };
    Spin j1 = to_spin(j1v), j2 = to_spin(j2v);
    Table table({"j1", "m1", "j2", "m2", "J", "M", "coefficient"}, separator(g));
    double row_norm_err = 0.0;
    for (Spin J : qclone::su2::clebsch_gordan_series(j1, j2)) {
        for (Mag M : qclone::su2::mags_descending(J)) {
            double norm = 0.0;
            for (Mag m1 : qclone::su2::mags_descending(j1)) {
                int tm2 = M.twice - m1.twice;
                if (std::abs(tm2) > j2.twice) continue;
                Mag m2{tm2};
                double c = qclone::su2::cg(j1, m1, j2, m2, J, M);
                norm += c * c;
                table.add_row({Table::num(j1.value()), Table::num(m1.value()),
                               Table::num(j2.value()), Table::num(m2.value()),
                               Table::num(J.value()), Table::num(M.value()), Table::num(c)});
            }
            row_norm_err = std::max(row_norm_err, std::abs(norm - 1.0));
        }
    }
    if (row_norm_err > 1e-12)
        throw std::runtime_error("cg-table: emitted table fails the unitarity check");
    table.write(g.out);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"optimal asymmetric quantum cloning: trade-off curves, closed forms, optical "
                 "simulation, verification"};
    app.require_subcommand(1);
    GlobalOpts g;
    app.add_option("--out", g.out, "output path (default: stdout)")->capture_default_str();
    app.add_option("--seed", g.seed, "random seed")->capture_default_str();
    app.add_option("--format", g.format, "csv or tsv")
        ->check(CLI::IsMember({"csv", "tsv"}))
        ->capture_default_str();

    int N = 1, M_A = 1, M_B = 1, d = 2, grid_count = 101, cf_n = 1, cf_d = 2;
    std::string family, t_grid, suite = "all";
    double t = 1.0, t1 = 1.0, t2 = 1.0, j1 = 0.5, j2 = 0.5;
    bool three_way = false;

    app.fallthrough();
    auto* tradeoff = app.add_subcommand("tradeoff", "maximal F_B against pinned F_A on a grid");
    tradeoff->add_option("-N,--inputs", N, "input copies")->required();
    tradeoff->add_option("-a,--clones-a", M_A, "clones in set A")->required();
    tradeoff->add_option("-b,--clones-b", M_B, "clones in set B")->required();
    tradeoff->add_option("-d,--dimension", d, "qudit dimension")->capture_default_str();
    tradeoff->add_option("--grid", grid_count, "number of F_A grid points")->capture_default_str();

    auto* closed = app.add_subcommand("closed-form", "evaluate a closed-form fidelity family");
    closed->add_option("family", family,
                       "n-to-n+1 | 1-to-1+n | measurement-limit | qubit-1to11 | qudit-1to11 | "
                       "1to111-reduction")
        ->required();
    closed->add_option("--n", cf_n, "family size parameter")->capture_default_str();
    closed->add_option("--d", cf_d, "qudit dimension")->capture_default_str();
    closed->add_option("--grid", grid_count, "number of parameter grid points")
        ->capture_default_str();

    auto* optical = app.add_subcommand("optical", "simulate the stimulated-emission pipeline");
    optical->add_option("-N,--inputs", N, "input copies");
    optical->add_option("-a,--clones-a", M_A, "clones in set A");
    optical->add_option("-b,--clones-b", M_B, "clones in set B");
    optical->add_option("--t-grid", t_grid, "transmittivity span start:end:count");
    optical->add_option("--t", t, "single transmittivity")->capture_default_str();
    optical->add_flag("--three-way", three_way, "run the three-clone scheme");
    optical->add_option("--t1", t1, "first transmittivity (three-way)")->capture_default_str();
    optical->add_option("--t2", t2, "second transmittivity (three-way)")->capture_default_str();

    long long max_dim = 512;
    auto* verify = app.add_subcommand("verify", "run verification suites");
    verify->add_option("suite", suite, "paper-values | oracle | cg | structural | all")
        ->capture_default_str();
    verify->add_option("--max-dim", max_dim, "oracle problem-size budget (d^M x ancilla)")
        ->capture_default_str();

    auto* cg = app.add_subcommand("cg-table", "full Clebsch-Gordan coupling table");
    for (auto* sub : app.get_subcommands({})) sub->fallthrough();
    cg->add_option("--j1", j1, "first spin")->required();
    cg->add_option("--j2", j2, "second spin")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return e.get_exit_code() == 0 ? 0 : 2;
    }

    try {
        if (tradeoff->parsed()) return cmd_tradeoff(g, N, M_A, M_B, d, grid_count);
        if (closed->parsed()) return cmd_closed_form(g, family, cf_n, cf_d, grid_count);
        if (optical->parsed()) return cmd_optical(g, N, M_A, M_B, t_grid, t, three_way, t1, t2);
        if (cg->parsed()) return cmd_cg_table(g, j1, j2);
        if (verify->parsed()) {
            qclone::verify::set_oracle_max_dim(max_dim);
            auto checks = qclone::verify::suite_checks(suite);
            if (checks.empty()) {
                std::cerr << "unknown suite: " << suite << "\n";
                return 2;
            }
            return qclone::verify::run_and_report(checks) ? 0 : 1;
        }
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
