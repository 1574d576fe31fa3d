// Command-line front end: probability tables, Monte Carlo verification,
// epsilon sweeps, Bell/CHSH runs, and lattice axiom audits. All numeric
// output uses 17 significant digits so doubles round-trip exactly; identical
// (command, flags, seed) produce byte-identical files.

#include "qmachine/compound.hpp"
#include "qmachine/hilbert.hpp"
#include "qmachine/machine.hpp"
#include "qmachine/spa/axioms.hpp"
#include "qmachine/spa/coproduct.hpp"
#include "qmachine/spa/interchange.hpp"
#include "qmachine/spa/lattice.hpp"
#include "qmachine/version.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace qmachine;

constexpr int kExitInvariantViolation = 1;
constexpr int kExitInputError = 2;

std::string fmt(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

void write_file(const std::string& path, const std::string& contents) {
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw std::invalid_argument("cannot open output file '" + path + "'");
    out << contents;
}

std::string csv_metadata(std::uint64_t seed) {
    return "# seed=" + std::to_string(seed) + " version=" + kVersion + "\n";
}

// Four-sigma binomial band around the analytic value; deterministic regimes
// (analytic 0 or 1) must match exactly.
double binomial_tolerance(double analytic, std::int64_t n) {
    return 4.0 * std::sqrt(analytic * (1.0 - analytic) / static_cast<double>(n));
}

int run_probe(int grid, const std::string& out_path, std::uint64_t seed, double tol) {
    std::ostringstream csv;
    csv << "gamma,mu1_machine,mu1_born,mu1_trace,max_abs_diff\n";
    const Direction axis = direction_from_angles(0.0, 0.0);
    const Operator2 projector = projector_for_direction(axis);
    double worst = 0.0;
    for (int i = 0; i < grid; ++i) {
        const double gamma = std::numbers::pi * i / (grid - 1);
        const Direction state_dir = direction_from_angles(gamma, 0.0);
        const double machine = transition_probability(axis, BallPoint(state_dir)).o1;
        const double born = born_probability(spin_state_for(state_dir), projector);
        const double trace =
            trace_probability(density_from_ball_point(BallPoint(state_dir)), projector);
        const double diff = std::max({std::abs(machine - born), std::abs(machine - trace),
                                      std::abs(born - trace)});
        worst = std::max(worst, diff);
        csv << fmt(gamma) << "," << fmt(machine) << "," << fmt(born) << "," << fmt(trace) << ","
            << fmt(diff) << "\n";
    }
    csv << csv_metadata(seed);
    write_file(out_path, csv.str());
    if (worst > tol) {
        std::cerr << "probe: machine/Born/trace disagree by " << fmt(worst) << " (tolerance "
                  << fmt(tol) << ")\n";
        return kExitInvariantViolation;
    }
    std::cout << "probe: " << grid << " rows, max deviation " << fmt(worst) << "\n";
    return 0;
}

int run_simulate(int grid, std::int64_t trials, std::uint64_t seed, const std::string& out_path,
                 std::optional<double> tol_override) {
    std::ostringstream csv;
    csv << "gamma,epsilon,x,n_trials,count_o1,count_o2,freq_o1,analytic_o1,abs_error\n";
    const Direction axis = direction_from_angles(0.0, 0.0);
    bool violated = false;
    double worst = 0.0;
    for (int i = 0; i < grid; ++i) {
        const double gamma = std::numbers::pi * i / (grid - 1);
        const BallPoint state(direction_from_angles(gamma, 0.0));
        const MachineExperiment experiment(axis);
        const TrialReport report =
            run_trials(experiment, state, trials, stream_seed(seed, static_cast<std::uint64_t>(i)));
        const double err = std::abs(report.freq_o1 - report.analytic_o1);
        const double tol =
            tol_override ? *tol_override : binomial_tolerance(report.analytic_o1, trials);
        violated = violated || err > tol;
        worst = std::max(worst, err);
        csv << fmt(gamma) << "," << fmt(experiment.epsilon) << ","
            << fmt(axis.vec().dot(state.vec())) << "," << report.n_trials << ","
            << report.count_o1 << "," << report.count_o2 << "," << fmt(report.freq_o1) << ","
            << fmt(report.analytic_o1) << "," << fmt(err) << "\n";
    }
    csv << csv_metadata(seed);
    write_file(out_path, csv.str());
    if (violated) {
        std::cerr << "simulate: empirical frequency off by " << fmt(worst) << "\n";
        return kExitInvariantViolation;
    }
    std::cout << "simulate: " << grid << " rows, worst deviation " << fmt(worst) << "\n";
    return 0;
}

int run_epsilon(const std::vector<double>& epsilons, int grid, std::int64_t trials,
                std::uint64_t seed, const std::string& out_path,
                std::optional<double> tol_override) {
    std::ostringstream csv;
    csv << "epsilon,x,analytic_o1,analytic_o2,empirical_o1,abs_error\n";
    const Direction axis = direction_from_angles(0.0, 0.0);
    bool violated = false;
    std::uint64_t row = 0;
    for (const double eps : epsilons) {
        if (!(eps > 0.0) || eps > 1.0) {
            std::cerr << "epsilon: values must lie in (0, 1]\n";
            return kExitInputError;
        }
        for (int i = 0; i < grid; ++i) {
            const double x = -1.0 + 2.0 * i / (grid - 1);
            const BallPoint state(Vec3(0.0, 0.0, x));
            const MachineExperiment experiment(axis, eps);
            const OutcomeProbabilities analytic = epsilon_probability(experiment, state);
            const TrialReport report = run_trials(experiment, state, trials, stream_seed(seed, row));
            const double err = std::abs(report.freq_o1 - analytic.o1);
            const double tol =
                tol_override ? *tol_override : binomial_tolerance(analytic.o1, trials);
            violated = violated || err > tol;
            if (eps == 1.0 && std::abs(analytic.o1 - 0.5 * (1.0 + x)) > kTol)
                violated = true;
            csv << fmt(eps) << "," << fmt(x) << "," << fmt(analytic.o1) << "," << fmt(analytic.o2)
                << "," << fmt(report.freq_o1) << "," << fmt(err) << "\n";
            ++row;
        }
    }
    csv << csv_metadata(seed);
    write_file(out_path, csv.str());
    if (violated) {
        std::cerr << "epsilon: empirical or limiting-case check failed\n";
        return kExitInvariantViolation;
    }
    std::cout << "epsilon: " << row << " rows\n";
    return 0;
}

int run_bell(int grid, std::int64_t trials, std::uint64_t seed, bool with_chsh,
             const std::string& out_path, std::optional<double> tol_override) {
    std::ostringstream csv;
    csv << "theta_a,theta_b,E_rod,E_singlet,abs_diff\n";
    const double match_tol =
        tol_override ? *tol_override : 5.0 / std::sqrt(static_cast<double>(trials));
    bool violated = false;
    double worst = 0.0;
    std::uint64_t row = 0;
    for (int i = 0; i < grid; ++i) {
        for (int j = 0; j < grid; ++j) {
            const double ta = std::numbers::pi * i / grid;
            const double tb = std::numbers::pi * j / grid;
            const Direction a = direction_from_angles(ta, 0.0);
            const Direction b = direction_from_angles(tb, 0.0);
            const double rod = estimate_correlation(a, b, trials, stream_seed(seed, row)).E;
            const double qm = singlet_correlation(a, b);
            const double diff = std::abs(rod - qm);
            violated = violated || diff > match_tol;
            worst = std::max(worst, diff);
            csv << fmt(ta) << "," << fmt(tb) << "," << fmt(rod) << "," << fmt(qm) << ","
                << fmt(diff) << "\n";
            ++row;
        }
    }
    if (with_chsh) {
        const Direction a = direction_from_angles(0.0, 0.0);
        const Direction a2 = direction_from_angles(std::numbers::pi / 2, 0.0);
        const Direction b = direction_from_angles(std::numbers::pi / 4, 0.0);
        const Direction b2 = direction_from_angles(3 * std::numbers::pi / 4, 0.0);
        const double s = chsh_value(a, a2, b, b2, trials, seed);
        const double target = 2.0 * std::numbers::sqrt2;
        const double chsh_tol =
            tol_override ? *tol_override
                         : 0.01 * std::sqrt(1e6 / static_cast<double>(std::max<std::int64_t>(trials, 1)));
        csv << "# chsh settings=0," << fmt(std::numbers::pi / 2) << "," << fmt(std::numbers::pi / 4)
            << "," << fmt(3 * std::numbers::pi / 4) << " S=" << fmt(s) << "\n";
        std::cout << "S = " << fmt(s) << " (2*sqrt(2) = " << fmt(target) << ")\n";
        violated = violated || std::abs(s - target) > chsh_tol;
    }
    csv << csv_metadata(seed);
    write_file(out_path, csv.str());
    if (violated) {
        std::cerr << "bell: rod model and singlet disagree beyond tolerance (worst " << fmt(worst)
                  << ")\n";
        return kExitInvariantViolation;
    }
    std::cout << "bell: " << row << " grid cells, worst |E_rod - E_singlet| = " << fmt(worst)
              << "\n";
    return 0;
}

int run_lattice(const std::string& in_path, const std::string& out_path) {
    const auto [sps, ortho] = spa::load_sps_file(in_path);
    const spa::AxiomReport report = spa::axiom_report(sps, ortho);
    std::string text = spa::render_report(sps, report);
    text += "# version " + std::string(kVersion) + "\n";
    write_file(out_path, text);
    std::cout << text;
    if (report.any_capped_or_inconclusive()) {
        std::cerr << "lattice: some verdicts were capped or inconclusive\n";
        return kExitInvariantViolation;
    }
    return 0;
}

int run_coproduct(const std::vector<std::string>& in_paths, const std::string& out_path) {
    spa::StatePropertySpace sps1, sps2;
    if (in_paths.empty()) {
        sps1 = spa::mo_sps(2);
        sps2 = spa::mo_sps(2);
        std::cout << "coproduct: no inputs given, using two built-in MO2 spaces\n";
    } else if (in_paths.size() == 2) {
        sps1 = spa::load_sps_file(in_paths[0]).first;
        sps2 = spa::load_sps_file(in_paths[1]).first;
    } else {
        std::cerr << "coproduct: expects exactly zero or two --in documents\n";
        return kExitInputError;
    }

    const spa::Coproduct product = spa::coproduct(sps1, sps2);
    const spa::AxiomReport report = spa::axiom_report(product.sps);
    spa::save_sps_file(out_path, product.sps);
    std::string text = spa::render_report(product.sps, report);
    text += "# version " + std::string(kVersion) + "\n";
    write_file(out_path + ".report.txt", text);
    std::cout << text;
    if (report.any_capped_or_inconclusive()) {
        std::cerr << "coproduct: some verdicts were capped or inconclusive\n";
        return kExitInvariantViolation;
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"quantum machine: hidden-measurement spin model, its C^2 description, "
                 "and finite state-property-space audits"};
    app.require_subcommand(1);

    std::uint64_t seed = 0;
    std::int64_t trials = 1'000'000;
    int grid = 0;
    std::string out_path;
    std::string in_path;
    std::vector<std::string> in_paths;
    std::vector<double> epsilons = {0.01, 0.25, 0.5, 0.75, 1.0};
    bool with_chsh = false;
    std::optional<double> tol;

    auto* probe = app.add_subcommand("probe", "machine vs Born vs trace-rule probability table");
    probe->add_option("--grid", grid, "number of gamma grid rows")->default_val(181);
    probe->add_option("--out", out_path, "output CSV path")->default_val("probe.csv");
    probe->add_option("--seed", seed, "seed recorded in the metadata line");
    probe->add_option("--tol", tol, "override the agreement tolerance");

    auto* simulate = app.add_subcommand("simulate", "Monte Carlo trial reports over a gamma grid");
    simulate->add_option("--grid", grid, "number of gamma grid rows")->default_val(7);
    simulate->add_option("--trials", trials, "trials per row")->check(CLI::PositiveNumber);
    simulate->add_option("--seed", seed, "master seed");
    simulate->add_option("--out", out_path, "output CSV path")->default_val("simulate.csv");
    simulate->add_option("--tol", tol, "override the per-row tolerance");

    auto* epsilon = app.add_subcommand("epsilon", "epsilon-elastic family sweep");
    epsilon->add_option("--epsilon", epsilons, "epsilon values")->delimiter(',');
    epsilon->add_option("--grid", grid, "number of x grid points per epsilon")->default_val(21);
    epsilon->add_option("--trials", trials, "trials per row")->check(CLI::PositiveNumber);
    epsilon->add_option("--seed", seed, "master seed");
    epsilon->add_option("--out", out_path, "output CSV path")->default_val("epsilon.csv");
    epsilon->add_option("--tol", tol, "override the per-row tolerance");

    auto* bell = app.add_subcommand("bell", "rigid-rod correlations vs the singlet state");
    bell->add_option("--grid", grid, "direction grid size per side")->default_val(10);
    bell->add_option("--trials", trials, "pairs per correlation")->check(CLI::PositiveNumber);
    bell->add_option("--seed", seed, "master seed");
    bell->add_flag("--chsh", with_chsh, "also run the CHSH settings (0, pi/2, pi/4, 3pi/4)");
    bell->add_option("--out", out_path, "output CSV path")->default_val("bell.csv");
    bell->add_option("--tol", tol, "override the agreement tolerance");

    auto* lattice = app.add_subcommand("lattice", "axiom audit of a state property space document");
    lattice->add_option("--in", in_path, "input sps document")->required();
    lattice->add_option("--out", out_path, "output report path")->default_val("lattice_report.txt");

    auto* coprod = app.add_subcommand("coproduct", "build and audit the coproduct of two spaces");
    coprod->add_option("--in", in_paths, "two input sps documents (omit for built-in MO2 pair)");
    coprod->add_option("--out", out_path, "output sps document path")->default_val("coproduct.json");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitInputError;
    }

    try {
        if (probe->parsed()) {
            if (grid < 2) {
                std::cerr << "probe: --grid must be at least 2\n";
                return kExitInputError;
            }
            return run_probe(grid, out_path, seed, tol.value_or(kTol));
        }
        if (simulate->parsed()) {
            if (grid < 2) {
                std::cerr << "simulate: --grid must be at least 2\n";
                return kExitInputError;
            }
            return run_simulate(grid, trials, seed, out_path, tol);
        }
        if (epsilon->parsed()) {
            if (grid < 2) {
                std::cerr << "epsilon: --grid must be at least 2\n";
                return kExitInputError;
            }
            return run_epsilon(epsilons, grid, trials, seed, out_path, tol);
        }
        if (bell->parsed()) {
            if (grid < 1) {
                std::cerr << "bell: --grid must be at least 1\n";
                return kExitInputError;
            }
            return run_bell(grid, trials, seed, with_chsh, out_path, tol);
        }
        if (lattice->parsed())
            return run_lattice(in_path, out_path);
        if (coprod->parsed())
            return run_coproduct(in_paths, out_path);
    } catch (const std::invalid_argument& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const std::domain_error& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvariantViolation;
    }
    return kExitInputError;
}
