// Command-line front end: parameter sweeps for the plane-wave and
// field-theory observables, Bogoliubov coefficients, and the brute-force
// verification suite. Exit codes: 0 success, 1 domain/configuration error,
// 2 verification failure.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "nuent/qft.hpp"
#include "nuent/report.hpp"
#include "nuent/scenario.hpp"
#include "nuent/verify.hpp"

namespace {

struct SweepFlags {
    std::string config_path;
    std::optional<double> theta_rad;
    std::optional<double> sin2_theta;
    std::optional<double> omega1, omega2;
    std::optional<double> m1, m2, k;
    std::optional<double> phase_min, phase_max;
    std::optional<int> points;
    std::optional<std::string> output;
    std::optional<std::string> format;
    std::optional<std::uint64_t> seed;
    std::optional<int> oracle_points;
    bool echo_config = false;
};

void add_common_options(CLI::App* cmd, SweepFlags& flags) {
    cmd->add_option("--config", flags.config_path,
                    "Configuration file (key = value lines); flags override file values");
    cmd->add_option("--theta-rad", flags.theta_rad, "Mixing angle in radians, in [0, pi/2]");
    cmd->add_option("--sin2-theta", flags.sin2_theta,
                    "sin^2(theta); mutually exclusive with --theta-rad (default 0.314)");
    cmd->add_option("--output", flags.output, "Output path (default: standard output)");
    cmd->add_option("--format", flags.format, "Output format: csv or jsonl (default csv)");
    cmd->add_flag("--echo-config", flags.echo_config,
                  "Print the effective configuration and exit");
}

void add_sweep_options(CLI::App* cmd, SweepFlags& flags) {
    cmd->add_option("--phase-min", flags.phase_min,
                    "Sweep start: oscillation phase (omega2-omega1)t/2 for qm, raw time for "
                    "qft/compare (default 0)");
    cmd->add_option("--phase-max", flags.phase_max, "Sweep end (default 2*pi)");
    cmd->add_option("--points", flags.points, "Number of evenly spaced sweep points (>= 2)");
}

void add_qm_options(CLI::App* cmd, SweepFlags& flags) {
    cmd->add_option("--omega1", flags.omega1, "Energy of mass state 1 (natural units)");
    cmd->add_option("--omega2", flags.omega2, "Energy of mass state 2 (natural units)");
}

void add_sector_options(CLI::App* cmd, SweepFlags& flags) {
    cmd->add_option("--m1", flags.m1, "Mass of state 1 (> 0, natural units)");
    cmd->add_option("--m2", flags.m2, "Mass of state 2 (> 0)");
    cmd->add_option("--k", flags.k, "Momentum magnitude |k| (>= 0)");
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open config file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

nuent::ScenarioConfig make_config(const SweepFlags& flags, nuent::RunMode mode) {
    nuent::ScenarioConfig cfg;
    if (!flags.config_path.empty()) {
        cfg = nuent::parse_config(read_file(flags.config_path));
    }
    cfg.mode = mode;
    if (flags.theta_rad && flags.sin2_theta) {
        throw std::runtime_error("--theta-rad and --sin2-theta are mutually exclusive");
    }
    if (flags.theta_rad) {
        cfg.theta_rad = flags.theta_rad;
        cfg.sin2_theta.reset();
    } else if (flags.sin2_theta) {
        cfg.sin2_theta = flags.sin2_theta;
        cfg.theta_rad.reset();
    }
    if (flags.omega1) cfg.omega1 = *flags.omega1;
    if (flags.omega2) cfg.omega2 = *flags.omega2;
    if (flags.m1) cfg.m1 = *flags.m1;
    if (flags.m2) cfg.m2 = *flags.m2;
    if (flags.k) cfg.k = *flags.k;
    if (flags.phase_min) cfg.phase_min = *flags.phase_min;
    if (flags.phase_max) cfg.phase_max = *flags.phase_max;
    if (flags.points) cfg.points = *flags.points;
    if (flags.output) cfg.output = *flags.output;
    if (flags.format) {
        if (*flags.format == "csv") cfg.format = nuent::OutputFormat::csv;
        else if (*flags.format == "jsonl") cfg.format = nuent::OutputFormat::json_lines;
        else throw std::runtime_error("--format must be csv or jsonl");
    }
    if (flags.seed) cfg.seed = *flags.seed;
    if (flags.oracle_points) cfg.oracle_points = *flags.oracle_points;

    // Re-validate the merged configuration through the one authoritative path.
    return nuent::parse_config(cfg.to_text());
}

void write_output(const nuent::ScenarioConfig& cfg, const std::string& bytes) {
    if (cfg.output.empty()) {
        std::cout << bytes;
        return;
    }
    std::ofstream out(cfg.output, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output path: " + cfg.output);
    out << bytes;
    if (!out) throw std::runtime_error("write failed: " + cfg.output);
}

int run_sweep_command(const SweepFlags& flags, nuent::RunMode mode) {
    const nuent::ScenarioConfig cfg = make_config(flags, mode);
    if (flags.echo_config) {
        std::cout << cfg.to_text();
        return 0;
    }
    const nuent::SweepResult result = nuent::run_sweep(cfg);
    write_output(cfg, nuent::emit(result, cfg.format));
    if (result.report && !result.report->all_pass()) {
        std::cerr << "verification failed: " << result.report->failures()
                  << " check(s) above tolerance\n";
        return 2;
    }
    return 0;
}

int run_bogoliubov(double m1, double m2, double k) {
    const nuent::KinematicSector sector(m1, m2, k);
    const double u = sector.u_k();
    const double v = sector.v_k();
    std::cout << "m1 = " << nuent::format_double(sector.m1()) << "\n"
              << "m2 = " << nuent::format_double(sector.m2()) << "\n"
              << "k = " << nuent::format_double(sector.k()) << "\n"
              << "omega_k1 = " << nuent::format_double(sector.omega1()) << "\n"
              << "omega_k2 = " << nuent::format_double(sector.omega2()) << "\n"
              << "u_k = " << nuent::format_double(u) << "\n"
              << "v_k = " << nuent::format_double(v) << "\n"
              << "u2_plus_v2 = " << nuent::format_double(u * u + v * v) << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "Two-flavor oscillation observables and mode entanglement, in the plane-wave and "
        "field-theory treatments, with an exact Fock-space verification suite. Natural units "
        "(hbar = c = 1); time carries inverse-energy units."};
    app.require_subcommand(1);

    SweepFlags qm_flags, qft_flags, compare_flags, verify_flags;
    double bog_m1 = 1.0, bog_m2 = 2.0, bog_k = 1.0;

    CLI::App* qm = app.add_subcommand(
        "qm", "Sweep the plane-wave observables over the oscillation phase");
    add_common_options(qm, qm_flags);
    add_sweep_options(qm, qm_flags);
    add_qm_options(qm, qm_flags);

    CLI::App* qft = app.add_subcommand(
        "qft", "Sweep the field-theory flavor charges over time for one (m1, m2, k) sector");
    add_common_options(qft, qft_flags);
    add_sweep_options(qft, qft_flags);
    add_sector_options(qft, qft_flags);

    CLI::App* compare = app.add_subcommand(
        "compare", "Plane-wave and field-theory columns side by side on a shared time grid");
    add_common_options(compare, compare_flags);
    add_sweep_options(compare, compare_flags);
    add_sector_options(compare, compare_flags);

    CLI::App* verify = app.add_subcommand(
        "verify", "Run the exact Fock-space verification suite and report residuals");
    add_common_options(verify, verify_flags);
    verify->add_option("--seed", verify_flags.seed, "Random grid seed");
    verify->add_option("--oracle-points", verify_flags.oracle_points,
                       "Randomized points per grid (default 120)");

    CLI::App* bogoliubov = app.add_subcommand(
        "bogoliubov", "Print the Bogoliubov coefficients for one kinematic sector");
    bogoliubov->add_option("--m1", bog_m1, "Mass of state 1 (> 0)");
    bogoliubov->add_option("--m2", bog_m2, "Mass of state 2 (> 0)");
    bogoliubov->add_option("--k", bog_k, "Momentum magnitude |k| (>= 0)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (qm->parsed()) return run_sweep_command(qm_flags, nuent::RunMode::qm);
        if (qft->parsed()) return run_sweep_command(qft_flags, nuent::RunMode::qft);
        if (compare->parsed()) return run_sweep_command(compare_flags, nuent::RunMode::compare);
        if (verify->parsed()) return run_sweep_command(verify_flags, nuent::RunMode::verify);
        if (bogoliubov->parsed()) return run_bogoliubov(bog_m1, bog_m2, bog_k);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
