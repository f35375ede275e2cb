#pragma once

// Configuration parsing, parameter sweeps and deterministic emission. The
// config format is line-based `key = value` text with `#` comments; every
// violated constraint is reported with its key and line. Output is CSV (with
// `#` header comments echoing the effective configuration) or JSON lines,
// byte-identical across runs for identical configs.

#include <charconv>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "nuent/mixing.hpp"
#include "nuent/qft.hpp"
#include "nuent/qm.hpp"
#include "nuent/report.hpp"
#include "nuent/verify.hpp"

namespace nuent {

enum class RunMode { qm, qft, compare, verify };
enum class OutputFormat { csv, json_lines };

inline const char* to_string(RunMode mode) {
    switch (mode) {
        case RunMode::qm: return "qm";
        case RunMode::qft: return "qft";
        case RunMode::compare: return "compare";
        case RunMode::verify: return "verify";
    }
    return "?";
}

inline const char* to_string(OutputFormat format) {
    return format == OutputFormat::csv ? "csv" : "jsonl";
}

// One scenario. The sweep bounds are the dimensionless oscillation phase
// (omega2-omega1) t / 2 for mode qm, and raw time for qft/compare (the two
// field-theory frequencies make a single phase ill-defined there).
struct ScenarioConfig {
    RunMode mode = RunMode::qm;
    std::optional<double> theta_rad;
    std::optional<double> sin2_theta;  // sin^2(theta)
    double omega1 = 1.0;
    double omega2 = 2.0;
    double m1 = 1.0;
    double m2 = 2.0;
    double k = 1.0;
    double phase_min = 0.0;
    double phase_max = 6.283185307179586;
    int points = 200;
    std::string output;  // empty -> standard output
    OutputFormat format = OutputFormat::csv;
    std::uint64_t seed = 20250810;
    int oracle_points = 120;

    MixingAngle angle() const {
        if (theta_rad) return MixingAngle(*theta_rad);
        if (sin2_theta) return MixingAngle::from_sin2(*sin2_theta);
        return MixingAngle::from_sin2(0.314);
    }

    // Echo in the same key = value format parse_config() reads.
    std::string to_text() const {
        std::string out;
        out += "mode = " + std::string(to_string(mode)) + "\n";
        if (theta_rad) {
            out += "theta_rad = " + format_double(*theta_rad) + "\n";
        } else {
            out += "sin2_theta = " + format_double(sin2_theta.value_or(0.314)) + "\n";
        }
        out += "omega1 = " + format_double(omega1) + "\n";
        out += "omega2 = " + format_double(omega2) + "\n";
        out += "m1 = " + format_double(m1) + "\n";
        out += "m2 = " + format_double(m2) + "\n";
        out += "k = " + format_double(k) + "\n";
        out += "phase_min = " + format_double(phase_min) + "\n";
        out += "phase_max = " + format_double(phase_max) + "\n";
        out += "points = " + std::to_string(points) + "\n";
        out += "format = " + std::string(to_string(format)) + "\n";
        if (!output.empty()) out += "output = " + output + "\n";
        out += "seed = " + std::to_string(seed) + "\n";
        out += "oracle_points = " + std::to_string(oracle_points) + "\n";
        return out;
    }
};

// Collects every violated constraint; what() carries the full list.
class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(std::vector<std::string> issues)
        : std::runtime_error(join(issues)), issues_(std::move(issues)) {}

    const std::vector<std::string>& issues() const { return issues_; }

private:
    static std::string join(const std::vector<std::string>& issues) {
        std::string all = "invalid configuration:";
        for (const auto& issue : issues) {
            all += "\n  " + issue;
        }
        return all;
    }
    std::vector<std::string> issues_;
};

namespace scenario_detail {

inline std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) {
        s.remove_prefix(1);
    }
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
        s.remove_suffix(1);
    }
    return s;
}

struct RawEntry {
    std::string value;
    int line;
};

inline bool parse_double(std::string_view text, double& out) {
    const char* begin = text.data();
    const char* end = begin + text.size();
    const auto res = std::from_chars(begin, end, out);
    return res.ec == std::errc() && res.ptr == end;
}

inline bool parse_int(std::string_view text, long long& out) {
    const char* begin = text.data();
    const char* end = begin + text.size();
    const auto res = std::from_chars(begin, end, out);
    return res.ec == std::errc() && res.ptr == end;
}

}  // namespace scenario_detail

inline ScenarioConfig parse_config(std::string_view text) {
    using scenario_detail::RawEntry;
    using scenario_detail::trim;

    std::vector<std::string> issues;
    std::map<std::string, RawEntry, std::less<>> entries;

    int line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t eol = text.find('\n', pos);
        std::string_view line =
            text.substr(pos, eol == std::string_view::npos ? text.size() - pos : eol - pos);
        pos = (eol == std::string_view::npos) ? text.size() + 1 : eol + 1;
        ++line_no;

        const std::size_t hash = line.find('#');
        if (hash != std::string_view::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;

        const std::size_t eq = line.find('=');
        if (eq == std::string_view::npos) {
            issues.push_back("line " + std::to_string(line_no) + ": expected key = value");
            continue;
        }
        const std::string key(trim(line.substr(0, eq)));
        const std::string value(trim(line.substr(eq + 1)));
        if (key.empty() || value.empty()) {
            issues.push_back("line " + std::to_string(line_no) + ": empty key or value");
            continue;
        }
        if (entries.count(key)) {
            issues.push_back("line " + std::to_string(line_no) + ": duplicate key '" + key +
                             "' (first on line " + std::to_string(entries[key].line) + ")");
            continue;
        }
        entries[key] = {value, line_no};
    }

    ScenarioConfig cfg;
    bool have_mode = false;

    const auto take = [&entries](std::string_view key) -> std::optional<RawEntry> {
        const auto it = entries.find(key);
        if (it == entries.end()) return std::nullopt;
        RawEntry entry = it->second;
        entries.erase(it);
        return entry;
    };

    const auto bad = [&issues](const RawEntry& e, const std::string& key,
                               const std::string& why) {
        issues.push_back("line " + std::to_string(e.line) + ": " + key + " " + why);
    };

    const auto take_double = [&](const std::string& key, auto&& accept) {
        if (const auto e = take(key)) {
            double v = 0.0;
            if (!scenario_detail::parse_double(e->value, v)) {
                bad(*e, key, "is not a number ('" + e->value + "')");
            } else {
                accept(v, *e);
            }
        }
    };

    if (const auto e = take("mode")) {
        have_mode = true;
        if (e->value == "qm") cfg.mode = RunMode::qm;
        else if (e->value == "qft") cfg.mode = RunMode::qft;
        else if (e->value == "compare") cfg.mode = RunMode::compare;
        else if (e->value == "verify") cfg.mode = RunMode::verify;
        else bad(*e, "mode", "must be one of qm|qft|compare|verify, got '" + e->value + "'");
    } else {
        issues.push_back("missing required key 'mode'");
    }

    std::optional<RawEntry> theta_entry = take("theta_rad");
    std::optional<RawEntry> sin2_entry = take("sin2_theta");
    if (theta_entry && sin2_entry) {
        issues.push_back("theta_rad (line " + std::to_string(theta_entry->line) +
                         ") and sin2_theta (line " + std::to_string(sin2_entry->line) +
                         ") are mutually exclusive");
    } else if (theta_entry) {
        double v = 0.0;
        if (!scenario_detail::parse_double(theta_entry->value, v)) {
            bad(*theta_entry, "theta_rad", "is not a number");
        } else if (v < 0.0 || v > MixingAngle::half_pi()) {
            bad(*theta_entry, "theta_rad", "out of range [0, pi/2]");
        } else {
            cfg.theta_rad = v;
        }
    } else if (sin2_entry) {
        double v = 0.0;
        if (!scenario_detail::parse_double(sin2_entry->value, v)) {
            bad(*sin2_entry, "sin2_theta", "is not a number");
        } else if (v < 0.0 || v > 1.0) {
            bad(*sin2_entry, "sin2_theta", "out of range [0, 1]");
        } else {
            cfg.sin2_theta = v;
        }
    }

    take_double("omega1", [&](double v, const RawEntry& e) {
        if (!std::isfinite(v)) bad(e, "omega1", "must be finite");
        else cfg.omega1 = v;
    });
    take_double("omega2", [&](double v, const RawEntry& e) {
        if (!std::isfinite(v)) bad(e, "omega2", "must be finite");
        else cfg.omega2 = v;
    });
    take_double("m1", [&](double v, const RawEntry& e) {
        if (!(v > 0.0) || !std::isfinite(v)) bad(e, "m1", "must be a positive mass");
        else cfg.m1 = v;
    });
    take_double("m2", [&](double v, const RawEntry& e) {
        if (!(v > 0.0) || !std::isfinite(v)) bad(e, "m2", "must be a positive mass");
        else cfg.m2 = v;
    });
    take_double("k", [&](double v, const RawEntry& e) {
        if (v < 0.0 || !std::isfinite(v)) bad(e, "k", "must be >= 0");
        else cfg.k = v;
    });
    take_double("phase_min", [&](double v, const RawEntry& e) {
        if (!std::isfinite(v)) bad(e, "phase_min", "must be finite");
        else cfg.phase_min = v;
    });
    take_double("phase_max", [&](double v, const RawEntry& e) {
        if (!std::isfinite(v)) bad(e, "phase_max", "must be finite");
        else cfg.phase_max = v;
    });

    if (const auto e = take("points")) {
        long long v = 0;
        if (!scenario_detail::parse_int(e->value, v)) bad(*e, "points", "is not an integer");
        else if (v < 2 || v > 10'000'000) bad(*e, "points", "must lie in [2, 1e7]");
        else cfg.points = static_cast<int>(v);
    }
    if (const auto e = take("seed")) {
        long long v = 0;
        if (!scenario_detail::parse_int(e->value, v) || v < 0) {
            bad(*e, "seed", "must be a non-negative integer");
        } else {
            cfg.seed = static_cast<std::uint64_t>(v);
        }
    }
    if (const auto e = take("oracle_points")) {
        long long v = 0;
        if (!scenario_detail::parse_int(e->value, v) || v < 1 || v > 100000) {
            bad(*e, "oracle_points", "must lie in [1, 1e5]");
        } else {
            cfg.oracle_points = static_cast<int>(v);
        }
    }
    if (const auto e = take("format")) {
        if (e->value == "csv") cfg.format = OutputFormat::csv;
        else if (e->value == "jsonl") cfg.format = OutputFormat::json_lines;
        else bad(*e, "format", "must be csv or jsonl, got '" + e->value + "'");
    }
    if (const auto e = take("output")) {
        cfg.output = e->value;
    }

    for (const auto& [key, entry] : entries) {
        issues.push_back("line " + std::to_string(entry.line) + ": unknown key '" + key + "'");
    }

    if (have_mode && cfg.phase_min >= cfg.phase_max) {
        issues.push_back("phase_min must be strictly below phase_max");
    }

    if (!issues.empty()) throw ConfigError(std::move(issues));
    return cfg;
}

// Sweep output: named columns plus metadata echoed into CSV comments. For
// mode verify the rows are replaced by the verification report.
struct SweepResult {
    std::vector<std::string> columns;
    std::vector<std::vector<double>> rows;
    std::vector<std::string> comments;
    std::optional<VerificationReport> report;
};

inline SweepResult run_sweep(const ScenarioConfig& cfg) {
    SweepResult result;
    {
        // Echo the physics configuration; the destination path stays out so
        // the same sweep is byte-comparable wherever it is written.
        std::string text = cfg.to_text();
        std::size_t start = 0;
        while (start < text.size()) {
            const std::size_t eol = text.find('\n', start);
            std::string line = text.substr(start, eol - start);
            start = eol + 1;
            if (line.rfind("output = ", 0) == 0) continue;
            result.comments.push_back(std::move(line));
        }
    }

    if (cfg.mode == RunMode::verify) {
        VerifyOptions opts;
        opts.seed = cfg.seed;
        opts.qm_points = cfg.oracle_points;
        opts.qft_points = cfg.oracle_points;
        result.report = run_verification(opts);
        return result;
    }

    const MixingAngle angle = cfg.angle();
    const int n = cfg.points;
    const double step = (cfg.phase_max - cfg.phase_min) / static_cast<double>(n - 1);
    result.rows.reserve(static_cast<std::size_t>(n));

    if (cfg.mode == RunMode::qm) {
        result.comments.push_back(
            "abscissa: phase = (omega2 - omega1) t / 2, the scaled-time axis of the "
            "oscillation plots");
        result.columns = {"phase", "p_ee", "p_emu", "s_linear", "var_n"};
        for (int i = 0; i < n; ++i) {
            const double phase = cfg.phase_min + step * static_cast<double>(i);
            const auto p = transition_probabilities_from_phase(angle, phase);
            const double var_n = p.p_ee * p.p_emu;
            result.rows.push_back({phase, p.p_ee, p.p_emu, 4.0 * var_n, var_n});
        }
        return result;
    }

    const KinematicSector sector(cfg.m1, cfg.m2, cfg.k);
    result.comments.push_back(
        "abscissa: raw time t (two frequencies oscillate: omega_k2 -+ omega_k1)");
    result.comments.push_back("omega_k1 = " + format_double(sector.omega1()));
    result.comments.push_back("omega_k2 = " + format_double(sector.omega2()));
    result.comments.push_back("u_k_sq = " + format_double(sector.u_k() * sector.u_k()));
    result.comments.push_back("v_k_sq = " + format_double(sector.v_k() * sector.v_k()));
    result.comments.push_back("condensation = " +
                              format_double(condensation_density(angle, sector)));

    if (cfg.mode == RunMode::qft) {
        result.columns = {"t", "q_ee", "q_emu", "var_q"};
        for (int i = 0; i < n; ++i) {
            const double t = cfg.phase_min + step * static_cast<double>(i);
            const auto q = qft_oscillation(angle, sector, t);
            result.rows.push_back({t, q.q_ee, q.q_emu, q.q_ee * q.q_emu});
        }
        return result;
    }

    // compare: plane-wave columns at the sector energies next to the exact
    // field-theory columns, over the same time grid.
    result.columns = {"t", "p_ee", "p_emu", "var_n", "q_ee", "q_emu", "var_q"};
    const QmSpectrum spec = sector.qm_spectrum();
    for (int i = 0; i < n; ++i) {
        const double t = cfg.phase_min + step * static_cast<double>(i);
        const auto p = transition_probabilities(angle, spec, t);
        const auto q = qft_oscillation(angle, sector, t);
        result.rows.push_back(
            {t, p.p_ee, p.p_emu, p.p_ee * p.p_emu, q.q_ee, q.q_emu, q.q_ee * q.q_emu});
    }
    return result;
}

// Render rows (or the verification report) to bytes. LF line endings, 17
// significant digits, no locale formatting.
inline std::string emit(const SweepResult& result, OutputFormat format) {
    if (result.report) {
        return format == OutputFormat::csv ? result.report->to_csv()
                                           : result.report->to_json_lines();
    }
    if (result.rows.empty()) {
        throw std::runtime_error("emit: refusing to write an empty sweep");
    }
    std::string out;
    if (format == OutputFormat::csv) {
        for (const auto& comment : result.comments) {
            out += "# " + comment + "\n";
        }
        for (std::size_t c = 0; c < result.columns.size(); ++c) {
            if (c) out += ',';
            out += result.columns[c];
        }
        out += '\n';
        for (const auto& row : result.rows) {
            for (std::size_t c = 0; c < row.size(); ++c) {
                if (c) out += ',';
                out += format_double(row[c]);
            }
            out += '\n';
        }
        return out;
    }
    for (const auto& row : result.rows) {
        out += '{';
        for (std::size_t c = 0; c < row.size(); ++c) {
            if (c) out += ',';
            out += '"' + result.columns[c] + "\":" + format_double(row[c]);
        }
        out += "}\n";
    }
    return out;
}

}  // namespace nuent
