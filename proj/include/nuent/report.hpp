#pragma once

// Machine-readable verification report: one named check per line with its
// worst residual, tolerance and PASS/FAIL status.

#include <algorithm>
#include <charconv>
#include <string>
#include <vector>

namespace nuent {

// Fixed 17-significant-digit decimal rendering, locale independent. Shared by
// every emitter so identical runs produce identical bytes.
inline std::string format_double(double value) {
    char buf[40];
    const auto res = std::to_chars(buf, buf + sizeof(buf), value,
                                   std::chars_format::general, 17);
    return std::string(buf, res.ptr);
}

enum class CheckCategory { qm_oracle, qft_oracle, algebra, generator, errata };

struct Check {
    std::string name;
    CheckCategory category;
    double residual;
    double tolerance;

    bool pass() const { return residual <= tolerance; }
};

class VerificationReport {
public:
    void add(std::string name, CheckCategory category, double residual, double tolerance) {
        checks_.push_back({std::move(name), category, residual, tolerance});
    }

    // Fold a new residual into an existing check (grid scans keep the max).
    void fold(const std::string& name, CheckCategory category, double residual,
              double tolerance) {
        for (auto& c : checks_) {
            if (c.name == name) {
                c.residual = std::max(c.residual, residual);
                return;
            }
        }
        add(name, category, residual, tolerance);
    }

    const std::vector<Check>& checks() const { return checks_; }

    bool all_pass() const {
        return std::all_of(checks_.begin(), checks_.end(),
                           [](const Check& c) { return c.pass(); });
    }

    bool category_pass(CheckCategory category) const {
        return std::all_of(checks_.begin(), checks_.end(), [category](const Check& c) {
            return c.category != category || c.pass();
        });
    }

    std::size_t failures() const {
        return static_cast<std::size_t>(
            std::count_if(checks_.begin(), checks_.end(),
                          [](const Check& c) { return !c.pass(); }));
    }

    std::string to_csv() const {
        std::string out = "check,residual,tolerance,status\n";
        for (const auto& c : checks_) {
            out += c.name;
            out += ',';
            out += format_double(c.residual);
            out += ',';
            out += format_double(c.tolerance);
            out += ',';
            out += c.pass() ? "PASS" : "FAIL";
            out += '\n';
        }
        return out;
    }

    std::string to_json_lines() const {
        std::string out;
        for (const auto& c : checks_) {
            out += "{\"check\":\"" + c.name + "\",\"residual\":" + format_double(c.residual) +
                   ",\"tolerance\":" + format_double(c.tolerance) + ",\"status\":\"" +
                   (c.pass() ? "PASS" : "FAIL") + "\"}\n";
        }
        return out;
    }

private:
    std::vector<Check> checks_;
};

}  // namespace nuent
