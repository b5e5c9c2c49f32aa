#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace dodson::verify {

struct Check {
    std::string name;
    double error;
    double tol;
    bool pass;
};

struct Report {
    std::string title;
    std::vector<Check> checks;
    /// Seconds spent producing the report.
    double seconds = 0.0;

    bool passed() const;
    /// Adds a check that passes when error <= tol (NaN fails).
    void add(std::string name, double error, double tol);
};

/// eigen, powerlaw, fundamental, nu1, nu23, spectral, heat, kdv, nonlinear,
/// absorption, normalization.
const std::vector<std::string_view>& suite_names();

/// Throws std::invalid_argument for an unknown suite.
Report run_suite(std::string_view name);

/// Acceptance criteria 1..10 except 9, which needs the CLI binary (see
/// figure_criterion). Throws std::invalid_argument for other numbers.
Report run_criterion(int number);

/// Criterion 9: runs `cli figure 1|2|3` into `workdir` and checks the peaks.
Report figure_criterion(const std::string& cli, const std::string& workdir);

void print(std::ostream& os, const Report& r);

}  // namespace dodson::verify
