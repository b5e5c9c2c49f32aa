#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "dodson/solutions.hpp"

namespace dodson {

/// '#' metadata lines, one header line, comma-separated rows (%.17g), LF endings.
struct CsvTable {
    std::vector<std::pair<std::string, std::string>> meta;
    std::vector<std::string> columns;
    std::vector<std::vector<double>> rows;

    /// Metadata for a profile: generator, nu, beta, d0, t and the library version.
    static CsvTable from_profile(const Profile& p, const std::string& value_column = "c");

    /// Throws InvalidArgument when a row width differs from the header.
    void write(std::ostream& os) const;
    /// Throws IoError when the file cannot be written.
    void write_file(const std::string& path) const;
};

std::string format_number(double v);

}  // namespace dodson
