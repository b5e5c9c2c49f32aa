#include <cstdio>
#include <fstream>
#include <ostream>
#include <string>

#include "dodson/csv.hpp"
#include "dodson/errors.hpp"
#include "dodson/version.hpp"

namespace dodson {

std::string format_number(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

CsvTable CsvTable::from_profile(const Profile& p, const std::string& value_column) {
    CsvTable t;
    t.meta = {{"generator", std::string(to_string(p.meta.generator))},
              {"nu", format_number(p.meta.nu.value())},
              {"beta", format_number(p.meta.clock.beta())},
              {"d0", format_number(p.meta.clock.d0())},
              {"t", format_number(p.meta.t)},
              {"version", kVersion}};
    t.columns = {"x", value_column};
    t.rows.reserve(p.xs.size());
    for (std::size_t i = 0; i < p.xs.size(); ++i) t.rows.push_back({p.xs[i], p.values[i]});
    return t;
}

void CsvTable::write(std::ostream& os) const {
    for (const auto& [key, value] : meta) os << "# " << key << ": " << value << '\n';
    for (std::size_t i = 0; i < columns.size(); ++i) os << (i ? "," : "") << columns[i];
    os << '\n';
    for (const auto& row : rows) {
        if (row.size() != columns.size())
            throw InvalidArgument("csv row has " + std::to_string(row.size()) + " fields, header has " +
                                  std::to_string(columns.size()));
        for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << format_number(row[i]);
        os << '\n';
    }
}

void CsvTable::write_file(const std::string& path) const {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot open " + path + " for writing");
    write(out);
    out.flush();
    if (!out) throw IoError("failed writing " + path);
}

}  // namespace dodson
