#include "figures.hpp"

#include <functional>
#include <string>
#include <vector>

#include "dodson/errors.hpp"
#include "dodson/solutions.hpp"
#include "dodson/version.hpp"

namespace dodson::tools {
namespace {

struct Column {
    std::string name;
    std::function<double(double)> f;
};

CsvTable tabulate(int which, const std::vector<double>& xs, const std::vector<Column>& cols,
                  const std::string& generator, const std::string& nu, const std::string& t) {
    CsvTable table;
    table.meta = {{"figure", std::to_string(which)},
                  {"generator", generator},
                  {"nu", nu},
                  {"beta", "1"},
                  {"d0", "1"},
                  {"t", t},
                  {"version", kVersion}};
    table.columns.push_back("x");
    for (const auto& c : cols) table.columns.push_back(c.name);
    table.rows.reserve(xs.size());
    for (double x : xs) {
        std::vector<double> row{x};
        for (const auto& c : cols) row.push_back(c.f(x));
        table.rows.push_back(std::move(row));
    }
    return table;
}

}  // namespace

CsvTable figure_table(int which) {
    const DodsonClock clock(1.0, 1.0);
    switch (which) {
    case 1: {
        std::vector<Column> cols;
        for (const auto& [name, nu] : {std::pair{"nu_0.001", 0.001}, {"nu_0.7", 0.7}, {"nu_1", 1.0}}) {
            const OperatorOrder order(nu);
            cols.push_back({name, [=](double x) { return fundamental_solution(order, clock, x, 1.0); }});
        }
        return tabulate(1, linspace(-5.0, 5.0, 501), cols, "fundamental", "0.001,0.7,1", "1");
    }
    case 2:
    case 3: {
        std::vector<Column> cols;
        for (const auto& [name, t] : {std::pair{"t_0.5", 0.5}, {"t_1", 1.0}, {"t_10", 10.0}}) {
            if (which == 2)
                cols.push_back({name, [=](double x) { return gaussian_solution(clock, x, t); }});
            else
                cols.push_back({name, [=](double x) { return airy_solution(clock, x, t); }});
        }
        return tabulate(which, linspace(-15.0, 15.0, 1501), cols, which == 2 ? "gaussian" : "airy",
                        which == 2 ? "1" : "0.666666666666667", "0.5,1,10");
    }
    default:
        throw InvalidArgument("figure must be 1, 2 or 3, got " + std::to_string(which));
    }
}

}  // namespace dodson::tools
