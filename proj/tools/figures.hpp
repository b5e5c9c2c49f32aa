#pragma once

#include "dodson/csv.hpp"

namespace dodson::tools {

/// Figure 1: fundamental solution at t = 1 for nu = 0.001, 0.7, 1 on
/// x in [-5, 5] (501 points).
/// Figure 2: Gaussian closed form at t = 0.5, 1, 10.
/// Figure 3: Airy closed form at t = 0.5, 1, 10.
/// Figures 2 and 3 span [-15, 15] (1501 points, same spacing) so every column
/// carries its full unit mass. All use beta = d0 = 1.
CsvTable figure_table(int which);

}  // namespace dodson::tools
