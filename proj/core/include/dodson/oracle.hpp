#pragma once

#include <cstddef>
#include <vector>

#include "dodson/clock.hpp"
#include "dodson/fractional_operators.hpp"
#include "dodson/order.hpp"
#include "dodson/solutions.hpp"

namespace dodson {

/// Spatial grid for the oracles.
///
/// Finite-difference solvers use the nx points of linspace(x_min, x_max, nx)
/// (both ends included, Dirichlet boundaries). Periodic solvers use
/// x_n = x_min + n (x_max - x_min) / nx, n < nx, and require nx to be a power
/// of two.
struct GridSpec {
    double x_min;
    double x_max;
    std::size_t nx;
    std::vector<double> times;

    /// Throws InvalidArgument on an empty interval, nx < 16, unsorted or
    /// non-positive times, or (periodic) nx not a power of two.
    void validate(bool periodic) const;
    std::vector<double> points() const;
    std::vector<double> periodic_points() const;
};

/// Fundamental solution synthesized by inverse DFT of fourier_mode on a
/// periodic grid. The algebraic k^-2, k^-4, k^-6 tail of the transform (the
/// |x| cusp at the origin) is subtracted and added back in closed form, so the
/// sampled remainder decays fast enough for the DFT.
///
/// Adds a warning to the profile when a boundary value exceeds 1e-8.
Profile spectral_fundamental(OperatorOrder nu, const DodsonClock& clock, const GridSpec& grid,
                             double t);

/// Crank-Nicolson for dc/dt = d0 exp(-beta t) d^2c/dx^2 with c = 0 at both
/// ends, coefficient taken at the half step. `initial` must be sampled on
/// grid.points(). Throws InstabilityError if |c| exceeds 1e3 times the
/// initial sup-norm.
Profile heat_fd_solve(const DodsonClock& clock, const GridSpec& grid, double t0, double t1,
                      const Profile& initial, std::size_t steps);

/// dc/dt = -d0^(3/2) exp(-beta t) d^3c/dx^3 on the periodic grid, exact in
/// time per Fourier mode: e^(ikx) picks up exp(i k^3 d0^(3/2) (warp(t1) - warp(t0))).
/// `steps` is validated (>= 1) but the propagator needs a single application.
Profile kdv3_fd_solve(const DodsonClock& clock, const GridSpec& grid, double t0, double t1,
                      const Profile& initial, std::size_t steps);

/// Regularized derivative by direct quadrature in the original time variable
/// with kernel ((exp(-beta s) - exp(-beta t)) / beta)^-nu, independent of the
/// warped reduction. Composite 10-point Gauss-Legendre on `subdivisions`
/// panels, geometric refinement toward both ends, and a closed-form sliver at
/// s -> t. Compares against 2 * subdivisions panels and throws NotConverged
/// beyond `tol` relative. Requires g.derivative and 0 < nu < 1.
double brute_caputo(const TimeFunction& g, OperatorOrder nu, const DodsonClock& clock, double t,
                    std::size_t subdivisions = 64, double tol = 1e-7);

}  // namespace dodson
