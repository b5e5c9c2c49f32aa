#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "dodson/clock.hpp"
#include "dodson/order.hpp"

namespace dodson {

enum class Generator { fundamental, gaussian, airy, spectral_oracle, fd_oracle, nonlinear, absorption };

std::string_view to_string(Generator g) noexcept;

struct ProfileMeta {
    OperatorOrder nu;
    DodsonClock clock;
    double t;
    Generator generator;
};

/// Concentration sampled on a strictly increasing grid.
struct Profile {
    std::vector<double> xs;
    std::vector<double> values;
    ProfileMeta meta;
    /// Non-fatal diagnostics, e.g. boundary values too large for a periodic grid.
    std::vector<std::string> warnings;

    /// Throws InvalidArgument if xs is not strictly increasing or the sizes differ.
    void validate() const;
};

/// Fundamental solution of the fractional Dodson equation with a unit point
/// source at x = 0:
///   c(x, t) = 1/2 M_{nu/2}(|x| / sqrt(d0), warp(t)) / sqrt(d0).
double fundamental_solution(OperatorOrder nu, const DodsonClock& clock, double x, double t);

/// nu = 1 closed form: Gaussian with variance 2 d0 warp(t).
double gaussian_solution(const DodsonClock& clock, double x, double t);

/// nu = 2/3 closed form
///   c = 3^(2/3) / (2 warp^(1/3)) Ai(|x| / (3 warp)^(1/3))   (d0 = 1).
double airy_solution(const DodsonClock& clock, double x, double t);

/// Fourier transform of the fundamental solution, E_nu(-d0 k^2 warp(t)^nu).
double fourier_mode(OperatorOrder nu, const DodsonClock& clock, double k, double t);

/// Order nu = 2/n whose fundamental solution coincides with that of the
/// n-th order equation dc/dt = +-exp(-beta t) d^n c / dx^n. Only n = 3 (sign -1)
/// is backed by an oracle. Throws InvalidArgument for n < 2.
OperatorOrder higher_order_equivalent(int n);

Profile fundamental_profile(OperatorOrder nu, const DodsonClock& clock, std::vector<double> xs,
                            double t);
Profile gaussian_profile(const DodsonClock& clock, std::vector<double> xs, double t);
Profile airy_profile(const DodsonClock& clock, std::vector<double> xs, double t);

/// n equally spaced points from a to b inclusive (n >= 2).
std::vector<double> linspace(double a, double b, std::size_t n);

}  // namespace dodson
