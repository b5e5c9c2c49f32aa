#include <cmath>
#include <complex>
#include <cstdio>
#include <memory>
#include <numbers>
#include <string>

#include <fftw3.h>

#include "dodson/errors.hpp"
#include "dodson/oracle.hpp"
#include "dodson/special_functions.hpp"
#include "fft.hpp"

namespace dodson {
namespace {

constexpr double kAliasThreshold = 1e-8;

bool is_power_of_two(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

}  // namespace

void GridSpec::validate(bool periodic) const {
    if (!(x_min < x_max) || !std::isfinite(x_min) || !std::isfinite(x_max))
        throw InvalidArgument("grid needs x_min < x_max");
    if (nx < 16) throw InvalidArgument("grid needs nx >= 16, got " + std::to_string(nx));
    if (periodic && !is_power_of_two(nx))
        throw InvalidArgument("periodic grid needs nx a power of two, got " + std::to_string(nx));
    for (std::size_t i = 0; i < times.size(); ++i) {
        if (!(times[i] > 0.0)) throw InvalidArgument("grid times must be > 0");
        if (i > 0 && !(times[i] > times[i - 1]))
            throw InvalidArgument("grid times must be increasing");
    }
}

std::vector<double> GridSpec::points() const { return linspace(x_min, x_max, nx); }

std::vector<double> GridSpec::periodic_points() const {
    std::vector<double> xs(nx);
    const double h = (x_max - x_min) / static_cast<double>(nx);
    for (std::size_t n = 0; n < nx; ++n) xs[n] = x_min + h * static_cast<double>(n);
    return xs;
}

Profile spectral_fundamental(OperatorOrder nu, const DodsonClock& clock, const GridSpec& grid,
                             double t) {
    grid.validate(true);
    if (!(t > 0.0)) throw InvalidArgument("spectral_fundamental requires t > 0");
    const std::size_t n = grid.nx;
    const double length = grid.x_max - grid.x_min;
    const double v = nu.value();
    const double scale = clock.d0() * std::pow(clock.warp(t), v);

    // E_nu(-scale k^2) ~ sum_j a_j k^(-2j) for large k.
    double a[4] = {0.0, 0.0, 0.0, 0.0};
    for (int j = 1; j <= 3; ++j)
        a[j] = ((j % 2 == 1) ? 1.0 : -1.0) * std::pow(scale, -j) * reciprocal_gamma(1.0 - v * j);
    // Same tail from b1 q + b2 q^2 + b3 q^3 with q = 1/(p^2 + k^2).
    const double p = 80.0 / length;
    const double p2 = p * p;
    const double b1 = a[1];
    const double b2 = a[2] + p2 * a[1];
    const double b3 = a[3] + p2 * p2 * a[1] + 2.0 * p2 * a[2];
    auto tail_hat = [&](double k) {
        const double q = 1.0 / (p2 + k * k);
        return q * (b1 + q * (b2 + q * b3));
    };
    auto tail_x = [&](double x) {
        const double ax = p * std::fabs(x);
        const double e = std::exp(-ax);
        return e * (b1 / (2.0 * p) + b2 * (1.0 + ax) / (4.0 * p2 * p) +
                    b3 * (3.0 + 3.0 * ax + ax * ax) / (16.0 * p2 * p2 * p));
    };

    detail::FftBuffer buf(n);
    const double dk = 2.0 * std::numbers::pi / length;
    const long half = static_cast<long>(n / 2);
    for (long m = -half; m < half; ++m) {
        const double k = dk * static_cast<double>(m);
        const double r = fourier_mode(nu, clock, k, t) - tail_hat(k);
        const std::complex<double> phase = std::polar(1.0, k * grid.x_min);
        buf[static_cast<std::size_t>((m + static_cast<long>(n)) % static_cast<long>(n))] =
            r * phase / length;
    }
    buf.execute(FFTW_BACKWARD);

    Profile out{grid.periodic_points(), std::vector<double>(n), {nu, clock, t, Generator::spectral_oracle}, {}};
    for (std::size_t i = 0; i < n; ++i) out.values[i] = buf[i].real() + tail_x(out.xs[i]);

    const double edge = std::max(std::fabs(out.values.front()), std::fabs(out.values.back()));
    if (edge > kAliasThreshold) {
        char msg[128];
        std::snprintf(msg, sizeof msg, "boundary value %.3g exceeds %.0e; periodic images alias", edge,
                      kAliasThreshold);
        out.warnings.emplace_back(msg);
    }
    return out;
}

}  // namespace dodson
