#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <string>
#include <vector>

#include "dodson/errors.hpp"
#include "dodson/oracle.hpp"
#include "fft.hpp"

namespace dodson {
namespace {

constexpr double kGrowthLimit = 1e3;

void check_interval(double t0, double t1, std::size_t steps) {
    if (!(t0 > 0.0) || !(t1 >= t0)) throw InvalidArgument("oracle needs 0 < t0 <= t1");
    if (steps == 0) throw InvalidArgument("oracle needs steps >= 1");
}

void check_initial(const Profile& initial, const std::vector<double>& xs) {
    if (initial.values.size() != xs.size() || initial.xs.size() != xs.size())
        throw InvalidArgument("initial profile has " + std::to_string(initial.values.size()) +
                              " values, grid has " + std::to_string(xs.size()));
    const double tol = 1e-9 * std::max(std::fabs(xs.front()), std::fabs(xs.back()));
    for (std::size_t i = 0; i < xs.size(); ++i)
        if (std::fabs(initial.xs[i] - xs[i]) > tol)
            throw InvalidArgument("initial profile is not sampled on the grid");
}

double sup_norm(const std::vector<double>& v) {
    double m = 0.0;
    for (double x : v) m = std::max(m, std::fabs(x));
    return m;
}

}  // namespace

Profile heat_fd_solve(const DodsonClock& clock, const GridSpec& grid, double t0, double t1,
                      const Profile& initial, std::size_t steps) {
    grid.validate(false);
    check_interval(t0, t1, steps);
    const auto xs = grid.points();
    check_initial(initial, xs);

    const std::size_t n = xs.size();
    const double dx = (grid.x_max - grid.x_min) / static_cast<double>(n - 1);
    const double dt = (t1 - t0) / static_cast<double>(steps);
    const double limit = kGrowthLimit * std::max(sup_norm(initial.values), 1e-300);

    std::vector<double> c = initial.values;
    c.front() = 0.0;
    c.back() = 0.0;
    std::vector<double> rhs(n), diag(n);
    for (std::size_t s = 0; s < steps; ++s) {
        const double tm = t0 + (static_cast<double>(s) + 0.5) * dt;
        const double r = 0.5 * clock.d0() * clock.rate(tm) * dt / (dx * dx);
        // (I - r L) c_new = (I + r L) c_old on the interior.
        for (std::size_t i = 1; i + 1 < n; ++i)
            rhs[i] = c[i] + r * (c[i - 1] - 2.0 * c[i] + c[i + 1]);
        // Thomas sweep: sub = super = -r, diagonal 1 + 2r.
        const double b = 1.0 + 2.0 * r;
        diag[1] = b;
        for (std::size_t i = 2; i + 1 < n; ++i) {
            const double w = -r / diag[i - 1];
            diag[i] = b + w * r;
            rhs[i] -= w * rhs[i - 1];
        }
        c[n - 2] = rhs[n - 2] / diag[n - 2];
        for (std::size_t i = n - 2; i-- > 1;) c[i] = (rhs[i] + r * c[i + 1]) / diag[i];
        const double m = sup_norm(c);
        if (!(m <= limit))
            throw InstabilityError("heat solver blew up at step " + std::to_string(s + 1));
    }
    return {xs, c, {OperatorOrder(1.0), clock, t1, Generator::fd_oracle}, {}};
}

Profile kdv3_fd_solve(const DodsonClock& clock, const GridSpec& grid, double t0, double t1,
                      const Profile& initial, std::size_t steps) {
    grid.validate(true);
    check_interval(t0, t1, steps);
    const auto xs = grid.periodic_points();
    check_initial(initial, xs);

    const std::size_t n = xs.size();
    const double length = grid.x_max - grid.x_min;
    const double dw = clock.warp(t1) - clock.warp(t0);
    const double speed = clock.d0() * std::sqrt(clock.d0());

    detail::FftBuffer buf(n);
    for (std::size_t i = 0; i < n; ++i) buf[i] = initial.values[i];
    buf.execute(FFTW_FORWARD);
    const double dk = 2.0 * std::numbers::pi / length;
    const long half = static_cast<long>(n / 2);
    for (std::size_t i = 0; i < n; ++i) {
        long m = static_cast<long>(i);
        if (m >= half) m -= static_cast<long>(n);
        const double k = dk * static_cast<double>(m);
        // The Nyquist mode has no partner; keep it real.
        const double phase = (m == -half) ? 0.0 : k * k * k * speed * dw;
        buf[i] *= std::polar(1.0 / static_cast<double>(n), phase);
    }
    buf.execute(FFTW_BACKWARD);

    std::vector<double> c(n);
    for (std::size_t i = 0; i < n; ++i) c[i] = buf[i].real();
    return {xs, c, {OperatorOrder(2.0 / 3.0), clock, t1, Generator::fd_oracle}, {}};
}

}  // namespace dodson
