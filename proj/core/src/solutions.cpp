#include <cmath>
#include <numbers>
#include <string>
#include <utility>

#include "dodson/errors.hpp"
#include "dodson/solutions.hpp"
#include "dodson/special_functions.hpp"

namespace dodson {
namespace {

void check_time(double t) {
    if (!(t > 0.0) || !std::isfinite(t))
        throw InvalidArgument("solution requires t > 0, got " + std::to_string(t));
}

template <class F>
Profile make_profile(std::vector<double> xs, ProfileMeta meta, F&& f) {
    Profile p{std::move(xs), {}, meta, {}};
    p.validate();
    p.values.reserve(p.xs.size());
    for (double x : p.xs) p.values.push_back(f(x));
    return p;
}

}  // namespace

std::string_view to_string(Generator g) noexcept {
    switch (g) {
    case Generator::fundamental: return "fundamental";
    case Generator::gaussian: return "gaussian";
    case Generator::airy: return "airy";
    case Generator::spectral_oracle: return "spectral_oracle";
    case Generator::fd_oracle: return "fd_oracle";
    case Generator::nonlinear: return "nonlinear";
    case Generator::absorption: return "absorption";
    }
    return "unknown";
}

void Profile::validate() const {
    if (!values.empty() && values.size() != xs.size())
        throw InvalidArgument("profile has " + std::to_string(xs.size()) + " points but " +
                              std::to_string(values.size()) + " values");
    for (std::size_t i = 1; i < xs.size(); ++i)
        if (!(xs[i] > xs[i - 1])) throw InvalidArgument("profile xs must be strictly increasing");
}

double fundamental_solution(OperatorOrder nu, const DodsonClock& clock, double x, double t) {
    check_time(t);
    const double s = std::sqrt(clock.d0());
    return 0.5 * m_wright_2var(nu.half(), std::fabs(x) / s, clock.warp(t)) / s;
}

double gaussian_solution(const DodsonClock& clock, double x, double t) {
    check_time(t);
    const double v = clock.d0() * clock.warp(t);
    return std::exp(-x * x / (4.0 * v)) / std::sqrt(4.0 * std::numbers::pi * v);
}

double airy_solution(const DodsonClock& clock, double x, double t) {
    check_time(t);
    const double s = std::sqrt(clock.d0());
    const double w = clock.warp(t);
    const double amp = std::cbrt(9.0) / (2.0 * std::cbrt(w));
    return amp * airy_ai(std::fabs(x) / s / std::cbrt(3.0 * w)) / s;
}

double fourier_mode(OperatorOrder nu, const DodsonClock& clock, double k, double t) {
    if (!(t >= 0.0)) throw InvalidArgument("fourier_mode requires t >= 0");
    if (k == 0.0 || t == 0.0) return 1.0;
    return mittag_leffler(nu, -clock.d0() * k * k * std::pow(clock.warp(t), nu.value()));
}

OperatorOrder higher_order_equivalent(int n) {
    if (n < 2) throw InvalidArgument("spatial order must be >= 2, got " + std::to_string(n));
    return OperatorOrder(2.0 / n);
}

Profile fundamental_profile(OperatorOrder nu, const DodsonClock& clock, std::vector<double> xs,
                            double t) {
    check_time(t);
    return make_profile(std::move(xs), {nu, clock, t, Generator::fundamental},
                        [&](double x) { return fundamental_solution(nu, clock, x, t); });
}

Profile gaussian_profile(const DodsonClock& clock, std::vector<double> xs, double t) {
    check_time(t);
    return make_profile(std::move(xs), {OperatorOrder(1.0), clock, t, Generator::gaussian},
                        [&](double x) { return gaussian_solution(clock, x, t); });
}

Profile airy_profile(const DodsonClock& clock, std::vector<double> xs, double t) {
    check_time(t);
    return make_profile(std::move(xs), {OperatorOrder(2.0 / 3.0), clock, t, Generator::airy},
                        [&](double x) { return airy_solution(clock, x, t); });
}

std::vector<double> linspace(double a, double b, std::size_t n) {
    if (n < 2) throw InvalidArgument("linspace needs at least 2 points");
    std::vector<double> out(n);
    const double m = static_cast<double>(n - 1);
    // Weighted form: a symmetric interval gives an exactly symmetric grid.
    for (std::size_t i = 0; i < n; ++i) {
        const double r = static_cast<double>(i);
        out[i] = a * ((m - r) / m) + b * (r / m);
    }
    return out;
}

}  // namespace dodson
