#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "dodson/errors.hpp"
#include "dodson/fractional_operators.hpp"
#include "dodson/special_functions.hpp"
#include "numeric.hpp"

namespace dodson {
namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

// Mesh on [0, upper] stored as distances to the upper end, which is where the
// kernels are evaluated. The lower half is graded toward 0 with exponent
// `low`, the upper half toward `upper` with exponent `high`.
struct Mesh {
    std::vector<double> u;     // ascending nodes, u.front() = 0, u.back() = upper
    std::vector<double> dist;  // upper - u, exact on the upper half
};

Mesh graded_mesh(double upper, std::size_t intervals, double low, double high) {
    const std::size_t half = intervals / 2;
    Mesh m;
    m.u.resize(intervals + 1);
    m.dist.resize(intervals + 1);
    const double mid = 0.5 * upper;
    for (std::size_t j = 0; j <= half; ++j) {
        const double x = mid * std::pow(static_cast<double>(j) / half, low);
        m.u[j] = x;
        m.dist[j] = upper - x;
    }
    for (std::size_t j = 0; j < half; ++j) {
        const double d = mid * std::pow(static_cast<double>(j) / half, high);
        m.u[intervals - j] = upper - d;
        m.dist[intervals - j] = d;
    }
    return m;
}

// a^q - b^q for a > b >= 0 with a - b = width, without cancellation.
double power_difference(double a, double width, double q) {
    return -std::pow(a, q) * std::expm1(q * std::log1p(-width / a));
}

// Exact moments of the kernel w^(q-1) over one interval, w = distance to the
// upper end running from a down to b = a - width:
//   whole = int_b^a w^(q-1) dw
//   ramp  = int_0^width (a - s)^(q-1) s ds / width
// so a linear interpolant with end values f0 (at w = a) and f1 (at w = b)
// integrates to f0 (whole - ramp) + f1 ramp.
struct Moments {
    double whole;
    double ramp;
};

Moments kernel_moments(double a, double width, double q) {
    const double whole = power_difference(a, width, q) / q;
    const double ratio = width / a;
    double ramp;
    if (ratio < 0.1) {
        // (1 - x)^(q-1) = sum_k (1-q)_k / k! x^k
        double coef = 1.0;
        double xk = 1.0;
        double sum = 0.0;
        for (int k = 0; k < 60; ++k) {
            const double term = coef * xk / (k + 2.0);
            sum += term;
            if (std::fabs(term) <= kEps * 1e-2 * std::fabs(sum)) break;
            coef *= (k + 1.0 - q) / (k + 1.0);
            xk *= ratio;
        }
        ramp = std::pow(a, q - 1.0) * width * sum;
    } else {
        const double b = a - width;
        const double second = (std::pow(a, q + 1.0) - std::pow(b, q + 1.0)) / (q + 1.0);
        ramp = (a * whole - second) / width;
    }
    return {whole, ramp};
}

struct Sum {
    double value = 0.0;
    double magnitude = 0.0;  // sum of |contributions|, the rounding scale

    void add(double v) {
        value += v;
        magnitude += std::fabs(v);
    }
};

void check_time(double t, const char* op) {
    if (!(t > 0.0) || !std::isfinite(t))
        throw InvalidArgument(std::string(op) + " requires t > 0, got " + std::to_string(t));
}

std::vector<double> sample(const TimeFunction& g, const DodsonClock& clock, const Mesh& mesh,
                           double t) {
    const std::size_t n = mesh.u.size();
    std::vector<double> out(n);
    out.front() = g.value(0.0);
    for (std::size_t j = 1; j + 1 < n; ++j) out[j] = g.value(clock.inverse_warp(mesh.u[j]));
    out.back() = g.value(t);
    return out;
}

// L1 scheme over every `stride`-th node: difference quotients of h against
// the exact kernel moments.
void caputo_pass(const Mesh& mesh, const std::vector<double>& h, double nu, std::size_t stride,
                 Sum& acc) {
    const double q = 1.0 - nu;
    const double inv_gamma = reciprocal_gamma(q);
    const std::size_t n = mesh.u.size() - 1;
    for (std::size_t j = 0; j < n; j += stride) {
        const std::size_t k = j + stride;
        const double a = mesh.dist[j];
        const double width = mesh.dist[j] - mesh.dist[k];
        acc.add((h[k] - h[j]) / width * power_difference(a, width, q) / q * inv_gamma);
    }
}

void integral_pass(const Mesh& mesh, const std::vector<double>& h, double nu, std::size_t stride,
                   Sum& acc) {
    const double inv_gamma = reciprocal_gamma(nu);
    const std::size_t n = mesh.u.size() - 1;
    for (std::size_t j = 0; j < n; j += stride) {
        const std::size_t k = j + stride;
        const double a = mesh.dist[j];
        const double width = mesh.dist[j] - mesh.dist[k];
        const Moments mom = kernel_moments(a, width, nu);
        acc.add((h[j] * (mom.whole - mom.ramp) + h[k] * mom.ramp) * inv_gamma);
    }
}

QuadratureEstimate finish(const Sum& fine, const Sum& coarse, double tol, const char* op) {
    const double diff = std::fabs(fine.value - coarse.value);
    const double scale = std::max(std::fabs(fine.value), std::fabs(coarse.value));
    const double rounding = 64.0 * kEps * std::max(fine.magnitude, coarse.magnitude);
    if (!(diff <= tol * scale || diff <= rounding))
        throw NotConverged(std::string(op) + ": N and N/2 meshes disagree by " +
                           std::to_string(diff) + " (value " + std::to_string(fine.value) + ")");
    return {fine.value, diff};
}

}  // namespace

void QuadratureConfig::validate() const {
    if (nodes < 8 || nodes % 4 != 0)
        throw InvalidArgument("quadrature nodes must be a multiple of 4 and >= 8, got " +
                              std::to_string(nodes));
    if (grading && !(*grading >= 1.0 && *grading <= 4.0))
        throw InvalidArgument("quadrature grading must lie in [1, 4], got " +
                              std::to_string(*grading));
    if (!(tol > 0.0)) throw InvalidArgument("quadrature tol must be > 0");
}

double QuadratureConfig::grading_for(OperatorOrder nu) const {
    if (grading) return *grading;
    return std::min((2.0 - nu.value()) / nu.value(), 4.0);
}

QuadratureEstimate fractional_integral_estimate(const TimeFunction& g, OperatorOrder nu,
                                                const DodsonClock& clock, double t,
                                                const QuadratureConfig& cfg) {
    cfg.validate();
    check_time(t, "fractional_integral");
    const double upper = clock.warp(t);
    const Mesh mesh = graded_mesh(upper, cfg.nodes, cfg.grading_for(nu), 1.0);
    const auto h = sample(g, clock, mesh, t);
    Sum fine;
    Sum coarse;
    integral_pass(mesh, h, nu.value(), 1, fine);
    integral_pass(mesh, h, nu.value(), 2, coarse);
    return finish(fine, coarse, cfg.tol, "fractional_integral");
}

double fractional_integral(const TimeFunction& g, OperatorOrder nu, const DodsonClock& clock,
                           double t, const QuadratureConfig& cfg) {
    return fractional_integral_estimate(g, nu, clock, t, cfg).value;
}

QuadratureEstimate warped_caputo_estimate(const TimeFunction& g, OperatorOrder nu,
                                          const DodsonClock& clock, double t,
                                          const QuadratureConfig& cfg) {
    if (nu.is_classical())
        throw InvalidOrder("warped_caputo requires 0 < nu < 1; use warped_first_derivative for nu = 1");
    cfg.validate();
    check_time(t, "warped_caputo");
    const double upper = clock.warp(t);
    const double high = 2.0 / (2.0 - nu.value());
    const Mesh mesh = graded_mesh(upper, cfg.nodes, cfg.grading_for(nu), high);
    const auto h = sample(g, clock, mesh, t);
    Sum fine;
    Sum coarse;
    caputo_pass(mesh, h, nu.value(), 1, fine);
    caputo_pass(mesh, h, nu.value(), 2, coarse);
    return finish(fine, coarse, cfg.tol, "warped_caputo");
}

double warped_caputo(const TimeFunction& g, OperatorOrder nu, const DodsonClock& clock, double t,
                     const QuadratureConfig& cfg) {
    return warped_caputo_estimate(g, nu, clock, t, cfg).value;
}

double warped_first_derivative(const TimeFunction& g, const DodsonClock& clock, double t) {
    if (!g.has_derivative())
        throw InvalidArgument("warped_first_derivative requires the derivative of g");
    return g.derivative(t) / clock.rate(t);
}

double power_law_caputo(double exponent_minus_one, OperatorOrder nu, const DodsonClock& clock,
                        double t) {
    check_time(t, "power_law_caputo");
    const double p = exponent_minus_one;
    if (p == 0.0) return 0.0;
    if (detail::is_nonpositive_integer(p + 1.0) || detail::is_nonpositive_integer(p + 1.0 - nu.value()))
        throw PoleError("power_law_caputo: Gamma pole for exponent " + std::to_string(p) +
                        " and order " + std::to_string(nu.value()));
    const auto num = log_reciprocal_gamma(p + 1.0);
    const auto den = log_reciprocal_gamma(p + 1.0 - nu.value());
    const double coef = num.sign * den.sign * std::exp(den.log_abs - num.log_abs);
    return coef * std::pow(clock.warp(t), p - nu.value());
}

double ml_eigenfunction(OperatorOrder nu, double lambda, const DodsonClock& clock, double t) {
    if (t == 0.0) return 1.0;
    return mittag_leffler(nu, lambda * std::pow(clock.warp(t), nu.value()));
}

double ml_eigenfunction_derivative(OperatorOrder nu, double lambda, const DodsonClock& clock,
                                   double t) {
    const double w = clock.warp(t);
    const double v = nu.value();
    if (t == 0.0 && !nu.is_classical())
        return lambda == 0.0 ? 0.0 : std::copysign(std::numeric_limits<double>::infinity(), lambda);
    return mittag_leffler_derivative(nu, lambda * std::pow(w, v)) * lambda * v *
           std::pow(w, v - 1.0) * clock.rate(t);
}

TimeFunction eigenfunction(OperatorOrder nu, double lambda, const DodsonClock& clock,
                           bool with_derivative) {
    TimeFunction f;
    f.value = [=](double t) { return ml_eigenfunction(nu, lambda, clock, t); };
    if (with_derivative)
        f.derivative = [=](double t) { return ml_eigenfunction_derivative(nu, lambda, clock, t); };
    return f;
}

TimeFunction warp_power(const DodsonClock& clock, double exponent, bool with_derivative) {
    TimeFunction f;
    f.value = [=](double t) { return exponent == 0.0 ? 1.0 : std::pow(clock.warp(t), exponent); };
    if (with_derivative)
        f.derivative = [=](double t) {
            if (exponent == 0.0) return 0.0;
            return exponent * std::pow(clock.warp(t), exponent - 1.0) * clock.rate(t);
        };
    return f;
}

}  // namespace dodson
