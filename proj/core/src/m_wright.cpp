#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "dodson/errors.hpp"
#include "dodson/special_functions.hpp"
#include "numeric.hpp"

namespace dodson {
namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr int kTermCap = 400;
constexpr double kSeriesLimit = 3.0;
constexpr double kMaxCancellation = 1e3;

struct SeriesResult {
    double value;
    double abs_sum;
    double truncation;
    bool converged;
};

// sum_n (-z)^n / (n! Gamma(1 - alpha - alpha n)), accumulated in log space so
// neither n! nor the reciprocal Gamma factor overflows.
SeriesResult wright_series(double alpha, double z) {
    if (z == 0.0) {
        const double v = reciprocal_gamma(1.0 - alpha);
        return {v, std::fabs(v), 0.0, true};
    }
    const double log_z = std::log(z);
    double sum = 0.0;
    double abs_sum = 0.0;
    double prev_log = std::numeric_limits<double>::infinity();
    int small_in_a_row = 0;
    for (int n = 0; n < kTermCap; ++n) {
        const auto rg = log_reciprocal_gamma(1.0 - alpha - alpha * n);
        if (rg.sign == 0) continue;
        const double log_mag = n * log_z - std::lgamma(n + 1.0) + rg.log_abs;
        const double mag = std::exp(log_mag);
        const double term = ((n % 2 == 1) ? -mag : mag) * rg.sign;
        sum += term;
        abs_sum += mag;
        if (log_mag < prev_log && mag <= kEps * 1e-2 * std::fabs(sum)) {
            // A few consecutive negligible, decreasing terms bound the tail.
            if (++small_in_a_row >= 3) return {sum, abs_sum, mag, true};
        } else {
            small_in_a_row = 0;
        }
        prev_log = log_mag;
    }
    return {sum, abs_sum, std::numeric_limits<double>::infinity(), false};
}

// For 0 < alpha < 1 and z > 0 the one-sided stable law gives
//   M_alpha(z) = z^(alpha/(1-alpha)) / (pi (1-alpha))
//                * int_0^pi A(phi) exp(-z^(1/(1-alpha)) A(phi)) dphi,
//   A(phi) = [sin(alpha phi)^alpha sin((1-alpha) phi)^(1-alpha) / sin(phi)]^(1/(1-alpha)).
// A is increasing with A(0) = alpha^(alpha/(1-alpha)) (1-alpha); the factor
// exp(-c A(0)) is pulled out of the integral to keep full relative accuracy.
double wright_integral(double alpha, double z) {
    const double pi = std::numbers::pi;
    const double beta = 1.0 - alpha;
    const double inv_beta = 1.0 / beta;
    const double c = std::pow(z, inv_beta);
    const double a0 = std::pow(alpha, alpha * inv_beta) * beta;
    const double log_prefactor = alpha * inv_beta * std::log(z) - std::log(pi * beta) - c * a0;
    if (log_prefactor < -745.0 - 10.0) return 0.0;

    auto log_a = [&](double phi) {
        return inv_beta * (alpha * std::log(std::sin(alpha * phi)) +
                           beta * std::log(std::sin(beta * phi)) - std::log(std::sin(phi)));
    };
    auto integrand = [&](double phi) {
        const double la = log_a(phi);
        if (!std::isfinite(la)) return 0.0;
        const double a = std::exp(la);
        const double expo = la - c * (a - a0);
        return expo < -745.0 ? 0.0 : std::exp(expo);
    };

    // The integrand peaks at phi = 0 with width ~ 1 / sqrt(c); split near the
    // peak so the adaptive rule resolves it.
    int nb = 0;
    const double width = std::min(1.0, 4.0 / std::sqrt(std::max(c, 1e-300)));
    double pts[4];
    pts[nb++] = 0.0;
    if (width < 0.5) {
        pts[nb++] = width;
        if (4.0 * width < 2.0) pts[nb++] = 4.0 * width;
    }
    pts[nb++] = pi;

    double total = 0.0;
    double err = 0.0;
    for (int i = 0; i + 1 < nb; ++i) {
        const auto r = detail::integrate(integrand, pts[i], pts[i + 1], 1e-12, 12);
        total += r.value;
        err += r.error;
    }
    // |Kronrod - Gauss| overestimates a converged error by orders of magnitude;
    // the bound only flags genuine failures.
    if (!(err <= 1e-4 * std::fabs(total)))
        throw NotConverged("M-Wright integral representation missed its error bound at z = " +
                           std::to_string(z));
    return std::exp(log_prefactor) * total;
}

}  // namespace

double m_wright(WrightIndex index, double z) {
    const double alpha = index.value();
    if (std::isnan(z)) return z;
    if (z < 0.0) throw InvalidArgument("m_wright is evaluated on z >= 0, got " + std::to_string(z));
    if (alpha == 0.0) return std::exp(-z);

    if (z <= kSeriesLimit) {
        const auto s = wright_series(alpha, z);
        if (s.converged && s.abs_sum <= kMaxCancellation * std::fabs(s.value)) return s.value;
        if (z == 0.0) return s.value;
    }
    return wright_integral(alpha, z);
}

double m_wright_2var(WrightIndex alpha, double y, double lambda) {
    if (!(lambda > 0.0))
        throw InvalidArgument("m_wright_2var requires lambda > 0, got " + std::to_string(lambda));
    const double scale = std::pow(lambda, -alpha.value());
    return scale * m_wright(alpha, y * scale);
}

}  // namespace dodson
