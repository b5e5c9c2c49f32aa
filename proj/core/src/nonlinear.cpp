#include <algorithm>
#include <cmath>
#include <string>

#include "dodson/errors.hpp"
#include "dodson/fractional_operators.hpp"
#include "dodson/nonlinear.hpp"
#include "dodson/special_functions.hpp"
#include "numeric.hpp"

namespace dodson {
namespace {

struct Fraction {
    long long p;
    long long q;
};

// Continued-fraction search for p/q with q <= max_q matching x to 1e-12.
bool as_fraction(double x, long long max_q, Fraction& out) {
    long long h0 = 1, h1 = 0, k0 = 0, k1 = 1;
    double r = x;
    for (int i = 0; i < 64; ++i) {
        const double a = std::floor(r);
        const long long ai = static_cast<long long>(a);
        const long long h = ai * h0 + h1;
        const long long k = ai * k0 + k1;
        if (k > max_q) return false;
        h1 = h0;
        h0 = h;
        k1 = k0;
        k0 = k;
        if (std::fabs(static_cast<double>(h) / static_cast<double>(k) - x) <= 1e-12 * std::max(1.0, std::fabs(x))) {
            out = {h, k};
            return true;
        }
        const double frac = r - a;
        if (frac < 1e-15) return false;
        r = 1.0 / frac;
    }
    return false;
}

void check_m(double m) {
    if (!(m > 0.0) || m == 1.0 || !std::isfinite(m))
        throw InvalidArgument("nonlinearity exponent m must be > 0 and != 1, got " + std::to_string(m));
}

}  // namespace

double real_power(double base, double exponent) {
    if (base >= 0.0 || std::isnan(base)) return std::pow(base, exponent);
    if (exponent == std::nearbyint(exponent)) return std::pow(base, exponent);
    Fraction f{};
    if (!as_fraction(exponent, 1000, f) || f.q % 2 == 0)
        throw ComplexBranchError("no real branch of (" + std::to_string(base) + ")^" +
                                 std::to_string(exponent));
    const double mag = std::pow(-base, exponent);
    return (f.p % 2 == 0) ? mag : -mag;
}

NonlinearParams nonlinear_similarity_params(OperatorOrder nu, double m) {
    check_m(m);
    const double v = nu.value();
    const double gamma = -v / (m - 1.0);
    if (detail::is_nonpositive_integer(1.0 + gamma))
        throw PoleError("nonlinear similarity: Gamma(1 + gamma) has a pole at gamma = " +
                        std::to_string(gamma));
    const double power = 1.0 / (m - 1.0);
    const double geometric = (m - 1.0) * (m - 1.0) / (2.0 * m * (m + 1.0));
    NonlinearParams p{m, gamma, 0.0, false};
    if (detail::is_nonpositive_integer(1.0 + gamma - v)) {
        if (power < 0.0)
            throw PoleError("nonlinear similarity: degenerate amplitude raised to a negative power");
        p.degenerate = true;
        return p;
    }
    const double ratio = std::tgamma(1.0 + gamma) * reciprocal_gamma(1.0 + gamma - v);
    const double base = geometric * ratio;
    p.c1 = real_power(base, power);
    // A negative base also needs c1^(m-1) to come back negative, e.g. m = 3/2
    // squares it away and no real amplitude exists.
    if (base < 0.0 && !(real_power(p.c1, m - 1.0) < 0.0))
        throw ComplexBranchError("nonlinear similarity: no real amplitude for nu = " + std::to_string(v) +
                                 ", m = " + std::to_string(m));
    return p;
}

double nonlinear_identity_residual(const NonlinearParams& p, OperatorOrder nu) {
    const double v = nu.value();
    const double k = 2.0 * p.m / (p.m - 1.0);
    const double lhs = real_power(p.c1, p.m - 1.0) * k * (k - 1.0);
    const double rhs = std::tgamma(p.gamma + 1.0) * reciprocal_gamma(p.gamma + 1.0 - v);
    const double diff = std::fabs(lhs - rhs);
    return rhs == 0.0 ? diff : diff / std::fabs(rhs);
}

double nonlinear_similarity(const NonlinearParams& p, OperatorOrder nu, const DodsonClock& clock,
                            double x, double t) {
    if (!(t > 0.0)) throw InvalidArgument("nonlinear_similarity requires t > 0");
    if (p.degenerate) return 0.0;
    const double w = clock.warp(t);
    return p.c1 * std::pow(x * x / std::pow(w, nu.value()), 1.0 / (p.m - 1.0));
}

double nonlinear_similarity(OperatorOrder nu, double m, const DodsonClock& clock, double x, double t) {
    return nonlinear_similarity(nonlinear_similarity_params(nu, m), nu, clock, x, t);
}

double absorption_solution(OperatorOrder nu, double m, const DodsonClock& clock, double x, double t) {
    if (!(m > 0.0)) throw InvalidArgument("absorption_solution requires m > 0");
    if (!(x >= 0.0)) throw InvalidArgument("absorption_solution requires x >= 0");
    if (!(t >= 0.0)) throw InvalidArgument("absorption_solution requires t >= 0");
    return ml_eigenfunction(nu, -1.0, clock, t) * std::pow(x, 1.0 / m);
}

}  // namespace dodson
