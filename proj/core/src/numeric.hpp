#pragma once

// Internal helpers shared by the translation units of dodson_core.

#include <cmath>
#include <numbers>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "dodson/errors.hpp"

namespace dodson::detail {

inline bool is_nonpositive_integer(double x) {
    return x <= 0.0 && x == std::nearbyint(x);
}

/// sin(pi x) with argument reduction done before multiplying by pi, so the
/// zeros at integers are exact.
inline double sin_pi(double x) {
    double r = x - 2.0 * std::nearbyint(0.5 * x);  // r in [-1, 1]
    if (r == 0.0 || std::fabs(r) == 1.0) return 0.0;
    if (r > 0.5) r = 1.0 - r;
    else if (r < -0.5) r = -1.0 - r;
    return std::sin(std::numbers::pi * r);
}

struct QuadResult {
    double value;
    double error;
    double l1;
};

/// Adaptive 31-point Gauss-Kronrod on [a, b].
template <class F>
QuadResult integrate(F&& f, double a, double b, double rel_tol, unsigned max_depth = 18) {
    double error = 0.0;
    double l1 = 0.0;
    double v = boost::math::quadrature::gauss_kronrod<double, 31>::integrate(
        f, a, b, max_depth, rel_tol, &error, &l1);
    return {v, error, l1};
}

}  // namespace dodson::detail
