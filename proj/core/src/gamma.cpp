#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "dodson/errors.hpp"
#include "dodson/order.hpp"
#include "dodson/special_functions.hpp"
#include "numeric.hpp"

namespace dodson {

WrightIndex::WrightIndex(double alpha) : alpha_(alpha) {
    if (!(alpha >= 0.0 && alpha < 1.0))
        throw InvalidOrder("M-Wright index must lie in [0, 1), got " + std::to_string(alpha));
}

OperatorOrder::OperatorOrder(double nu) : nu_(nu) {
    if (!(nu > 0.0 && nu <= 1.0))
        throw InvalidOrder("operator order must lie in (0, 1], got " + std::to_string(nu));
}

double reciprocal_gamma(double x) {
    if (std::isnan(x)) return x;
    if (detail::is_nonpositive_integer(x)) return 0.0;
    if (x > 170.0) return std::exp(-std::lgamma(x));
    if (x < -170.0) {
        // 1/Gamma(x) = sin(pi x) Gamma(1 - x) / pi
        const auto r = log_reciprocal_gamma(x);
        return r.sign * std::exp(r.log_abs);
    }
    return 1.0 / std::tgamma(x);
}

LogReciprocalGamma log_reciprocal_gamma(double x) {
    if (detail::is_nonpositive_integer(x))
        return {-std::numeric_limits<double>::infinity(), 0};
    if (x > 0.0) return {-std::lgamma(x), 1};
    const double s = detail::sin_pi(x);
    const double log_abs = std::log(std::fabs(s)) + std::lgamma(1.0 - x) - std::log(std::numbers::pi);
    return {log_abs, s > 0.0 ? 1 : -1};
}

}  // namespace dodson
