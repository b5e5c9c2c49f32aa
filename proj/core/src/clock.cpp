#include <cmath>
#include <limits>
#include <string>

#include "dodson/clock.hpp"
#include "dodson/errors.hpp"

namespace dodson {

DodsonClock::DodsonClock(double beta, double d0) : beta_(beta), d0_(d0) {
    if (!(beta >= 0.0) || !std::isfinite(beta))
        throw InvalidArgument("clock beta must be finite and >= 0, got " + std::to_string(beta));
    if (!(d0 > 0.0) || !std::isfinite(d0))
        throw InvalidArgument("clock d0 must be finite and > 0, got " + std::to_string(d0));
}

double DodsonClock::relaxation_time() const noexcept {
    return beta_ == 0.0 ? std::numeric_limits<double>::infinity() : 1.0 / beta_;
}

// expm1 / log1p keep full relative accuracy as beta t -> 0, which makes the
// beta -> 0 limit continuous without a separate series branch.
double DodsonClock::warp(double t) const noexcept {
    if (beta_ == 0.0) return t;
    return -std::expm1(-beta_ * t) / beta_;
}

double DodsonClock::rate(double t) const noexcept { return std::exp(-beta_ * t); }

double DodsonClock::inverse_warp(double u) const noexcept {
    if (beta_ == 0.0) return u;
    return -std::log1p(-beta_ * u) / beta_;
}

}  // namespace dodson
