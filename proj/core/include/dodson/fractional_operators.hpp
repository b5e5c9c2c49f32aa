#pragma once

#include <cstddef>
#include <functional>
#include <optional>

#include "dodson/clock.hpp"
#include "dodson/order.hpp"

namespace dodson {

/// A function of time t -> g(t) on [0, T], optionally with its derivative.
///
/// Both callables must be free of side effects.
struct TimeFunction {
    std::function<double(double)> value;
    std::function<double(double)> derivative;

    bool has_derivative() const noexcept { return static_cast<bool>(derivative); }
};

/// Mesh and tolerance for the product-integration schemes.
struct QuadratureConfig {
    /// Number of intervals N of the finest mesh; the N/2 mesh is used for the
    /// refinement check. Must be a multiple of 4 and >= 8.
    std::size_t nodes = 2048;
    /// Exponent r of the grading toward t = 0, in [1, 4]. Defaults to
    /// min((2 - nu) / nu, 4).
    std::optional<double> grading;
    /// Relative disagreement between the N and N/2 results above which the
    /// evaluation reports NotConverged.
    double tol = 1e-3;

    void validate() const;
    double grading_for(OperatorOrder nu) const;
};

struct QuadratureEstimate {
    double value;
    /// |value(N) - value(N/2)|.
    double error;
};

/// Fractional integral of g with respect to the Dodson clock, base point 0:
///   I^nu g(t) = 1/Gamma(nu) int_0^t warp'(s) (warp(t) - warp(s))^(nu-1) g(s) ds.
///
/// Computed in the warped variable u = warp(s) by product integration of a
/// piecewise-linear interpolant of g against the exact kernel.
double fractional_integral(const TimeFunction& g, OperatorOrder nu, const DodsonClock& clock,
                           double t, const QuadratureConfig& cfg = {});
QuadratureEstimate fractional_integral_estimate(const TimeFunction& g, OperatorOrder nu,
                                                const DodsonClock& clock, double t,
                                                const QuadratureConfig& cfg = {});

/// Regularized (Caputo-type) fractional derivative of order 0 < nu < 1 with
/// respect to the Dodson clock:
///   D^nu g(t) = 1/Gamma(1-nu) int_0^t (warp(t) - warp(s))^(-nu) g'(s) ds.
///
/// In the warped variable this is the classical Caputo derivative of
/// h(u) = g(warp^-1(u)) at u* = warp(t), evaluated with the L1 scheme (exact
/// kernel weights, difference quotients of g). The mesh is graded toward
/// u = 0 with the configured exponent on its lower half and toward u* with
/// exponent 2 / (2 - nu) on its upper half.
///
/// Throws InvalidOrder for nu = 1 (see warped_first_derivative) and
/// NotConverged when the N and N/2 results disagree beyond cfg.tol.
double warped_caputo(const TimeFunction& g, OperatorOrder nu, const DodsonClock& clock, double t,
                     const QuadratureConfig& cfg = {});
QuadratureEstimate warped_caputo_estimate(const TimeFunction& g, OperatorOrder nu,
                                          const DodsonClock& clock, double t,
                                          const QuadratureConfig& cfg = {});

/// nu = 1 member of the family: exp(beta t) g'(t). Requires g.derivative.
double warped_first_derivative(const TimeFunction& g, const DodsonClock& clock, double t);

/// Closed form of the operator on warp powers: for g = warp^p,
///   D^nu g(t) = Gamma(p + 1) / Gamma(p + 1 - nu) warp(t)^(p - nu).
/// p = 0 returns 0. For p <= 0 the value is the formal continuation of the
/// formula (the integral itself diverges at t = 0 when p < 0).
/// Throws PoleError when p + 1 or p + 1 - nu is a non-positive integer.
double power_law_caputo(double exponent_minus_one, OperatorOrder nu, const DodsonClock& clock,
                        double t);

/// E_nu(lambda warp(t)^nu), the eigenfunction of the operator with eigenvalue lambda.
double ml_eigenfunction(OperatorOrder nu, double lambda, const DodsonClock& clock, double t);
/// Time derivative of ml_eigenfunction (infinite at t = 0 for nu < 1).
double ml_eigenfunction_derivative(OperatorOrder nu, double lambda, const DodsonClock& clock,
                                   double t);

/// Convenience wrappers as TimeFunction.
TimeFunction eigenfunction(OperatorOrder nu, double lambda, const DodsonClock& clock,
                           bool with_derivative = false);
TimeFunction warp_power(const DodsonClock& clock, double exponent, bool with_derivative = false);

}  // namespace dodson
