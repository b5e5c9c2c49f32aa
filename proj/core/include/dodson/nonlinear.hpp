#pragma once

#include "dodson/clock.hpp"
#include "dodson/order.hpp"

namespace dodson {

/// Similarity solution c = c1 warp(t)^gamma x^(2/(m-1)) of
///   D^nu c = d^2(c^m)/dx^2.
struct NonlinearParams {
    double m;
    double gamma;  // -nu / (m - 1)
    double c1;
    /// Gamma(1 + gamma - nu) sits on a pole: c1 = 0 and the solution vanishes.
    bool degenerate = false;
};

/// gamma = -nu/(m-1),
/// c1 = [ (m-1)^2 / (2m(m+1)) Gamma(1+gamma) / Gamma(1+gamma-nu) ]^(1/(m-1)).
///
/// Throws InvalidArgument unless m > 0 and m != 1, PoleError when
/// Gamma(1 + gamma) has a pole (or the denominator pole meets a negative
/// power), and ComplexBranchError when the base is negative and no real c1
/// satisfies c1^(m-1) = base (1/(m-1) must be p/q with p and q odd).
NonlinearParams nonlinear_similarity_params(OperatorOrder nu, double m);

/// |c1^(m-1) (2m/(m-1)) (2m/(m-1) - 1) - Gamma(gamma+1)/Gamma(gamma+1-nu)|
/// relative to the right-hand side (absolute when it is zero).
double nonlinear_identity_residual(const NonlinearParams& p, OperatorOrder nu);

/// c1 (x^2 / warp(t)^nu)^(1/(m-1)).
double nonlinear_similarity(OperatorOrder nu, double m, const DodsonClock& clock, double x, double t);
double nonlinear_similarity(const NonlinearParams& p, OperatorOrder nu, const DodsonClock& clock,
                            double x, double t);

/// E_nu(-warp(t)^nu) x^(1/m), solution of D^nu c = d^2(c^m)/dx^2 - c with
/// c(x, 0) = x^(1/m). Requires x >= 0, t >= 0, m > 0.
double absorption_solution(OperatorOrder nu, double m, const DodsonClock& clock, double x, double t);

/// Real value of base^exponent. Negative bases are admitted when the exponent
/// is a rational p/q (q <= 1000) with q odd; otherwise ComplexBranchError.
double real_power(double base, double exponent);

}  // namespace dodson
