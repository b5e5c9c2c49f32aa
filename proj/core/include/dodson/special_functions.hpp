#pragma once

#include "dodson/order.hpp"

namespace dodson {

/// 1 / Gamma(x). Exactly zero at the poles x = 0, -1, -2, ...
double reciprocal_gamma(double x);

/// log|1 / Gamma(x)| together with its sign; sign is 0 at the poles.
struct LogReciprocalGamma {
    double log_abs;
    int sign;
};
LogReciprocalGamma log_reciprocal_gamma(double x);

/// One-parameter Mittag-Leffler function E_nu(z) = sum_k z^k / Gamma(nu k + 1).
///
/// The negative real axis is the supported domain. Evaluation switches between
/// the power series (small |z|, bounded cancellation), the algebraic asymptotic
/// expansion (z <= -50) and a positive real-axis integral representation in
/// between. Positive z is served by the series only. Relative accuracy on
/// [-50, 0] is better than 1e-10.
///
/// Throws NotConverged when the selected scheme misses its error bound.
double mittag_leffler(OperatorOrder nu, double z);

/// First derivative d/dz E_nu(z), evaluated with the same regime split.
double mittag_leffler_derivative(OperatorOrder nu, double z);

/// M-Wright (Mainardi) function
///   M_alpha(z) = sum_n (-z)^n / (n! Gamma(1 - alpha - alpha n)),  z >= 0.
///
/// Small z uses the series (pole terms vanish through reciprocal_gamma, term
/// cap 400); larger z uses a Zolotarev-type integral over (0, pi) whose
/// integrand is positive, so no cancellation occurs in the tail.
double m_wright(WrightIndex alpha, double z);

/// Two-variable M-Wright function lambda^-alpha M_alpha(y / lambda^alpha).
/// Throws InvalidArgument for lambda <= 0.
double m_wright_2var(WrightIndex alpha, double y, double lambda);

/// Airy function of the first kind.
double airy_ai(double z);

}  // namespace dodson
