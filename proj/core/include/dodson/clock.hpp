#pragma once

namespace dodson {

/// Exponentially decaying diffusivity D(t) = d0 * exp(-beta t).
///
/// The induced time change ("warp") is
///   warp(t) = (1 - exp(-beta t)) / beta,   warp(t) = t when beta = 0,
/// which maps the variable-coefficient problem onto a constant-coefficient
/// one. Only differences warp(t) - warp(s) enter any kernel, so the additive
/// constant of the antiderivative of exp(-beta t) is fixed by warp(0) = 0.
class DodsonClock {
public:
    /// Throws InvalidArgument unless beta >= 0 and d0 > 0.
    explicit DodsonClock(double beta = 1.0, double d0 = 1.0);

    double beta() const noexcept { return beta_; }
    double d0() const noexcept { return d0_; }

    /// Relaxation time 1 / beta (infinite for the classical clock).
    double relaxation_time() const noexcept;

    double warp(double t) const noexcept;
    /// d warp / dt = exp(-beta t).
    double rate(double t) const noexcept;
    /// Inverse of warp on [0, 1/beta).
    double inverse_warp(double u) const noexcept;

private:
    double beta_;
    double d0_;
};

inline double warp(const DodsonClock& clock, double t) noexcept { return clock.warp(t); }

}  // namespace dodson
