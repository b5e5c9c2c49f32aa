#pragma once

namespace dodson {

/// Index alpha of the M-Wright (Mainardi) function, 0 <= alpha < 1.
///
/// alpha = 0 is the analytic limit M_0(z) = exp(-z).
class WrightIndex {
public:
    explicit WrightIndex(double alpha);

    double value() const noexcept { return alpha_; }

private:
    double alpha_;
};

/// Order nu of the warped Caputo operator, 0 < nu <= 1.
///
/// nu = 1 is admitted as the classical (first-derivative) limit.
class OperatorOrder {
public:
    explicit OperatorOrder(double nu);

    double value() const noexcept { return nu_; }
    bool is_classical() const noexcept { return nu_ == 1.0; }

    /// alpha = nu / 2, the M-Wright index of the fundamental solution.
    WrightIndex half() const { return WrightIndex(nu_ / 2.0); }

private:
    double nu_;
};

}  // namespace dodson
