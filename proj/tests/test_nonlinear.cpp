#include <cmath>

#include <gtest/gtest.h>

#include "dodson/errors.hpp"
#include "dodson/fractional_operators.hpp"
#include "dodson/nonlinear.hpp"
#include "dodson/special_functions.hpp"

using namespace dodson;

namespace {
double rel(double got, double want) { return std::fabs(got - want) / std::fabs(want); }
}  // namespace

TEST(NonlinearParams, QuadraticNonlinearity) {
    const auto p = nonlinear_similarity_params(OperatorOrder(0.4), 2.0);
    EXPECT_DOUBLE_EQ(p.gamma, -0.4);
    EXPECT_LE(rel(p.c1, 0.027031927430547025), 1e-13);
    EXPECT_FALSE(p.degenerate);
    EXPECT_LE(nonlinear_identity_residual(p, OperatorOrder(0.4)), 1e-13);
}

TEST(NonlinearParams, OtherReferenceValues) {
    EXPECT_LE(rel(nonlinear_similarity_params(OperatorOrder(0.3), 3.0).c1, 0.33871453553022468), 1e-13);
    // negative base with integer power gives a negative amplitude
    EXPECT_LE(rel(nonlinear_similarity_params(OperatorOrder(0.6), 2.0).c1, -0.031754322444666284), 1e-13);
}

TEST(NonlinearParams, DenominatorPoleIsDegenerate) {
    const auto p = nonlinear_similarity_params(OperatorOrder(0.5), 2.0);
    EXPECT_TRUE(p.degenerate);
    EXPECT_EQ(p.c1, 0.0);
    EXPECT_EQ(nonlinear_similarity(OperatorOrder(0.5), 2.0, DodsonClock(), 1.0, 1.0), 0.0);
}

TEST(NonlinearParams, NumeratorPoleThrows) {
    // gamma = -nu/(m-1) = -1 for nu = 0.5, m = 1.5
    EXPECT_THROW(nonlinear_similarity_params(OperatorOrder(0.5), 1.5), PoleError);
}

TEST(NonlinearParams, ComplexBranch) {
    // m = 3: power 1/2; nu = 0.9 gives 1 + gamma - nu = -0.35, a negative base.
    EXPECT_THROW(nonlinear_similarity_params(OperatorOrder(0.9), 3.0), ComplexBranchError);
    // m = 3/2: the base is negative and squaring it leaves c1^(1/2) positive
    EXPECT_THROW(nonlinear_similarity_params(OperatorOrder(0.4), 1.5), ComplexBranchError);
}

TEST(NonlinearParams, RejectsBadExponent) {
    EXPECT_THROW(nonlinear_similarity_params(OperatorOrder(0.5), 1.0), InvalidArgument);
    EXPECT_THROW(nonlinear_similarity_params(OperatorOrder(0.5), -2.0), InvalidArgument);
}

TEST(Similarity, Values) {
    const DodsonClock c(1.0, 1.0);
    EXPECT_LE(rel(nonlinear_similarity(OperatorOrder(0.4), 2.0, c, 1.0, 1.0), 0.032475589765344005), 1e-13);
    EXPECT_EQ(nonlinear_similarity(OperatorOrder(0.4), 2.0, c, 0.0, 1.0), 0.0);
    EXPECT_EQ(nonlinear_similarity(OperatorOrder(0.4), 3.0, c, -1.5, 1.0),
              nonlinear_similarity(OperatorOrder(0.4), 3.0, c, 1.5, 1.0));
}

TEST(Similarity, SolvesPorousMediumEquation) {
    // D^nu c uses the closed form on warp powers; d^2(c^m)/dx^2 by differences.
    const DodsonClock c(0.8, 1.0);
    const OperatorOrder nu(0.3);
    const double m = 3.0, x = 1.3, t = 0.7, h = 1e-3;
    const auto p = nonlinear_similarity_params(nu, m);
    const double lhs = p.c1 * power_law_caputo(p.gamma, nu, c, t) * std::pow(x, 2.0 / (m - 1.0));
    auto cm = [&](double xx) { return std::pow(nonlinear_similarity(p, nu, c, xx, t), m); };
    const double rhs = (cm(x + h) - 2 * cm(x) + cm(x - h)) / (h * h);
    EXPECT_LE(rel(lhs, rhs), 1e-6);
}

TEST(Absorption, Values) {
    const DodsonClock c(1.0, 1.0);
    EXPECT_DOUBLE_EQ(absorption_solution(OperatorOrder(0.5), 2.0, c, 4.0, 0.0), 2.0);
    EXPECT_NEAR(absorption_solution(OperatorOrder(1.0), 1.0, c, 3.0, 2.0), 3.0 * std::exp(-c.warp(2.0)), 1e-15);
    EXPECT_THROW(absorption_solution(OperatorOrder(0.5), 2.0, c, -1.0, 1.0), InvalidArgument);
}

TEST(Absorption, MthPowerIsLinearInX) {
    const DodsonClock c(1.0, 1.0);
    const OperatorOrder nu(0.6);
    const double m = 2.5, t = 1.1;
    auto cm = [&](double x) { return std::pow(absorption_solution(nu, m, c, x, t), m); };
    EXPECT_NEAR(cm(1.0) - 2 * cm(2.0) + cm(3.0), 0.0, 1e-14);
}

TEST(RealPower, Branches) {
    EXPECT_DOUBLE_EQ(real_power(-8.0, 1.0 / 3.0), -2.0);
    EXPECT_DOUBLE_EQ(real_power(-8.0, 2.0 / 3.0), 4.0);
    EXPECT_DOUBLE_EQ(real_power(-2.0, 3.0), -8.0);
    EXPECT_THROW(real_power(-4.0, 0.5), ComplexBranchError);
    EXPECT_THROW(real_power(-4.0, std::sqrt(2.0)), ComplexBranchError);
    EXPECT_DOUBLE_EQ(real_power(9.0, 0.5), 3.0);
}
