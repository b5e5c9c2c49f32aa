#include <cmath>
#include <numbers>

#include <gtest/gtest.h>

#include "dodson/errors.hpp"
#include "dodson/fractional_operators.hpp"
#include "dodson/solutions.hpp"

using namespace dodson;

namespace {
double rel(double got, double want) { return std::fabs(got - want) / std::fabs(want); }
}  // namespace

TEST(Fundamental, GaussianPeaks) {
    const DodsonClock c(1.0, 1.0);
    EXPECT_LE(rel(fundamental_solution(OperatorOrder(1.0), c, 0.0, 1.0), 0.35480939443206097), 1e-12);
    EXPECT_LE(rel(gaussian_solution(c, 0.0, 1.0), 0.35480939443206097), 1e-14);
    EXPECT_LE(rel(gaussian_solution(c, 0.0, 10.0), 0.28210119553379310), 1e-14);
    EXPECT_LE(rel(gaussian_solution(c, 0.0, 0.5), 0.44971732570278682), 1e-14);
}

TEST(Fundamental, AiryPeak) {
    const DodsonClock c(1.0, 1.0);
    EXPECT_LE(rel(airy_solution(c, 0.0, 1.0), 0.43024273026142551), 1e-14);
    EXPECT_LE(rel(fundamental_solution(OperatorOrder(2.0 / 3.0), c, 0.0, 1.0), 0.43024273026142551), 1e-12);
}

TEST(Fundamental, ReferenceValues) {
    EXPECT_LE(rel(fundamental_solution(OperatorOrder(0.5), DodsonClock(1.0, 1.0), 1.0, 1.0), 0.1945410098630359), 1e-11);
    EXPECT_LE(rel(fundamental_solution(OperatorOrder(0.7), DodsonClock(0.5, 1.0), 0.5, 2.0), 0.26116001112419237), 1e-11);
    EXPECT_LE(rel(fundamental_solution(OperatorOrder(0.3), DodsonClock(1.0, 2.0), 2.0, 1.0), 0.088554738946954721), 1e-11);
}

TEST(Fundamental, EvenInX) {
    const DodsonClock c(0.7, 1.3);
    for (double x : {0.1, 1.0, 4.0}) EXPECT_EQ(fundamental_solution(OperatorOrder(0.45), c, x, 1.0),
                                               fundamental_solution(OperatorOrder(0.45), c, -x, 1.0));
}

TEST(Fundamental, RequiresPositiveTime) {
    EXPECT_THROW(fundamental_solution(OperatorOrder(0.5), DodsonClock(), 0.0, 0.0), InvalidArgument);
    EXPECT_THROW(gaussian_solution(DodsonClock(), 0.0, -1.0), InvalidArgument);
}

TEST(Gaussian, ClassicalClockIsHeatKernel) {
    const DodsonClock flat(0.0, 1.0);
    const double t = 0.8, x = 0.6;
    EXPECT_NEAR(gaussian_solution(flat, x, t), std::exp(-x * x / (4 * t)) / std::sqrt(4 * std::numbers::pi * t), 1e-16);
}

TEST(Airy, DecaysFarOut) {
    const DodsonClock c(1.0, 1.0);
    for (double t : {0.5, 1.0, 10.0}) {
        const double x = 8.0 * std::cbrt(3.0 * c.warp(t));
        EXPECT_LE(airy_solution(c, x, t), 1e-6);
    }
}

TEST(Airy, MatchesFundamentalOnHalfLine) {
    const DodsonClock c(1.0, 1.0);
    for (double x = 0.0; x <= 5.0; x += 0.25)
        EXPECT_NEAR(airy_solution(c, x, 1.0), fundamental_solution(OperatorOrder(2.0 / 3.0), c, x, 1.0), 1e-8);
}

TEST(FourierMode, Values) {
    const DodsonClock c(1.0, 1.0);
    EXPECT_EQ(fourier_mode(OperatorOrder(0.3), c, 0.0, 1.0), 1.0);
    EXPECT_NEAR(fourier_mode(OperatorOrder(1.0), c, 1.0, 1.0), 0.5314636053866157, 1e-15);
    EXPECT_LE(rel(fourier_mode(OperatorOrder(0.7), c, 2.0, 1.0), 0.14312278723453448), 1e-11);
    // d0 enters as d0 k^2
    EXPECT_EQ(fourier_mode(OperatorOrder(0.7), DodsonClock(1.0, 4.0), 1.0, 1.0), fourier_mode(OperatorOrder(0.7), c, 2.0, 1.0));
}

TEST(HigherOrder, Mapping) {
    EXPECT_DOUBLE_EQ(higher_order_equivalent(3).value(), 2.0 / 3.0);
    EXPECT_DOUBLE_EQ(higher_order_equivalent(4).value(), 0.5);
    EXPECT_THROW(higher_order_equivalent(1), InvalidArgument);
}

TEST(Profile, BuildsAndValidates) {
    const DodsonClock c(1.0, 1.0);
    const auto p = fundamental_profile(OperatorOrder(0.7), c, linspace(-2.0, 2.0, 41), 1.0);
    EXPECT_EQ(p.values.size(), 41u);
    EXPECT_EQ(p.meta.generator, Generator::fundamental);
    EXPECT_EQ(to_string(p.meta.generator), "fundamental");
    EXPECT_THROW(fundamental_profile(OperatorOrder(0.7), c, {0.0, 0.0}, 1.0), InvalidArgument);
}

TEST(Linspace, ExactlySymmetric) {
    const auto xs = linspace(-5.0, 5.0, 501);
    EXPECT_EQ(xs.front(), -5.0);
    EXPECT_EQ(xs.back(), 5.0);
    EXPECT_EQ(xs[250], 0.0);
    for (std::size_t i = 0; i < xs.size(); ++i) EXPECT_EQ(xs[i], -xs[xs.size() - 1 - i]);
}
