#include <cmath>
#include <string>

#include "dodson/errors.hpp"
#include "dodson/oracle.hpp"
#include "dodson/special_functions.hpp"

namespace dodson {
namespace {

constexpr double kGauss[10][2] = {
    {-0.97390652851717174, 0.066671344308688069}, {-0.86506336668898454, 0.14945134915058036},
    {-0.67940956829902444, 0.21908636251598201},  {-0.43339539412924721, 0.26926671930999652},
    {-0.14887433898163122, 0.29552422471475298},  {0.14887433898163122, 0.29552422471475298},
    {0.43339539412924721, 0.26926671930999652},   {0.67940956829902444, 0.21908636251598201},
    {0.86506336668898454, 0.14945134915058036},   {0.97390652851717174, 0.066671344308688069},
};

// Halvings toward each end of the interval.
constexpr int kLevels = 60;

template <class F>
double gauss(F&& f, double a, double b) {
    const double mid = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    double s = 0.0;
    for (const auto& [x, w] : kGauss) s += w * f(mid + half * x);
    return s * half;
}

struct Integrand {
    const TimeFunction& g;
    double nu;
    double beta;
    double t;

    // ((exp(-beta tau) - exp(-beta t)) / beta)^-nu written in s = t - tau.
    double kernel(double s) const {
        const double d = beta == 0.0 ? s : std::exp(-beta * t) * std::expm1(beta * s) / beta;
        return std::pow(d, -nu);
    }
    double operator()(double tau) const { return kernel(t - tau) * g.derivative(tau); }
};

double evaluate(const Integrand& f, std::size_t panels) {
    const double t = f.t;
    const double h = t / static_cast<double>(panels);
    double sum = 0.0;

    // [0, h]: geometric panels toward tau = 0, where g' may blow up. The last
    // piece [0, eps] uses the kernel as constant and g(eps) - g(0).
    double hi = h;
    for (int i = 0; i < kLevels; ++i) {
        const double lo = 0.5 * hi;
        sum += gauss(f, lo, hi);
        hi = lo;
    }
    sum += f.kernel(t) * (f.g.value(hi) - f.g.value(0.0));

    for (std::size_t j = 1; j + 1 < panels; ++j)
        sum += gauss(f, h * static_cast<double>(j), h * static_cast<double>(j + 1));

    // [t - h, t]: geometric panels toward the kernel singularity, integrated
    // in s = t - tau so the kernel argument keeps full precision.
    auto tail = [&](double s) { return f.kernel(s) * f.g.derivative(t - s); };
    double width = h;
    for (int i = 0; i < kLevels; ++i) {
        const double next = 0.5 * width;
        sum += gauss(tail, next, width);
        width = next;
    }
    // Sliver [t - delta, t]: s^-nu psi(s) with psi linear,
    // psi(0) = exp(beta nu t) g'(t), psi(delta) = kernel(delta) delta^nu g'(t - delta).
    const double delta = width;
    const double psi0 = std::exp(f.beta * f.nu * t) * f.g.derivative(t);
    const double psi1 = f.kernel(delta) * std::pow(delta, f.nu) * f.g.derivative(t - delta);
    const double p1 = std::pow(delta, 1.0 - f.nu);
    sum += psi0 * p1 / (1.0 - f.nu) + (psi1 - psi0) * p1 / (2.0 - f.nu);
    return sum * reciprocal_gamma(1.0 - f.nu);
}

}  // namespace

double brute_caputo(const TimeFunction& g, OperatorOrder nu, const DodsonClock& clock, double t,
                    std::size_t subdivisions, double tol) {
    if (nu.is_classical()) throw InvalidOrder("brute_caputo requires 0 < nu < 1");
    if (!g.has_derivative()) throw InvalidArgument("brute_caputo requires the derivative of g");
    if (!(t > 0.0) || !std::isfinite(t)) throw InvalidArgument("brute_caputo requires t > 0");
    if (subdivisions < 64)
        throw InvalidArgument("brute_caputo needs subdivisions >= 64, got " + std::to_string(subdivisions));
    const Integrand f{g, nu.value(), clock.beta(), t};
    const double coarse = evaluate(f, subdivisions);
    const double fine = evaluate(f, 2 * subdivisions);
    const double diff = std::fabs(fine - coarse);
    if (!(diff <= tol * std::fabs(fine) || diff <= 1e-15))
        throw NotConverged("brute_caputo: panel refinement changed the result by " + std::to_string(diff));
    return fine;
}

}  // namespace dodson
