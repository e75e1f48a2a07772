#include "fuchsian/hypergeometric.hpp"

#include <array>
#include <cmath>
#include <numbers>

#include "fuchsian/errors.hpp"

namespace fuchsian::whittaker {

namespace {

constexpr double kPi = std::numbers::pi;

constexpr double kLanczosG = 7.0;
constexpr std::array<double, 9> kLanczos = {
    0.99999999999980993,     676.5203681218851,     -1259.1392167224028,
    771.32342877765313,      -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,    9.9843695780195716e-6, 1.5056327351493116e-7,
};

constexpr double kSeriesRelTol = 1e-16;
constexpr int kSeriesQuietTerms = 3;
constexpr int kSeriesMaxTerms = 100000;

bool is_nonpositive_integer(double x)
{
    return x <= 0.0 && std::abs(x - std::round(x)) <= 1e-14;
}

} // namespace

Complex gamma_fn(Complex z)
{
    if (z.imag() == 0.0 && is_nonpositive_integer(z.real()))
        throw PoleError("Gamma has a pole at a nonpositive integer");

    if (z.real() < 0.5)
        return kPi / (std::sin(kPi * z) * gamma_fn(1.0 - z));

    z -= 1.0;
    Complex x = kLanczos[0];
    for (std::size_t i = 1; i < kLanczos.size(); ++i)
        x += kLanczos[i] / (z + static_cast<double>(i));
    const Complex t = z + kLanczosG + 0.5;
    return std::sqrt(2.0 * kPi) * std::pow(t, z + 0.5) * std::exp(-t) * x;
}

double gamma_fn(double x)
{
    if (is_nonpositive_integer(x))
        throw PoleError("Gamma has a pole at a nonpositive integer");
    if (x < 0.5)
        return kPi / (std::sin(kPi * x) * gamma_fn(1.0 - x));

    x -= 1.0;
    double s = kLanczos[0];
    for (std::size_t i = 1; i < kLanczos.size(); ++i)
        s += kLanczos[i] / (x + static_cast<double>(i));
    const double t = x + kLanczosG + 0.5;
    return std::sqrt(2.0 * kPi) * std::pow(t, x + 0.5) * std::exp(-t) * s;
}

double gauss_sum(double alpha, double beta, double gamma)
{
    const double excess = gamma - alpha - beta;
    if (!(excess > 0.0))
        throw ConvergenceError("Gauss sum needs gamma - alpha - beta > 0");
    return gamma_fn(gamma) * gamma_fn(excess) / (gamma_fn(gamma - alpha) * gamma_fn(gamma - beta));
}

Complex hyp2f1(double alpha, double beta, double gamma, Complex z)
{
    if (is_nonpositive_integer(gamma))
        throw InvalidArgument("hyp2f1: gamma is a nonpositive integer");
    if (std::abs(z - 1.0) <= 1e-15)
        return gauss_sum(alpha, beta, gamma);
    if (std::abs(z) >= 1.0)
        throw ConvergenceError("hyp2f1: |z| >= 1 is outside the series disk");

    Complex sum = 1.0;
    Complex term = 1.0;
    int quiet = 0;
    for (int k = 0; k < kSeriesMaxTerms; ++k) {
        term *= (alpha + k) * (beta + k) / ((gamma + k) * (k + 1.0)) * z;
        sum += term;
        if (std::abs(term) < kSeriesRelTol * std::abs(sum)) {
            if (++quiet == kSeriesQuietTerms)
                return sum;
        } else {
            quiet = 0;
        }
    }
    throw ConvergenceError("hyp2f1: series did not converge within the term cap");
}

double continuation_residual(double alpha, double beta, double gamma, Complex z)
{
    const double excess = gamma - alpha - beta;
    if (std::abs(excess - std::round(excess)) <= 1e-12)
        throw InvalidArgument("continuation formula degenerates for integer gamma - alpha - beta");

    const double a_coef =
        gamma_fn(gamma) * gamma_fn(excess) / (gamma_fn(gamma - alpha) * gamma_fn(gamma - beta));
    const double b_coef = gamma_fn(gamma) * gamma_fn(-excess) / (gamma_fn(alpha) * gamma_fn(beta));

    const Complex w = 1.0 - z;
    const Complex rhs = a_coef * hyp2f1(alpha, beta, 1.0 - excess, w) +
                        b_coef * std::pow(w, excess) * hyp2f1(gamma - alpha, gamma - beta, excess + 1.0, w);
    return std::abs(hyp2f1(alpha, beta, gamma, z) - rhs);
}

} // namespace fuchsian::whittaker
