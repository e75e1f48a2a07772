#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <numbers>
#include <random>

#include "fuchsian/moebius.hpp"

namespace testdata {

using fuchsian::Complex;

inline constexpr double kPi = std::numbers::pi;

// Reference values for y^2 = z^5 - 1, four to six digits.
inline const std::array<Complex, 5> kRoots{
    {{0.3090, 0.9511}, {-0.8090, 0.5878}, {-0.8090, -0.5878}, {0.3090, -0.9511}, {1.0, 0.0}}};
inline const std::array<Complex, 5> kMidpoints{
    {{-0.1575, 0.4846}, {-0.5095, 0.0}, {-0.1575, -0.4846}, {0.4122, -0.2995}, {0.4122, 0.2995}}};
inline const std::array<Complex, 4> kT1{{{0.0, 1.7013}, {1.30902, 0.425325}, {1.30902, -0.425325}, {0.0, -1.7013}}};
inline const std::array<Complex, 4> kT2{{{0.0, -1.7013}, {0.0, -1.3763}, {0.0, 1.3764}, {0.0, 1.7013}}};
inline const std::array<Complex, 4> kT1T2{
    {{2.3090, 1.8017}, {1.6180, 2.2270}, {1.6180, -2.2270}, {2.3090, -1.8017}}};
inline const std::array<double, 4> kAbsTraces{4.6180, 8.8541, 8.8541, 4.6180};

inline double entry_distance(const fuchsian::MoebiusMap& m, const std::array<Complex, 4>& want)
{
    const std::array<Complex, 4> got{m.a(), m.b(), m.c(), m.d()};
    double worst = 0;
    for (std::size_t i = 0; i < 4; ++i)
        worst = std::max(worst, std::abs(got[i] - want[i]));
    return worst;
}

inline Complex random_in_disk(std::mt19937_64& rng, double radius = 1.0)
{
    std::uniform_real_distribution<double> u(0.0, 1.0);
    return std::polar(radius * std::sqrt(u(rng)), 2.0 * kPi * u(rng));
}

inline Complex random_gaussian(std::mt19937_64& rng)
{
    std::normal_distribution<double> n(0.0, 1.0);
    return {n(rng), n(rng)};
}

// Random det-1 map with a well conditioned determinant before scaling.
inline fuchsian::MoebiusMap random_map(std::mt19937_64& rng)
{
    for (;;) {
        const fuchsian::MoebiusMap m(random_gaussian(rng), random_gaussian(rng), random_gaussian(rng),
                                     random_gaussian(rng));
        if (std::abs(m.det()) > 0.1)
            return fuchsian::normalize(m);
    }
}

} // namespace testdata
