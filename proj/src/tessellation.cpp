#include "fuchsian/tessellation.hpp"

#include <numeric>
#include <string>

#include "fuchsian/errors.hpp"

namespace fuchsian::tessellation {

namespace {

void require_pq(int p, int q)
{
    if (p < 3 || q < 3)
        throw InvalidArgument("tessellation needs p >= 3 and q >= 3");
}

// Floor and ceiling division for a positive divisor.
std::int64_t floor_div(std::int64_t a, std::int64_t b) { return a >= 0 ? a / b : -((-a + b - 1) / b); }
std::int64_t ceil_div(std::int64_t a, std::int64_t b) { return -floor_div(-a, b); }

} // namespace

Rational make_rational(std::int64_t num, std::int64_t den)
{
    if (den == 0)
        throw InvalidArgument("zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    const std::int64_t g = std::gcd(num, den);
    return {num / g, den / g};
}

GenusRange genus_range(int m, int n)
{
    if (m < 2 || n < 2)
        throw InvalidArgument("genus_range needs m >= 2 and n >= 2");
    const std::int64_t lo = ceil_div(std::int64_t{m - 2} * (n - 2), 4);
    const std::int64_t hi = floor_div(std::int64_t{m - 1} * (n - 1), 2);
    return {static_cast<int>(lo), static_cast<int>(hi)};
}

int q_from_euler(int p, int g)
{
    if (p < 3)
        throw InvalidArgument("q_from_euler needs p >= 3");
    if (g < 2)
        throw InvalidArgument("q_from_euler needs g >= 2");
    const std::int64_t den = std::int64_t{p} + 2 - 4 * std::int64_t{g};
    const std::int64_t num = 2 * std::int64_t{p};
    if (den <= 0)
        throw NoTessellation("no regular tessellation: p/2 + 1 - 2g <= 0 for p = " + std::to_string(p) +
                             ", g = " + std::to_string(g));
    if (num % den != 0)
        throw NoTessellation("no regular tessellation: q is not an integer for p = " + std::to_string(p) +
                             ", g = " + std::to_string(g));
    return static_cast<int>(num / den);
}

Rational euler_characteristic(int p, int q)
{
    // p/q - p/2 + 1 = (2p - pq + 2q) / (2q)
    const std::int64_t P = p, Q = q;
    return make_rational(2 * P - P * Q + 2 * Q, 2 * Q);
}

TessellationSpec tessellation_for_degree(int degree, int g)
{
    if (g < 2)
        throw InvalidArgument("tessellation_for_degree needs g >= 2");
    if (degree != 2 * g + 1 && degree != 2 * g + 2 && degree != 6 * g - 2)
        throw InvalidArgument("degree " + std::to_string(degree) + " is not 2g+1, 2g+2 or 6g-2 for g = " +
                              std::to_string(g));
    TessellationSpec spec;
    spec.p = 2 * (degree - 1);
    spec.q = q_from_euler(spec.p, g);
    spec.genus = g;
    spec.hyperbolic = is_hyperbolic_tessellation(spec.p, spec.q);
    return spec;
}

bool is_hyperbolic_tessellation(int p, int q)
{
    require_pq(p, q);
    return std::int64_t{p - 2} * (q - 2) > 4;
}

Rational cycle_count(int p, int q)
{
    require_pq(p, q);
    return make_rational(p, q);
}

} // namespace fuchsian::tessellation
