#pragma once

#include <cstdint>

namespace fuchsian::tessellation {

struct GenusRange {
    int g_min = 0;
    int g_max = 0;
};

struct TessellationSpec {
    int p = 0;
    int q = 0;
    int genus = 0;
    bool hyperbolic = false;
};

struct Rational {
    std::int64_t num = 0;
    std::int64_t den = 1;

    bool is_integer() const { return den == 1; }
    friend bool operator==(const Rational&, const Rational&) = default;
};

/// Reduced fraction with positive denominator.
Rational make_rational(std::int64_t num, std::int64_t den);

/// Genus bounds of two-cell embeddings of K_{m,n}:
/// g_min = ceil((m-2)(n-2)/4), g_max = floor((m-1)(n-1)/2).
GenusRange genus_range(int m, int n);

/// q with p/q - p/2 + 1 = 2 - 2g, i.e. q = 2p / (p + 2 - 4g). Throws
/// NoTessellation when q is not a positive integer.
int q_from_euler(int p, int g);

/// V - E + F = p/q - p/2 + 1, exact.
Rational euler_characteristic(int p, int q);

/// Degree in {2g+1, 2g+2, 6g-2} -> {p, q} with p = 2(degree - 1).
TessellationSpec tessellation_for_degree(int degree, int g);

/// (p - 2)(q - 2) > 4
bool is_hyperbolic_tessellation(int p, int q);

/// Number of vertex cycles p / q.
Rational cycle_count(int p, int q);

} // namespace fuchsian::tessellation
