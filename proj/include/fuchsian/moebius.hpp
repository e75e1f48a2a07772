#pragma once

#include <complex>
#include <string_view>
#include <vector>

namespace fuchsian {

using Complex = std::complex<double>;

/// A point of the extended complex plane. The point at infinity is an
/// explicit value, not an error.
class ComplexPoint {
public:
    constexpr ComplexPoint() = default;
    constexpr ComplexPoint(double re, double im) : z_(re, im) {}
    constexpr ComplexPoint(double re) : z_(re, 0.0) {} // NOLINT(google-explicit-constructor)
    constexpr ComplexPoint(Complex z) : z_(z) {} // NOLINT(google-explicit-constructor)

    static constexpr ComplexPoint infinity()
    {
        ComplexPoint p;
        p.inf_ = true;
        return p;
    }

    constexpr bool is_infinite() const { return inf_; }
    /// Finite value; meaningless when is_infinite().
    constexpr Complex value() const { return z_; }
    constexpr double re() const { return z_.real(); }
    constexpr double im() const { return z_.imag(); }

private:
    Complex z_{0.0, 0.0};
    bool inf_ = false;
};

/// Distance between two points; infinity is at distance 0 from itself and
/// +inf from every finite point.
double point_distance(const ComplexPoint& p, const ComplexPoint& q);

enum class MapClass { Elliptic, Parabolic, Hyperbolic };

std::string_view to_string(MapClass c);

/// z -> (az + b) / (cz + d) with ad - bc != 0.
class MoebiusMap {
public:
    /// Throws DegenerateMap when ad - bc == 0.
    MoebiusMap(Complex a, Complex b, Complex c, Complex d);

    static MoebiusMap identity() { return {1.0, 0.0, 0.0, 1.0}; }

    Complex a() const { return a_; }
    Complex b() const { return b_; }
    Complex c() const { return c_; }
    Complex d() const { return d_; }

    Complex det() const { return a_ * d_ - b_ * c_; }
    Complex trace() const { return a_ + d_; }

    /// Largest entry modulus.
    double norm() const;

private:
    Complex a_, b_, c_, d_;
};

// Tolerances shared by the trace classification.
inline constexpr double kTraceRealTolerance = 1e-6;
inline constexpr double kParabolicTolerance = 1e-9;

/// Matrix product m1 * m2, i.e. the map z -> m1(m2(z)).
MoebiusMap compose(const MoebiusMap& m1, const MoebiusMap& m2);
MoebiusMap operator*(const MoebiusMap& m1, const MoebiusMap& m2);

ComplexPoint apply(const MoebiusMap& m, const ComplexPoint& z);

/// Divides every entry by the principal square root of the determinant.
MoebiusMap normalize(const MoebiusMap& m);

/// Adjugate (d, -b; -c, a); acts as the inverse map.
MoebiusMap inverse(const MoebiusMap& m);

/// Classifies by |trace| of the normalized matrix. Throws ClassificationError
/// when the normalized trace has an imaginary part above kTraceRealTolerance.
MapClass classify(const MoebiusMap& m);

/// Real part of the normalized trace, after the realness check in classify().
double real_trace(const MoebiusMap& m);

/// One fixed point for parabolic maps, two otherwise. Throws InvalidArgument
/// for the identity.
std::vector<ComplexPoint> fixed_points(const MoebiusMap& m);

/// Entrywise deviation of m1 * m2^-1 from the identity after scaling its
/// (0,0) entry to 1. Zero iff the maps act identically.
double projective_distance(const MoebiusMap& m1, const MoebiusMap& m2);

bool projectively_equal(const MoebiusMap& m1, const MoebiusMap& m2, double tol);

/// m^k for k >= 0 by repeated squaring.
MoebiusMap power(const MoebiusMap& m, unsigned k);

} // namespace fuchsian
