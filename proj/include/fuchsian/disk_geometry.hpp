#pragma once

#include <span>
#include <utility>
#include <vector>

#include "fuchsian/moebius.hpp"

namespace fuchsian::geometry {

inline constexpr double kCollinearTolerance = 1e-9;
inline constexpr double kOnGeodesicTolerance = 1e-9;

/// A geodesic of the Poincare disk through two points: a circle orthogonal to
/// the unit circle, or a diameter. `endpoints` are the two points it was
/// built from (ideal or interior).
struct GeodesicArc {
    enum class Kind { Arc, Diameter };

    Kind kind = Kind::Diameter;
    Complex center{};   // Arc only
    double radius = 0;  // Arc only
    Complex direction{}; // Diameter only, unit modulus
    std::pair<ComplexPoint, ComplexPoint> endpoints;

    bool is_arc() const { return kind == Kind::Arc; }

    /// Distance from z to the full geodesic line (circle or diameter).
    double distance_to(Complex z) const;
    bool contains(Complex z, double tol = kOnGeodesicTolerance) const;
};

/// Vertices in order; side i joins vertex i to vertex (i + 1) mod n.
struct HyperbolicPolygon {
    std::vector<ComplexPoint> vertices;
    std::vector<GeodesicArc> sides;
    std::vector<bool> ideal;

    std::size_t size() const { return vertices.size(); }
};

/// (z1 - z2)(z3 - z4) / ((z2 - z3)(z4 - z1)); an infinite argument replaces
/// the two factors it appears in by their limit ratio -1.
Complex cross_ratio(const ComplexPoint& z1, const ComplexPoint& z2, const ComplexPoint& z3,
                    const ComplexPoint& z4);

GeodesicArc geodesic_between(const ComplexPoint& z1, const ComplexPoint& z2);

/// Point of the geodesic through z1, z2 nearest the origin.
ComplexPoint geodesic_apex(const ComplexPoint& z1, const ComplexPoint& z2);

/// Order-two elliptic map swapping z1 and z2 and fixing m, built from the
/// cross-ratio construction and normalized to det 1.
MoebiusMap side_pairing_elliptic(const ComplexPoint& z1, const ComplexPoint& z2,
                                 const ComplexPoint& m);

/// Gauss-Bonnet: pi - (alpha + beta + gamma).
double triangle_area(double alpha, double beta, double gamma);

/// (p - 2) pi - sum of interior angles, p = angles.size().
double polygon_area(std::span<const double> interior_angles);

/// Area of a geodesic polygon by a fan triangulation from vertex 0.
double polygon_area(const HyperbolicPolygon& polygon);

/// Interior angle at `vertex` between the geodesics towards `prev` and
/// `next`; zero at ideal vertices.
double interior_angle(Complex prev, Complex vertex, Complex next);

/// True iff the angles sum to 2 pi / m within 1e-9.
bool vertex_cycle_angle_check(std::span<const double> angles, int m);

/// Polygon from vertices, with sides built by geodesic_between.
HyperbolicPolygon make_polygon(std::vector<ComplexPoint> vertices);

/// Inversion in the circle of an Arc geodesic (reflection of the disk).
Complex reflect_across(const GeodesicArc& arc, Complex z);

} // namespace fuchsian::geometry
