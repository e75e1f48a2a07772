#include "fuchsian/disk_geometry.hpp"

#include <cmath>
#include <numbers>
#include <numeric>

#include "fuchsian/errors.hpp"

namespace fuchsian::geometry {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kCoincident = 1e-12;
constexpr double kDiskSlack = 1e-9;

void require_distinct(const ComplexPoint& p, const ComplexPoint& q)
{
    if (point_distance(p, q) <= kCoincident)
        throw CoincidentPoints("points coincide");
}

Complex require_in_closed_disk(const ComplexPoint& p)
{
    if (p.is_infinite() || std::abs(p.value()) > 1.0 + kDiskSlack)
        throw InvalidArgument("point lies outside the closed unit disk");
    return p.value();
}

bool on_boundary(Complex z) { return std::abs(std::abs(z) - 1.0) <= kDiskSlack; }

// Unit tangent at v of the geodesic from v towards w.
Complex tangent_towards(Complex v, Complex w)
{
    const GeodesicArc g = geodesic_between(v, w);
    if (!g.is_arc())
        return (w - v) / std::abs(w - v);
    Complex t = Complex(0.0, 1.0) * (v - g.center);
    t /= std::abs(t);
    if ((std::conj(t) * (w - v)).real() < 0.0)
        t = -t;
    return t;
}

} // namespace

double GeodesicArc::distance_to(Complex z) const
{
    if (is_arc())
        return std::abs(std::abs(z - center) - radius);
    return std::abs((std::conj(direction) * z).imag());
}

bool GeodesicArc::contains(Complex z, double tol) const { return distance_to(z) <= tol; }

Complex cross_ratio(const ComplexPoint& z1, const ComplexPoint& z2, const ComplexPoint& z3,
                    const ComplexPoint& z4)
{
    const ComplexPoint pts[4] = {z1, z2, z3, z4};
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            require_distinct(pts[i], pts[j]);

    const Complex a = z1.value(), b = z2.value(), c = z3.value(), d = z4.value();
    if (z1.is_infinite())
        return -(c - d) / (b - c);
    if (z2.is_infinite())
        return -(c - d) / (d - a);
    if (z3.is_infinite())
        return -(a - b) / (d - a);
    if (z4.is_infinite())
        return -(a - b) / (b - c);
    return (a - b) * (c - d) / ((b - c) * (d - a));
}

GeodesicArc geodesic_between(const ComplexPoint& p1, const ComplexPoint& p2)
{
    require_distinct(p1, p2);
    const Complex z1 = require_in_closed_disk(p1);
    const Complex z2 = require_in_closed_disk(p2);

    GeodesicArc g;
    g.endpoints = {p1, p2};

    const double cross = z1.real() * z2.imag() - z1.imag() * z2.real();
    if (std::abs(cross) <= kCollinearTolerance) {
        g.kind = GeodesicArc::Kind::Diameter;
        const Complex far = std::abs(z1) >= std::abs(z2) ? z1 : z2;
        g.direction = far / std::abs(far);
        return g;
    }

    // Orthogonality to the unit circle plus incidence gives
    // 2 Re(z conj(c)) = |z|^2 + 1 for both points.
    const double r1 = 0.5 * (std::norm(z1) + 1.0);
    const double r2 = 0.5 * (std::norm(z2) + 1.0);
    const double cx = (r1 * z2.imag() - r2 * z1.imag()) / cross;
    const double cy = (z1.real() * r2 - z2.real() * r1) / cross;
    g.kind = GeodesicArc::Kind::Arc;
    g.center = {cx, cy};
    g.radius = std::sqrt(std::norm(g.center) - 1.0);
    return g;
}

ComplexPoint geodesic_apex(const ComplexPoint& z1, const ComplexPoint& z2)
{
    const GeodesicArc g = geodesic_between(z1, z2);
    if (!g.is_arc())
        return Complex(0.0, 0.0);
    return g.center * (1.0 - g.radius / std::abs(g.center));
}

MoebiusMap side_pairing_elliptic(const ComplexPoint& p1, const ComplexPoint& p2, const ComplexPoint& pm)
{
    require_distinct(p1, p2);
    require_distinct(p1, pm);
    require_distinct(p2, pm);
    const GeodesicArc g = geodesic_between(p1, p2);
    const Complex m = require_in_closed_disk(pm);
    if (!g.contains(m, 1e-8))
        throw AlgorithmError("fixed point is not on the geodesic through the two vertices");

    const Complex z1 = p1.value(), z2 = p2.value();
    const Complex u1 = (m - z1) * (m - z1);
    const Complex u2 = (m - z2) * (m - z2);
    const MoebiusMap w(z1 * u2 - z2 * u1, z2 * z2 * u1 - z1 * z1 * u2, u2 - u1, z2 * u1 - z1 * u2);
    const MoebiusMap t = normalize(w);

    if (point_distance(apply(t, pm), pm) > 1e-8)
        throw AlgorithmError("side-pairing map does not fix the apex");
    return t;
}

double triangle_area(double alpha, double beta, double gamma)
{
    if (alpha < 0.0 || beta < 0.0 || gamma < 0.0)
        throw InvalidArgument("triangle angles must be nonnegative");
    const double sum = alpha + beta + gamma;
    if (sum >= kPi - 1e-12)
        throw InvalidArgument("angle sum >= pi: not a hyperbolic triangle");
    return kPi - sum;
}

double polygon_area(std::span<const double> interior_angles)
{
    if (interior_angles.size() < 3)
        throw InvalidArgument("polygon needs at least 3 vertices");
    for (double a : interior_angles)
        if (a < 0.0 || a >= kPi)
            throw InvalidArgument("interior angle outside [0, pi)");
    const double sum = std::accumulate(interior_angles.begin(), interior_angles.end(), 0.0);
    return static_cast<double>(interior_angles.size() - 2) * kPi - sum;
}

double interior_angle(Complex prev, Complex vertex, Complex next)
{
    if (on_boundary(vertex))
        return 0.0;
    const Complex t1 = tangent_towards(vertex, prev);
    const Complex t2 = tangent_towards(vertex, next);
    return std::abs(std::arg(t2 / t1));
}

double polygon_area(const HyperbolicPolygon& polygon)
{
    const std::size_t n = polygon.size();
    if (n < 3)
        throw InvalidArgument("polygon needs at least 3 vertices");
    const Complex v0 = polygon.vertices[0].value();
    double area = 0.0;
    for (std::size_t i = 1; i + 1 < n; ++i) {
        const Complex a = polygon.vertices[i].value();
        const Complex b = polygon.vertices[i + 1].value();
        area += triangle_area(interior_angle(a, v0, b), interior_angle(v0, a, b), interior_angle(a, b, v0));
    }
    return area;
}

bool vertex_cycle_angle_check(std::span<const double> angles, int m)
{
    if (angles.empty() || m < 1)
        throw InvalidArgument("vertex cycle needs at least one angle and m >= 1");
    const double sum = std::accumulate(angles.begin(), angles.end(), 0.0);
    return std::abs(sum - 2.0 * kPi / m) <= 1e-9;
}

HyperbolicPolygon make_polygon(std::vector<ComplexPoint> vertices)
{
    if (vertices.size() < 3)
        throw InvalidArgument("polygon needs at least 3 vertices");
    HyperbolicPolygon poly;
    poly.vertices = std::move(vertices);
    const std::size_t n = poly.vertices.size();
    poly.sides.reserve(n);
    poly.ideal.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        poly.sides.push_back(geodesic_between(poly.vertices[i], poly.vertices[(i + 1) % n]));
        poly.ideal.push_back(on_boundary(poly.vertices[i].value()));
    }
    return poly;
}

Complex reflect_across(const GeodesicArc& arc, Complex z)
{
    if (arc.is_arc())
        return arc.center + arc.radius * arc.radius / std::conj(z - arc.center);
    return arc.direction * arc.direction * std::conj(z);
}

} // namespace fuchsian::geometry
