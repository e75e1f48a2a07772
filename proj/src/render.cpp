#include <cmath>
#include <cstdio>
#include <numbers>
#include <string>

#include "fuchsian/curves.hpp"
#include "fuchsian/disk_geometry.hpp"
#include "fuchsian/group_builder.hpp"
#include "fuchsian/pipeline.hpp"

namespace fuchsian::pipeline {

namespace {

constexpr double kOrigin = 500.0;
constexpr double kScale = 450.0;

double sx(Complex z) { return kOrigin + kScale * z.real(); }
double sy(Complex z) { return kOrigin - kScale * z.imag(); }

std::string fmt(double v)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.4f", v);
    std::string s(buf);
    if (s == "-0.0000")
        s = "0.0000";
    return s;
}

std::string xy(Complex z) { return fmt(sx(z)) + " " + fmt(sy(z)); }

// Path segment from the current point (on `from`) to `to` along `arc`.
// The y axis flips between the disk and the SVG viewport, so a
// counterclockwise turn in the disk is a positive sweep on screen.
std::string segment(const geometry::GeodesicArc& arc, Complex from, Complex to)
{
    if (!arc.is_arc())
        return "L " + xy(to);
    const Complex u = from - arc.center;
    const Complex v = to - arc.center;
    const double cross = u.real() * v.imag() - u.imag() * v.real();
    const double span = std::abs(std::arg(v / u));
    const int large = span > std::numbers::pi ? 1 : 0;
    const int sweep = cross > 0 ? 1 : 0;
    const std::string r = fmt(kScale * arc.radius);
    return "A " + r + " " + r + " 0 " + std::to_string(large) + " " + std::to_string(sweep) + " " + xy(to);
}

std::string polygon_path(const std::vector<Complex>& v)
{
    std::string d = "M " + xy(v.front());
    for (std::size_t i = 0; i < v.size(); ++i) {
        const Complex a = v[i];
        const Complex b = v[(i + 1) % v.size()];
        d += " " + segment(geometry::geodesic_between(a, b), a, b);
    }
    return d + " Z";
}

std::string label(Complex z, const std::string& text, double push)
{
    // Labels sit slightly off the point, radially outward for roots.
    const double r = std::abs(z);
    const Complex dir = r > 1e-12 ? z / r : Complex{1.0, 0.0};
    const Complex at = z + dir * push;
    return "  <text x=\"" + fmt(sx(at)) + "\" y=\"" + fmt(sy(at)) +
           "\" font-size=\"22\" text-anchor=\"middle\" dominant-baseline=\"middle\">" + text + "</text>\n";
}

} // namespace

std::string render_svg(int g, curves::Sign sign, int k)
{
    const curves::HyperellipticCurve curve(g, sign);
    std::vector<Complex> roots;
    for (const auto& c : curves::roots(curve))
        roots.push_back(c.value());
    std::vector<Complex> mids;
    for (const auto& m : groups::side_midpoints(curve))
        mids.push_back(m.value());
    const auto region = groups::fundamental_polygon(curve, k);
    std::vector<Complex> region_vertices;
    for (const auto& v : region.vertices)
        region_vertices.push_back(v.value());

    std::string s;
    s += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    s += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"1000\" height=\"1000\" "
         "viewBox=\"0 0 1000 1000\">\n";
    s += "  <title>y^2 = z^" + std::to_string(curve.degree()) + (sign == curves::Sign::Plus ? " + 1" : " - 1") +
         ", fundamental region with " + std::to_string(region.size()) + " sides</title>\n";
    s += "  <rect x=\"0\" y=\"0\" width=\"1000\" height=\"1000\" fill=\"white\"/>\n";
    s += "  <path class=\"fundamental-region\" fill=\"#d9d9d9\" stroke=\"#555555\" stroke-width=\"1.5\" d=\"" +
         polygon_path(region_vertices) + "\"/>\n";
    s += "  <circle class=\"boundary\" cx=\"" + fmt(kOrigin) + "\" cy=\"" + fmt(kOrigin) + "\" r=\"" + fmt(kScale) +
         "\" fill=\"none\" stroke=\"black\" stroke-width=\"1.5\" stroke-dasharray=\"8 6\"/>\n";
    for (std::size_t j = 0; j < roots.size(); ++j) {
        const Complex a = roots[j];
        const Complex b = roots[(j + 1) % roots.size()];
        s += "  <path class=\"root-side\" fill=\"none\" stroke=\"black\" stroke-width=\"2\" d=\"M " + xy(a) + " " +
             segment(geometry::geodesic_between(a, b), a, b) + "\"/>\n";
    }
    for (std::size_t j = 0; j < roots.size(); ++j) {
        s += "  <circle class=\"root\" cx=\"" + fmt(sx(roots[j])) + "\" cy=\"" + fmt(sy(roots[j])) +
             "\" r=\"5\" fill=\"black\"/>\n";
        s += label(roots[j], "c" + std::to_string(j + 1), 0.06);
    }
    for (std::size_t j = 0; j < mids.size(); ++j) {
        s += "  <circle class=\"midpoint\" cx=\"" + fmt(sx(mids[j])) + "\" cy=\"" + fmt(sy(mids[j])) +
             "\" r=\"4\" fill=\"#b22222\"/>\n";
        s += label(mids[j], "m" + std::to_string(j + 1), -0.06);
    }
    s += "</svg>\n";
    return s;
}

} // namespace fuchsian::pipeline
