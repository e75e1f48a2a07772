#include "fuchsian/moebius.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "fuchsian/errors.hpp"

namespace fuchsian {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Relative size below which an entry or denominator counts as zero.
constexpr double kZeroRel = 1e-14;

} // namespace

double point_distance(const ComplexPoint& p, const ComplexPoint& q)
{
    if (p.is_infinite() || q.is_infinite())
        return (p.is_infinite() && q.is_infinite()) ? 0.0 : kInf;
    return std::abs(p.value() - q.value());
}

std::string_view to_string(MapClass c)
{
    switch (c) {
    case MapClass::Elliptic:
        return "elliptic";
    case MapClass::Parabolic:
        return "parabolic";
    case MapClass::Hyperbolic:
        return "hyperbolic";
    }
    return "unknown";
}

MoebiusMap::MoebiusMap(Complex a, Complex b, Complex c, Complex d) : a_(a), b_(b), c_(c), d_(d)
{
    const Complex det = a * d - b * c;
    if (det == Complex(0.0, 0.0) || !std::isfinite(std::abs(det)))
        throw DegenerateMap("Moebius map has zero or non-finite determinant");
}

double MoebiusMap::norm() const
{
    return std::max({std::abs(a_), std::abs(b_), std::abs(c_), std::abs(d_)});
}

MoebiusMap compose(const MoebiusMap& m1, const MoebiusMap& m2)
{
    return {m1.a() * m2.a() + m1.b() * m2.c(), m1.a() * m2.b() + m1.b() * m2.d(),
            m1.c() * m2.a() + m1.d() * m2.c(), m1.c() * m2.b() + m1.d() * m2.d()};
}

MoebiusMap operator*(const MoebiusMap& m1, const MoebiusMap& m2) { return compose(m1, m2); }

ComplexPoint apply(const MoebiusMap& m, const ComplexPoint& z)
{
    if (z.is_infinite()) {
        if (std::abs(m.c()) <= kZeroRel * m.norm())
            return ComplexPoint::infinity();
        return m.a() / m.c();
    }
    const Complex w = z.value();
    const Complex num = m.a() * w + m.b();
    const Complex den = m.c() * w + m.d();
    const double scale = std::abs(m.c()) * std::abs(w) + std::abs(m.d());
    if (std::abs(den) <= kZeroRel * scale)
        return ComplexPoint::infinity();
    return num / den;
}

MoebiusMap normalize(const MoebiusMap& m)
{
    const Complex s = std::sqrt(m.det()); // principal branch
    return {m.a() / s, m.b() / s, m.c() / s, m.d() / s};
}

MoebiusMap inverse(const MoebiusMap& m) { return {m.d(), -m.b(), -m.c(), m.a()}; }

double real_trace(const MoebiusMap& m)
{
    const Complex tr = normalize(m).trace();
    if (std::abs(tr.imag()) > kTraceRealTolerance)
        throw ClassificationError("normalized trace is not real; not a disk isometry class");
    return tr.real();
}

MapClass classify(const MoebiusMap& m)
{
    const double t = std::abs(real_trace(m));
    if (std::abs(t - 2.0) <= kParabolicTolerance)
        return MapClass::Parabolic;
    return t < 2.0 ? MapClass::Elliptic : MapClass::Hyperbolic;
}

std::vector<ComplexPoint> fixed_points(const MoebiusMap& m)
{
    const MoebiusMap n = normalize(m);
    const Complex a = n.a(), b = n.b(), c = n.c(), d = n.d();
    const double scale = n.norm();

    if (std::abs(c) <= kZeroRel * scale) {
        // Affine map z -> (a z + b) / d fixes infinity.
        if (std::abs(a - d) <= 1e-12 * scale) {
            if (std::abs(b) <= 1e-12 * scale)
                throw InvalidArgument("identity map: every point is fixed");
            return {ComplexPoint::infinity()};
        }
        return {ComplexPoint(b / (d - a)), ComplexPoint::infinity()};
    }

    const Complex tr = a + d;
    const bool parabolic = std::abs(tr.imag()) <= kTraceRealTolerance &&
                           std::abs(std::abs(tr.real()) - 2.0) <= kParabolicTolerance;
    if (parabolic)
        return {ComplexPoint((a - d) / (2.0 * c))};

    // c z^2 + (d - a) z - b = 0
    const Complex s = std::sqrt((a - d) * (a - d) + 4.0 * b * c);
    return {ComplexPoint((a - d + s) / (2.0 * c)), ComplexPoint((a - d - s) / (2.0 * c))};
}

double projective_distance(const MoebiusMap& m1, const MoebiusMap& m2)
{
    const MoebiusMap p = compose(m1, inverse(m2));
    const Complex lead = p.a();
    if (std::abs(lead) <= 1e-12 * p.norm())
        return kInf;
    return std::max({std::abs(p.b() / lead), std::abs(p.c() / lead), std::abs(p.d() / lead - 1.0)});
}

bool projectively_equal(const MoebiusMap& m1, const MoebiusMap& m2, double tol)
{
    return projective_distance(m1, m2) <= tol;
}

MoebiusMap power(const MoebiusMap& m, unsigned k)
{
    MoebiusMap result = MoebiusMap::identity();
    MoebiusMap base = m;
    while (k > 0) {
        if (k & 1U)
            result = compose(result, base);
        base = compose(base, base);
        k >>= 1U;
    }
    return result;
}

} // namespace fuchsian
