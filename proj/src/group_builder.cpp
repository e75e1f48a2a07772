#include "fuchsian/group_builder.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "fuchsian/errors.hpp"

namespace fuchsian::groups {

namespace {

std::size_t wrap(std::size_t i, std::size_t n) { return i % n; }

} // namespace

std::vector<ComplexPoint> side_midpoints(const curves::HyperellipticCurve& curve)
{
    const auto c = curves::roots(curve);
    const std::size_t n = c.size();
    std::vector<ComplexPoint> out;
    out.reserve(n);
    for (std::size_t j = 0; j < n; ++j)
        out.push_back(geometry::geodesic_apex(c[j], c[wrap(j + 1, n)]));
    return out;
}

FuchsianGroupSpec boundary_generators(const curves::HyperellipticCurve& curve)
{
    const auto c = curves::roots(curve);
    const auto m = side_midpoints(curve);
    const std::size_t n = c.size();

    FuchsianGroupSpec spec;
    spec.kind = FuchsianGroupSpec::Kind::Gamma0;
    spec.curve = curve;
    spec.generators.reserve(n);
    for (std::size_t j = 0; j < n; ++j)
        spec.generators.push_back(geometry::side_pairing_elliptic(c[j], c[wrap(j + 1, n)], m[j]));
    return spec;
}

FuchsianGroupSpec subgroup_generators(const FuchsianGroupSpec& base, int k)
{
    if (base.kind != FuchsianGroupSpec::Kind::Gamma0)
        throw InvalidArgument("subgroup_generators expects a Gamma0 spec");
    const int n = static_cast<int>(base.generators.size());
    if (n != base.curve.degree())
        throw InvalidArgument("Gamma0 spec must carry one generator per root");
    if (k < 1 || k > n)
        throw InvalidArgument("fixed index k must lie in 1..n");

    FuchsianGroupSpec spec;
    spec.kind = FuchsianGroupSpec::Kind::GammaP;
    spec.curve = base.curve;
    spec.fixed_index = k;
    const MoebiusMap& fixed = base.generators[static_cast<std::size_t>(k - 1)];
    for (int j = 1; j <= n; ++j) {
        if (j == k)
            continue;
        const MoebiusMap product = normalize(compose(fixed, base.generators[static_cast<std::size_t>(j - 1)]));
        MapClass cls{};
        try {
            cls = classify(product);
        } catch (const ClassificationError&) {
            throw AlgorithmError("product T_" + std::to_string(k) + "T_" + std::to_string(j) +
                                 " has a non-real trace");
        }
        if (cls != MapClass::Hyperbolic)
            throw AlgorithmError("product T_" + std::to_string(k) + "T_" + std::to_string(j) +
                                 " is not hyperbolic");
        spec.generators.push_back(product);
    }
    return spec;
}

geometry::HyperbolicPolygon fundamental_polygon(const curves::HyperellipticCurve& curve, int k)
{
    const auto c = curves::roots(curve);
    const std::size_t n = c.size();
    if (k < 1 || k > static_cast<int>(n))
        throw InvalidArgument("juxtaposition side k must lie in 1..n");

    const std::size_t s0 = static_cast<std::size_t>(k - 1);
    const std::size_t s1 = wrap(s0 + 1, n);
    const geometry::GeodesicArc side = geometry::geodesic_between(c[s0], c[s1]);

    std::vector<Complex> vertices;
    vertices.reserve(2 * n - 2);
    for (std::size_t j = 0; j < n; ++j) {
        vertices.push_back(c[j].value());
        if (j != s0 && j != s1)
            vertices.push_back(geometry::reflect_across(side, c[j].value()));
    }

    const double start = std::arg(c[0].value());
    auto ccw_offset = [start](Complex z) {
        double t = std::arg(z) - start;
        while (t < 0.0)
            t += 2.0 * std::numbers::pi;
        while (t >= 2.0 * std::numbers::pi)
            t -= 2.0 * std::numbers::pi;
        return t;
    };
    std::sort(vertices.begin(), vertices.end(),
              [&](Complex u, Complex v) { return ccw_offset(u) < ccw_offset(v); });

    return geometry::make_polygon(std::vector<ComplexPoint>(vertices.begin(), vertices.end()));
}

GroupReport verify_group(const FuchsianGroupSpec& spec, const VerifyTolerances& tol)
{
    const bool gamma0 = spec.kind == FuchsianGroupSpec::Kind::Gamma0;
    GroupReport report;
    report.pass = true;

    for (std::size_t i = 0; i < spec.generators.size(); ++i) {
        const MoebiusMap& m = spec.generators[i];
        GeneratorCheck check;
        check.index = i + 1;
        check.det_residual = std::abs(m.det() - 1.0);
        check.trace = m.trace();
        check.pass = true;

        auto fail = [&check](const std::string& why) {
            if (check.pass)
                check.failure = why;
            check.pass = false;
        };

        if (check.det_residual > tol.det)
            fail("determinant differs from 1");

        MapClass cls{};
        const bool real = std::abs(normalize(m).trace().imag()) <= tol.trace_real;
        if (real) {
            cls = classify(m);
            check.map_class = std::string(to_string(cls));
        } else {
            check.map_class = "non-real";
            fail("trace is not real");
        }

        if (gamma0) {
            check.involution_residual = projective_distance(compose(m, m), MoebiusMap::identity());
            if (real && cls != MapClass::Elliptic)
                fail("Gamma0 generator is not elliptic");
            if (std::abs(check.trace) > tol.involution)
                fail("Gamma0 generator trace is not 0");
            if (check.involution_residual > tol.involution)
                fail("Gamma0 generator is not an involution");
        } else if (real && cls != MapClass::Hyperbolic) {
            fail("GammaP generator is not hyperbolic");
        }

        report.pass = report.pass && check.pass;
        report.generators.push_back(std::move(check));
    }

    if (gamma0) {
        if (static_cast<int>(spec.generators.size()) != spec.curve.degree())
            report.pass = false;
    } else if (static_cast<int>(spec.generators.size()) != 2 * spec.curve.genus()) {
        report.pass = false;
    }
    return report;
}

} // namespace fuchsian::groups
