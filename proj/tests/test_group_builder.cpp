#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "fuchsian/errors.hpp"
#include "fuchsian/group_builder.hpp"
#include "support.hpp"

using namespace fuchsian;
using namespace fuchsian::groups;
using curves::HyperellipticCurve;
using curves::Sign;
using testdata::kPi;

TEST_CASE("boundary_generators")
{
    const auto spec = boundary_generators({2, Sign::Minus});
    REQUIRE(spec.generators.size() == 5);
    CHECK(spec.kind == FuchsianGroupSpec::Kind::Gamma0);
    CHECK(testdata::entry_distance(spec.generators[0], testdata::kT1) < 1e-3);
    CHECK(testdata::entry_distance(spec.generators[1], testdata::kT2) < 2e-3);

    for (int g = 1; g <= 6; ++g)
        for (auto sign : {Sign::Minus, Sign::Plus}) {
            const HyperellipticCurve curve(g, sign);
            const auto s = boundary_generators(curve);
            REQUIRE(static_cast<int>(s.generators.size()) == 2 * g + 1);
            const auto c = curves::roots(curve);
            for (std::size_t j = 0; j < s.generators.size(); ++j) {
                const auto& t = s.generators[j];
                CHECK(std::abs(t.trace()) < 1e-8);
                CHECK(std::abs(t.det() - 1.0) < 1e-9);
                // T_j swaps the endpoints of side j.
                const auto& a = c[j];
                const auto& b = c[(j + 1) % c.size()];
                CHECK(point_distance(fuchsian::apply(t, a), b) < 1e-8);
                CHECK(point_distance(fuchsian::apply(t, b), a) < 1e-8);
            }
        }
}

TEST_CASE("side_midpoints")
{
    const auto m = side_midpoints({2, Sign::Minus});
    REQUIRE(m.size() == 5);
    for (std::size_t j = 0; j < 5; ++j)
        CHECK(std::abs(m[j].value() - testdata::kMidpoints[j]) < 1e-3);
}

TEST_CASE("subgroup_generators")
{
    const auto base = boundary_generators({2, Sign::Minus});
    const auto sub = subgroup_generators(base);
    REQUIRE(sub.generators.size() == 4);
    CHECK(sub.fixed_index == 1);
    CHECK(sub.kind == FuchsianGroupSpec::Kind::GammaP);
    for (std::size_t i = 0; i < 4; ++i)
        CHECK(std::abs(std::abs(sub.generators[i].trace()) - testdata::kAbsTraces[i]) < 1e-3);
    CHECK(testdata::entry_distance(sub.generators[0], testdata::kT1T2) < 2e-3);

    CHECK_THROWS_AS(subgroup_generators(base, 0), InvalidArgument);
    CHECK_THROWS_AS(subgroup_generators(base, 6), InvalidArgument);
    CHECK_THROWS_AS(subgroup_generators(sub), InvalidArgument);

    SUBCASE("a corrupted base with an elliptic product is refused")
    {
        auto bad = base;
        // T_1 T_1 is projectively the identity, which is not hyperbolic.
        bad.generators[1] = bad.generators[0];
        CHECK_THROWS_AS(subgroup_generators(bad), AlgorithmError);
    }

    SUBCASE("every k, every genus, both signs")
    {
        for (int g = 1; g <= 6; ++g)
            for (auto sign : {Sign::Minus, Sign::Plus}) {
                const auto b = boundary_generators({g, sign});
                const int n = 2 * g + 1;
                for (int k = 1; k <= n; ++k) {
                    const auto s = subgroup_generators(b, k);
                    REQUIRE(static_cast<int>(s.generators.size()) == 2 * g);
                    std::vector<double> by_j(static_cast<std::size_t>(n + 1), 0.0);
                    std::size_t idx = 0;
                    for (int j = 1; j <= n; ++j) {
                        if (j == k)
                            continue;
                        CHECK(classify(s.generators[idx]) == MapClass::Hyperbolic);
                        by_j[static_cast<std::size_t>(j)] = std::abs(s.generators[idx].trace());
                        ++idx;
                    }
                    // |tr(T_k T_j)| depends only on the cyclic distance between k and j.
                    for (int d = 1; d < n; ++d) {
                        const int j1 = (k - 1 + d) % n + 1;
                        const int j2 = ((k - 1 - d) % n + n) % n + 1;
                        CHECK(std::abs(by_j[static_cast<std::size_t>(j1)] - by_j[static_cast<std::size_t>(j2)]) < 1e-8);
                    }
                }
            }
    }
}

TEST_CASE("fundamental_polygon")
{
    const auto p2 = fundamental_polygon({2, Sign::Minus});
    CHECK(p2.size() == 8);
    CHECK(geometry::polygon_area(p2) == doctest::Approx(6 * kPi).epsilon(1e-12));
    CHECK(fundamental_polygon({3, Sign::Minus}).size() == 12);
    CHECK_THROWS_AS(fundamental_polygon({2, Sign::Minus}, 0), InvalidArgument);

    for (int g = 1; g <= 6; ++g)
        for (auto sign : {Sign::Minus, Sign::Plus})
            for (int k : {1, 2 * g + 1}) {
                const HyperellipticCurve curve(g, sign);
                const auto poly = fundamental_polygon(curve, k);
                CHECK(static_cast<int>(poly.size()) == 2 * (curve.degree() - 1));
                CHECK(geometry::polygon_area(poly) == doctest::Approx((4 * g - 2) * kPi).epsilon(1e-12));
                // Ideal vertices, counterclockwise from c1.
                CHECK(std::abs(poly.vertices[0].value() - curves::roots(curve)[0].value()) < 1e-12);
                double prev = 0;
                for (std::size_t i = 1; i < poly.size(); ++i) {
                    const Complex v = poly.vertices[i].value();
                    CHECK(std::abs(std::abs(v) - 1.0) < 1e-12);
                    double t = std::arg(v / poly.vertices[0].value());
                    if (t < 0)
                        t += 2 * kPi;
                    CHECK(t > prev);
                    prev = t;
                }
            }
}

TEST_CASE("verify_group")
{
    const auto base = boundary_generators({2, Sign::Minus});
    const auto r0 = verify_group(base);
    CHECK(r0.pass);
    REQUIRE(r0.generators.size() == 5);
    for (const auto& c : r0.generators) {
        CHECK(c.map_class == "elliptic");
        CHECK(c.involution_residual < 1e-10);
    }
    const auto rp = verify_group(subgroup_generators(base));
    CHECK(rp.pass);
    for (const auto& c : rp.generators)
        CHECK(c.map_class == "hyperbolic");

    SUBCASE("perturbed entry fails")
    {
        auto bad = base;
        const auto& t = bad.generators[0];
        bad.generators[0] = MoebiusMap(t.a() + 0.1, t.b(), t.c(), t.d());
        const auto r = verify_group(bad);
        CHECK_FALSE(r.pass);
        CHECK_FALSE(r.generators[0].pass);
        CHECK_FALSE(r.generators[0].failure.empty());
        CHECK(r.generators[1].pass);
    }

    SUBCASE("wrong generator count fails")
    {
        auto short_spec = base;
        short_spec.generators.pop_back();
        CHECK_FALSE(verify_group(short_spec).pass);
    }
}
