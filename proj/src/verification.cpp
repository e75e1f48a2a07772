#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <limits>
#include <numbers>
#include <random>

#include "fuchsian/errors.hpp"
#include "fuchsian/hypergeometric.hpp"
#include "fuchsian/pipeline.hpp"
#include "fuchsian/tessellation.hpp"
#include "fuchsian/whittaker.hpp"

namespace fuchsian::pipeline {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kFailed = std::numeric_limits<double>::infinity();

class Suite {
public:
    // Runs `body`, which returns the worst residual; an exception counts as
    // an infinite residual so the check fails rather than aborting the run.
    void check(std::string name, double tolerance, const std::function<double()>& body)
    {
        double residual = kFailed;
        try {
            residual = body();
        } catch (const std::exception&) {
            residual = kFailed;
        }
        const bool pass = std::isfinite(residual) && residual <= tolerance;
        results_.push_back({std::move(name), residual, tolerance, pass});
    }

    std::vector<CheckResult> take() { return std::move(results_); }

private:
    std::vector<CheckResult> results_;
};

double rel(Complex got, Complex want) { return std::abs(got - want) / std::max(1.0, std::abs(want)); }

Complex random_in_disk(std::mt19937_64& rng, double radius)
{
    std::uniform_real_distribution<double> u(0.0, 1.0);
    const double r = radius * std::sqrt(u(rng));
    const double t = 2.0 * kPi * u(rng);
    return std::polar(r, t);
}

// Reference values for y^2 = z^5 - 1, four to six digits.
const std::array<Complex, 5> kRootsZ5{
    {{0.3090, 0.9511}, {-0.8090, 0.5878}, {-0.8090, -0.5878}, {0.3090, -0.9511}, {1.0, 0.0}}};
const std::array<Complex, 5> kMidpointsZ5{
    {{-0.1575, 0.4846}, {-0.5095, 0.0}, {-0.1575, -0.4846}, {0.4122, -0.2995}, {0.4122, 0.2995}}};
const std::array<Complex, 4> kT1{{{0.0, 1.7013}, {1.30902, 0.425325}, {1.30902, -0.425325}, {0.0, -1.7013}}};
const std::array<double, 4> kTracesZ5{4.6180, 8.8541, 8.8541, 4.6180};

void reference_checks(Suite& suite, const VerifyOptions& options)
{
    const curves::HyperellipticCurve curve(2, curves::Sign::Minus);
    auto base = groups::boundary_generators(curve);
    if (options.perturb_t1 != 0.0) {
        const auto& t = base.generators[0];
        base.generators[0] = MoebiusMap(t.a() + options.perturb_t1, t.b(), t.c(), t.d());
    }

    suite.check("z5_minus_1_roots", 1e-4, [&] {
        const auto c = curves::roots(curve);
        double worst = 0;
        for (std::size_t j = 0; j < 5; ++j)
            worst = std::max(worst, std::abs(c[j].value() - kRootsZ5[j]));
        return worst;
    });
    suite.check("z5_minus_1_midpoints", 1e-3, [&] {
        const auto m = groups::side_midpoints(curve);
        double worst = 0;
        for (std::size_t j = 0; j < 5; ++j)
            worst = std::max(worst, std::abs(m[j].value() - kMidpointsZ5[j]));
        return worst;
    });
    suite.check("z5_minus_1_t1_entries", 1e-3, [&] {
        const auto& t = base.generators[0];
        const std::array<Complex, 4> got{t.a(), t.b(), t.c(), t.d()};
        double worst = 0;
        for (std::size_t i = 0; i < 4; ++i)
            worst = std::max(worst, std::abs(got[i] - kT1[i]));
        return worst;
    });
    suite.check("z5_minus_1_traces |Tr(T1T2..T1T5)| = 4.6180 8.8541 8.8541 4.6180", 1e-3, [&] {
        double worst = 0;
        for (std::size_t j = 1; j < 5; ++j) {
            const auto p = normalize(compose(base.generators[0], base.generators[j]));
            worst = std::max(worst, std::abs(std::abs(p.trace()) - kTracesZ5[j - 1]));
        }
        return worst;
    });
}

void group_checks(Suite& suite)
{
    for (int g = 1; g <= 6; ++g) {
        for (auto sign : {curves::Sign::Minus, curves::Sign::Plus}) {
            const std::string tag = "g=" + std::to_string(g) + " sign=" + sign_name(sign);
            suite.check("gamma0_contract " + tag, 0.0, [&] {
                const auto report = groups::verify_group(groups::boundary_generators({g, sign}));
                return report.pass ? 0.0 : 1.0;
            });
            suite.check("gamma_p_hyperbolic " + tag, 0.0, [&] {
                const auto sub = groups::subgroup_generators(groups::boundary_generators({g, sign}));
                return groups::verify_group(sub).pass ? 0.0 : 1.0;
            });
        }
    }
    suite.check("json_round_trip_reverify g=2", 0.0, [] {
        const auto doc = Json::parse(dump(generators_report(2, curves::Sign::Minus)));
        const bool ok = groups::verify_group(gamma0_from_report(doc)).pass &&
                        groups::verify_group(gamma_p_from_report(doc)).pass;
        return ok ? 0.0 : 1.0;
    });
}

void geometry_checks(Suite& suite)
{
    suite.check("cross_ratio_invariance (100 quadruples x 20 maps)", 1e-9, [] {
        std::mt19937_64 rng(11);
        std::normal_distribution<double> n(0.0, 1.0);
        std::vector<MoebiusMap> maps;
        while (maps.size() < 20) {
            const MoebiusMap m({n(rng), n(rng)}, {n(rng), n(rng)}, {n(rng), n(rng)}, {n(rng), n(rng)});
            if (std::abs(m.det()) > 0.1)
                maps.push_back(normalize(m));
        }
        double worst = 0;
        for (int q = 0; q < 100; ++q) {
            std::array<Complex, 4> z{};
            for (auto& p : z)
                p = random_in_disk(rng, 1.0);
            const Complex cr = geometry::cross_ratio(z[0], z[1], z[2], z[3]);
            for (const auto& m : maps) {
                const Complex img =
                    geometry::cross_ratio(fuchsian::apply(m, z[0]), fuchsian::apply(m, z[1]),
                                          fuchsian::apply(m, z[2]), fuchsian::apply(m, z[3]));
                worst = std::max(worst, rel(img, cr));
            }
        }
        return worst;
    });
    suite.check("geodesic_orthogonality |c|^2 - r^2 = 1", 1e-9, [] {
        std::mt19937_64 rng(12);
        std::uniform_real_distribution<double> t(0.0, 2.0 * kPi);
        double worst = 0;
        for (int i = 0; i < 200; ++i) {
            const Complex a = i % 2 ? std::polar(1.0, t(rng)) : random_in_disk(rng, 0.99);
            const Complex b = random_in_disk(rng, 0.99);
            const auto arc = geometry::geodesic_between(a, b);
            if (arc.is_arc())
                worst = std::max(worst, std::abs(std::norm(arc.center) - arc.radius * arc.radius - 1.0) /
                                            std::max(1.0, std::norm(arc.center)));
        }
        return worst;
    });
    for (int g = 1; g <= 6; ++g) {
        suite.check("ideal_polygon_area g=" + std::to_string(g) + " = (4g-2)pi", 1e-9, [g] {
            const auto poly = groups::fundamental_polygon({g, curves::Sign::Minus});
            if (static_cast<int>(poly.size()) != 4 * g)
                return kFailed;
            return std::abs(geometry::polygon_area(poly) - (4.0 * g - 2.0) * kPi);
        });
    }
}

void tessellation_checks(Suite& suite)
{
    suite.check("degree_family_table g=2..10", 0.0, [] {
        int mismatches = 0;
        for (int g = 2; g <= 10; ++g) {
            const std::array<std::array<int, 3>, 3> rows{
                {{2 * g + 1, 4 * g, 4 * g}, {2 * g + 2, 4 * g + 2, 2 * g + 1}, {6 * g - 2, 12 * g - 6, 3}}};
            for (const auto& [degree, p, q] : rows) {
                const auto t = tessellation::tessellation_for_degree(degree, g);
                const auto chi = tessellation::euler_characteristic(t.p, t.q);
                const bool ok = t.p == p && t.q == q && t.hyperbolic &&
                                chi == tessellation::make_rational(2 - 2 * g, 1);
                mismatches += ok ? 0 : 1;
            }
        }
        return static_cast<double>(mismatches);
    });
}

void whittaker_checks(Suite& suite)
{
    using namespace whittaker;
    suite.check("connection_trig_identities g=2..8", 1e-12, [] {
        double worst = 0;
        for (int g = 2; g <= 8; ++g)
            worst = std::max({worst, identity_a_residual(g), identity_b_residual(g), sine_product_residual(g)});
        return worst;
    });
    suite.check("connection_map_equals_gamma_construction g=2..5", 1e-8, [] {
        double worst = 0;
        for (int g = 2; g <= 5; ++g)
            worst = std::max(worst, projective_distance(connection_map(g), connection_map_from_gammas(g)));
        return worst;
    });
    suite.check("monodromy_zero^(2g+1) = identity g=2..8", 1e-10, [] {
        double worst = 0;
        for (int g = 2; g <= 8; ++g)
            worst = std::max(worst, projective_distance(power(monodromy_zero(g), static_cast<unsigned>(2 * g + 1)),
                                                        MoebiusMap::identity()));
        return worst;
    });
    suite.check("whittaker_generators_involutions g=2..6", 1e-8, [] {
        double worst = 0;
        for (int g = 2; g <= 6; ++g)
            for (int k = 0; k <= 2 * g; ++k) {
                const auto s = whittaker_generator(g, k);
                worst = std::max({worst, std::abs(s.raw.trace()),
                                  projective_distance(compose(s.normalized, s.normalized), MoebiusMap::identity())});
            }
        return worst;
    });
    suite.check("whittaker_subgroup_real_traces g=2..6", 1e-8, [] {
        double worst = 0;
        for (int g = 2; g <= 6; ++g) {
            const auto sub = whittaker_subgroup(g);
            if (static_cast<int>(sub.size()) != 2 * g)
                return kFailed;
            for (const auto& e : sub)
                worst = std::max(worst, std::abs(e.map.trace().imag()));
        }
        return worst;
    });
}

struct Params {
    double a, b, c;
};

void hypergeometric_checks(Suite& suite)
{
    using namespace whittaker;
    std::mt19937_64 rng(13);
    std::uniform_real_distribution<double> par(0.1, 1.5);
    std::vector<std::pair<Params, Complex>> samples;
    for (int i = 0; i < 50; ++i) {
        Params p{par(rng), par(rng), 0.0};
        p.c = p.a + p.b + par(rng); // keeps c - a - b > 0 and c away from poles
        samples.push_back({p, random_in_disk(rng, 0.8)});
    }

    suite.check("hyp2f1_property_1 symmetry", 1e-9, [&] {
        double worst = 0;
        for (const auto& [p, z] : samples)
            worst = std::max(worst, rel(hyp2f1(p.a, p.b, p.c, z), hyp2f1(p.b, p.a, p.c, z)));
        return worst;
    });
    suite.check("hyp2f1_property_2 gauss value", 1e-10, [&] {
        double worst = 0;
        for (const auto& [p, z] : samples) {
            const double want =
                std::tgamma(p.c) * std::tgamma(p.c - p.a - p.b) / (std::tgamma(p.c - p.a) * std::tgamma(p.c - p.b));
            worst = std::max(worst, rel(hyp2f1(p.a, p.b, p.c, 1.0), want));
        }
        return worst;
    });
    suite.check("hyp2f1_property_3 F(z=0) = 1", 1e-9, [&] {
        double worst = 0;
        for (const auto& [p, z] : samples)
            worst = std::max(worst, std::abs(hyp2f1(p.a, p.b, p.c, 0.0) - 1.0));
        return worst;
    });
    suite.check("hyp2f1_property_4 F(a,b;b;z) = (1-z)^-a", 1e-9, [&] {
        double worst = 0;
        for (const auto& [p, z] : samples)
            worst = std::max(worst, rel(hyp2f1(p.a, p.b, p.b, z), std::pow(1.0 - z, -p.a)));
        return worst;
    });
    suite.check("hyp2f1_property_5 euler transformation", 1e-9, [&] {
        double worst = 0;
        for (const auto& [p, z] : samples)
            worst = std::max(worst, rel(hyp2f1(p.a, p.b, p.c, z),
                                        std::pow(1.0 - z, p.c - p.a - p.b) * hyp2f1(p.c - p.a, p.c - p.b, p.c, z)));
        return worst;
    });
    suite.check("hyp2f1_property_6 contiguous relation", 1e-9, [&] {
        double worst = 0;
        for (const auto& [p, z] : samples) {
            const double c = p.c + 1.0; // keeps c - 1 away from zero
            const Complex lhs = (1.0 - z) * hyp2f1(p.a, p.b, c - 1.0, z);
            const Complex rhs = (1.0 + z * (p.a + p.b - 2.0 * c + 1.0) / (c - 1.0)) * hyp2f1(p.a, p.b, c, z) +
                                z * (c - p.a) * (c - p.b) / (c * (c - 1.0)) * hyp2f1(p.a, p.b, c + 1.0, z);
            worst = std::max(worst, rel(lhs, rhs));
        }
        return worst;
    });
    suite.check("continuation_residuals (two basis solutions, 20 z in (0.1,0.9))", 1e-10, [] {
        double worst = 0;
        for (int g = 2; g <= 5; ++g) {
            const auto h = hde_params(g);
            for (int i = 0; i < 20; ++i) {
                const double z = 0.1 + 0.8 * (i + 0.5) / 20.0;
                worst = std::max({worst, continuation_residual(h.alpha, h.beta, h.gamma, z),
                                  continuation_residual(h.alpha + 1.0 - h.gamma, h.beta + 1.0 - h.gamma,
                                                        2.0 - h.gamma, z)});
            }
        }
        return worst;
    });
    suite.check("gamma_fn relative error on [0.05, 10]", 1e-12, [] {
        double worst = 0;
        for (int i = 0; i <= 500; ++i) {
            const double x = 0.05 + (10.0 - 0.05) * i / 500.0;
            worst = std::max(worst, std::abs(gamma_fn(x) / std::tgamma(x) - 1.0));
        }
        return worst;
    });
}

void fde_checks(Suite& suite)
{
    suite.check("fde_coefficient g=2 sign=plus matches expanded form", 1e-12, [] {
        const curves::HyperellipticCurve curve(2, curves::Sign::Plus);
        const auto roots = curves::roots(curve);
        std::mt19937_64 rng(14);
        double worst = 0;
        int taken = 0;
        while (taken < 100) {
            const Complex z = random_in_disk(rng, 2.0);
            const bool near_root = std::any_of(roots.begin(), roots.end(),
                                               [z](const ComplexPoint& c) { return std::abs(z - c.value()) < 0.05; });
            if (near_root)
                continue;
            ++taken;
            const Complex d = 1.0 + z * z * z * z * z;
            const Complex z3 = z * z * z;
            const Complex want = 3.0 / 16.0 * (25.0 * z3 * z3 * z * z / (d * d) - 24.0 * z3 / d);
            worst = std::max(worst, rel(curves::fde_coefficient(curve, z), want));
        }
        return worst;
    });
}

} // namespace

std::vector<CheckResult> run_verification(const VerifyOptions& options)
{
    Suite suite;
    reference_checks(suite, options);
    group_checks(suite);
    geometry_checks(suite);
    tessellation_checks(suite);
    whittaker_checks(suite);
    hypergeometric_checks(suite);
    fde_checks(suite);
    return suite.take();
}

} // namespace fuchsian::pipeline
