#pragma once

#include <string>
#include <vector>

#include "fuchsian/curves.hpp"
#include "fuchsian/disk_geometry.hpp"
#include "fuchsian/moebius.hpp"

namespace fuchsian::groups {

/// Generators of the elliptic group of the root polygon (Gamma0), or of the
/// hyperbolic subgroup formed with a fixed element (GammaP).
struct FuchsianGroupSpec {
    enum class Kind { Gamma0, GammaP };

    Kind kind = Kind::Gamma0;
    std::vector<MoebiusMap> generators;
    curves::HyperellipticCurve curve{1, curves::Sign::Minus};
    int fixed_index = 0; // 1-based k for GammaP, 0 for Gamma0
};

/// T_j = side-pairing elliptic of the side (c_j, c_{j+1}) about its apex,
/// for each cyclically adjacent pair of roots.
FuchsianGroupSpec boundary_generators(const curves::HyperellipticCurve& curve);

/// The 2g products T_k T_j, j != k, in ascending j. Throws AlgorithmError if
/// a product is not hyperbolic.
FuchsianGroupSpec subgroup_generators(const FuchsianGroupSpec& base, int k = 1);

/// 4g-gon from the root polygon and its reflection across side k, vertices
/// counterclockwise from c_1.
geometry::HyperbolicPolygon fundamental_polygon(const curves::HyperellipticCurve& curve, int k = 1);

/// Apex of each root polygon side, in side order.
std::vector<ComplexPoint> side_midpoints(const curves::HyperellipticCurve& curve);

struct VerifyTolerances {
    double det = 1e-9;
    double trace_real = 1e-6;
    double involution = 1e-8;
};

struct GeneratorCheck {
    std::size_t index = 0;
    double det_residual = 0;
    Complex trace{};
    std::string map_class; // "elliptic", "parabolic", "hyperbolic", or "non-real"
    double involution_residual = 0; // Gamma0 only
    bool pass = false;
    std::string failure;
};

struct GroupReport {
    std::vector<GeneratorCheck> generators;
    bool pass = false;
};

/// Per-generator det, trace, class, and (Gamma0) involution residual. Gamma0
/// generators must be elliptic with trace 0; GammaP generators hyperbolic
/// and 2g in number. Failures are reported, never thrown.
GroupReport verify_group(const FuchsianGroupSpec& spec, const VerifyTolerances& tol = {});

} // namespace fuchsian::groups
