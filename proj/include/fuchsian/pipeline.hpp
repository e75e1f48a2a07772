#pragma once

#include <string>
#include <vector>

#include "json.hpp"

#include "fuchsian/curves.hpp"
#include "fuchsian/group_builder.hpp"
#include "fuchsian/moebius.hpp"

namespace fuchsian::pipeline {

using Json = nlohmann::ordered_json;

/// Ten significant digits, lowercase scientific notation; negative zero is
/// printed as zero.
std::string format_number(double v);

/// Serializes with format_number for every floating value, keys in
/// insertion order, two-space indentation. Same input, same bytes.
std::string dump(const Json& doc);

/// [[re,im],[re,im],[re,im],[re,im]] for a, b, c, d.
Json matrix_to_json(const MoebiusMap& m);
MoebiusMap matrix_from_json(const Json& j);

/// [re, im], or the string "infinity".
Json point_to_json(const ComplexPoint& p);

curves::Sign parse_sign(const std::string& s);
std::string sign_name(curves::Sign s);

Json genus_report(int m, int n);
Json generators_report(int g, curves::Sign sign, int k = 1);
Json whittaker_report(int g);
Json tessellation_report(int degree, int g);

/// Re-reads the gamma0 and gamma_p matrices of a generators_report document.
/// Matrices are normalized on the way in since the text is rounded.
groups::FuchsianGroupSpec gamma0_from_report(const Json& doc);
groups::FuchsianGroupSpec gamma_p_from_report(const Json& doc);

/// SVG 1.1 drawing (viewBox 0 0 1000 1000) of the unit circle, the root
/// polygon with its side apexes, and the shaded fundamental region.
std::string render_svg(int g, curves::Sign sign, int k = 1);

struct CheckResult {
    std::string name;
    double residual = 0;
    double tolerance = 0;
    bool pass = false;
};

struct VerifyOptions {
    /// Added to entry a of T_1 before the y^2 = z^5 - 1 reference checks; a negative
    /// control for the suite.
    double perturb_t1 = 0.0;
};

std::vector<CheckResult> run_verification(const VerifyOptions& options = {});

} // namespace fuchsian::pipeline
