#include <cmath>
#include <cstdio>

#include "fuchsian/errors.hpp"
#include "fuchsian/pipeline.hpp"
#include "fuchsian/tessellation.hpp"
#include "fuchsian/whittaker.hpp"

namespace fuchsian::pipeline {

namespace {

Json complex_to_json(Complex z) { return Json::array({z.real(), z.imag()}); }

Complex complex_from_json(const Json& j) { return {j.at(0).get<double>(), j.at(1).get<double>()}; }

void dump_into(const Json& j, std::string& out, int depth)
{
    const std::string pad(static_cast<std::size_t>(2 * (depth + 1)), ' ');
    const std::string close_pad(static_cast<std::size_t>(2 * depth), ' ');
    switch (j.type()) {
    case Json::value_t::object: {
        if (j.empty()) {
            out += "{}";
            return;
        }
        out += "{\n";
        bool first = true;
        for (auto it = j.begin(); it != j.end(); ++it) {
            if (!first)
                out += ",\n";
            first = false;
            out += pad;
            out += Json(it.key()).dump();
            out += ": ";
            dump_into(it.value(), out, depth + 1);
        }
        out += "\n" + close_pad + "}";
        return;
    }
    case Json::value_t::array: {
        if (j.empty()) {
            out += "[]";
            return;
        }
        // Short numeric arrays (points, complex entries) stay on one line.
        const bool flat = j.size() <= 4 && std::all_of(j.begin(), j.end(), [](const Json& e) {
                              return e.is_number() || e.is_string() || e.is_boolean();
                          });
        out += "[";
        bool first = true;
        for (const auto& e : j) {
            if (!first)
                out += flat ? ", " : ",";
            first = false;
            if (!flat)
                out += "\n" + pad;
            dump_into(e, out, depth + 1);
        }
        if (!flat)
            out += "\n" + close_pad;
        out += "]";
        return;
    }
    case Json::value_t::number_float:
        out += format_number(j.get<double>());
        return;
    default:
        out += j.dump();
        return;
    }
}

groups::FuchsianGroupSpec spec_from(const Json& doc, const char* key, groups::FuchsianGroupSpec::Kind kind)
{
    const auto& curve = doc.at("curve");
    groups::FuchsianGroupSpec spec;
    spec.kind = kind;
    spec.curve = curves::HyperellipticCurve(curve.at("genus").get<int>(), parse_sign(curve.at("sign")));
    spec.fixed_index = kind == groups::FuchsianGroupSpec::Kind::GammaP ? doc.at("fixed_index").get<int>() : 0;
    for (const auto& entry : doc.at(key))
        spec.generators.push_back(normalize(matrix_from_json(entry.at("matrix"))));
    return spec;
}

Json report_to_json(const groups::GroupReport& report)
{
    Json gens = Json::array();
    for (const auto& c : report.generators) {
        Json e;
        e["index"] = c.index;
        e["det_residual"] = c.det_residual;
        e["trace"] = complex_to_json(c.trace);
        e["class"] = c.map_class;
        e["involution_residual"] = c.involution_residual;
        e["pass"] = c.pass;
        if (!c.pass)
            e["failure"] = c.failure;
        gens.push_back(std::move(e));
    }
    Json out;
    out["pass"] = report.pass;
    out["generators"] = std::move(gens);
    return out;
}

} // namespace

std::string format_number(double v)
{
    if (!std::isfinite(v))
        return "null";
    if (v == 0.0)
        v = 0.0; // folds -0
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.9e", v);
    std::string s(buf);
    if (s == "-0.000000000e+00")
        s.erase(0, 1);
    return s;
}

std::string dump(const Json& doc)
{
    std::string out;
    dump_into(doc, out, 0);
    out += "\n";
    return out;
}

Json matrix_to_json(const MoebiusMap& m)
{
    return Json::array({complex_to_json(m.a()), complex_to_json(m.b()), complex_to_json(m.c()),
                        complex_to_json(m.d())});
}

MoebiusMap matrix_from_json(const Json& j)
{
    if (!j.is_array() || j.size() != 4)
        throw InvalidArgument("matrix must be an array of four [re, im] pairs");
    return {complex_from_json(j[0]), complex_from_json(j[1]), complex_from_json(j[2]), complex_from_json(j[3])};
}

Json point_to_json(const ComplexPoint& p)
{
    if (p.is_infinite())
        return "infinity";
    return complex_to_json(p.value());
}

curves::Sign parse_sign(const std::string& s)
{
    if (s == "plus" || s == "+1" || s == "+")
        return curves::Sign::Plus;
    if (s == "minus" || s == "-1" || s == "-")
        return curves::Sign::Minus;
    throw InvalidArgument("sign must be 'plus' or 'minus', got '" + s + "'");
}

std::string sign_name(curves::Sign s) { return s == curves::Sign::Plus ? "plus" : "minus"; }

Json genus_report(int m, int n)
{
    const auto range = tessellation::genus_range(m, n);
    Json out;
    out["m"] = m;
    out["n"] = n;
    out["g_min"] = range.g_min;
    out["g_max"] = range.g_max;
    Json per_g = Json::array();
    for (int g = std::max(2, range.g_min); g <= range.g_max; ++g) {
        const auto t = tessellation::tessellation_for_degree(2 * g + 1, g);
        Json e;
        e["g"] = g;
        e["curve_degree"] = 2 * g + 1;
        e["tessellation"] = {{"p", t.p}, {"q", t.q}};
        per_g.push_back(std::move(e));
    }
    out["per_g"] = std::move(per_g);
    return out;
}

Json generators_report(int g, curves::Sign sign, int k)
{
    const curves::HyperellipticCurve curve(g, sign);
    const auto base = groups::boundary_generators(curve);
    const auto sub = groups::subgroup_generators(base, k);
    const auto polygon = groups::fundamental_polygon(curve, k);

    Json out;
    out["curve"] = {{"genus", g}, {"sign", sign_name(sign)}, {"degree", curve.degree()}};
    out["fixed_index"] = k;

    Json roots = Json::array();
    for (const auto& r : curves::roots(curve))
        roots.push_back(point_to_json(r));
    out["roots"] = std::move(roots);

    Json mids = Json::array();
    for (const auto& m : groups::side_midpoints(curve))
        mids.push_back(point_to_json(m));
    out["midpoints"] = std::move(mids);

    Json gamma0 = Json::array();
    for (std::size_t i = 0; i < base.generators.size(); ++i) {
        const auto& t = base.generators[i];
        Json e;
        e["label"] = "T" + std::to_string(i + 1);
        e["matrix"] = matrix_to_json(t);
        e["trace"] = complex_to_json(t.trace());
        e["det"] = complex_to_json(t.det());
        e["class"] = std::string(to_string(classify(t)));
        gamma0.push_back(std::move(e));
    }
    out["gamma0"] = std::move(gamma0);

    Json gamma_p = Json::array();
    Json traces = Json::array();
    std::size_t idx = 0;
    for (int j = 1; j <= curve.degree(); ++j) {
        if (j == k)
            continue;
        const auto& t = sub.generators[idx++];
        Json e;
        e["label"] = "T" + std::to_string(k) + "T" + std::to_string(j);
        e["k"] = k;
        e["j"] = j;
        e["matrix"] = matrix_to_json(t);
        e["trace"] = complex_to_json(t.trace());
        e["abs_trace"] = std::abs(t.trace());
        e["class"] = std::string(to_string(classify(t)));
        traces.push_back(std::abs(t.trace()));
        gamma_p.push_back(std::move(e));
    }
    out["gamma_p"] = std::move(gamma_p);
    out["traces"] = std::move(traces);

    Json verts = Json::array();
    for (const auto& v : polygon.vertices)
        verts.push_back(point_to_json(v));
    out["fundamental_polygon"] = {{"sides", polygon.size()},
                                  {"vertices", std::move(verts)},
                                  {"area", geometry::polygon_area(polygon)}};

    const auto r0 = groups::verify_group(base);
    const auto rp = groups::verify_group(sub);
    out["verify"] = {{"pass", r0.pass && rp.pass}, {"gamma0", report_to_json(r0)}, {"gamma_p", report_to_json(rp)}};
    return out;
}

Json whittaker_report(int g)
{
    using namespace whittaker;
    const auto hde = hde_params(g);
    Json out;
    out["genus"] = g;
    out["hde"] = {{"a", hde.a}, {"alpha", hde.alpha}, {"beta", hde.beta}, {"gamma", hde.gamma}};

    Json gens = Json::array();
    for (int k = 0; k <= 2 * g; ++k) {
        const auto s = whittaker_generator(g, k);
        Json e;
        e["label"] = "S" + std::to_string(k + 1);
        e["k"] = k;
        e["raw"] = matrix_to_json(s.raw);
        e["raw_det"] = complex_to_json(s.raw.det());
        e["normalized"] = matrix_to_json(s.normalized);
        e["trace"] = complex_to_json(s.normalized.trace());
        e["class"] = std::string(to_string(s.map_class));
        gens.push_back(std::move(e));
    }
    out["generators"] = std::move(gens);

    Json sub = Json::array();
    for (const auto& s : whittaker_subgroup(g)) {
        Json e;
        e["label"] = "S" + std::to_string(s.j) + "S1";
        e["j"] = s.j;
        e["matrix"] = matrix_to_json(s.map);
        e["trace"] = complex_to_json(s.map.trace());
        e["class"] = std::string(to_string(s.map_class));
        sub.push_back(std::move(e));
    }
    out["subgroup"] = std::move(sub);

    const auto closed = connection_map(g);
    const auto built = connection_map_from_gammas(g);
    out["connection"] = {{"closed_form", matrix_to_json(closed)},
                         {"from_gammas", matrix_to_json(built)},
                         {"projective_residual", projective_distance(closed, built)}};

    const auto mono = monodromy_zero(g);
    out["monodromy_zero"] = {
        {"matrix", matrix_to_json(mono)},
        {"order", 2 * g + 1},
        {"order_residual", projective_distance(power(mono, static_cast<unsigned>(2 * g + 1)), MoebiusMap::identity())}};

    out["identities"] = {{"a", identity_a_residual(g)},
                         {"b", identity_b_residual(g)},
                         {"sine_product", sine_product_residual(g)}};
    return out;
}

Json tessellation_report(int degree, int g)
{
    const auto t = tessellation::tessellation_for_degree(degree, g);
    const auto chi = tessellation::euler_characteristic(t.p, t.q);
    const auto cycles = tessellation::cycle_count(t.p, t.q);
    Json out;
    out["degree"] = degree;
    out["genus"] = g;
    out["p"] = t.p;
    out["q"] = t.q;
    out["hyperbolic"] = t.hyperbolic;
    out["euler_characteristic"] = {{"num", chi.num}, {"den", chi.den}};
    out["cycle_count"] = {{"num", cycles.num}, {"den", cycles.den}, {"divisible", cycles.is_integer()}};
    return out;
}

groups::FuchsianGroupSpec gamma0_from_report(const Json& doc)
{
    return spec_from(doc, "gamma0", groups::FuchsianGroupSpec::Kind::Gamma0);
}

groups::FuchsianGroupSpec gamma_p_from_report(const Json& doc)
{
    return spec_from(doc, "gamma_p", groups::FuchsianGroupSpec::Kind::GammaP);
}

} // namespace fuchsian::pipeline
