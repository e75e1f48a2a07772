#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <boost/property_tree/ptree.hpp>
#include <boost/property_tree/xml_parser.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <sys/wait.h>

#include "fuchsian/errors.hpp"
#include "fuchsian/pipeline.hpp"
#include "support.hpp"

using namespace fuchsian;
using namespace fuchsian::pipeline;
namespace fs = std::filesystem;
namespace pt = boost::property_tree;

namespace {

Complex pair(const Json& j) { return {j.at(0).get<double>(), j.at(1).get<double>()}; }

// Runs the CLI through the shell and returns its exit status.
int run_cli(const std::string& args)
{
    const std::string cmd = std::string(FUCHSIAN_CLI_PATH) + " " + args + " >/dev/null 2>&1";
    const int status = std::system(cmd.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string read_file(const fs::path& p)
{
    std::ifstream in(p, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

fs::path temp_path(const std::string& name) { return fs::temp_directory_path() / ("fuchsian_test_" + name); }

struct SvgCounts {
    int root = 0, midpoint = 0, region = 0, root_side = 0, boundary = 0, text = 0;
    std::string region_d;
    std::string boundary_dash;
};

void walk(const pt::ptree& node, SvgCounts& counts)
{
    for (const auto& [tag, child] : node) {
        if (tag == "<xmlattr>")
            continue;
        const std::string cls = child.get("<xmlattr>.class", "");
        if (tag == "circle" && cls == "root")
            ++counts.root;
        if (tag == "circle" && cls == "midpoint")
            ++counts.midpoint;
        if (tag == "circle" && cls == "boundary") {
            ++counts.boundary;
            counts.boundary_dash = child.get("<xmlattr>.stroke-dasharray", "");
        }
        if (tag == "path" && cls == "fundamental-region") {
            ++counts.region;
            counts.region_d = child.get("<xmlattr>.d", "");
        }
        if (tag == "path" && cls == "root-side")
            ++counts.root_side;
        if (tag == "text")
            ++counts.text;
        walk(child, counts);
    }
}

SvgCounts parse_svg(const std::string& svg)
{
    std::istringstream in(svg);
    pt::ptree tree;
    pt::read_xml(in, tree);
    SvgCounts counts;
    REQUIRE(tree.get<std::string>("svg.<xmlattr>.viewBox") == "0 0 1000 1000");
    walk(tree.get_child("svg"), counts);
    return counts;
}

int count_arcs(const std::string& d)
{
    int n = 0;
    for (char ch : d)
        n += (ch == 'A' || ch == 'L') ? 1 : 0;
    return n;
}

} // namespace

TEST_CASE("format_number")
{
    CHECK(format_number(1.0) == "1.000000000e+00");
    CHECK(format_number(-0.0) == "0.000000000e+00");
    CHECK(format_number(0.0) == "0.000000000e+00");
    CHECK(format_number(-1.23456789012) == "-1.234567890e+00");
    CHECK(format_number(4.6180339887e-20) == "4.618033989e-20");
    CHECK(format_number(std::nan("")) == "null");
}

TEST_CASE("dump is deterministic and parseable")
{
    const Json doc = generators_report(2, curves::Sign::Minus);
    const std::string a = dump(doc);
    const std::string b = dump(generators_report(2, curves::Sign::Minus));
    CHECK(a == b);
    const Json back = Json::parse(a);
    CHECK(back.at("curve").at("degree").get<int>() == 5);
    CHECK(dump(back) == a);
    CHECK(a.find("-0.000000000e+00") == std::string::npos);
}

TEST_CASE("genus report")
{
    const Json doc = genus_report(4, 4);
    CHECK(doc["g_min"] == 1);
    CHECK(doc["g_max"] == 4);
    REQUIRE(doc["per_g"].size() == 3);
    const int want[3][3] = {{2, 8, 8}, {3, 12, 12}, {4, 16, 16}};
    for (std::size_t i = 0; i < 3; ++i) {
        CHECK(doc["per_g"][i]["g"] == want[i][0]);
        CHECK(doc["per_g"][i]["curve_degree"] == 2 * want[i][0] + 1);
        CHECK(doc["per_g"][i]["tessellation"]["p"] == want[i][1]);
        CHECK(doc["per_g"][i]["tessellation"]["q"] == want[i][2]);
    }
    CHECK(genus_report(2, 2)["per_g"].empty());
    CHECK(Json::parse(dump(doc)) == Json::parse(doc.dump()));
}

TEST_CASE("generators report")
{
    const Json doc = generators_report(2, curves::Sign::Minus);
    const auto& traces = doc["traces"];
    REQUIRE(traces.size() == 4);
    for (std::size_t i = 0; i < 4; ++i)
        CHECK(std::abs(traces[i].get<double>() - testdata::kAbsTraces[i]) < 1e-3);
    CHECK(doc["gamma_p"][0]["label"] == "T1T2");
    CHECK(doc["gamma0"][0]["class"] == "elliptic");
    CHECK(doc["gamma_p"][0]["class"] == "hyperbolic");
    CHECK(doc["fundamental_polygon"]["sides"] == 8);
    CHECK(doc["verify"]["pass"] == true);

    const Json plus = generators_report(2, curves::Sign::Plus);
    bool found = false;
    for (const auto& r : plus["roots"])
        found = found || std::abs(pair(r) - std::polar(1.0, testdata::kPi / 5)) < 1e-9;
    CHECK(found);

    const Json g1 = generators_report(1, curves::Sign::Minus);
    CHECK(g1["roots"].size() == 3);
    CHECK(g1["gamma_p"].size() == 2);

    SUBCASE("every serialized matrix re-verifies after a text round trip")
    {
        for (int g = 1; g <= 6; ++g)
            for (auto sign : {curves::Sign::Minus, curves::Sign::Plus}) {
                const Json back = Json::parse(dump(generators_report(g, sign)));
                CHECK(groups::verify_group(gamma0_from_report(back)).pass);
                CHECK(groups::verify_group(gamma_p_from_report(back)).pass);
            }
    }
}

TEST_CASE("matrix json helpers")
{
    const MoebiusMap m(Complex(1, 2), Complex(3, 4), Complex(5, 6), Complex(7, 9));
    const auto back = matrix_from_json(matrix_to_json(m));
    CHECK(testdata::entry_distance(back, {m.a(), m.b(), m.c(), m.d()}) == 0.0);
    CHECK_THROWS_AS(matrix_from_json(Json::array({1, 2})), InvalidArgument);
    CHECK(point_to_json(ComplexPoint::infinity()) == "infinity");
    CHECK_THROWS_AS(parse_sign("sideways"), InvalidArgument);
    CHECK(parse_sign("plus") == curves::Sign::Plus);
    CHECK(sign_name(curves::Sign::Minus) == "minus");
}

TEST_CASE("whittaker report")
{
    const Json doc = whittaker_report(2);
    CHECK(doc["hde"]["alpha"].get<double>() == doctest::Approx(0.2));
    CHECK(doc["hde"]["beta"].get<double>() == doctest::Approx(0.4));
    CHECK(doc["hde"]["gamma"].get<double>() == doctest::Approx(0.8));
    CHECK(doc["connection"]["projective_residual"].get<double>() < 1e-8);
    CHECK(doc["subgroup"].size() == 4);
    CHECK(whittaker_report(3)["subgroup"].size() == 6);
    CHECK_THROWS_AS(whittaker_report(1), InvalidArgument);
}

TEST_CASE("tessellation report")
{
    const Json doc = tessellation_report(6, 2);
    CHECK(doc["p"] == 10);
    CHECK(doc["q"] == 5);
    CHECK(doc["euler_characteristic"]["num"] == -2);
    CHECK(doc["euler_characteristic"]["den"] == 1);
    CHECK(doc["cycle_count"]["divisible"] == true);
}

TEST_CASE("render_svg")
{
    SUBCASE("genus 2 matches the pentagon picture")
    {
        const auto c = parse_svg(render_svg(2, curves::Sign::Minus));
        CHECK(c.root == 5);
        CHECK(c.midpoint == 5);
        CHECK(c.root_side == 5);
        CHECK(c.region == 1);
        CHECK(count_arcs(c.region_d) == 8);
        CHECK(c.boundary == 1);
        CHECK_FALSE(c.boundary_dash.empty());
        CHECK(c.text == 10);
    }
    SUBCASE("genus 3")
    {
        const auto c = parse_svg(render_svg(3, curves::Sign::Minus));
        CHECK(c.root == 7);
        CHECK(count_arcs(c.region_d) == 12);
    }
    SUBCASE("arc endpoints land on the unit circle in viewport coordinates")
    {
        const auto c = parse_svg(render_svg(2, curves::Sign::Plus));
        std::istringstream d(c.region_d);
        std::string tok;
        std::vector<double> xs;
        while (d >> tok) {
            if (tok == "M") {
                double x, y;
                d >> x >> y;
                CHECK(std::hypot(x - 500, y - 500) == doctest::Approx(450).epsilon(1e-6));
            } else if (tok == "A") {
                double rx, ry, rot, large, sweep, x, y;
                d >> rx >> ry >> rot >> large >> sweep >> x >> y;
                CHECK(large == 0);
                CHECK(std::hypot(x - 500, y - 500) == doctest::Approx(450).epsilon(1e-6));
            }
        }
    }
    CHECK(render_svg(2, curves::Sign::Minus) == render_svg(2, curves::Sign::Minus));
}

TEST_CASE("verification suite")
{
    const auto clean = run_verification();
    CHECK_FALSE(clean.empty());
    for (const auto& r : clean) {
        INFO(r.name << " residual " << r.residual);
        CHECK(r.pass);
    }
    const bool has_trace_line = std::any_of(clean.begin(), clean.end(), [](const CheckResult& r) {
        return r.name.find("8.8541") != std::string::npos;
    });
    CHECK(has_trace_line);

    VerifyOptions bad;
    bad.perturb_t1 = 1e-2;
    const auto perturbed = run_verification(bad);
    CHECK(std::any_of(perturbed.begin(), perturbed.end(), [](const CheckResult& r) { return !r.pass; }));
}

TEST_CASE("command line exit codes")
{
    const auto json = temp_path("out.json");
    const auto json2 = temp_path("out2.json");
    const auto svg = temp_path("out.svg");

    CHECK(run_cli("genus 4 4") == 0);
    CHECK(run_cli("genus 1 4") == 2);
    CHECK(run_cli("genus 4") == 2);
    CHECK(run_cli("generators --genus 2 --sign minus") == 0);
    CHECK(run_cli("generators --genus 2 --sign sideways") == 2);
    CHECK(run_cli("generators --genus 0 --sign minus") == 2);
    CHECK(run_cli("whittaker --genus 1") == 2);
    CHECK(run_cli("whittaker --genus 3") == 0);
    CHECK(run_cli("tessellation --degree 6 --genus 2") == 0);
    CHECK(run_cli("tessellation --degree 7 --genus 2") == 2);
    CHECK(run_cli("render --genus 2 --sign minus --out /nonexistent-dir/x.svg") == 4);
    CHECK(run_cli("generators --genus 2 --sign minus --json-out /nonexistent-dir/x.json") == 4);
    CHECK(run_cli("frobnicate") == 2);
    CHECK(run_cli("") == 2);
    CHECK(run_cli("--help") == 0);
    CHECK(run_cli("verify") == 0);
    CHECK(run_cli("verify --perturb-t1 0.01") == 1);

    SUBCASE("files and byte-stable output")
    {
        REQUIRE(run_cli("--json-out " + json.string() + " generators --genus 2 --sign minus") == 0);
        REQUIRE(run_cli("generators --genus 2 --sign minus --json-out " + json2.string()) == 0);
        const std::string first = read_file(json);
        CHECK(first == read_file(json2));
        CHECK(first == dump(generators_report(2, curves::Sign::Minus)));

        REQUIRE(run_cli("render --genus 2 --sign minus --out " + svg.string()) == 0);
        CHECK(parse_svg(read_file(svg)).root == 5);
    }
    fs::remove(json);
    fs::remove(json2);
    fs::remove(svg);
}
