// fuchsian: command-line front end for the uniformization pipeline.
//
// Exit codes: 0 success, 1 verification failure, 2 bad arguments,
// 3 algorithm precondition failure, 4 I/O failure.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"

#include "fuchsian/errors.hpp"
#include "fuchsian/pipeline.hpp"

namespace {

namespace pl = fuchsian::pipeline;

enum Exit { kOk = 0, kVerifyFailed = 1, kBadArgs = 2, kAlgorithm = 3, kIo = 4 };

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void write_text(const std::string& path, const std::string& text)
{
    if (path.empty() || path == "-") {
        std::cout << text;
        std::cout.flush();
        if (!std::cout)
            throw IoError("failed writing to standard output");
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw IoError("cannot open '" + path + "' for writing");
    out << text;
    out.close();
    if (!out)
        throw IoError("failed writing '" + path + "'");
}

std::string format_check(const pl::CheckResult& c)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, "residual=%.3e tol=%.1e", c.residual, c.tolerance);
    return std::string(c.pass ? "PASS " : "FAIL ") + c.name + "  " + buf;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Fuchsian groups and fundamental regions for y^2 = z^n +- 1"};
    app.require_subcommand(1);

    std::string json_out;
    app.add_option("--json-out", json_out, "Write the JSON document to FILE instead of standard output");

    int m = 0, n = 0;
    auto* genus = app.add_subcommand("genus", "Genus range of K_{m,n} and the matching tessellations");
    genus->add_option("m", m)->required();
    genus->add_option("n", n)->required();

    int g = 0, fixed = 1;
    std::string sign;
    auto* gens = app.add_subcommand("generators", "Gamma0 and subgroup generators of y^2 = z^(2g+1) +- 1");
    gens->add_option("--genus", g)->required();
    gens->add_option("--sign", sign)->required()->check(CLI::IsMember({"plus", "minus"}));
    gens->add_option("--fixed", fixed, "Index k of the generator T_k multiplied into the others");

    auto* whit = app.add_subcommand("whittaker", "Closed-form generators and connection maps");
    whit->add_option("--genus", g)->required();

    int degree = 0;
    auto* tess = app.add_subcommand("tessellation", "Regular tessellation {p,q} for a curve degree");
    tess->add_option("--degree", degree)->required();
    tess->add_option("--genus", g)->required();

    std::string svg_out;
    auto* render = app.add_subcommand("render", "SVG drawing of the root polygon and fundamental region");
    render->add_option("--genus", g)->required();
    render->add_option("--sign", sign)->required()->check(CLI::IsMember({"plus", "minus"}));
    render->add_option("--fixed", fixed, "Side k the region is built around");
    render->add_option("--out", svg_out, "Output SVG file")->required();

    pl::VerifyOptions verify_options;
    auto* verify = app.add_subcommand("verify", "Run the invariant suite");
    verify->add_option("--perturb-t1", verify_options.perturb_t1)->group("");

    for (auto* sub : {genus, gens, whit, tess, render, verify})
        sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kBadArgs;
    }

    try {
        if (*genus) {
            write_text(json_out, pl::dump(pl::genus_report(m, n)));
        } else if (*gens) {
            write_text(json_out, pl::dump(pl::generators_report(g, pl::parse_sign(sign), fixed)));
        } else if (*whit) {
            write_text(json_out, pl::dump(pl::whittaker_report(g)));
        } else if (*tess) {
            write_text(json_out, pl::dump(pl::tessellation_report(degree, g)));
        } else if (*render) {
            const std::string svg = pl::render_svg(g, pl::parse_sign(sign), fixed);
            write_text(svg_out, svg);
        } else if (*verify) {
            const auto results = pl::run_verification(verify_options);
            std::size_t failed = 0;
            for (const auto& r : results) {
                std::cout << format_check(r) << "\n";
                failed += r.pass ? 0 : 1;
            }
            std::cout << (results.size() - failed) << "/" << results.size() << " checks passed\n";
            return failed == 0 ? kOk : kVerifyFailed;
        }
    } catch (const fuchsian::InvalidArgument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kBadArgs;
    } catch (const IoError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kIo;
    } catch (const fuchsian::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kAlgorithm;
    }
    return kOk;
}
