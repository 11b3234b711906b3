#include "orbitdeg/cli.hpp"

#include "reports.hpp"

#include "orbitdeg/error.hpp"

#include "CLI11.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <ostream>
#include <sstream>

namespace orbitdeg::cli {

namespace {

enum ExitCode { kOk = 0, kMathError = 1, kInputError = 2 };

struct CurveInput {
    std::string inline_text;
    std::string file;

    std::string text() const {
        if (inline_text.empty() == file.empty())
            throw InvalidArgument("give the curve either inline or with --file, exactly one of the two");
        if (file.empty()) return inline_text;
        std::ifstream in(file);
        if (!in) throw InvalidArgument("cannot read curve file '" + file + "'");
        std::ostringstream buf;
        buf << in.rdbuf();
        return buf.str();
    }
};

void add_curve_input(CLI::App* sub, CurveInput& input) {
    sub->add_option("curve", input.inline_text, "homogeneous form in x, y, z, e.g. \"x^3*y + y^3*z + z^3*x\"");
    sub->add_option("--file", input.file, "read the form from a file instead");
}

exact::BigInt parse_positive(const std::string& text, const char* what) {
    exact::BigInt v;
    if (text.empty() || v.set_str(text, 10) != 0)
        throw InvalidArgument(std::string(what) + " must be a decimal integer, got '" + text + "'");
    if (v < 1) throw InvalidArgument(std::string(what) + " must be >= 1, got " + text);
    return v;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Degrees of PGL(3)-orbit closures of smooth plane curves", "orbitdeg"};
    app.require_subcommand(1);
    app.fallthrough();

    bool json = false;
    std::uint64_t seed = 0;
    app.add_flag("--json", json, "machine-readable output; integers as decimal strings");
    app.add_option("--seed", seed, "seed for the random coordinate changes of the flex search")->capture_default_str();

    std::function<Json()> build;

    CurveInput flexes_in;
    auto* flexes = app.add_subcommand("flexes", "flex orders and power sums of a smooth curve");
    add_curve_input(flexes, flexes_in);
    flexes->callback([&] { build = [&] { return flexes_report(flexes_in.text(), seed); }; });

    CurveInput predegree_in;
    std::string predegree_aut;
    auto* predegree = app.add_subcommand("predegree", "predegree of the orbit closure by every route");
    add_curve_input(predegree, predegree_in);
    predegree->add_option("--aut", predegree_aut, "order of the automorphism group; also reports the degree");
    predegree->callback([&] {
        build = [&] {
            std::optional<exact::BigInt> aut;
            if (!predegree_aut.empty()) aut = parse_positive(predegree_aut, "--aut");
            return predegree_report("predegree", predegree_in.text(), seed, aut);
        };
    });

    CurveInput degree_in;
    std::string degree_aut;
    auto* degree = app.add_subcommand("degree", "degree of the orbit closure: predegree / automorphism order");
    add_curve_input(degree, degree_in);
    degree->add_option("--aut", degree_aut, "order of the automorphism group")->required();
    degree->callback([&] {
        build = [&] {
            return predegree_report("degree", degree_in.text(), seed, parse_positive(degree_aut, "--aut"));
        };
    });

    int table_from = 3, table_to = 10;
    auto* table = app.add_subcommand("table", "predegrees of curves with only simple flexes, factored");
    table->add_option("--from", table_from, "first degree")->capture_default_str();
    table->add_option("--to", table_to, "last degree")->capture_default_str();
    table->callback([&] { build = [&] { return table_report(table_from, table_to); }; });

    auto* verify = app.add_subcommand("verify-chow", "check the Chow-ring corrections and closed forms as polynomial identities");
    verify->callback([&] { build = [] { return identities_report(); }; });

    std::vector<long> multiplicities;
    auto* line = app.add_subcommand("pgl2", "predegree of a tuple of points on the line, formula and brute force");
    line->add_option("--multiplicities", multiplicities, "comma-separated multiplicities, e.g. 2,1,1")
        ->required()
        ->delimiter(',');
    line->callback([&] { build = [&] { return pgl2_report(multiplicities); }; });

    int bound_d = 0;
    auto* bound = app.add_subcommand("bound", "bound on the l.c.m. of automorphism orders, 3 <= d <= 10");
    bound->add_option("d", bound_d, "curve degree")->required();
    bound->callback([&] { build = [&] { return bound_report(bound_d); }; });

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kInputError;
    }

    try {
        const Json report = build();
        if (json)
            out << report.dump(2) << '\n';
        else
            render_text(report, out);
        const bool consistent = report.value("all_hold", true) && report.value("agree", true);
        return consistent ? kOk : kMathError;
    } catch (const InputError& e) {
        err << "error: " << e.what() << '\n';
        if (const auto* s = dynamic_cast<const SingularCurve*>(&e); s && s->witness())
            err << "singular point: " << *s->witness() << '\n';
        return kInputError;
    } catch (const MathError& e) {
        err << "error: " << e.what() << '\n';
        return kMathError;
    }
}

} // namespace orbitdeg::cli
