// Acceptance suite: one PASS/FAIL line per criterion, each with its
// measured runtime against a pinned limit. Exit status is the number of
// failed criteria.

#include "support/generators.hpp"

#include "orbitdeg/chowcalc/stages.hpp"
#include "orbitdeg/cli.hpp"
#include "orbitdeg/error.hpp"
#include "orbitdeg/flexlab.hpp"
#include "orbitdeg/orbitformulas.hpp"
#include "orbitdeg/pgl2.hpp"
#include "orbitdeg/polyparse.hpp"

#include "json.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

using namespace orbitdeg;
using exact::BigInt;

namespace {

struct Outcome {
    bool ok = true;
    std::string detail;

    void expect(bool cond, const std::string& what) {
        if (!cond && ok) detail = what;
        ok = ok && cond;
    }
};

nlohmann::json cli_json(std::vector<std::string> args, int& code) {
    args.push_back("--json");
    std::ostringstream out, err;
    code = cli::run(args, out, err);
    return code == 0 ? nlohmann::json::parse(out.str()) : nlohmann::json();
}

FlexProfile profile_of(const std::string& text, std::uint64_t seed = 0) {
    return flex::flex_profile(flex::check_smooth(parse::parse_form(text).form), seed);
}

std::string fermat(int d) {
    const std::string e = std::to_string(d);
    return "x^" + e + " + y^" + e + " + z^" + e;
}

std::string cyclic(int d) {
    const std::string e = std::to_string(d - 1);
    return "x^" + e + "*y + y^" + e + "*z + z^" + e + "*x";
}

BigInt degree_from_curve(const std::string& text, long aut) {
    return orbit::orbit_degree(orbit::predegree_report(profile_of(text)).predegree, aut);
}

Outcome table_reproduction() {
    Outcome o;
    int code = 0;
    const auto j = cli_json({"table", "--from", "3", "--to", "10"}, code);
    o.expect(code == 0, "table exited with " + std::to_string(code));
    if (!o.ok) return o;
    const char* values[] = {"216", "14280", "188340", "1119960", "4508280", "14318256", "38680740", "92790480"};
    const char* factors[] = {"2^3*3^3",         "2^3*3*5*7*17",    "2^2*3*5*43*73", "2^3*3^3*5*17*61",
                             "2^3*3^2*5*7*1789", "2^4*3*317*941", "2^2*3^6*5*7*379", "2^4*3*5*59*6553"};
    o.expect(j["rows"].size() == 8, "expected eight rows");
    for (std::size_t i = 0; i < 8 && i < j["rows"].size(); ++i) {
        o.expect(j["rows"][i]["predegree"] == values[i], std::string("value for d = ") + std::to_string(i + 3));
        o.expect(j["rows"][i]["factored"] == factors[i], std::string("factorization for d = ") + std::to_string(i + 3));
    }
    return o;
}

Outcome chow_identities() {
    Outcome o;
    int code = 0;
    const auto j = cli_json({"verify-chow"}, code);
    o.expect(code == 0, "verify-chow exited with " + std::to_string(code));
    for (const auto& c : j["identities"]) o.expect(c["holds"] == true, "identity failed: " + c["name"].get<std::string>());
    o.expect(j["identities"].size() >= 9, "too few identities checked");
    return o;
}

Outcome route_agreement() {
    Outcome o;
    testing::Gen g(20240601);
    for (int d = 3; d <= 12; ++d)
        for (int i = 0; i < 50; ++i) {
            const FlexProfile p = g.profile(d);
            const BigInt a = orbit::predegree_by_blowup_sum(p);
            o.expect(orbit::predegree_by_flex_orders(p) == a && orbit::predegree_by_power_sums(d, f_sums(p)) == a,
                     "routes disagree at d = " + std::to_string(d));
        }
    return o;
}

Outcome flex_profiles() {
    Outcome o;
    o.expect(profile_of("x^3*y + y^3*z + z^3*x") == FlexProfile{4, {{1, 24}}}, "Klein quartic");
    o.expect(profile_of("x^4 + y^4 + z^4") == FlexProfile{4, {{2, 12}}}, "Fermat quartic");
    o.expect(profile_of("x^4 + x*y^3 + y*z^3") == FlexProfile{4, {{1, 22}, {2, 1}}}, "x^4+xy^3+yz^3");
    for (int d = 3; d <= 6; ++d)
        o.expect(profile_of(fermat(d)) == FlexProfile{d, {{d - 2, 3 * d}}}, "Fermat d = " + std::to_string(d));
    for (int d = 5; d <= 6; ++d) {
        const FlexProfile p = profile_of(cyclic(d));
        const long long simple = 3LL * d * (d - 2) - 3LL * (d - 3);
        o.expect(p.counts.count(d - 3) == 1 && p.counts.at(d - 3) == 3, "cyclic d = " + std::to_string(d));
        o.expect(p.weighted_total() == 3LL * d * (d - 2), "cyclic weighted total d = " + std::to_string(d));
        o.expect(p == FlexProfile{d, {{1, simple}, {d - 3, 3}}}, "cyclic remaining flexes simple d = " + std::to_string(d));
    }
    return o;
}

Outcome end_to_end_degrees() {
    Outcome o;
    o.expect(degree_from_curve("x^3*y + y^3*z + z^3*x", 168) == 85, "Klein quartic");
    o.expect(degree_from_curve("x^4 + y^4 + z^4", 96) == 112, "Fermat quartic");
    o.expect(degree_from_curve("x^4 + x*y^3 + y*z^3", 9) == 1554, "x^4+xy^3+yz^3");
    const BigInt cubic = orbit::predegree_report(profile_of("x^3 + y^3 + z^3 + 3*x*y*z")).predegree;
    o.expect(cubic == 216, "smooth cubic predegree");
    o.expect(orbit::orbit_degree(cubic, 18) == 12 && orbit::orbit_degree(cubic, 36) == 6 &&
                 orbit::orbit_degree(cubic, 54) == 4,
             "cubic orbit degrees");
    o.expect(degree_from_curve("x^3 + y^3 + z^3", 54) == 4, "Fermat cubic");
    return o;
}

Outcome flex_sum_invariant() {
    Outcome o;
    testing::Gen g(777);
    int done = 0;
    while (done < 100) {
        const int d = 3 + done % 3;
        // dense form with small integer coefficients
        exact::MultiPoly f({"x", "y", "z"});
        for (int a = 0; a <= d; ++a)
            for (int b = 0; a + b <= d; ++b) f.add_term({a, b, d - a - b}, g.integer(2));
        std::optional<flex::PlaneCurve> c;
        try {
            c = flex::check_smooth(f);
        } catch (const SingularCurve&) {
            continue;
        } catch (const InvalidArgument&) {
            continue;
        }
        ++done;
        const FlexProfile p0 = flex::flex_profile(*c, 0);
        o.expect(p0.weighted_total() == 3LL * d * (d - 2), "weighted total of " + to_string(f));
        for (std::uint64_t seed : {1u, 2u})
            o.expect(flex::flex_profile(*c, seed) == p0, "seed dependence for " + to_string(f));
    }
    return o;
}

Outcome pgl2_oracle() {
    Outcome o;
    for (int d = 1; d <= 12; ++d) {
        for (const auto& cfg : pgl2::partitions(d))
            o.expect(pgl2::pgl2_oracle(cfg) == pgl2::pgl2_predegree(cfg), "partition of " + std::to_string(d));
        const pgl2::TupleConfig distinct{std::vector<long>(d, 1)};
        o.expect(pgl2::pgl2_predegree(distinct) == BigInt(d) * (d - 1) * (d - 2), "distinct points d = " + std::to_string(d));
    }
    return o;
}

Outcome automorphism_bounds() {
    Outcome o;
    const long expected[] = {216, 168, 60, 1080, 2520, 48, 102060, 240};
    for (int d = 3; d <= 10; ++d) o.expect(orbit::aut_lcm_bound(d) == expected[d - 3], "bound d = " + std::to_string(d));
    return o;
}

Outcome negativity() {
    Outcome o;
    for (long k = 2; k <= 20; ++k)
        for (long d = k + 2; d <= 40; ++d)
            o.expect(orbit::flex_contribution(k, d) < 0, "f_" + std::to_string(k) + "(" + std::to_string(d) + ")");
    return o;
}

} // namespace

int main() {
    struct Criterion {
        int id;
        const char* name;
        double limit_s;
        std::function<Outcome()> body;
    };
    const Criterion criteria[] = {
        {1, "table reproduction", 1.0, table_reproduction},
        {2, "Chow identities", 5.0, chow_identities},
        {3, "route agreement", 5.0, route_agreement},
        {4, "flex profiles from curves", 60.0, flex_profiles},
        {5, "end-to-end degrees", 10.0, end_to_end_degrees},
        {6, "flex-sum invariant", 300.0, flex_sum_invariant},
        {7, "PGL(2) oracle", 1.0, pgl2_oracle},
        {8, "automorphism bounds", 1.0, automorphism_bounds},
        {9, "negativity of flex contributions", 1.0, negativity},
    };
    int failures = 0;
    for (const auto& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.body();
        } catch (const std::exception& e) {
            o.ok = false;
            o.detail = std::string("exception: ") + e.what();
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (secs > c.limit_s) o.expect(false, "over time limit");
        failures += !o.ok;
        std::printf("%s  criterion %d: %s (%.3f s, limit %g s)%s%s\n", o.ok ? "PASS" : "FAIL", c.id, c.name, secs,
                    c.limit_s, o.ok ? "" : " -- ", o.detail.c_str());
        std::fflush(stdout);
    }
    return failures;
}
