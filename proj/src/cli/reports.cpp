#include "reports.hpp"

#include "orbitdeg/chowcalc/stages.hpp"
#include "orbitdeg/flexlab.hpp"
#include "orbitdeg/orbitformulas.hpp"
#include "orbitdeg/pgl2.hpp"
#include "orbitdeg/polyparse.hpp"

#include <algorithm>
#include <iomanip>
#include <ostream>
#include <utility>

namespace orbitdeg::cli {

namespace {

using exact::BigInt;

std::string str(const BigInt& v) { return v.get_str(); }
std::string str(long long v) { return std::to_string(v); }

Json factorization_json(const exact::Factorization& f) {
    Json out = Json::array();
    for (const auto& pp : f) out.push_back({{"prime", str(pp.prime)}, {"exponent", std::to_string(pp.exponent)}});
    return out;
}

struct AnalyzedCurve {
    std::string canonical;
    FlexProfile profile;
};

AnalyzedCurve analyze(const std::string& curve_text, std::uint64_t seed) {
    const parse::ParsedForm parsed = parse::parse_form(curve_text);
    const flex::PlaneCurve curve = flex::check_smooth(parsed.form);
    return {to_string(parsed.form), flex::flex_profile(curve, seed)};
}

void add_curve_fields(Json& j, const AnalyzedCurve& c, std::uint64_t seed) {
    j["curve"] = c.canonical;
    j["curve_degree"] = str(c.profile.degree);
    j["seed"] = std::to_string(seed);
    Json profile = Json::array();
    for (const auto& [order, count] : c.profile.counts) profile.push_back({{"order", str(order)}, {"count", str(count)}});
    j["profile"] = profile;
    j["weighted_total"] = str(c.profile.weighted_total());
    const FlexSums s = f_sums(c.profile);
    j["sums"] = {{"f2", str(s.f2)}, {"f3", str(s.f3)}, {"f4", str(s.f4)}, {"f5", str(s.f5)}};
}

// --- text rendering ---------------------------------------------------------

using Rows = std::vector<std::pair<std::string, std::string>>;

void print_rows(const Rows& rows, std::ostream& out) {
    std::size_t width = 0;
    for (const auto& [label, _] : rows) width = std::max(width, label.size());
    for (const auto& [label, value] : rows) out << std::left << std::setw(static_cast<int>(width) + 2) << label << value << '\n';
}

std::string profile_text(const Json& profile) {
    std::string s;
    for (const auto& entry : profile) {
        if (!s.empty()) s += ", ";
        s += entry["order"].get<std::string>() + ":" + entry["count"].get<std::string>();
    }
    return s;
}

Rows curve_rows(const Json& j) {
    return {{"curve", j["curve"]},
            {"curve degree", j["curve_degree"]},
            {"seed", j["seed"]},
            {"flex orders", profile_text(j["profile"])},
            {"weighted total", j["weighted_total"]},
            {"f2", j["sums"]["f2"]},
            {"f3", j["sums"]["f3"]},
            {"f4", j["sums"]["f4"]},
            {"f5", j["sums"]["f5"]}};
}

void render_table(const Json& j, std::ostream& out) {
    std::size_t wd = 1, wv = 4;
    for (const auto& row : j["rows"]) {
        wd = std::max(wd, row["d"].get<std::string>().size());
        wv = std::max(wv, row["predegree"].get<std::string>().size());
    }
    const auto w = [](std::size_t n) { return static_cast<int>(n); };
    out << std::right << std::setw(w(wd)) << "d" << "  " << std::setw(w(wv)) << "P(d)" << "  factorization\n";
    for (const auto& row : j["rows"])
        out << std::setw(w(wd)) << row["d"].get<std::string>() << "  " << std::setw(w(wv))
            << row["predegree"].get<std::string>() << "  " << row["factored"].get<std::string>() << '\n';
}

} // namespace

Json flexes_report(const std::string& curve_text, std::uint64_t seed) {
    Json j;
    j["command"] = "flexes";
    add_curve_fields(j, analyze(curve_text, seed), seed);
    return j;
}

Json predegree_report(const std::string& command, const std::string& curve_text, std::uint64_t seed,
                      const std::optional<BigInt>& aut_order) {
    const AnalyzedCurve c = analyze(curve_text, seed);
    const orbit::PredegreeReport r = orbit::predegree_report(c.profile, aut_order);
    Json j;
    j["command"] = command;
    add_curve_fields(j, c, seed);
    j["routes"] = {{"blowup_sum", str(r.by_blowup_sum)},
                   {"flex_orders", str(r.by_flex_orders)},
                   {"power_sums", str(r.by_power_sums)},
                   {"chow_ring", str(r.by_chow)}};
    j["predegree"] = str(r.predegree);
    j["factorization"] = factorization_json(r.factors);
    j["factored"] = exact::format_factorization(r.factors);
    if (r.aut_order) j["aut_order"] = str(*r.aut_order);
    if (r.degree) j["orbit_degree"] = str(*r.degree);
    return j;
}

Json table_report(int d_from, int d_to) {
    Json rows = Json::array();
    for (const auto& row : orbit::table_rows(d_from, d_to))
        rows.push_back({{"d", str(row.d)},
                        {"predegree", str(row.value)},
                        {"factorization", factorization_json(row.factors)},
                        {"factored", exact::format_factorization(row.factors)}});
    return {{"command", "table"}, {"from", str(d_from)}, {"to", str(d_to)}, {"rows", rows}};
}

Json identities_report() {
    Json list = Json::array();
    bool all = true;
    for (const auto& c : orbit::verify_identities()) {
        list.push_back({{"name", c.name}, {"holds", c.holds}, {"lhs", c.lhs}, {"rhs", c.rhs}});
        all = all && c.holds;
    }
    return {{"command", "verify-chow"}, {"identities", list}, {"all_hold", all}};
}

Json pgl2_report(const std::vector<long>& multiplicities) {
    const pgl2::TupleConfig cfg{multiplicities};
    const BigInt formula = pgl2::pgl2_predegree(cfg);
    const BigInt oracle = pgl2::pgl2_oracle(cfg);
    Json ms = Json::array();
    for (long m : multiplicities) ms.push_back(str(m));
    return {{"command", "pgl2"},      {"multiplicities", ms},       {"d", str(cfg.degree())},
            {"m2", str(cfg.power_sum(2))}, {"m3", str(cfg.power_sum(3))}, {"formula", str(formula)},
            {"oracle", str(oracle)},  {"agree", formula == oracle}};
}

Json bound_report(int d) {
    const BigInt bound = orbit::aut_lcm_bound(d);
    const BigInt p = orbit::simple_flex_predegree(d);
    const exact::Factorization pf = exact::factor_integer(p);
    const exact::Factorization bf = exact::factor_integer(bound);
    return {{"command", "bound"},
            {"d", str(d)},
            {"predegree", str(p)},
            {"factored", exact::format_factorization(pf)},
            {"bound", str(bound)},
            {"bound_factored", exact::format_factorization(bf)}};
}

void render_text(const Json& j, std::ostream& out) {
    const std::string command = j["command"];
    if (command == "flexes") {
        print_rows(curve_rows(j), out);
    } else if (command == "predegree" || command == "degree") {
        Rows rows = curve_rows(j);
        rows.insert(rows.end(), {{"route: blow-up sum", j["routes"]["blowup_sum"]},
                                 {"route: flex-order form", j["routes"]["flex_orders"]},
                                 {"route: power sums", j["routes"]["power_sums"]},
                                 {"route: Chow ring", j["routes"]["chow_ring"]},
                                 {"predegree", j["predegree"]},
                                 {"factorization", j["factored"]}});
        if (j.contains("aut_order")) rows.emplace_back("aut order", j["aut_order"]);
        if (j.contains("orbit_degree")) rows.emplace_back("orbit degree", j["orbit_degree"]);
        print_rows(rows, out);
    } else if (command == "table") {
        render_table(j, out);
    } else if (command == "verify-chow") {
        std::size_t held = 0;
        for (const auto& c : j["identities"]) {
            const bool ok = c["holds"];
            held += ok;
            out << (ok ? "PASS  " : "FAIL  ") << c["name"].get<std::string>() << '\n';
            if (!ok)
                out << "      lhs = " << c["lhs"].get<std::string>() << "\n      rhs = " << c["rhs"].get<std::string>()
                    << '\n';
        }
        out << held << " of " << j["identities"].size() << " identities hold\n";
    } else if (command == "pgl2") {
        std::string ms;
        for (const auto& m : j["multiplicities"]) ms += (ms.empty() ? "" : ",") + m.get<std::string>();
        print_rows({{"multiplicities", ms},
                    {"d", j["d"]},
                    {"m2", j["m2"]},
                    {"m3", j["m3"]},
                    {"formula", j["formula"]},
                    {"oracle", j["oracle"]}},
                   out);
    } else if (command == "bound") {
        print_rows({{"d", j["d"]},
                    {"predegree", j["predegree"]},
                    {"factorization", j["factored"]},
                    {"bound", j["bound"]},
                    {"bound factorization", j["bound_factored"]}},
                   out);
    }
}

} // namespace orbitdeg::cli
