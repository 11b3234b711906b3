#pragma once

#include "orbitdeg/exactpoly/bigrat.hpp"

#include "json.hpp"

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace orbitdeg::cli {

// Every report is built once as JSON; the text form is rendered from the
// same object so both carry identical numbers. Integers are decimal strings.
using Json = nlohmann::ordered_json;

Json flexes_report(const std::string& curve_text, std::uint64_t seed);
Json predegree_report(const std::string& command, const std::string& curve_text, std::uint64_t seed,
                      const std::optional<exact::BigInt>& aut_order);
Json table_report(int d_from, int d_to);
Json identities_report();
Json pgl2_report(const std::vector<long>& multiplicities);
Json bound_report(int d);

void render_text(const Json& report, std::ostream& out);

} // namespace orbitdeg::cli
