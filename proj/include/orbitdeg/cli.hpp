#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace orbitdeg::cli {

/// Runs one invocation of the orbitdeg command line. `args` excludes the
/// program name. Writes the report to `out` and diagnostics to `err`.
/// Returns 0 on success, 1 on a mathematical inconsistency (non-divisible
/// automorphism order, failed identity, genericity failure), 2 on an input
/// error (bad arguments, parse errors, singular or non-homogeneous curves).
/// Output is a pure function of the arguments.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace orbitdeg::cli
