#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qhowe::cli {

// Runs one CLI invocation; report JSON goes to `out`, diagnostics to `err`.
// Exit code: 0 all asserted items pass, 1 any failure, 2 configuration error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// Accepts the report grammar plus plain q/v monomial shorthand ("-q^-1", "q").
// Used for --varsigma/--kappa overrides.
struct Scalar_;

} // namespace qhowe::cli

namespace qhowe {
class Scalar;
Scalar parse_scalar_lenient(const std::string& text);
} // namespace qhowe
