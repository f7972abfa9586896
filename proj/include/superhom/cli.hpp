#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "superhom/report.hpp"
#include "superhom/superalgebra.hpp"

namespace superhom {

struct Request {
  std::string command;  // check, h2, closed-form, compare, cocycle, identities, iso-sl, export
  std::string spec;     // "builtin:<name>" or a path
  std::optional<std::size_t> m;
  std::string construction = "p";  // h2: p or sl
  std::string which = "alpha";     // cocycle: alpha, beta4 or beta3
  bool coboundary = false;
};

/// Exit codes: 0 pass, 1 mismatch or failed check, 2 usage or parse error.
struct Report {
  nlohmann::json doc;
  int exit_code = 0;
};

const std::vector<std::string>& command_names();

/// Never throws; errors become a report with exit code 2.
Report run_command(const Request& req);

/// Indented key: value rendering of the report tree.
std::string render_text(const nlohmann::json& doc);

/// Axioms, prp, the p construction, d2 o d3 = 0, Lie axioms, perfectness,
/// the dim p~ - dim p identity and the STP relations for p_m(R).
CheckReport structural_suite(const InvolutedAlgebra& r, std::size_t m);

}  // namespace superhom
