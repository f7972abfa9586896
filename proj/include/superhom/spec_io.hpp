#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "superhom/report.hpp"
#include "superhom/superalgebra.hpp"

namespace superhom {

/// Malformed input: bad JSON, ragged tables, bad scalars, unsupported field.
struct ParseError : Error {
  using Error::Error;
};

/// Input that parsed but fails the superalgebra or superinvolution axioms.
struct VerificationError : Error {
  VerificationError(const std::string& what, CheckReport r) : Error(what), report(std::move(r)) {}
  CheckReport report;
};

/// Names accepted after "builtin:".
const std::vector<std::string>& builtin_names();
InvolutedAlgebra builtin_by_name(std::string_view name);

nlohmann::json algebra_to_json(const InvolutedAlgebra& r);
/// Throws ParseError or VerificationError.
InvolutedAlgebra algebra_from_json(const nlohmann::json& doc, std::string fallback_name = "spec");
/// "builtin:<name>" or a path to an AlgebraSpec JSON file.
InvolutedAlgebra parse_algebra_spec(std::string_view source);

}  // namespace superhom
