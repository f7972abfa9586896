#include "doctest.h"

#include <fstream>

#include "superhom/cli.hpp"
#include "superhom/homology.hpp"
#include "superhom/lie.hpp"
#include "superhom/spec_io.hpp"

using namespace superhom;
using nlohmann::json;

namespace {

const std::string data_dir = SUPERHOM_TEST_DATA;
const std::string golden_dir = SUPERHOM_TEST_DATA "/../golden";

Request request(std::string command, std::string spec, std::optional<std::size_t> m = {}) {
  Request r;
  r.command = std::move(command);
  r.spec = std::move(spec);
  r.m = m;
  return r;
}

json without_timing(json doc) {
  doc.erase("timing_ms");
  return doc;
}

json golden(const std::string& name) {
  std::ifstream in(golden_dir + "/" + name + ".json");
  REQUIRE(in);
  return json::parse(in);
}

bool same_structure(const InvolutedAlgebra& a, const InvolutedAlgebra& b) {
  if (!a.algebra.same_structure(b.algebra)) return false;
  for (std::size_t i = 0; i < a.dim(); ++i)
    if (!(a.involution.matrix().row(i) == b.involution.matrix().row(i))) return false;
  return true;
}

}  // namespace

TEST_CASE("builtin specs") {
  InvolutedAlgebra g = parse_algebra_spec("builtin:grassmann1");
  CHECK(g.dim() == 2);
  CHECK(g.algebra.parity(1) == 1);
  CHECK(verify_superalgebra(g.algebra).passed());
  CHECK(verify_superinvolution(g).passed());
  CHECK(parse_algebra_spec("builtin:gf3").field().characteristic() == 3);
  CHECK(parse_algebra_spec("builtin:double_dual").dim() == 4);
  CHECK(parse_algebra_spec("builtin:matrix2").dim() == 4);
  CHECK_THROWS_AS(parse_algebra_spec("builtin:nope"), ParseError);
}

TEST_CASE("every builtin round-trips through the file format") {
  for (const auto& name : builtin_names()) {
    INFO(name);
    InvolutedAlgebra r = builtin_by_name(name);
    json doc = algebra_to_json(r);
    InvolutedAlgebra back = algebra_from_json(json::parse(doc.dump()));
    CHECK(same_structure(r, back));
    CHECK(back.name == r.name);
    CHECK(algebra_to_json(back) == doc);
  }
}

TEST_CASE("a hand-written spec matches the builtin") {
  InvolutedAlgebra file = parse_algebra_spec(data_dir + "/dual.json");
  CHECK(same_structure(file, builtin_by_name("dual")));
}

TEST_CASE("integer scalars are accepted alongside strings") {
  json doc = algebra_to_json(builtin_by_name("grassmann1"));
  doc["involution"] = json{{1, 0}, {0, -1}};
  CHECK(same_structure(algebra_from_json(doc), builtin_by_name("grassmann1")));
  doc["unit"] = json{1.5, 0};
  CHECK_THROWS_AS(algebra_from_json(doc), ParseError);
}

TEST_CASE("malformed specs are parse errors") {
  CHECK_THROWS_AS(parse_algebra_spec(data_dir + "/char2.json"), ParseError);
  CHECK_THROWS_AS(parse_algebra_spec(data_dir + "/bad_scalar.json"), ParseError);
  CHECK_THROWS_AS(parse_algebra_spec(data_dir + "/ragged.json"), ParseError);
  CHECK_THROWS_AS(parse_algebra_spec(data_dir + "/missing.json"), ParseError);
  json doc = algebra_to_json(builtin_by_name("dual"));
  doc["mul"][0]["i"] = 7;
  CHECK_THROWS_AS(algebra_from_json(doc), ParseError);
  doc = algebra_to_json(builtin_by_name("dual"));
  doc.erase("involution");
  CHECK_THROWS_AS(algebra_from_json(doc), ParseError);
}

TEST_CASE("verification failures carry a witness") {
  try {
    parse_algebra_spec(data_dir + "/nonassoc.json");
    FAIL("expected a verification failure");
  } catch (const VerificationError& e) {
    const std::string w = e.report.first_failure();
    CHECK(w.find("associativity") != std::string::npos);
    CHECK(w.find("(x*x)*x") != std::string::npos);
  }
  CHECK_THROWS_AS(parse_algebra_spec(data_dir + "/bad_involution.json"), VerificationError);
}

TEST_CASE("exit codes") {
  CHECK(run_command(request("check", "builtin:grassmann1")).exit_code == 0);
  CHECK(run_command(request("check", data_dir + "/nonassoc.json")).exit_code == 1);
  CHECK(run_command(request("check", data_dir + "/char2.json")).exit_code == 2);
  CHECK(run_command(request("check", "builtin:nope")).exit_code == 2);
  CHECK(run_command(request("frobnicate", "builtin:rationals")).exit_code == 2);
  CHECK(run_command(request("compare", "builtin:rationals")).exit_code == 2);
  CHECK(run_command(request("compare", "builtin:rationals", 2)).exit_code == 2);
  Request bad = request("cocycle", "builtin:rationals", 3);
  bad.which = "beta4";
  CHECK(run_command(bad).exit_code == 2);
}

TEST_CASE("compare reports agree with the homology oracle") {
  for (auto [spec, m] : {std::pair{"builtin:rationals", 4}, {"builtin:gf3", 3}, {"builtin:grassmann1", 3}}) {
    INFO(spec, " m=", m);
    Report rep = run_command(request("compare", spec, m));
    const std::size_t ce = h2(build_p(parse_algebra_spec(spec), m).p.lie).dim;
    CHECK(rep.doc["dims"]["ce"] == ce);
    CHECK(rep.doc["dims"]["closed"] == ce);
    CHECK(rep.exit_code == 0);
  }
}

TEST_CASE("h2 on sl matches the oracle") {
  Request req = request("h2", "builtin:dual", 3);
  req.construction = "sl";
  Report rep = run_command(req);
  CHECK(rep.doc["dims"]["ce"] == h2(build_sl(builtin_by_name("dual").algebra, 3).lie).dim);
  CHECK(rep.doc["lie"]["dim"] == build_sl(builtin_by_name("dual").algebra, 3).lie.dim());
}

TEST_CASE("cocycle command text") {
  Request req = request("cocycle", "builtin:rationals");
  req.which = "beta4";
  req.coboundary = true;
  Report rep = run_command(req);
  CHECK(rep.exit_code == 0);
  CHECK(render_text(rep.doc).find("cocycle: pass; coboundary: none (class nonzero)") != std::string::npos);
  req.which = "beta3";
  req.spec = "builtin:gf3";
  rep = run_command(req);
  CHECK(rep.doc["cocycle"]["class_rank"] == 3);
  req.which = "alpha";
  req.spec = "builtin:double_grassmann1";
  rep = run_command(req);
  CHECK(rep.exit_code == 0);
  CHECK(rep.doc["cocycle"]["class_rank"] == 1);
}

TEST_CASE("identities, iso-sl and structural check commands") {
  Report ids = run_command(request("identities", "builtin:double_grassmann1", 3));
  CHECK(ids.exit_code == 0);
  CHECK(ids.doc["checks"].size() > 9);
  CHECK(run_command(request("iso-sl", "builtin:dual", 3)).exit_code == 0);
  Report chk = run_command(request("check", "builtin:z2", 3));
  CHECK(chk.exit_code == 0);
  CHECK(chk.doc["checks"].size() == structural_suite(builtin_by_name("z2"), 3).checks.size() + 7);
}

TEST_CASE("golden reports") {
  auto cob = [] {
    Request r = request("cocycle", "builtin:rationals");
    r.which = "beta4";
    r.coboundary = true;
    return r;
  };
  const std::vector<std::pair<std::string, Request>> cases = {
      {"compare_rationals_m4", request("compare", "builtin:rationals", 4)},
      {"compare_gf3_m3", request("compare", "builtin:gf3", 3)},
      {"cocycle_beta4_rationals", cob()},
      {"check_grassmann1", request("check", "builtin:grassmann1")},
      {"export_grassmann1", request("export", "builtin:grassmann1")},
      {"closed_form_double_grassmann1_m4", request("closed-form", "builtin:double_grassmann1", 4)},
      {"error_unknown_builtin", request("check", "builtin:nope")},
  };
  for (const auto& [name, req] : cases) {
    INFO(name);
    json got = without_timing(run_command(req).doc);
    CHECK(got == golden(name));
    CHECK(without_timing(run_command(req).doc) == got);
  }
}

TEST_CASE("reports keep the stable top-level keys") {
  for (const auto& cmd : command_names()) {
    INFO(cmd);
    json doc = run_command(request(cmd, "builtin:rationals", cmd == "cocycle" ? std::nullopt : std::optional<std::size_t>(3))).doc;
    for (const char* key : {"command", "inputs", "checks", "dims", "summary", "status", "timing_ms"})
      CHECK(doc.contains(key));
    CHECK(json::parse(doc.dump()) == doc);
    CHECK_FALSE(render_text(doc).empty());
  }
}
