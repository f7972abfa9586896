#include "superhom/cli.hpp"

#include <chrono>
#include <sstream>

#include "superhom/closedform.hpp"
#include "superhom/cocycle.hpp"
#include "superhom/homology.hpp"
#include "superhom/lie.hpp"
#include "superhom/spec_io.hpp"

namespace superhom {

using nlohmann::json;

namespace {

struct UsageError : Error {
  using Error::Error;
};

json checks_json(const CheckReport& rep) {
  json out = json::array();
  for (const auto& c : rep.checks) {
    json item{{"name", c.name}, {"status", c.passed ? "pass" : "fail"}};
    if (!c.passed) item["witness"] = c.witness;
    out.push_back(std::move(item));
  }
  return out;
}

std::size_t require_m(const Request& req, std::size_t fallback = 0) {
  if (!req.m && fallback == 0) throw UsageError("--m is required for " + req.command);
  const std::size_t m = req.m.value_or(fallback);
  if (m < 3) throw UsageError("--m must be at least 3");
  return m;
}

json dims_json(const HomologyReport& h) {
  json d;
  d["ce"] = h.ce_dim ? json(*h.ce_dim) : json(nullptr);
  d["closed"] = h.closed_dim;
  d["hd1"] = h.hd1;
  d["correction"] = h.quotient_correction;
  d["z3"] = h.z3;
  return d;
}

struct Outcome {
  json body = json::object();
  CheckReport checks;
  std::string summary;
  bool mismatch = false;
};

Outcome cmd_check(const InvolutedAlgebra& r, const Request& req) {
  Outcome o;
  o.checks.append(verify_superalgebra(r.algebra), "superalgebra: ");
  o.checks.append(verify_superinvolution(r), "superinvolution: ");
  if (req.m) o.checks.append(structural_suite(r, require_m(req)), "m=" + std::to_string(*req.m) + ": ");
  o.body["algebra"] = {{"name", r.name}, {"dim", r.dim()}, {"field", r.field().name()}};
  o.summary = std::to_string(o.checks.checks.size()) + " checks";
  return o;
}

Outcome cmd_h2(const InvolutedAlgebra& r, const Request& req) {
  Outcome o;
  const std::size_t m = require_m(req);
  LieSuperAlgebra g = [&] {
    if (req.construction == "p") return build_p(r, m).p.lie;
    if (req.construction == "sl") return build_sl(r.algebra, m).lie;
    throw UsageError("--construction must be p or sl");
  }();
  H2Result h = h2(g);
  o.body["lie"] = {{"dim", g.dim()}, {"even", g.even_dim()}, {"odd", g.odd_dim()}};
  o.body["complex"] = {{"c1", h.c1}, {"c2", h.c2}, {"c3", h.c3}, {"rank_d2", h.rank_d2}, {"rank_d3", h.rank_d3}};
  o.body["dims"] = {{"ce", h.dim}};
  o.summary = "H2(" + req.construction + "_" + std::to_string(m) + ") = " + std::to_string(h.dim);
  return o;
}

Outcome cmd_closed_form(const InvolutedAlgebra& r, const Request& req) {
  Outcome o;
  HomologyReport h = h2_closed_form(r, require_m(req));
  o.body["dims"] = dims_json(h);
  o.summary = "closed form = " + std::to_string(h.closed_dim);
  return o;
}

Outcome cmd_compare(const InvolutedAlgebra& r, const Request& req) {
  Outcome o;
  HomologyReport h = compare_h2(r, require_m(req));
  o.body["dims"] = dims_json(h);
  o.checks.add("ce equals closed form", h.agrees(),
               "ce=" + std::to_string(h.ce_dim.value_or(0)) + " closed=" + std::to_string(h.closed_dim));
  o.mismatch = !h.agrees();
  o.summary = "ce=" + std::to_string(h.ce_dim.value_or(0)) + ", closed=" + std::to_string(h.closed_dim);
  return o;
}

Outcome cmd_cocycle(const InvolutedAlgebra& r, const Request& req) {
  Outcome o;
  std::size_t m = 0;
  TwoCocycle c = [&] {
    if (req.which == "alpha") {
      m = require_m(req, 3);
      AlphaCocycle a = alpha_cocycle(build_p(r, m));
      o.checks.append(verify_cocycle(a.gl), "gl: ");
      return a.p;
    }
    if (req.which == "beta4") {
      m = require_m(req, 4);
      if (m != 4) throw UsageError("beta4 is defined for m = 4");
      return beta4_cocycle(build_p(r, m));
    }
    if (req.which == "beta3") {
      m = require_m(req, 3);
      if (m != 3) throw UsageError("beta3 is defined for m = 3");
      return beta3_cocycle(build_p(r, m));
    }
    throw UsageError("--which must be alpha, beta4 or beta3");
  }();
  const std::string prefix = req.which == "alpha" ? "p: " : "";
  CheckReport own = verify_cocycle(c);
  o.checks.append(own, prefix);
  const bool ok = own.passed();
  o.body["cocycle"] = {{"name", c.name}, {"m", m}, {"carrier_dim", c.carrier.dim()}, {"values_dim", c.values_dim()}};
  o.summary = std::string("cocycle: ") + (ok ? "pass" : "fail");
  if (req.coboundary) {
    const bool trivial = is_coboundary(c).has_value();
    const std::size_t rank = class_rank(c);
    o.body["cocycle"]["coboundary"] = trivial;
    o.body["cocycle"]["class_rank"] = rank;
    o.summary += trivial ? "; coboundary: yes (class zero)" : "; coboundary: none (class nonzero)";
    o.summary += "; class rank " + std::to_string(rank);
  }
  return o;
}

Outcome cmd_identities(const InvolutedAlgebra& r, const Request& req) {
  Outcome o;
  PConstruction pc = build_p(r, require_m(req));
  AlphaCocycle a = alpha_cocycle(pc);
  CentralExtension e = central_extension(a.p);
  o.checks.append(verify_extension(e), "extension: ");
  o.checks.append(lambda_mu_suite(pc, a, e));
  o.body["extension"] = {{"base_dim", e.base().dim()}, {"total_dim", e.total.dim()}};
  o.summary = std::to_string(o.checks.checks.size()) + " checks";
  return o;
}

Outcome cmd_iso_sl(const InvolutedAlgebra& r, const Request& req) {
  Outcome o;
  o.checks = iso_p_double_sl(r.algebra, require_m(req));
  o.summary = "gl -> p~ of the double";
  return o;
}

Outcome cmd_export(const InvolutedAlgebra& r, const Request&) {
  Outcome o;
  o.body["algebra"] = algebra_to_json(r);
  o.summary = r.name;
  return o;
}

using Handler = Outcome (*)(const InvolutedAlgebra&, const Request&);

const std::vector<std::pair<std::string, Handler>>& handlers() {
  static const std::vector<std::pair<std::string, Handler>> table = {
      {"check", cmd_check},     {"h2", cmd_h2},           {"closed-form", cmd_closed_form},
      {"compare", cmd_compare}, {"cocycle", cmd_cocycle}, {"identities", cmd_identities},
      {"iso-sl", cmd_iso_sl},   {"export", cmd_export}};
  return table;
}

json inputs_json(const Request& req) {
  json in{{"spec", req.spec}};
  if (req.m) in["m"] = *req.m;
  if (req.command == "h2") in["construction"] = req.construction;
  if (req.command == "cocycle") {
    in["which"] = req.which;
    in["coboundary"] = req.coboundary;
  }
  return in;
}

void render(std::ostringstream& out, const json& v, int depth) {
  const std::string pad(2 * depth, ' ');
  if (v.is_object()) {
    for (const auto& [k, x] : v.items()) {
      if (x.is_structured() && !x.empty()) {
        out << pad << k << ":\n";
        render(out, x, depth + 1);
      } else {
        out << pad << k << ": " << (x.is_string() ? x.get<std::string>() : x.dump()) << "\n";
      }
    }
  } else if (v.is_array()) {
    for (const auto& x : v) {
      if (x.is_object() && x.contains("name") && x.contains("status")) {
        out << pad << "- " << x["status"].get<std::string>() << "  " << x["name"].get<std::string>();
        if (x.contains("witness")) out << "  [" << x["witness"].get<std::string>() << "]";
        out << "\n";
      } else if (x.is_structured()) {
        out << pad << "-\n";
        render(out, x, depth + 1);
      } else {
        out << pad << "- " << (x.is_string() ? x.get<std::string>() : x.dump()) << "\n";
      }
    }
  }
}

}  // namespace

const std::vector<std::string>& command_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const auto& [name, h] : handlers()) v.push_back(name);
    return v;
  }();
  return names;
}

CheckReport structural_suite(const InvolutedAlgebra& r, std::size_t m) {
  CheckReport rep;
  rep.append(verify_superalgebra(r.algebra), "superalgebra: ");
  rep.append(verify_superinvolution(r), "superinvolution: ");
  PConstruction pc = build_p(r, m);
  rep.append(pc.matrix.verify_prp(), "prp: ");
  rep.append(verify_lie(pc.p.lie), "p lie: ");
  rep.append(check_d2_d3(pc.p.lie), "p complex: ");
  const std::size_t h1 = h1_dim(pc.p.lie);
  rep.add("p perfect", h1 == 0, "H1 = " + std::to_string(h1));
  const std::size_t gap = pc.ptilde.lie.dim() - pc.p.lie.dim(), tq = trace_quotient_dim(r);
  rep.add("dim p~ - dim p = dim R / ([R,R] + R_(-))", gap == tq,
          std::to_string(gap) + " != " + std::to_string(tq));
  rep.append(stp_relation_check(pc.p.lie, p_generators(pc), r), "stp: ");
  return rep;
}

Report run_command(const Request& req) {
  const auto start = std::chrono::steady_clock::now();
  Report out;
  json& doc = out.doc;
  doc["command"] = req.command;
  doc["inputs"] = inputs_json(req);
  Outcome o;
  try {
    Handler h = nullptr;
    for (const auto& [name, fn] : handlers())
      if (name == req.command) h = fn;
    if (!h) throw UsageError("unknown command \"" + req.command + "\"");
    InvolutedAlgebra r = parse_algebra_spec(req.spec);
    o = h(r, req);
    const bool ok = o.checks.passed() && !o.mismatch;
    doc["status"] = ok ? "pass" : "fail";
    out.exit_code = ok ? 0 : 1;
  } catch (const VerificationError& e) {
    o = Outcome{};
    o.checks = e.report;
    o.summary = std::string("verification failed: ") + e.what();
    doc["status"] = "fail";
    out.exit_code = 1;
  } catch (const std::exception& e) {
    o = Outcome{};
    o.summary = std::string("error: ") + e.what();
    doc["status"] = "error";
    out.exit_code = 2;
  }
  for (auto& [k, v] : o.body.items()) doc[k] = v;
  doc["checks"] = checks_json(o.checks);
  if (!doc.contains("dims")) doc["dims"] = json::object();
  doc["summary"] = o.summary;
  doc["timing_ms"] =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return out;
}

std::string render_text(const json& doc) {
  std::ostringstream out;
  render(out, doc, 0);
  return out.str();
}

}  // namespace superhom
