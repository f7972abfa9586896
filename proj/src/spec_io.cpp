#include "superhom/spec_io.hpp"

#include <filesystem>
#include <fstream>

namespace superhom {

using nlohmann::json;

namespace {

InvolutedAlgebra builtin(std::string_view name, BuiltinInvolution inv = BuiltinInvolution::identity,
                         FieldSpec f = FieldSpec::rationals(), std::size_t n = 1) {
  return builtin_algebra(name, BuiltinParams{f, n, inv});
}

Scalar scalar_of(const FieldSpec& f, const json& v, const std::string& where) {
  try {
    if (v.is_string()) return f.parse(v.get<std::string>());
    if (v.is_number_integer()) return f.from_int(v.get<std::int64_t>());
  } catch (const Error& e) {
    throw ParseError(where + ": " + e.what());
  }
  throw ParseError(where + ": scalars must be strings such as \"3/4\" or \"2\"");
}

SparseVector vector_of(const FieldSpec& f, const json& v, std::size_t dim, const std::string& where) {
  if (!v.is_array() || v.size() != dim)
    throw ParseError(where + ": expected a list of " + std::to_string(dim) + " coefficients");
  SparseVector out;
  for (std::size_t k = 0; k < dim; ++k) out.push_back(k, scalar_of(f, v[k], where + "[" + std::to_string(k) + "]"));
  return out;
}

json vector_json(const SparseVector& v, std::size_t dim, const FieldSpec& f) {
  json out = json::array();
  for (const auto& s : v.to_dense(dim, f.zero())) out.push_back(s.to_string());
  return out;
}

const json& require(const json& doc, const char* key) {
  if (!doc.contains(key)) throw ParseError(std::string("missing key \"") + key + "\"");
  return doc.at(key);
}

}  // namespace

const std::vector<std::string>& builtin_names() {
  static const std::vector<std::string> names = {
      "rationals", "gf3",           "grassmann1",        "grassmann1_id", "dual",    "z2",
      "gf3_z2",    "double_rationals", "double_grassmann1", "double_dual",   "matrix2"};
  return names;
}

InvolutedAlgebra builtin_by_name(std::string_view name) {
  const FieldSpec gf3 = FieldSpec::prime(3);
  if (name == "rationals") return builtin("base_field");
  if (name == "gf3") return builtin("base_field", BuiltinInvolution::identity, gf3);
  if (name == "grassmann1") return builtin("grassmann", BuiltinInvolution::rho);
  if (name == "grassmann1_id") return builtin("grassmann");
  if (name == "dual") return builtin("dual_numbers");
  if (name == "z2") return builtin("group_algebra_z2");
  if (name == "gf3_z2") return builtin("group_algebra_z2", BuiltinInvolution::identity, gf3);
  if (name == "double_rationals") return double_with_exchange(builtin("base_field").algebra);
  if (name == "double_grassmann1") return double_with_exchange(builtin("grassmann", BuiltinInvolution::rho).algebra);
  if (name == "double_dual") return double_with_exchange(builtin("dual_numbers").algebra);
  if (name == "matrix2") return builtin("matrix_algebra", BuiltinInvolution::transpose, FieldSpec::rationals(), 2);
  throw ParseError("unknown builtin \"" + std::string(name) + "\"");
}

json algebra_to_json(const InvolutedAlgebra& r) {
  const SuperAlgebra& s = r.algebra;
  const FieldSpec& f = r.field();
  const std::size_t d = s.dim();
  json doc;
  doc["name"] = r.name;
  doc["field"] = f.is_rational() ? json{{"type", "rational"}} : json{{"type", "prime"}, {"p", f.characteristic()}};
  doc["basis"] = json::array();
  for (const auto& b : s.basis()) doc["basis"].push_back({{"name", b.label}, {"parity", b.parity}});
  doc["unit"] = vector_json(s.unit(), d, f);
  doc["mul"] = json::array();
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      if (!s.mul(i, j).empty()) doc["mul"].push_back({{"i", i}, {"j", j}, {"coeffs", vector_json(s.mul(i, j), d, f)}});
  json inv = json::array();
  for (std::size_t i = 0; i < d; ++i) inv.push_back(vector_json(r.involution.matrix().row(i), d, f));
  doc["involution"] = inv;
  return doc;
}

InvolutedAlgebra algebra_from_json(const json& doc, std::string fallback_name) {
  if (!doc.is_object()) throw ParseError("algebra spec must be a JSON object");
  const json& fj = require(doc, "field");
  const std::string type = require(fj, "type").get<std::string>();
  FieldSpec f = FieldSpec::rationals();
  if (type == "prime") {
    const json& p = require(fj, "p");
    if (!p.is_number_integer() || p.get<std::int64_t>() < 2) throw ParseError("field.p must be an integer >= 3");
    try {
      f = FieldSpec::prime(p.get<std::uint64_t>());
    } catch (const Error& e) {
      throw ParseError(e.what());
    }
  } else if (type != "rational") {
    throw ParseError("field.type must be \"rational\" or \"prime\"");
  }

  const json& bj = require(doc, "basis");
  if (!bj.is_array() || bj.empty()) throw ParseError("basis must be a nonempty list");
  std::vector<BasisElement> basis;
  for (const auto& b : bj) {
    const json& par = require(b, "parity");
    if (!par.is_number_integer() || (par.get<int>() != 0 && par.get<int>() != 1))
      throw ParseError("basis parity must be 0 or 1");
    basis.push_back({require(b, "name").get<std::string>(), par.get<int>()});
  }
  const std::size_t d = basis.size();
  SparseVector unit = vector_of(f, require(doc, "unit"), d, "unit");

  std::vector<std::vector<SparseVector>> mul(d, std::vector<SparseVector>(d));
  const json& mj = require(doc, "mul");
  if (!mj.is_array()) throw ParseError("mul must be a list");
  for (const auto& e : mj) {
    const json &ij = require(e, "i"), &jj = require(e, "j");
    if (!ij.is_number_unsigned() || !jj.is_number_unsigned() || ij.get<std::size_t>() >= d ||
        jj.get<std::size_t>() >= d)
      throw ParseError("mul entry index out of range");
    const std::size_t i = ij.get<std::size_t>(), j = jj.get<std::size_t>();
    mul[i][j] = vector_of(f, require(e, "coeffs"), d, "mul[" + std::to_string(i) + "," + std::to_string(j) + "]");
  }

  const json& inv = require(doc, "involution");
  if (!inv.is_array() || inv.size() != d) throw ParseError("involution must be a " + std::to_string(d) + "x" +
                                                          std::to_string(d) + " matrix");
  SparseMatrix im(f, d, d);
  for (std::size_t i = 0; i < d; ++i) im.set_row(i, vector_of(f, inv[i], d, "involution[" + std::to_string(i) + "]"));

  std::string name = doc.contains("name") ? doc.at("name").get<std::string>() : std::move(fallback_name);
  SuperAlgebra alg = [&] {
    try {
      return SuperAlgebra(f, std::move(basis), std::move(mul), std::move(unit));
    } catch (const Error& e) {
      throw ParseError(e.what());
    }
  }();
  CheckReport rep;
  rep.append(verify_superalgebra(alg), "superalgebra: ");
  if (!rep.passed()) throw VerificationError("not a unital associative superalgebra", rep);
  InvolutedAlgebra r{std::move(alg), Superinvolution(std::move(im)), std::move(name)};
  rep.append(verify_superinvolution(r), "superinvolution: ");
  if (!rep.passed()) throw VerificationError("involution is not a superinvolution", rep);
  return r;
}

InvolutedAlgebra parse_algebra_spec(std::string_view source) {
  constexpr std::string_view prefix = "builtin:";
  if (source.starts_with(prefix)) return builtin_by_name(source.substr(prefix.size()));
  const std::filesystem::path path{std::string(source)};
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open \"" + path.string() + "\"");
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::exception& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
  try {
    return algebra_from_json(doc, path.stem().string());
  } catch (const json::exception& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

}  // namespace superhom
