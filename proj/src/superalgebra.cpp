#include "superhom/superalgebra.hpp"

#include <bit>
#include <cmath>
#include <sstream>

namespace superhom {

namespace {

Scalar sign(const FieldSpec& f, int exponent) { return (exponent & 1) ? f.from_int(-1) : f.one(); }

// Matrix whose column j is cols[j].
SparseMatrix from_columns(const FieldSpec& f, std::size_t rows, const std::vector<SparseVector>& cols) {
  SparseMatrix t(f, cols.size(), rows);
  for (std::size_t j = 0; j < cols.size(); ++j) t.set_row(j, cols[j]);
  return t.transpose();
}

std::vector<SparseVector> columns_of(const SparseMatrix& m) {
  SparseMatrix t = m.transpose();
  std::vector<SparseVector> cols;
  for (std::size_t j = 0; j < t.rows(); ++j) cols.push_back(t.row(j));
  return cols;
}

std::string format_vector(const std::vector<BasisElement>& basis, const SparseVector& a) {
  if (a.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& e : a) {
    std::string c = e.value.to_string();
    if (!first) {
      if (c.front() == '-') {
        out << " - ";
        c.erase(0, 1);
      } else {
        out << " + ";
      }
    }
    first = false;
    if (c == "1") {
      out << basis[e.index].label;
    } else if (c == "-1") {
      out << "-" << basis[e.index].label;
    } else {
      out << c << "*" << basis[e.index].label;
    }
  }
  return out.str();
}

}  // namespace

SuperAlgebra::SuperAlgebra(FieldSpec field, std::vector<BasisElement> basis, std::vector<std::vector<SparseVector>> mul,
                           SparseVector unit)
    : field_(field), basis_(std::move(basis)), mul_(std::move(mul)), unit_(std::move(unit)) {
  const std::size_t d = basis_.size();
  if (d == 0) throw Error("superalgebra must have positive dimension");
  for (const auto& b : basis_) {
    if (b.parity != 0 && b.parity != 1) throw Error("basis element " + b.label + " has parity outside {0,1}");
  }
  if (mul_.size() != d) throw Error("multiplication table has wrong number of rows");
  for (const auto& row : mul_) {
    if (row.size() != d) throw Error("multiplication table has a row of wrong length");
    for (const auto& v : row) {
      for (const auto& e : v) {
        if (e.index >= d) throw Error("structure constant refers to a basis index out of range");
        field_.check(e.value);
      }
    }
  }
  for (const auto& e : unit_) {
    if (e.index >= d) throw Error("unit refers to a basis index out of range");
    field_.check(e.value);
  }
}

SparseVector SuperAlgebra::multiply(const SparseVector& a, const SparseVector& b) const {
  SparseAccumulator acc;
  for (const auto& x : a) {
    for (const auto& y : b) acc.add(mul_[x.index][y.index], x.value * y.value);
  }
  return acc.take();
}

SparseVector SuperAlgebra::supercommutator(const SparseVector& a, const SparseVector& b) const {
  SparseAccumulator acc;
  for (const auto& x : a) {
    for (const auto& y : b) {
      Scalar c = x.value * y.value;
      acc.add(mul_[x.index][y.index], c);
      acc.add(mul_[y.index][x.index], -(c * sign(field_, parity(x.index) * parity(y.index))));
    }
  }
  return acc.take();
}

SparseVector SuperAlgebra::rho(const SparseVector& a) const {
  SparseVector out;
  for (const auto& e : a) out.push_back(e.index, parity(e.index) ? -e.value : e.value);
  return out;
}

Parity SuperAlgebra::parity_of(const SparseVector& a) const {
  if (a.empty()) return 0;
  Parity p = parity(a[0].index);
  for (const auto& e : a)
    if (parity(e.index) != p) return -1;
  return p;
}

std::string SuperAlgebra::format(const SparseVector& a) const { return format_vector(basis_, a); }

bool SuperAlgebra::same_structure(const SuperAlgebra& other) const {
  return field_ == other.field_ && basis_ == other.basis_ && mul_ == other.mul_ && unit_ == other.unit_;
}

Superinvolution::Superinvolution(SparseMatrix matrix) : matrix_(std::move(matrix)) {
  if (matrix_.rows() != matrix_.cols()) throw Error("superinvolution matrix must be square");
}

Superinvolution Superinvolution::identity(const SuperAlgebra& a) {
  return Superinvolution(SparseMatrix::identity(a.field(), a.dim()));
}

Superinvolution Superinvolution::rho(const SuperAlgebra& a) {
  SparseMatrix m(a.field(), a.dim(), a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) m.set_row(i, SparseVector::unit(i, sign(a.field(), a.parity(i))));
  return Superinvolution(std::move(m));
}

CheckReport verify_superalgebra(const SuperAlgebra& a) {
  CheckReport report;
  const std::size_t d = a.dim();

  std::string witness;
  for (std::size_t i = 0; i < d && witness.empty(); ++i) {
    for (std::size_t j = 0; j < d && witness.empty(); ++j) {
      const int want = (a.parity(i) + a.parity(j)) % 2;
      for (const auto& e : a.mul(i, j)) {
        if (a.parity(e.index) != want) {
          witness = a.label(i) + "*" + a.label(j) + " = " + a.format(a.mul(i, j)) + " is not of parity " +
                    std::to_string(want);
          break;
        }
      }
    }
  }
  report.add("parity homogeneity", witness.empty(), witness);

  witness.clear();
  for (std::size_t i = 0; i < d && witness.empty(); ++i) {
    for (std::size_t j = 0; j < d && witness.empty(); ++j) {
      const SparseVector ij = a.mul(i, j);
      for (std::size_t k = 0; k < d; ++k) {
        SparseVector left = a.multiply(ij, a.basis_vector(k));
        SparseVector right = a.multiply(a.basis_vector(i), a.mul(j, k));
        if (!(left == right)) {
          witness = "(" + a.label(i) + "*" + a.label(j) + ")*" + a.label(k) + " = " + a.format(left) + " but " +
                    a.label(i) + "*(" + a.label(j) + "*" + a.label(k) + ") = " + a.format(right);
          break;
        }
      }
    }
  }
  report.add("associativity", witness.empty(), witness);

  witness.clear();
  if (a.parity_of(a.unit()) != 0 || a.unit().empty()) witness = "unit " + a.format(a.unit()) + " is not a nonzero even element";
  for (std::size_t i = 0; i < d && witness.empty(); ++i) {
    const SparseVector b = a.basis_vector(i);
    SparseVector l = a.multiply(a.unit(), b);
    SparseVector r = a.multiply(b, a.unit());
    if (!(l == b)) witness = "1*" + a.label(i) + " = " + a.format(l);
    else if (!(r == b)) witness = a.label(i) + "*1 = " + a.format(r);
  }
  report.add("unit laws", witness.empty(), witness);
  return report;
}

CheckReport verify_superinvolution(const InvolutedAlgebra& r) {
  CheckReport report;
  const SuperAlgebra& a = r.algebra;
  const std::size_t d = a.dim();
  if (r.involution.matrix().rows() != d) {
    report.fail("shape", "involution acts on dimension " + std::to_string(r.involution.matrix().rows()) +
                             " but the algebra has dimension " + std::to_string(d));
    return report;
  }
  std::vector<SparseVector> image(d);
  for (std::size_t i = 0; i < d; ++i) image[i] = r.bar(a.basis_vector(i));

  std::string witness;
  for (std::size_t i = 0; i < d && witness.empty(); ++i) {
    for (const auto& e : image[i]) {
      if (a.parity(e.index) != a.parity(i)) {
        witness = "bar(" + a.label(i) + ") = " + a.format(image[i]);
        break;
      }
    }
  }
  report.add("parity preserving", witness.empty(), witness);

  witness.clear();
  for (std::size_t i = 0; i < d && witness.empty(); ++i) {
    SparseVector twice = r.bar(image[i]);
    if (!(twice == a.basis_vector(i))) witness = "bar(bar(" + a.label(i) + ")) = " + a.format(twice);
  }
  report.add("involutive", witness.empty(), witness);

  witness.clear();
  for (std::size_t i = 0; i < d && witness.empty(); ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      SparseVector left = r.bar(a.mul(i, j));
      SparseVector right = a.multiply(image[j], image[i]).scaled(sign(a.field(), a.parity(i) * a.parity(j)));
      if (!(left == right)) {
        witness = "bar(" + a.label(i) + "*" + a.label(j) + ") = " + a.format(left) + " but signed bar(" + a.label(j) +
                  ")*bar(" + a.label(i) + ") = " + a.format(right);
        break;
      }
    }
  }
  report.add("anti-multiplicative", witness.empty(), witness);

  SparseVector u = r.bar(a.unit());
  report.add("fixes unit", u == a.unit(), "bar(1) = " + a.format(u));
  return report;
}

namespace {

InvolutedAlgebra finish(SuperAlgebra alg, BuiltinInvolution inv, std::string name, bool is_matrix) {
  Superinvolution s = Superinvolution::identity(alg);
  switch (inv) {
    case BuiltinInvolution::identity:
      break;
    case BuiltinInvolution::rho:
      s = Superinvolution::rho(alg);
      break;
    case BuiltinInvolution::transpose: {
      if (!is_matrix) throw Error("transpose involution is only available for matrix_algebra");
      const auto n = static_cast<std::size_t>(std::llround(std::sqrt(static_cast<double>(alg.dim()))));
      SparseMatrix m(alg.field(), alg.dim(), alg.dim());
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m.set_row(i * n + j, SparseVector::unit(j * n + i, alg.field().one()));
      s = Superinvolution(std::move(m));
      break;
    }
  }
  InvolutedAlgebra r{std::move(alg), std::move(s), std::move(name)};
  CheckReport a = verify_superalgebra(r.algebra);
  if (!a.passed()) throw Error("builtin " + r.name + " fails superalgebra axioms: " + a.first_failure());
  CheckReport b = verify_superinvolution(r);
  if (!b.passed()) throw Error("involution incompatible with " + r.name + ": " + b.first_failure());
  return r;
}

std::vector<std::vector<SparseVector>> empty_table(std::size_t d) {
  return std::vector<std::vector<SparseVector>>(d, std::vector<SparseVector>(d));
}

SuperAlgebra grassmann(const FieldSpec& f, std::size_t n) {
  if (n > 16) throw Error("grassmann: at most 16 generators supported");
  const std::size_t d = std::size_t{1} << n;
  std::vector<BasisElement> basis;
  for (std::size_t s = 0; s < d; ++s) {
    std::string label;
    for (std::size_t k = 0; k < n; ++k)
      if (s >> k & 1U) label += "x" + std::to_string(k + 1);
    basis.push_back({s == 0 ? "1" : label, std::popcount(s) % 2});
  }
  auto mul = empty_table(d);
  for (std::size_t s = 0; s < d; ++s) {
    for (std::size_t t = 0; t < d; ++t) {
      if (s & t) continue;
      int swaps = 0;
      for (std::size_t k = 0; k < n; ++k)
        if (t >> k & 1U) swaps += std::popcount(s >> (k + 1));
      mul[s][t] = SparseVector::unit(s | t, sign(f, swaps));
    }
  }
  return SuperAlgebra(f, std::move(basis), std::move(mul), SparseVector::unit(0, f.one()));
}

SuperAlgebra matrix_algebra(const FieldSpec& f, std::size_t n) {
  if (n == 0) throw Error("matrix_algebra: n must be positive");
  std::vector<BasisElement> basis;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) basis.push_back({"E" + std::to_string(i + 1) + std::to_string(j + 1), 0});
  auto mul = empty_table(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t l = 0; l < n; ++l) mul[i * n + j][j * n + l] = SparseVector::unit(i * n + l, f.one());
  SparseAccumulator unit;
  for (std::size_t i = 0; i < n; ++i) unit.add(i * n + i, f.one());
  return SuperAlgebra(f, std::move(basis), std::move(mul), unit.take());
}

}  // namespace

InvolutedAlgebra builtin_algebra(std::string_view name, const BuiltinParams& params) {
  const FieldSpec& f = params.field;
  if (name == "base_field") {
    std::vector<std::vector<SparseVector>> mul{{SparseVector::unit(0, f.one())}};
    return finish(SuperAlgebra(f, {{"1", 0}}, std::move(mul), SparseVector::unit(0, f.one())), params.involution,
                  "base_field", false);
  }
  if (name == "dual_numbers") {
    auto mul = empty_table(2);
    mul[0][0] = SparseVector::unit(0, f.one());
    mul[0][1] = SparseVector::unit(1, f.one());
    mul[1][0] = SparseVector::unit(1, f.one());
    return finish(SuperAlgebra(f, {{"1", 0}, {"x", 0}}, std::move(mul), SparseVector::unit(0, f.one())),
                  params.involution, "dual_numbers", false);
  }
  if (name == "grassmann") {
    return finish(grassmann(f, params.n), params.involution, "grassmann(" + std::to_string(params.n) + ")", false);
  }
  if (name == "group_algebra_z2") {
    auto mul = empty_table(2);
    mul[0][0] = SparseVector::unit(0, f.one());
    mul[0][1] = SparseVector::unit(1, f.one());
    mul[1][0] = SparseVector::unit(1, f.one());
    mul[1][1] = SparseVector::unit(0, f.one());
    return finish(SuperAlgebra(f, {{"1", 0}, {"g", 0}}, std::move(mul), SparseVector::unit(0, f.one())),
                  params.involution, "group_algebra_z2", false);
  }
  if (name == "matrix_algebra") {
    return finish(matrix_algebra(f, params.n), params.involution, "matrix_algebra(" + std::to_string(params.n) + ")",
                  true);
  }
  throw Error("unknown builtin algebra \"" + std::string(name) + "\"");
}

SuperAlgebra opposite(const SuperAlgebra& s) {
  const std::size_t d = s.dim();
  auto mul = empty_table(d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) mul[i][j] = s.mul(j, i).scaled(sign(s.field(), s.parity(i) * s.parity(j)));
  return SuperAlgebra(s.field(), s.basis(), std::move(mul), s.unit());
}

InvolutedAlgebra double_with_exchange(const SuperAlgebra& s) {
  const std::size_t d = s.dim();
  const FieldSpec& f = s.field();
  SuperAlgebra op = opposite(s);
  std::vector<BasisElement> basis;
  for (const auto& b : s.basis()) basis.push_back({"(" + b.label + ",0)", b.parity});
  for (const auto& b : s.basis()) basis.push_back({"(0," + b.label + ")", b.parity});
  std::vector<std::size_t> shift(d);
  for (std::size_t i = 0; i < d; ++i) shift[i] = i + d;
  auto mul = empty_table(2 * d);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      mul[i][j] = s.mul(i, j);
      mul[i + d][j + d] = op.mul(i, j).remapped(shift);
    }
  }
  SparseVector unit = s.unit() + s.unit().remapped(shift);
  SparseMatrix ex(f, 2 * d, 2 * d);
  for (std::size_t i = 0; i < d; ++i) {
    ex.set_row(i, SparseVector::unit(i + d, f.one()));
    ex.set_row(i + d, SparseVector::unit(i, f.one()));
  }
  InvolutedAlgebra r{SuperAlgebra(f, std::move(basis), std::move(mul), std::move(unit)), Superinvolution(std::move(ex)),
                     "double"};
  CheckReport rep = verify_superinvolution(r);
  if (!rep.passed()) throw Error("exchange involution failed verification: " + rep.first_failure());
  return r;
}

InvolutedAlgebra compose_with_rho(const InvolutedAlgebra& r) {
  std::vector<SparseVector> cols = columns_of(r.involution.matrix());
  for (std::size_t j = 0; j < cols.size(); ++j)
    if (r.algebra.parity(j)) cols[j] = -cols[j];
  InvolutedAlgebra out{r.algebra, Superinvolution(from_columns(r.field(), r.dim(), cols)), r.name + "*rho"};
  CheckReport rep = verify_superinvolution(out);
  if (!rep.passed()) throw Error("bar composed with rho is not a superinvolution: " + rep.first_failure());
  return out;
}

std::pair<Subspace, Subspace> r_plus_minus(const InvolutedAlgebra& r) {
  const std::size_t d = r.dim();
  std::vector<SparseVector> plus(d), minus(d);
  for (std::size_t j = 0; j < d; ++j) {
    SparseVector b = r.algebra.basis_vector(j);
    SparseVector barb = r.bar(b);
    SparseVector rb = r.algebra.rho(b);
    plus[j] = barb - rb;
    minus[j] = barb + rb;
  }
  return {kernel_basis(from_columns(r.field(), d, plus)), kernel_basis(from_columns(r.field(), d, minus))};
}

MatrixSuperAlgebra::MatrixSuperAlgebra(InvolutedAlgebra coefficients, std::size_t m)
    : r_(std::move(coefficients)), m_(m) {
  if (m_ < 1) throw Error("matrix size m must be at least 1");
}

Parity MatrixSuperAlgebra::parity(std::size_t idx) const {
  const std::size_t d = r_.dim();
  const std::size_t r = idx % d;
  const std::size_t ij = idx / d;
  return (index_parity(ij / size()) + index_parity(ij % size()) + ring().parity(r)) % 2;
}

SparseVector MatrixSuperAlgebra::e(std::size_t i, std::size_t j, const SparseVector& a) const {
  SparseVector out;
  for (const auto& x : a) out.push_back(index(i, j, x.index), x.value);
  return out;
}

SparseVector MatrixSuperAlgebra::entry(const SparseVector& x, std::size_t i, std::size_t j) const {
  const std::size_t lo = index(i, j, 0);
  const std::size_t hi = lo + r_.dim();
  SparseVector out;
  for (const auto& e : x)
    if (e.index >= lo && e.index < hi) out.push_back(e.index - lo, e.value);
  return out;
}

SparseVector MatrixSuperAlgebra::multiply(const SparseVector& x, const SparseVector& y) const {
  const std::size_t d = r_.dim();
  const std::size_t n = size();
  // y's entries grouped by row index.
  std::vector<std::vector<const Entry*>> rows(n);
  for (const auto& e : y) rows[e.index / d / n].push_back(&e);
  SparseAccumulator acc;
  for (const auto& a : x) {
    const std::size_t i = a.index / d / n;
    const std::size_t j = a.index / d % n;
    const std::size_t r = a.index % d;
    for (const Entry* b : rows[j]) {
      const std::size_t k = b->index / d % n;
      const std::size_t s = b->index % d;
      const Scalar c = a.value * b->value;
      for (const auto& t : ring().mul(r, s)) acc.add(index(i, k, t.index), c * t.value);
    }
  }
  return acc.take();
}

SparseVector MatrixSuperAlgebra::supercommutator(const SparseVector& x, const SparseVector& y) const {
  // Split into homogeneous parts so the Koszul sign is applied per component.
  SparseVector x0, x1, y0, y1;
  for (const auto& e : x) (parity(e.index) ? x1 : x0).push_back(e.index, e.value);
  for (const auto& e : y) (parity(e.index) ? y1 : y0).push_back(e.index, e.value);
  SparseVector out = multiply(x, y);
  out -= multiply(y0, x);
  out -= multiply(y1, x0);
  out += multiply(y1, x1);
  return out;
}

SparseVector MatrixSuperAlgebra::prp(const SparseVector& x) const {
  const std::size_t d = r_.dim();
  const std::size_t n = size();
  SparseAccumulator acc;
  for (const auto& e : x) {
    const std::size_t i = e.index / d / n;
    const std::size_t j = e.index / d % n;
    SparseVector a = SparseVector::unit(e.index % d, e.value);
    if (i < m_ && j < m_) {
      acc.add(this->e(m_ + j, m_ + i, r_.bar(a)));
    } else if (i >= m_ && j >= m_) {
      acc.add(this->e(j - m_, i - m_, r_.bar(a)));
    } else if (i < m_) {
      acc.add(this->e(j - m_, m_ + i, r_.bar(ring().rho(a))), field().from_int(-1));
    } else {
      acc.add(this->e(m_ + j, i - m_, r_.bar(ring().rho(a))));
    }
  }
  return acc.take();
}

SparseMatrix MatrixSuperAlgebra::prp_matrix() const {
  std::vector<SparseVector> cols(dim());
  for (std::size_t k = 0; k < dim(); ++k) cols[k] = prp(SparseVector::unit(k, field().one()));
  return from_columns(field(), dim(), cols);
}

CheckReport MatrixSuperAlgebra::verify_prp() const {
  CheckReport report;
  const Scalar one = field().one();
  std::vector<SparseVector> image(dim());
  std::string parity_w, invol_w;
  for (std::size_t k = 0; k < dim(); ++k) {
    const SparseVector b = SparseVector::unit(k, one);
    image[k] = prp(b);
    for (const auto& e : image[k])
      if (parity_w.empty() && parity(e.index) != parity(k)) parity_w = "prp(" + format(b) + ") = " + format(image[k]);
    if (invol_w.empty() && !(prp(image[k]) == b)) invol_w = "prp(prp(" + format(b) + ")) = " + format(prp(image[k]));
  }
  report.add("prp parity preserving", parity_w.empty(), parity_w);
  report.add("prp involutive", invol_w.empty(), invol_w);

  std::string anti_w;
  for (std::size_t a = 0; a < dim() && anti_w.empty(); ++a) {
    const SparseVector x = SparseVector::unit(a, one);
    for (std::size_t b = 0; b < dim(); ++b) {
      const SparseVector y = SparseVector::unit(b, one);
      SparseVector left = prp(multiply(x, y));
      SparseVector right = multiply(image[b], image[a]).scaled(sign(field(), parity(a) * parity(b)));
      if (!(left == right)) {
        anti_w = "prp(" + format(x) + " * " + format(y) + ") = " + format(left) + " but signed product is " + format(right);
        break;
      }
    }
  }
  report.add("prp anti-multiplicative", anti_w.empty(), anti_w);

  SparseVector unit;
  for (std::size_t i = 0; i < size(); ++i) unit += e(i, i, ring().unit());
  report.add("prp fixes unit", prp(unit) == unit, "prp(1) = " + format(prp(unit)));
  return report;
}

SuperAlgebra MatrixSuperAlgebra::to_superalgebra() const {
  const std::size_t d = r_.dim();
  const std::size_t n = size();
  std::vector<BasisElement> basis;
  basis.reserve(dim());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t r = 0; r < d; ++r)
        basis.push_back({"e" + std::to_string(i + 1) + "," + std::to_string(j + 1) + "(" + ring().label(r) + ")",
                         parity(index(i, j, r))});
  auto mul = empty_table(dim());
  for (std::size_t a = 0; a < dim(); ++a)
    for (std::size_t b = 0; b < dim(); ++b)
      mul[a][b] = multiply(SparseVector::unit(a, field().one()), SparseVector::unit(b, field().one()));
  SparseVector unit;
  for (std::size_t i = 0; i < n; ++i) unit += e(i, i, ring().unit());
  return SuperAlgebra(field(), std::move(basis), std::move(mul), std::move(unit));
}

InvolutedAlgebra MatrixSuperAlgebra::with_prp() const {
  return InvolutedAlgebra{to_superalgebra(), Superinvolution(prp_matrix()),
                          "M" + std::to_string(m_) + "|" + std::to_string(m_) + "(" + r_.name + ")"};
}

std::string MatrixSuperAlgebra::format(const SparseVector& x) const {
  const std::size_t d = r_.dim();
  const std::size_t n = size();
  std::vector<BasisElement> labels;
  labels.reserve(dim());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t r = 0; r < d; ++r)
        labels.push_back({"e" + std::to_string(i + 1) + "," + std::to_string(j + 1) + "(" + ring().label(r) + ")", 0});
  return format_vector(labels, x);
}

MatrixSuperAlgebra matrix_superalgebra(const InvolutedAlgebra& r, std::size_t m) { return MatrixSuperAlgebra(r, m); }

}  // namespace superhom
