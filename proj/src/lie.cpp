#include "superhom/lie.hpp"

#include <sstream>

namespace superhom {

namespace {

Scalar sign(const FieldSpec& f, int exponent) { return (exponent & 1) ? f.from_int(-1) : f.one(); }

std::vector<std::vector<SparseVector>> empty_table(std::size_t d) {
  return std::vector<std::vector<SparseVector>>(d, std::vector<SparseVector>(d));
}

SparseMatrix from_columns(const FieldSpec& f, std::size_t rows, const std::vector<SparseVector>& cols) {
  SparseMatrix t(f, cols.size(), rows);
  for (std::size_t j = 0; j < cols.size(); ++j) t.set_row(j, cols[j]);
  return t.transpose();
}

// Common weight of all entries, or nullopt if they disagree.
std::optional<std::vector<int>> common_weight(const SparseVector& v, const std::vector<std::vector<int>>& w) {
  if (v.empty() || w.empty()) return std::nullopt;
  const auto& first = w[v[0].index];
  for (const auto& e : v)
    if (w[e.index] != first) return std::nullopt;
  return first;
}

// Builds the bracket table of span's basis, using `bracket` on parent vectors.
Subalgebra close_subalgebra(const FieldSpec& f, const Subspace& span, std::vector<BasisElement> basis,
                            const std::function<SparseVector(const SparseVector&, const SparseVector&)>& bracket) {
  const std::size_t n = span.dim();
  auto table = empty_table(n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a; b < n; ++b) {
      SparseVector v = bracket(span.basis()[a], span.basis()[b]);
      auto c = span.coordinates(v);
      if (!c) throw Error("subspace is not closed under the bracket: [" + basis[a].label + ", " + basis[b].label + "]");
      table[a][b] = *c;
      if (b != a) table[b][a] = -c->scaled(sign(f, basis[a].parity * basis[b].parity));
    }
  }
  return Subalgebra{LieSuperAlgebra(f, std::move(basis), std::move(table)), span};
}

}  // namespace

LieSuperAlgebra::LieSuperAlgebra(FieldSpec field, std::vector<BasisElement> basis,
                                 std::vector<std::vector<SparseVector>> bracket)
    : field_(field), basis_(std::move(basis)), table_(std::move(bracket)) {
  const std::size_t d = basis_.size();
  if (table_.size() != d) throw Error("bracket table has wrong number of rows");
  for (const auto& row : table_) {
    if (row.size() != d) throw Error("bracket table has a row of wrong length");
    for (const auto& v : row)
      for (const auto& e : v) {
        if (e.index >= d) throw Error("bracket structure constant out of range");
        field_.check(e.value);
      }
  }
}

std::size_t LieSuperAlgebra::even_dim() const {
  std::size_t n = 0;
  for (const auto& b : basis_) n += b.parity == 0;
  return n;
}

SparseVector LieSuperAlgebra::bracket(const SparseVector& x, const SparseVector& y) const {
  SparseAccumulator acc;
  for (const auto& a : x)
    for (const auto& b : y) {
      const auto& v = table_[a.index][b.index];
      if (!v.empty()) acc.add(v, a.value * b.value);
    }
  return acc.take();
}

Parity LieSuperAlgebra::parity_of(const SparseVector& x) const {
  if (x.empty()) return 0;
  Parity p = parity(x[0].index);
  for (const auto& e : x)
    if (parity(e.index) != p) return -1;
  return p;
}

std::string LieSuperAlgebra::format(const SparseVector& x) const {
  if (x.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& e : x) {
    if (!first) out << " + ";
    first = false;
    out << e.value.to_string() << "*" << basis_[e.index].label;
  }
  return out.str();
}

void LieSuperAlgebra::set_weights(std::vector<std::vector<int>> w) {
  if (!w.empty() && w.size() != dim()) throw Error("weight list has wrong length");
  weights_ = std::move(w);
}

CheckReport verify_lie(const LieSuperAlgebra& g) {
  CheckReport report;
  const std::size_t n = g.dim();
  const FieldSpec& f = g.field();

  std::string w;
  for (std::size_t i = 0; i < n && w.empty(); ++i)
    for (std::size_t j = 0; j < n && w.empty(); ++j)
      for (const auto& e : g.bracket(i, j))
        if (g.parity(e.index) != (g.parity(i) + g.parity(j)) % 2) {
          w = "[" + g.label(i) + ", " + g.label(j) + "] = " + g.format(g.bracket(i, j));
          break;
        }
  report.add("parity homogeneity", w.empty(), w);

  w.clear();
  for (std::size_t i = 0; i < n && w.empty(); ++i)
    for (std::size_t j = i; j < n; ++j) {
      SparseVector other = g.bracket(j, i).scaled(-sign(f, g.parity(i) * g.parity(j)));
      if (!(g.bracket(i, j) == other)) {
        w = "[" + g.label(i) + ", " + g.label(j) + "] = " + g.format(g.bracket(i, j));
        break;
      }
    }
  report.add("super antisymmetry", w.empty(), w);

  // With antisymmetry in hand the Jacobi sum is symmetric up to sign under
  // permutations, so triples i <= j <= k suffice.
  w.clear();
  DenseAccumulator acc(f, n);
  auto nested = [&](std::size_t x, std::size_t y, std::size_t z, const Scalar& c) {
    for (const auto& e : g.bracket(x, y)) acc.add(g.bracket(e.index, z), e.value * c);
  };
  for (std::size_t i = 0; i < n && w.empty(); ++i)
    for (std::size_t j = i; j < n && w.empty(); ++j)
      for (std::size_t k = j; k < n; ++k) {
        const int pi = g.parity(i), pj = g.parity(j), pk = g.parity(k);
        nested(i, j, k, sign(f, pi * pk));
        nested(j, k, i, sign(f, pj * pi));
        nested(k, i, j, sign(f, pk * pj));
        SparseVector s = acc.take();
        if (!s.empty()) {
          w = "(" + g.label(i) + ", " + g.label(j) + ", " + g.label(k) + ") gives " + g.format(s);
          break;
        }
      }
  report.add("super Jacobi", w.empty(), w);
  return report;
}

LieSuperAlgebra commutator_lie(const SuperAlgebra& a) {
  const std::size_t d = a.dim();
  auto table = empty_table(d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      table[i][j] = a.supercommutator(a.basis_vector(i), a.basis_vector(j));
  return LieSuperAlgebra(a.field(), a.basis(), std::move(table));
}

SparseVector Subalgebra::coordinates(const SparseVector& v) const {
  auto c = inclusion.coordinates(v);
  if (!c) throw Error("vector does not lie in the subalgebra");
  return *c;
}

Subalgebra subalgebra(const LieSuperAlgebra& g, const Subspace& span) {
  std::vector<BasisElement> basis;
  std::vector<std::vector<int>> weights;
  for (const auto& v : span.basis()) {
    Parity p = g.parity_of(v);
    if (p < 0) throw Error("subalgebra basis vector is not parity homogeneous: " + g.format(v));
    basis.push_back({g.label(v[0].index), p});
    if (auto w = common_weight(v, g.weights())) weights.push_back(*w);
  }
  Subalgebra s = close_subalgebra(g.field(), span, std::move(basis),
                                  [&](const SparseVector& x, const SparseVector& y) { return g.bracket(x, y); });
  if (weights.size() == span.dim()) s.lie.set_weights(std::move(weights));
  return s;
}

Subalgebra derived_subalgebra(const LieSuperAlgebra& g) {
  Echelon ech(g.field(), g.dim());
  for (std::size_t i = 0; i < g.dim(); ++i)
    for (std::size_t j = i; j < g.dim(); ++j)
      if (!g.bracket(i, j).empty()) ech.insert(g.bracket(i, j));
  std::vector<SparseVector> rows = ech.reduced_rows();
  return subalgebra(g, Subspace::span(g.field(), g.dim(), rows));
}

bool is_perfect(const LieSuperAlgebra& g) { return derived_subalgebra(g).lie.dim() == g.dim(); }

Subalgebra matrix_subalgebra(const MatrixSuperAlgebra& mat, const Subspace& span) {
  const std::size_t m = mat.m();
  const std::size_t d = mat.ring().dim();
  const std::size_t n = mat.size();
  auto weight = [&](std::size_t idx) {
    std::vector<int> w(m, 0);
    const std::size_t i = idx / d / n, j = idx / d % n;
    if (i < m) ++w[i]; else --w[i - m];
    if (j < m) --w[j]; else ++w[j - m];
    return w;
  };
  std::vector<BasisElement> basis;
  std::vector<std::vector<int>> weights;
  bool graded = true;
  for (const auto& v : span.basis()) {
    Parity p = mat.parity(v[0].index);
    std::vector<int> w = weight(v[0].index);
    for (const auto& e : v) {
      if (mat.parity(e.index) != p) throw Error("matrix subalgebra basis vector is not parity homogeneous");
      if (weight(e.index) != w) graded = false;
    }
    const std::size_t i = v[0].index / d / n, j = v[0].index / d % n, r = v[0].index % d;
    basis.push_back({"e" + std::to_string(i + 1) + "," + std::to_string(j + 1) + "(" + mat.ring().label(r) + ")", p});
    weights.push_back(std::move(w));
  }
  Subalgebra s = close_subalgebra(mat.field(), span, std::move(basis),
                                  [&](const SparseVector& x, const SparseVector& y) { return mat.supercommutator(x, y); });
  if (graded) s.lie.set_weights(std::move(weights));
  return s;
}

Subalgebra build_ptilde(const MatrixSuperAlgebra& mat) {
  std::vector<SparseVector> cols(mat.dim());
  for (std::size_t k = 0; k < mat.dim(); ++k) {
    SparseVector x = SparseVector::unit(k, mat.field().one());
    cols[k] = mat.prp(x) + x;
  }
  Subspace kernel = kernel_basis(from_columns(mat.field(), mat.dim(), cols));
  return matrix_subalgebra(mat, kernel);
}

PConstruction build_p(const InvolutedAlgebra& r, std::size_t m) {
  MatrixSuperAlgebra mat(r, m);
  Subalgebra pt = build_ptilde(mat);
  Echelon ech(mat.field(), pt.lie.dim());
  for (std::size_t i = 0; i < pt.lie.dim(); ++i)
    for (std::size_t j = i; j < pt.lie.dim(); ++j)
      if (!pt.lie.bracket(i, j).empty()) ech.insert(pt.lie.bracket(i, j));
  std::vector<SparseVector> rows = ech.reduced_rows();
  Subspace in_ptilde = Subspace::span(mat.field(), pt.lie.dim(), rows);
  std::vector<SparseVector> in_matrix;
  for (const auto& v : in_ptilde.basis()) in_matrix.push_back(pt.embed(v));
  Subalgebra p = matrix_subalgebra(mat, Subspace::span(mat.field(), mat.dim(), in_matrix));
  return PConstruction{std::move(mat), std::move(pt), std::move(p), std::move(in_ptilde)};
}

std::size_t trace_quotient_dim(const InvolutedAlgebra& r) {
  const SuperAlgebra& a = r.algebra;
  std::vector<SparseVector> gens;
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) gens.push_back(a.supercommutator(a.basis_vector(i), a.basis_vector(j)));
  const Subspace minus = r_plus_minus(r).second;
  for (const auto& v : minus.basis()) gens.push_back(v);
  return a.dim() - Subspace::span(a.field(), a.dim(), gens).dim();
}

SparseVector Generators::extend(const std::vector<SparseVector>& v, std::size_t i, std::size_t j,
                                const SparseVector& a) const {
  if (i == j || i >= m || j >= m) throw Error("generator indices must be distinct and below m");
  SparseAccumulator acc;
  for (const auto& e : a) acc.add(v[slot(i, j, e.index)], e.value);
  return acc.take();
}

Generators matrix_generators(const MatrixSuperAlgebra& mat) {
  const std::size_t m = mat.m();
  const std::size_t d = mat.ring().dim();
  const InvolutedAlgebra& r = mat.coefficients();
  Generators gens;
  gens.m = m;
  gens.rdim = d;
  gens.t_basis.resize(m * m * d);
  gens.f_basis.resize(m * m * d);
  gens.g_basis.resize(m * m * d);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      if (i == j) continue;
      for (std::size_t k = 0; k < d; ++k) {
        SparseVector a = SparseVector::unit(k, mat.field().one());
        SparseVector abar = r.bar(a);
        SparseVector rab = r.algebra.rho(abar);
        gens.t_basis[gens.slot(i, j, k)] = mat.e(i, j, a) - mat.e(m + j, m + i, abar);
        gens.f_basis[gens.slot(i, j, k)] = mat.e(i, m + j, a) + mat.e(j, m + i, rab);
        gens.g_basis[gens.slot(i, j, k)] = mat.e(m + i, j, a) - mat.e(m + j, i, rab);
      }
    }
  return gens;
}

Subspace generated_subalgebra(const LieSuperAlgebra& g, const Generators& gens) {
  std::vector<SparseVector> all;
  for (const auto* family : {&gens.t_basis, &gens.f_basis, &gens.g_basis})
    for (const auto& v : *family)
      if (!v.empty()) all.push_back(v);
  Echelon ech(g.field(), g.dim());
  std::vector<SparseVector> frontier;
  for (const auto& v : all) {
    SparseVector r = ech.reduce(v);
    if (!r.empty()) {
      ech.insert(r);
      frontier.push_back(std::move(r));
    }
  }
  for (std::size_t round = 0; round < g.dim() && !frontier.empty(); ++round) {
    std::vector<SparseVector> next;
    for (const auto& x : all)
      for (const auto& y : frontier) {
        SparseVector r = ech.reduce(g.bracket(x, y));
        if (!r.empty()) {
          ech.insert(r);
          next.push_back(std::move(r));
        }
      }
    frontier = std::move(next);
  }
  std::vector<SparseVector> rows = ech.reduced_rows();
  return Subspace::span(g.field(), g.dim(), rows);
}

Generators p_generators(const PConstruction& p) {
  if (p.m() < 3) throw Error("generators are only considered for m >= 3");
  Generators mg = matrix_generators(p.matrix);
  Generators out = mg;
  for (auto* family : {&out.t_basis, &out.f_basis, &out.g_basis})
    for (auto& v : *family)
      if (!v.empty()) {
        auto c = p.p.inclusion.coordinates(v);
        if (!c) throw Error("generator " + p.matrix.format(v) + " does not lie in p");
        v = *c;
      }
  if (generated_subalgebra(p.p.lie, out).dim() != p.p.lie.dim()) throw Error("generators do not generate p");
  return out;
}

namespace {

struct StpContext {
  const LieSuperAlgebra& g;
  const Generators& gens;
  const InvolutedAlgebra& r;
  CheckReport& report;
  std::string witness;

  SparseVector unit(std::size_t k) const { return SparseVector::unit(k, r.field().one()); }
  SparseVector mul(std::size_t a, std::size_t b) const { return r.algebra.mul(a, b); }

  // Records the first failure in the current relation.
  void expect(const SparseVector& lhs, const SparseVector& rhs, const std::string& what) {
    if (witness.empty() && !(lhs == rhs)) witness = what + ": " + g.format(lhs) + " != " + g.format(rhs);
  }
  void finish(const std::string& name) {
    report.add(name, witness.empty(), witness);
    witness.clear();
  }
  std::string at(const char* rel, std::initializer_list<std::size_t> idx, std::size_t a, std::size_t b) const {
    std::string s = rel;
    s += "(";
    bool first = true;
    for (auto i : idx) {
      s += (first ? "" : ",") + std::to_string(i + 1);
      first = false;
    }
    return s + "; " + r.algebra.label(a) + ", " + r.algebra.label(b) + ")";
  }
};

}  // namespace

CheckReport stp_relation_check(const LieSuperAlgebra& g, const Generators& gens, const InvolutedAlgebra& r,
                               StpOptions options) {
  CheckReport report;
  StpContext c{g, gens, r, report, {}};
  const std::size_t m = gens.m;
  const std::size_t d = gens.rdim;
  const SparseVector zero;
  auto T = [&](std::size_t i, std::size_t j, const SparseVector& a) { return gens.t(i, j, a); };
  auto F = [&](std::size_t i, std::size_t j, const SparseVector& a) { return gens.f(i, j, a); };
  auto G = [&](std::size_t i, std::size_t j, const SparseVector& a) { return gens.g(i, j, a); };
  auto br = [&](const SparseVector& x, const SparseVector& y) { return g.bracket(x, y); };

  // STP00: linearity is built in; check parities |a|, |a|+1, |a|+1.
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      if (i == j) continue;
      for (std::size_t k = 0; k < d; ++k) {
        const Parity pa = r.algebra.parity(k);
        const SparseVector a = c.unit(k);
        for (auto [v, want] : {std::pair{T(i, j, a), pa}, std::pair{F(i, j, a), 1 - pa}, std::pair{G(i, j, a), 1 - pa}})
          if (c.witness.empty() && (v.empty() || g.parity_of(v) != want))
            c.witness = c.at("STP00", {i, j}, k, k) + ": generator " + g.format(v) + " has wrong parity";
      }
    }
  c.finish("STP00");

  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      if (i == j) continue;
      for (std::size_t k = 0; k < d; ++k) {
        const SparseVector a = c.unit(k);
        c.expect(F(i, j, r.bar(a)), F(j, i, r.algebra.rho(a)), c.at("STP01", {i, j}, k, k));
      }
    }
  c.finish("STP01");

  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      if (i == j) continue;
      for (std::size_t k = 0; k < d; ++k) {
        const SparseVector a = c.unit(k);
        c.expect(G(i, j, r.bar(a)), -G(j, i, r.algebra.rho(a)), c.at("STP02", {i, j}, k, k));
      }
    }
  c.finish("STP02");

  auto distinct3 = [](std::size_t i, std::size_t j, std::size_t k) { return i != j && j != k && i != k; };
  auto distinct4 = [&](std::size_t i, std::size_t j, std::size_t k, std::size_t l) {
    return distinct3(i, j, k) && l != i && l != j && l != k;
  };
  // Runs body over all index triples satisfying pred and all basis pairs.
  auto each3 = [&](auto pred, auto body) {
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j)
        for (std::size_t k = 0; k < m; ++k)
          if (pred(i, j, k))
            for (std::size_t a = 0; a < d && c.witness.empty(); ++a)
              for (std::size_t b = 0; b < d; ++b) body(i, j, k, a, b);
  };
  auto each4 = [&](auto pred, auto body) {
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j)
        for (std::size_t k = 0; k < m; ++k)
          for (std::size_t l = 0; l < m; ++l)
            if (pred(i, j, k, l))
              for (std::size_t a = 0; a < d && c.witness.empty(); ++a)
                for (std::size_t b = 0; b < d; ++b) body(i, j, k, l, a, b);
  };

  each3(distinct3, [&](auto i, auto j, auto k, auto a, auto b) {
    c.expect(br(T(i, j, c.unit(a)), T(j, k, c.unit(b))), T(i, k, c.mul(a, b)), c.at("STP03", {i, j, k}, a, b));
  });
  c.finish("STP03");

  if (options.full_stp04) {
    each4([](auto i, auto j, auto k, auto l) { return i != j && j != k && k != l && l != i; },
          [&](auto i, auto j, auto k, auto l, auto a, auto b) {
            c.expect(br(T(i, j, c.unit(a)), T(k, l, c.unit(b))), zero, c.at("STP04", {i, j, k, l}, a, b));
          });
    c.finish("STP04");
  } else {
    each3(distinct3, [&](auto i, auto j, auto k, auto a, auto b) {
      c.expect(br(T(i, k, c.unit(a)), T(j, k, c.unit(b))), zero, c.at("STP04a", {i, j, k}, a, b));
    });
    c.finish("STP04a");
    each4(distinct4, [&](auto i, auto j, auto k, auto l, auto a, auto b) {
      c.expect(br(T(i, j, c.unit(a)), T(k, l, c.unit(b))), zero, c.at("STP04b", {i, j, k, l}, a, b));
    });
    c.finish("STP04b");
  }

  each3(distinct3, [&](auto i, auto j, auto k, auto a, auto b) {
    c.expect(br(T(i, j, c.unit(a)), F(j, k, c.unit(b))), F(i, k, c.mul(a, b)), c.at("STP05", {i, j, k}, a, b));
  });
  c.finish("STP05");

  each4([](auto i, auto j, auto k, auto l) { return i != j && j != k && k != l && l != j; },
        [&](auto i, auto j, auto k, auto l, auto a, auto b) {
          c.expect(br(T(i, j, c.unit(a)), F(k, l, c.unit(b))), zero, c.at("STP06", {i, j, k, l}, a, b));
        });
  c.finish("STP06");

  each3(distinct3, [&](auto i, auto j, auto k, auto a, auto b) {
    c.expect(br(G(i, j, c.unit(a)), T(j, k, c.unit(b))), G(i, k, c.mul(a, b)), c.at("STP07", {i, j, k}, a, b));
  });
  c.finish("STP07");

  each4([](auto i, auto j, auto k, auto l) { return l != k && k != j && j != i && i != k; },
        [&](auto i, auto j, auto k, auto l, auto a, auto b) {
          c.expect(br(G(i, j, c.unit(a)), T(k, l, c.unit(b))), zero, c.at("STP08", {i, j, k, l}, a, b));
        });
  c.finish("STP08");

  auto pairs_ne = [](auto i, auto j, auto k, auto l) { return i != j && k != l; };
  each4(pairs_ne, [&](auto i, auto j, auto k, auto l, auto a, auto b) {
    c.expect(br(F(i, j, c.unit(a)), F(k, l, c.unit(b))), zero, c.at("STP09", {i, j, k, l}, a, b));
  });
  c.finish("STP09");

  if (options.full_stp10) {
    each4(pairs_ne, [&](auto i, auto j, auto k, auto l, auto a, auto b) {
      c.expect(br(G(i, j, c.unit(a)), G(k, l, c.unit(b))), zero, c.at("STP10", {i, j, k, l}, a, b));
    });
    c.finish("STP10");
  } else {
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j)
        if (i != j)
          for (std::size_t a = 0; a < d; ++a)
            for (std::size_t b = 0; b < d; ++b)
              c.expect(br(G(i, j, c.unit(a)), G(i, j, c.unit(b))), zero, c.at("STP10a", {i, j}, a, b));
    c.finish("STP10a");
    each3(distinct3, [&](auto i, auto j, auto k, auto a, auto b) {
      c.expect(br(G(i, j, c.unit(a)), G(j, k, c.unit(b))), zero, c.at("STP10b", {i, j, k}, a, b));
    });
    c.finish("STP10b");
  }

  each3(distinct3, [&](auto i, auto j, auto k, auto a, auto b) {
    c.expect(br(F(i, j, c.unit(a)), G(j, k, c.unit(b))), T(i, k, c.mul(a, b)), c.at("STP11", {i, j, k}, a, b));
  });
  c.finish("STP11");

  each4(distinct4, [&](auto i, auto j, auto k, auto l, auto a, auto b) {
    c.expect(br(F(i, j, c.unit(a)), G(k, l, c.unit(b))), zero, c.at("STP12", {i, j, k, l}, a, b));
  });
  c.finish("STP12");
  return report;
}

LieSuperAlgebra build_gl(const SuperAlgebra& s, std::size_t m) {
  // The involution slot is unused here; gl only needs the product.
  MatrixSuperAlgebra mat(InvolutedAlgebra{s, Superinvolution::identity(s), "S"}, m);
  LieSuperAlgebra gl = commutator_lie(mat.to_superalgebra());
  const std::size_t n = mat.size();
  std::vector<std::vector<int>> weights;
  for (std::size_t idx = 0; idx < mat.dim(); ++idx) {
    std::vector<int> w(n, 0);
    ++w[idx / s.dim() / n];
    --w[idx / s.dim() % n];
    weights.push_back(std::move(w));
  }
  gl.set_weights(std::move(weights));
  return gl;
}

Subalgebra build_sl(const SuperAlgebra& s, std::size_t m) { return derived_subalgebra(build_gl(s, m)); }

CheckReport iso_p_double_sl(const SuperAlgebra& s, std::size_t m) {
  CheckReport report;
  const std::size_t d = s.dim();
  const FieldSpec& f = s.field();
  LieSuperAlgebra gl = build_gl(s, m);
  Subalgebra sl = derived_subalgebra(gl);
  PConstruction pc = build_p(double_with_exchange(s), m);
  const MatrixSuperAlgebra& mat = pc.matrix;
  const std::size_t n = 2 * m;

  // Images of gl basis elements in M_{m|m}(S + S^op) coordinates.
  auto left = [&](std::size_t r) { return SparseVector::unit(r, f.one()); };
  auto right = [&](std::size_t r, bool signed_by_rho) {
    return SparseVector::unit(d + r, signed_by_rho ? sign(f, s.parity(r)) : f.one());
  };
  std::vector<SparseVector> image(gl.dim());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t r = 0; r < d; ++r) {
        SparseVector v;
        if (i < m && j < m) {
          v = mat.e(i, j, left(r)) - mat.e(m + j, m + i, right(r, false));
        } else if (i < m) {
          v = mat.e(i, j, left(r)) + mat.e(j - m, m + i, right(r, true));
        } else if (j < m) {
          v = mat.e(i, j, left(r)) - mat.e(m + j, i - m, right(r, true));
        } else {
          v = mat.e(i, j, left(r)) - mat.e(j - m, i - m, right(r, false));
        }
        image[(i * n + j) * d + r] = std::move(v);
      }

  std::vector<SparseVector> coords(gl.dim());
  std::string w;
  for (std::size_t k = 0; k < gl.dim() && w.empty(); ++k) {
    auto c = pc.ptilde.inclusion.coordinates(image[k]);
    if (!c) w = gl.label(k) + " maps outside p~";
    else coords[k] = *c;
  }
  report.add("image lies in p~", w.empty(), w);
  if (!w.empty()) return report;

  const std::size_t rk = rank_of_rows(f, pc.ptilde.lie.dim(), coords);
  report.add("bijective", rk == gl.dim() && gl.dim() == pc.ptilde.lie.dim(),
             "rank " + std::to_string(rk) + ", dim gl " + std::to_string(gl.dim()) + ", dim p~ " +
                 std::to_string(pc.ptilde.lie.dim()));

  w.clear();
  for (std::size_t k = 0; k < gl.dim() && w.empty(); ++k)
    if (pc.ptilde.lie.parity_of(coords[k]) != gl.parity(k)) w = gl.label(k);
  report.add("parity preserving", w.empty(), w);

  auto phi = [&](const SparseVector& x) {
    SparseAccumulator acc;
    for (const auto& e : x) acc.add(coords[e.index], e.value);
    return acc.take();
  };
  w.clear();
  for (std::size_t a = 0; a < gl.dim() && w.empty(); ++a)
    for (std::size_t b = 0; b < gl.dim(); ++b) {
      SparseVector lhs = phi(gl.bracket(a, b));
      SparseVector rhs = pc.ptilde.lie.bracket(coords[a], coords[b]);
      if (!(lhs == rhs)) {
        w = "[" + gl.label(a) + ", " + gl.label(b) + "]";
        break;
      }
    }
  report.add("bracket preserving", w.empty(), w);

  std::vector<SparseVector> sl_image;
  for (const auto& v : sl.inclusion.basis()) sl_image.push_back(phi(v));
  Subspace img = Subspace::span(f, pc.ptilde.lie.dim(), sl_image);
  report.add("sl maps onto p", img == pc.p_in_ptilde,
             "dim image " + std::to_string(img.dim()) + ", dim p " + std::to_string(pc.p_in_ptilde.dim()));
  return report;
}

}  // namespace superhom
