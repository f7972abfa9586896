#include "doctest.h"

#include <algorithm>
#include <numeric>
#include <random>

#include "superhom/homology.hpp"

using namespace superhom;

namespace {

const FieldSpec Q = FieldSpec::rationals();

LieSuperAlgebra from_brackets(std::vector<BasisElement> basis,
                              const std::vector<std::tuple<std::size_t, std::size_t, std::size_t, long>>& rules) {
  const std::size_t n = basis.size();
  std::vector<std::vector<SparseVector>> t(n, std::vector<SparseVector>(n));
  for (auto [i, j, k, c] : rules) {
    t[i][j] += SparseVector::unit(k, Q.from_int(c));
    const int s = basis[i].parity * basis[j].parity;
    t[j][i] += SparseVector::unit(k, Q.from_int(s ? c : -c));
  }
  return LieSuperAlgebra(Q, std::move(basis), std::move(t));
}

LieSuperAlgebra heisenberg() { return from_brackets({{"x", 0}, {"y", 0}, {"z", 0}}, {{0, 1, 2, 1}}); }

LieSuperAlgebra sl2() {
  // e, f, h with [e,f] = h, [h,e] = 2e, [h,f] = -2f
  return from_brackets({{"e", 0}, {"f", 0}, {"h", 0}}, {{0, 1, 2, 1}, {2, 0, 0, 2}, {2, 1, 1, -2}});
}

LieSuperAlgebra abelian(std::size_t n0, std::size_t n1) {
  std::vector<BasisElement> b;
  for (std::size_t i = 0; i < n0; ++i) b.push_back({"a" + std::to_string(i), 0});
  for (std::size_t i = 0; i < n1; ++i) b.push_back({"b" + std::to_string(i), 1});
  return from_brackets(b, {});
}

LieSuperAlgebra permuted(const LieSuperAlgebra& g, const std::vector<std::size_t>& perm) {
  // new basis element k is old basis element perm[k]
  const std::size_t n = g.dim();
  std::vector<std::size_t> inv(n);
  for (std::size_t k = 0; k < n; ++k) inv[perm[k]] = k;
  std::vector<BasisElement> basis(n);
  for (std::size_t k = 0; k < n; ++k) basis[k] = g.basis()[perm[k]];
  std::vector<std::vector<SparseVector>> t(n, std::vector<SparseVector>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) t[a][b] = g.bracket(perm[a], perm[b]).remapped(inv);
  return LieSuperAlgebra(g.field(), std::move(basis), std::move(t));
}

// Classical CE complex for a purely even Lie algebra, dense, with its own
// elimination: d(x^y) = -[x,y], d(x^y^z) = -[x,y]^z + [x,z]^y - [y,z]^x.
std::size_t classical_h2(const LieSuperAlgebra& g) {
  const std::size_t n = g.dim();
  auto rank_dense = [](std::vector<std::vector<mpq_class>> a) {
    std::size_t r = 0;
    const std::size_t cols = a.empty() ? 0 : a[0].size();
    for (std::size_t c = 0; c < cols && r < a.size(); ++c) {
      std::size_t p = r;
      while (p < a.size() && a[p][c] == 0) ++p;
      if (p == a.size()) continue;
      std::swap(a[p], a[r]);
      for (std::size_t i = r + 1; i < a.size(); ++i) {
        if (a[i][c] == 0) continue;
        mpq_class k = a[i][c] / a[r][c];
        for (std::size_t j = c; j < cols; ++j) a[i][j] -= k * a[r][j];
      }
      ++r;
    }
    return r;
  };
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  std::vector<std::vector<long>> pair_idx(n, std::vector<long>(n, -1));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      pair_idx[i][j] = static_cast<long>(pairs.size());
      pairs.push_back({i, j});
    }
  auto coef = [&](std::size_t i, std::size_t j, std::size_t k) {
    const Scalar* s = g.bracket(i, j).find(k);
    return s ? s->rational() : mpq_class(0);
  };
  std::vector<std::vector<mpq_class>> d2(pairs.size(), std::vector<mpq_class>(n));
  for (std::size_t p = 0; p < pairs.size(); ++p)
    for (std::size_t k = 0; k < n; ++k) d2[p][k] = -coef(pairs[p].first, pairs[p].second, k);
  // wedge e^w with sign, e arbitrary
  auto add_wedge = [&](std::vector<mpq_class>& row, std::size_t e, std::size_t w, const mpq_class& c) {
    if (e == w) return;
    if (e < w) row[pair_idx[e][w]] += c;
    else row[pair_idx[w][e]] -= c;
  };
  std::vector<std::vector<mpq_class>> d3;
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = x + 1; y < n; ++y)
      for (std::size_t z = y + 1; z < n; ++z) {
        std::vector<mpq_class> row(pairs.size());
        for (std::size_t e = 0; e < n; ++e) {
          add_wedge(row, e, z, -coef(x, y, e));
          add_wedge(row, e, y, coef(x, z, e));
          add_wedge(row, e, x, -coef(y, z, e));
        }
        d3.push_back(std::move(row));
      }
  return pairs.size() - rank_dense(d2) - rank_dense(d3);
}

LieSuperAlgebra even_part(const LieSuperAlgebra& g) {
  std::vector<SparseVector> evens;
  for (std::size_t i = 0; i < g.dim(); ++i)
    if (g.parity(i) == 0) evens.push_back(SparseVector::unit(i, g.field().one()));
  return subalgebra(g, Subspace::span(g.field(), g.dim(), evens)).lie;
}

}  // namespace

TEST_CASE("wedge basis sizes") {
  CHECK(wedge_basis(abelian(2, 0), 2).size() == 1);
  CHECK(wedge_basis(abelian(0, 2), 2).size() == 3);
  for (std::size_t n0 = 0; n0 <= 4; ++n0)
    for (std::size_t n1 = 0; n1 <= 4; ++n1)
      for (std::size_t deg = 1; deg <= 3; ++deg) CHECK(wedge_basis(abelian(n0, n1), deg).size() == wedge_dim(n0, n1, deg));
  CHECK(wedge_dim(8, 9, 2) == 145);
  PConstruction pc = build_p(builtin_algebra("base_field", {}), 3);
  CHECK(wedge_basis(pc.p.lie, 2).size() == 145);
}

TEST_CASE("monomial normal form") {
  LieSuperAlgebra g = abelian(2, 2);  // 0,1 even; 2,3 odd
  Monomial m{1, 0, 0};
  CHECK(normalize_monomial(m, 2, g) == -1);
  m = {3, 2, 0};
  CHECK(normalize_monomial(m, 2, g) == 1);
  m = {2, 2, 0};
  CHECK(normalize_monomial(m, 2, g) == 1);
  m = {0, 0, 0};
  CHECK(normalize_monomial(m, 2, g) == 0);
  m = {3, 1, 2};
  CHECK(normalize_monomial(m, 3, g) == -1);
  CHECK(m == Monomial{1, 2, 3});
}

TEST_CASE("abelian and Heisenberg") {
  LieSuperAlgebra a = abelian(2, 0);
  CHECK(ce_differential(a, 2).is_zero());
  CHECK(ce_differential(a, 3).is_zero());
  CHECK(h2(a).dim == 1);
  CHECK(h1_dim(abelian(3, 2)) == 5);

  LieSuperAlgebra h = heisenberg();
  SparseMatrix d2 = ce_differential(h, 2);
  WedgeBasis c2 = wedge_basis(h, 2);
  auto xy = *c2.index_of({0, 1, 0});
  auto xz = *c2.index_of({0, 2, 0});
  auto yz = *c2.index_of({1, 2, 0});
  CHECK(d2.at(2, xy) == Q.from_int(-1));
  for (std::size_t r = 0; r < 3; ++r) {
    CHECK(d2.at(r, xz).is_zero());
    CHECK(d2.at(r, yz).is_zero());
  }
  H2Result r = h2(h, true);
  CHECK(r.dim == 2);
  CHECK(r.representatives.size() == 2);
  CHECK(classical_h2(h) == 2);
}

TEST_CASE("sl2 has no second homology") {
  CHECK(h2(sl2()).dim == 0);
  CHECK(h1_dim(sl2()) == 0);
  CHECK(classical_h2(sl2()) == 0);
}

TEST_CASE("purely even inputs agree with the classical complex") {
  auto q = builtin_algebra("base_field", {});
  PConstruction p3 = build_p(q, 3);
  LieSuperAlgebra e3 = even_part(p3.p.lie);
  CHECK(e3.dim() == 8);
  CHECK(h2(e3).dim == classical_h2(e3));
  LieSuperAlgebra gl2 = build_gl(builtin_algebra("base_field", {}).algebra, 1);
  LieSuperAlgebra gl2e = even_part(gl2);
  CHECK(h2(gl2e).dim == classical_h2(gl2e));
  for (const auto& g : {heisenberg(), sl2(), abelian(4, 0)}) {
    SparseMatrix d2 = ce_differential(g, 2);
    CHECK((d2 * ce_differential(g, 3)).is_zero());
    CHECK(h2(g).dim == classical_h2(g));
  }
  // Nonabelian two-dimensional algebra [x, y] = y, tensored with abelian parts.
  LieSuperAlgebra aff = from_brackets({{"x", 0}, {"y", 0}, {"z", 0}, {"w", 0}}, {{0, 1, 1, 1}, {2, 3, 3, 1}});
  CHECK(h2(aff).dim == classical_h2(aff));
}

TEST_CASE("d2 o d3 = 0 on super examples") {
  for (std::size_t m = 1; m <= 2; ++m) {
    LieSuperAlgebra gl = build_gl(builtin_algebra("base_field", {}).algebra, m);
    CHECK((ce_differential(gl, 2) * ce_differential(gl, 3)).is_zero());
    CHECK(check_d2_d3(gl).passed());
  }
  auto lam = builtin_algebra("grassmann", BuiltinParams{Q, 1, BuiltinInvolution::rho});
  PConstruction pc = build_p(lam, 3);
  CHECK(check_d2_d3(pc.p.lie).passed());
}

TEST_CASE("d2 o d3 check detects a sign error") {
  // Odd-odd bracket made antisymmetric instead of symmetric breaks Jacobi.
  LieSuperAlgebra gl = build_gl(builtin_algebra("base_field", {}).algebra, 1);
  std::vector<std::vector<SparseVector>> t(gl.dim(), std::vector<SparseVector>(gl.dim()));
  for (std::size_t a = 0; a < gl.dim(); ++a)
    for (std::size_t b = 0; b < gl.dim(); ++b) t[a][b] = gl.bracket(a, b);
  // [e12, e21] = e11 + e22 replaced by e11 - e22 on one side only
  const std::size_t e12 = 1, e21 = 2;
  t[e12][e21] = SparseVector::unit(0, Q.one()) - SparseVector::unit(3, Q.one());
  LieSuperAlgebra bad(Q, gl.basis(), t);
  CHECK_FALSE(check_d2_d3(bad).passed());
}

TEST_CASE("small p_m homology and basis-permutation invariance") {
  auto q = builtin_algebra("base_field", {});
  PConstruction p3 = build_p(q, 3);
  CHECK(h1_dim(p3.p.lie) == 0);
  CHECK(h2(p3.p.lie).dim == 0);
  PConstruction p4 = build_p(q, 4);
  CHECK(h1_dim(p4.p.lie) == 0);
  CHECK(h2(p4.p.lie).dim == 1);

  std::mt19937 rng(7);
  for (const LieSuperAlgebra* g : {&p3.p.lie, &p4.p.lie}) {
    std::vector<std::size_t> perm(g->dim());
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    LieSuperAlgebra pg = permuted(*g, perm);
    CHECK(verify_lie(pg).passed());
    CHECK(h2(pg).dim == h2(*g).dim);
  }
  LieSuperAlgebra h = heisenberg();
  CHECK(h2(permuted(h, {2, 0, 1})).dim == 2);
}

TEST_CASE("H1 vanishes on p_m for every test algebra") {
  std::vector<InvolutedAlgebra> algs{builtin_algebra("base_field", {}),
                                     builtin_algebra("base_field", BuiltinParams{FieldSpec::prime(3)}),
                                     builtin_algebra("grassmann", BuiltinParams{Q, 1, BuiltinInvolution::rho}),
                                     builtin_algebra("group_algebra_z2", {}),
                                     double_with_exchange(builtin_algebra("base_field", {}).algebra),
                                     double_with_exchange(
                                         builtin_algebra("grassmann", BuiltinParams{Q, 1, BuiltinInvolution::rho}).algebra)};
  for (const auto& r : algs)
    for (std::size_t m = 3; m <= 5; ++m) {
      INFO(r.name, " m=", m);
      CHECK(h1_dim(build_p(r, m).p.lie) == 0);
    }
}
