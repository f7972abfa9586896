#include "superhom/cocycle.hpp"

#include <array>
#include <utility>

namespace superhom {

namespace {

Scalar sign(const FieldSpec& f, int e) { return (e & 1) ? f.from_int(-1) : f.one(); }

std::string format_value(const SparseVector& v) {
  if (v.empty()) return "0";
  std::string s;
  for (const auto& e : v) s += (s.empty() ? "" : " + ") + e.value.to_string() + "*z" + std::to_string(e.index);
  return s;
}

// Sign of the permutation (p[0], ..., p[n-1]) of {0..n-1}; 0 if not a permutation.
template <std::size_t N>
int permutation_sign(const std::array<std::size_t, N>& p) {
  for (std::size_t a = 0; a < N; ++a) {
    if (p[a] >= N) return 0;
    for (std::size_t b = a + 1; b < N; ++b)
      if (p[a] == p[b]) return 0;
  }
  int inv = 0;
  for (std::size_t a = 0; a < N; ++a)
    for (std::size_t b = a + 1; b < N; ++b)
      if (p[a] > p[b]) ++inv;
  return (inv & 1) ? -1 : 1;
}

std::vector<Parity> quotient_parities(const Quotient& q, const std::function<Parity(std::size_t)>& ambient_parity) {
  std::vector<Parity> out;
  for (std::size_t k = 0; k < q.dim(); ++k) out.push_back(ambient_parity(q.section(k)[0].index));
  return out;
}

SparseVector shifted(const SparseVector& v, std::size_t offset) {
  SparseVector out;
  for (const auto& e : v) out.push_back(e.index + offset, e.value);
  return out;
}

// Pair-space vectors of the coboundaries f([x_i, x_j]) for f = dual basis.
std::vector<SparseVector> coboundary_rows(const LieSuperAlgebra& g) {
  const std::size_t n = g.dim();
  SparseMatrix m(g.field(), n * n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m.set_row(i * n + j, g.bracket(i, j));
  SparseMatrix t = m.transpose();
  std::vector<SparseVector> rows;
  for (std::size_t k = 0; k < n; ++k) rows.push_back(t.row(k));
  return rows;
}

// Coordinate v of the cocycle as a vector over pairs.
std::vector<SparseVector> coordinate_rows(const TwoCocycle& c) {
  const std::size_t n = c.carrier.dim();
  SparseMatrix m(c.carrier.field(), n * n, c.values_dim());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m.set_row(i * n + j, c.table[i][j]);
  SparseMatrix t = m.transpose();
  std::vector<SparseVector> rows;
  for (std::size_t v = 0; v < c.values_dim(); ++v) rows.push_back(t.row(v));
  return rows;
}

}  // namespace

SparseVector TwoCocycle::operator()(const SparseVector& x, const SparseVector& y) const {
  DenseAccumulator acc(carrier.field(), values_dim());
  for (const auto& a : x)
    for (const auto& b : y) acc.add(table[a.index][b.index], a.value * b.value);
  return acc.take();
}

TwoCocycle make_cocycle(LieSuperAlgebra carrier, std::vector<Parity> value_parity,
                        const std::function<SparseVector(std::size_t, std::size_t)>& on_basis, std::string name) {
  const std::size_t n = carrier.dim();
  std::vector<std::vector<SparseVector>> table(n, std::vector<SparseVector>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) table[i][j] = on_basis(i, j);
  return TwoCocycle{std::move(carrier), std::move(value_parity), std::move(table), std::move(name)};
}

TwoCocycle restrict_cocycle(const TwoCocycle& c, const Subalgebra& s) {
  if (s.inclusion.ambient_dim() != c.carrier.dim()) throw Error("restrict_cocycle: subalgebra lives elsewhere");
  const auto& emb = s.inclusion.basis();
  return make_cocycle(
      s.lie, c.value_parity, [&](std::size_t i, std::size_t j) { return c(emb[i], emb[j]); }, c.name);
}

TwoCocycle zero_cocycle(LieSuperAlgebra carrier, std::size_t values_dim) {
  return make_cocycle(
      std::move(carrier), std::vector<Parity>(values_dim, 0), [](std::size_t, std::size_t) { return SparseVector{}; },
      "zero");
}

CheckReport verify_cocycle(const TwoCocycle& c) {
  CheckReport rep;
  const LieSuperAlgebra& g = c.carrier;
  const FieldSpec& f = g.field();
  const std::size_t n = g.dim();
  std::string shape, par, anti, ident;
  if (c.table.size() != n) shape = "table has " + std::to_string(c.table.size()) + " rows";
  for (std::size_t i = 0; i < c.table.size() && shape.empty(); ++i)
    if (c.table[i].size() != n) shape = "row " + std::to_string(i) + " has the wrong length";
  rep.add("table shape", shape.empty(), shape);
  if (!shape.empty()) return rep;

  for (std::size_t i = 0; i < n && (par.empty() || anti.empty()); ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const int pij = (g.parity(i) + g.parity(j)) % 2;
      for (const auto& e : c.table[i][j])
        if (e.index >= c.values_dim() || c.value_parity[e.index] != pij) {
          if (par.empty()) par = "beta(" + g.label(i) + ", " + g.label(j) + ") = " + format_value(c.table[i][j]);
          break;
        }
      SparseVector sum = c.table[j][i];
      sum.add_scaled(c.table[i][j], sign(f, g.parity(i) * g.parity(j)));
      if (!sum.empty() && anti.empty())
        anti = "beta(" + g.label(j) + ", " + g.label(i) + ") + (-1)^{|x||y|} beta(" + g.label(i) + ", " + g.label(j) +
               ") = " + format_value(sum);
    }
  rep.add("parity", par.empty(), par);
  rep.add("super antisymmetry", anti.empty(), anti);

  DenseAccumulator acc(f, c.values_dim());
  auto add_term = [&](std::size_t x, std::size_t y, std::size_t z, int e) {
    const Scalar s = sign(f, e);
    for (const auto& t : g.bracket(x, y)) acc.add(c.table[t.index][z], s * t.value);
  };
  for (std::size_t i = 0; i < n && ident.empty(); ++i)
    for (std::size_t j = i; j < n && ident.empty(); ++j)
      for (std::size_t k = j; k < n; ++k) {
        const int pi = g.parity(i), pj = g.parity(j), pk = g.parity(k);
        add_term(i, j, k, pi * pk);
        add_term(j, k, i, pj * pi);
        add_term(k, i, j, pk * pj);
        SparseVector s = acc.take();
        if (!s.empty()) {
          ident = "(" + g.label(i) + ", " + g.label(j) + ", " + g.label(k) + ") -> " + format_value(s);
          break;
        }
      }
  rep.add("cocycle identity", ident.empty(), ident);
  return rep;
}

std::optional<std::vector<SparseVector>> is_coboundary(const TwoCocycle& c) {
  const LieSuperAlgebra& g = c.carrier;
  const std::size_t n = g.dim();
  SparseMatrix m(g.field(), n * n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m.set_row(i * n + j, g.bracket(i, j));
  std::vector<SparseAccumulator> f(n);
  std::vector<SparseVector> rhs = coordinate_rows(c);
  for (std::size_t v = 0; v < c.values_dim(); ++v) {
    auto x = solve(m, rhs[v]);
    if (!x) return std::nullopt;
    for (const auto& e : *x) f[e.index].add(v, e.value);
  }
  std::vector<SparseVector> out;
  for (auto& a : f) out.push_back(a.take());
  return out;
}

std::size_t class_rank(const TwoCocycle& c) {
  const std::size_t n = c.carrier.dim();
  std::vector<SparseVector> rows = coboundary_rows(c.carrier);
  const std::size_t base = rank_of_rows(c.carrier.field(), n * n, rows);
  for (auto& v : coordinate_rows(c)) rows.push_back(std::move(v));
  return rank_of_rows(c.carrier.field(), n * n, rows) - base;
}

AlphaCocycle alpha_cocycle(const PConstruction& pc) {
  const MatrixSuperAlgebra& mat = pc.matrix;
  if (mat.m() < 3) throw Error("alpha_cocycle: m must be at least 3");
  const InvolutedAlgebra& r = pc.ring();
  const SuperAlgebra& s = r.algebra;
  const std::size_t d = s.dim(), n = mat.size();
  AngleModule mod = angle_module(compose_with_rho(r));
  std::vector<std::vector<SparseVector>> angle(d, std::vector<SparseVector>(d));
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = 0; b < d; ++b) angle[a][b] = mod.angle(s.basis_vector(a), s.basis_vector(b));
  std::vector<Parity> vp = quotient_parities(mod.quotient, [&](std::size_t t) {
    return (s.parity(t / d) + s.parity(t % d)) % 2;
  });
  const FieldSpec& f = r.field();
  TwoCocycle gl = make_cocycle(
      commutator_lie(mat.to_superalgebra()), vp,
      [&](std::size_t u, std::size_t v) {
        const std::size_t i = u / d / n, j = u / d % n, a = u % d;
        const std::size_t k = v / d / n, l = v / d % n, b = v % d;
        if (j != k || i != l) return SparseVector{};
        const int pi = mat.index_parity(i);
        return angle[a][b].scaled(sign(f, pi * (pi + s.parity(a) + s.parity(b))));
      },
      "alpha");
  TwoCocycle on_p = restrict_cocycle(gl, pc.p);
  return AlphaCocycle{std::move(mod), std::move(gl), std::move(on_p)};
}

TwoCocycle beta4_cocycle(const PConstruction& pc) {
  const MatrixSuperAlgebra& mat = pc.matrix;
  if (mat.m() != 4) throw Error("beta4_cocycle: needs m = 4");
  const InvolutedAlgebra& r = pc.ring();
  const SuperAlgebra& s = r.algebra;
  const std::size_t m = 4;
  Quotient pi(rminus_ideal(r));
  for (std::size_t a = 0; a < s.dim(); ++a)
    for (std::size_t b = 0; b < s.dim(); ++b) {
      SparseVector ea = s.basis_vector(a), eb = s.basis_vector(b);
      if (!pi.project(s.multiply(r.bar(ea), eb) - s.multiply(s.rho(ea), eb)).empty())
        throw Error("beta4_cocycle: pi(bar(a) b) != pi(rho(a) b)");
    }
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j) pairs.emplace_back(i, j);
  // Lower-left entries c_ij, i < j, of every basis element of p.
  const std::size_t n = pc.p.lie.dim();
  std::vector<std::vector<SparseVector>> c(n);
  for (std::size_t u = 0; u < n; ++u) {
    SparseVector x = pc.p.inclusion.basis()[u];
    for (auto [i, j] : pairs) c[u].push_back(mat.entry(x, m + i, j));
  }
  std::vector<Parity> vp = quotient_parities(pi, [&](std::size_t t) { return s.parity(t); });
  return make_cocycle(
      pc.p.lie, vp,
      [&](std::size_t u, std::size_t v) {
        SparseAccumulator acc;
        for (std::size_t p = 0; p < pairs.size(); ++p) {
          if (c[u][p].empty()) continue;
          for (std::size_t q = 0; q < pairs.size(); ++q) {
            if (c[v][q].empty()) continue;
            const int e = permutation_sign<4>({pairs[p].first, pairs[p].second, pairs[q].first, pairs[q].second});
            if (e == 0) continue;
            acc.add(pi.project(s.multiply(c[u][p], s.rho(c[v][q]))), r.field().from_int(e));
          }
        }
        return acc.take();
      },
      "beta4");
}

TwoCocycle beta3_cocycle(const PConstruction& pc, GReading reading) {
  const MatrixSuperAlgebra& mat = pc.matrix;
  if (mat.m() != 3) throw Error("beta3_cocycle: needs m = 3");
  const InvolutedAlgebra& r = pc.ring();
  const SuperAlgebra& s = r.algebra;
  const FieldSpec& f = r.field();
  const std::size_t m = 3, d = s.dim();
  Quotient pi(r.field().characteristic() == 3 ? rminus_ideal(r) : Subspace::full(f, d));
  const std::size_t qd = pi.dim();
  const Scalar half = f.from_int(2).inverse();

  struct GTerm {
    std::size_t j, k;
    SparseVector value;
  };
  struct Blocks {
    std::array<std::array<SparseVector, 3>, 3> a;  // off-diagonal upper-left entries
    std::array<SparseVector, 3> f;                 // argument of f_i: half the upper-right diagonal
    std::vector<GTerm> g;
  };
  const std::size_t n = pc.p.lie.dim();
  std::vector<Blocks> blk(n);
  for (std::size_t u = 0; u < n; ++u) {
    SparseVector x = pc.p.inclusion.basis()[u];
    for (std::size_t i = 0; i < m; ++i) {
      blk[u].f[i] = mat.entry(x, i, m + i).scaled(half);
      for (std::size_t j = 0; j < m; ++j) {
        if (i == j) continue;
        blk[u].a[i][j] = mat.entry(x, i, j);
        if (i < j) {
          if (reading == GReading::upper)
            blk[u].g.push_back({i, j, mat.entry(x, m + i, j)});
          else
            blk[u].g.push_back({j, i, mat.entry(x, m + j, i)});
        }
      }
    }
  }
  auto project = [&](std::size_t copy, const SparseVector& w) { return shifted(pi.project(w), copy * qd); };
  std::vector<Parity> one = quotient_parities(pi, [&](std::size_t t) { return s.parity(t); });
  std::vector<Parity> vp;
  for (std::size_t k = 0; k < m; ++k) vp.insert(vp.end(), one.begin(), one.end());

  return make_cocycle(
      pc.p.lie, vp,
      [&](std::size_t u, std::size_t v) {
        SparseAccumulator acc;
        const Blocks &x = blk[u], &y = blk[v];
        for (std::size_t i = 0; i < m; ++i)
          for (std::size_t j = 0; j < m; ++j)
            for (std::size_t k = 0; k < m; ++k) {
              const int e = permutation_sign<3>({i, j, k});
              if (e == 0 || x.a[i][j].empty() || y.a[i][k].empty()) continue;
              acc.add(project(i, s.multiply(x.a[i][j], y.a[i][k])), f.from_int(e));
            }
        for (const auto& gt : y.g) {
          const std::size_t i = 3 - gt.j - gt.k;
          if (x.f[i].empty() || gt.value.empty()) continue;
          const int e = permutation_sign<3>({i, gt.j, gt.k});
          acc.add(project(i, s.multiply(x.f[i], gt.value)), f.from_int(e));
        }
        for (const auto& gt : x.g) {
          const std::size_t i = 3 - gt.j - gt.k;
          if (y.f[i].empty() || gt.value.empty()) continue;
          const int e = permutation_sign<3>({i, gt.j, gt.k});
          for (const auto& ta : y.f[i])
            for (const auto& tb : gt.value) {
              const int sg = (1 + s.parity(ta.index)) * (1 + s.parity(tb.index));
              const Scalar c = sign(f, 1 + sg) * f.from_int(e) * ta.value * tb.value;
              acc.add(project(i, s.mul(ta.index, tb.index)), c);
            }
        }
        return acc.take();
      },
      "beta3");
}

CentralExtension central_extension(const TwoCocycle& c) {
  const LieSuperAlgebra& g = c.carrier;
  const std::size_t n = g.dim(), v = c.values_dim();
  std::vector<BasisElement> basis = g.basis();
  for (std::size_t k = 0; k < v; ++k) basis.push_back({"z" + std::to_string(k), c.value_parity[k]});
  std::vector<std::vector<SparseVector>> table(n + v, std::vector<SparseVector>(n + v));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) table[i][j] = g.bracket(i, j) + shifted(c.table[i][j], n);
  CentralExtension e{c, LieSuperAlgebra(g.field(), std::move(basis), std::move(table))};
  CheckReport rep = verify_lie(e.total);
  if (!rep.passed()) throw Error("central_extension: " + rep.first_failure());
  return e;
}

CheckReport verify_extension(const CentralExtension& e) {
  CheckReport rep;
  rep.append(verify_lie(e.total), "total: ");
  const std::size_t n = e.base().dim(), dim = e.total.dim();
  std::string central, hom;
  for (std::size_t i = n; i < dim && central.empty(); ++i)
    for (std::size_t j = 0; j < dim; ++j)
      if (!e.total.bracket(i, j).empty() || !e.total.bracket(j, i).empty()) {
        central = e.total.label(i) + " does not commute with " + e.total.label(j);
        break;
      }
  for (std::size_t i = 0; i < n && hom.empty(); ++i)
    for (std::size_t j = 0; j < n; ++j) {
      SparseVector proj;
      for (const auto& t : e.total.bracket(i, j))
        if (t.index < n) proj.push_back(t.index, t.value);
      if (proj != e.base().bracket(i, j)) {
        hom = "[" + e.base().label(i) + ", " + e.base().label(j) + "]";
        break;
      }
    }
  rep.add("values are central", central.empty(), central);
  rep.add("projection is a homomorphism", hom.empty(), hom);
  return rep;
}

CheckReport lambda_mu_suite(const PConstruction& pc, const AlphaCocycle& alpha, const CentralExtension& e) {
  const std::size_t m = pc.m();
  if (m < 3) throw Error("lambda_mu_suite: m must be at least 3");
  const InvolutedAlgebra& r = pc.ring();
  const SuperAlgebra& s = r.algebra;
  const FieldSpec& f = r.field();
  const std::size_t d = s.dim();
  const LieSuperAlgebra& E = e.total;
  Generators gens = p_generators(pc);
  const SparseVector one = s.unit();
  auto br = [&](const SparseVector& x, const SparseVector& y) { return E.bracket(x, y); };
  auto basis = [&](std::size_t a) { return s.basis_vector(a); };
  auto par = [&](std::size_t a) { return s.parity(a); };
  auto rb = [&](const SparseVector& a) { return s.rho(r.bar(a)); };

  auto h = [&](std::size_t i, std::size_t j, const SparseVector& a, const SparseVector& b) {
    return br(gens.f(i, j, a), gens.g(j, i, b));
  };
  auto lam_at = [&](std::size_t i, const SparseVector& a, int pa, const SparseVector& b, int pb) {
    SparseVector v = h(0, i, a, b);
    v.add_scaled(h(0, i, one, s.multiply(b, a)), sign(f, 1 + pa * pb));
    return v;
  };
  auto lam = [&](const SparseVector& a, int pa, const SparseVector& b, int pb) { return lam_at(1, a, pa, b, pb); };
  auto mu_at = [&](std::size_t i, std::size_t j, const SparseVector& a) {
    return h(i, 0, one, a) + h(0, j, one, a) - h(i, j, one, a);
  };
  auto mu = [&](const SparseVector& a) { return mu_at(1, 2, a); };

  CheckReport rep;
  auto run = [&](const std::string& name, auto&& body) {
    std::string w;
    body(w);
    rep.add(name, w.empty(), w);
  };
  auto lbl = [&](std::size_t a) { return s.label(a); };

  run("lambda independent of i", [&](std::string& w) {
    for (std::size_t i = 2; i < m && w.empty(); ++i)
      for (std::size_t a = 0; a < d && w.empty(); ++a)
        for (std::size_t b = 0; b < d; ++b)
          if (lam_at(i, basis(a), par(a), basis(b), par(b)) != lam(basis(a), par(a), basis(b), par(b))) {
            w = "i=" + std::to_string(i + 1) + " a=" + lbl(a) + " b=" + lbl(b);
            break;
          }
  });
  run("mu independent of i, j", [&](std::string& w) {
    for (std::size_t a = 0; a < d && w.empty(); ++a) {
      const SparseVector ref = mu(basis(a));
      for (std::size_t i = 1; i < m && w.empty(); ++i)
        for (std::size_t j = 1; j < m; ++j)
          if (i != j && mu_at(i, j, basis(a)) != ref) {
            w = "i=" + std::to_string(i + 1) + " j=" + std::to_string(j + 1) + " a=" + lbl(a);
            break;
          }
    }
  });
  run("[t_ij(a), f_ji(b)] and [g_ij(a), t_ji(b)] independent of j", [&](std::string& w) {
    for (std::size_t i = 0; i < m && w.empty(); ++i)
      for (std::size_t j = 0; j < m && w.empty(); ++j)
        for (std::size_t k = 0; k < m && w.empty(); ++k) {
          if (j == i || k == i || k == j) continue;
          for (std::size_t a = 0; a < d && w.empty(); ++a)
            for (std::size_t b = 0; b < d; ++b) {
              const bool tf = br(gens.t(i, j, basis(a)), gens.f(j, i, basis(b))) ==
                              br(gens.t(i, k, basis(a)), gens.f(k, i, basis(b)));
              const bool gt = br(gens.g(i, j, basis(a)), gens.t(j, i, basis(b))) ==
                              br(gens.g(i, k, basis(a)), gens.t(k, i, basis(b)));
              if (!tf || !gt) {
                w = "i=" + std::to_string(i + 1) + " j=" + std::to_string(j + 1) + " k=" + std::to_string(k + 1) +
                    " a=" + lbl(a) + " b=" + lbl(b);
                break;
              }
            }
        }
  });
  run("lambda(a,1) = lambda(1,b) = 0", [&](std::string& w) {
    for (std::size_t a = 0; a < d; ++a)
      if (!lam(basis(a), par(a), one, 0).empty() || !lam(one, 0, basis(a), par(a)).empty()) {
        w = "a=" + lbl(a);
        break;
      }
  });
  run("lambda super antisymmetry", [&](std::string& w) {
    for (std::size_t a = 0; a < d && w.empty(); ++a)
      for (std::size_t b = 0; b < d; ++b) {
        SparseVector v = lam(basis(a), par(a), basis(b), par(b));
        v.add_scaled(lam(basis(b), par(b), basis(a), par(a)), sign(f, par(a) * par(b)));
        if (!v.empty()) {
          w = "a=" + lbl(a) + " b=" + lbl(b);
          break;
        }
      }
  });
  run("lambda cyclic identity", [&](std::string& w) {
    for (std::size_t a = 0; a < d && w.empty(); ++a)
      for (std::size_t b = 0; b < d && w.empty(); ++b)
        for (std::size_t c = 0; c < d; ++c) {
          const int pa = par(a), pb = par(b), pc_ = par(c);
          SparseVector v = lam(s.mul(a, b), pa + pb, basis(c), pc_).scaled(sign(f, pa * pc_));
          v.add_scaled(lam(s.mul(b, c), pb + pc_, basis(a), pa), sign(f, pb * pa));
          v.add_scaled(lam(s.mul(c, a), pc_ + pa, basis(b), pb), sign(f, pc_ * pb));
          if (!v.empty()) {
            w = "a=" + lbl(a) + " b=" + lbl(b) + " c=" + lbl(c);
            break;
          }
        }
  });
  run("mu(bar a) = -mu(rho a)", [&](std::string& w) {
    for (std::size_t a = 0; a < d; ++a)
      if (mu(r.bar(basis(a))) + mu(s.rho(basis(a))) != SparseVector{}) {
        w = "a=" + lbl(a);
        break;
      }
  });
  run("mu([a,b]) = lambda(a,b) + lambda(rho bar a, rho bar b)", [&](std::string& w) {
    for (std::size_t a = 0; a < d && w.empty(); ++a)
      for (std::size_t b = 0; b < d; ++b) {
        SparseVector lhs = mu(s.supercommutator(basis(a), basis(b)));
        SparseVector rhs = lam(basis(a), par(a), basis(b), par(b)) + lam(rb(basis(a)), par(a), rb(basis(b)), par(b));
        if (lhs != rhs) {
          w = "a=" + lbl(a) + " b=" + lbl(b);
          break;
        }
      }
  });
  run("lambda(a,b) = t_11([a,b]) + 2<a,b>", [&](std::string& w) {
    const MatrixSuperAlgebra& mat = pc.matrix;
    for (std::size_t a = 0; a < d && w.empty(); ++a)
      for (std::size_t b = 0; b < d; ++b) {
        SparseVector c = s.supercommutator(basis(a), basis(b));
        SparseVector t11 = pc.to_p(mat.e(0, 0, c) - mat.e(m, m, r.bar(c)));
        SparseVector want = t11 + shifted(alpha.module.angle(basis(a), basis(b)).scaled(f.from_int(2)),
                                          e.central_offset());
        if (lam(basis(a), par(a), basis(b), par(b)) != want) {
          w = "a=" + lbl(a) + " b=" + lbl(b);
          break;
        }
      }
  });
  return rep;
}

}  // namespace superhom
