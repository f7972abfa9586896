#include "superhom/homology.hpp"

#include <utility>

namespace superhom {

namespace {

std::uint64_t key(const Monomial& m, std::size_t gdim) {
  const std::uint64_t d = gdim;
  return (std::uint64_t{m[0]} * d + m[1]) * d + m[2];
}

std::size_t choose2(std::size_t n) { return n * (n - 1) / 2; }
std::size_t choose3(std::size_t n) { return n < 3 ? 0 : n * (n - 1) * (n - 2) / 6; }

// Calls fn(mono) for every ascending degree-n monomial, in order.
template <class Fn>
void for_each_monomial(const LieSuperAlgebra& g, std::size_t n, Fn&& fn) {
  const auto d = static_cast<std::uint32_t>(g.dim());
  auto odd = [&](std::uint32_t i) { return g.parity(i) == 1; };
  if (n == 1) {
    for (std::uint32_t i = 0; i < d; ++i) fn(Monomial{i, 0, 0});
  } else if (n == 2) {
    for (std::uint32_t i = 0; i < d; ++i)
      for (std::uint32_t j = odd(i) ? i : i + 1; j < d; ++j) fn(Monomial{i, j, 0});
  } else if (n == 3) {
    for (std::uint32_t i = 0; i < d; ++i)
      for (std::uint32_t j = odd(i) ? i : i + 1; j < d; ++j)
        for (std::uint32_t k = odd(j) ? j : j + 1; k < d; ++k) fn(Monomial{i, j, k});
  } else {
    throw Error("wedge degree must be 1, 2 or 3");
  }
}

std::vector<SparseVector> d2_images(const LieSuperAlgebra& g, const WedgeBasis& c2) {
  WedgeBasis c1 = wedge_basis(g, 1);
  std::vector<SparseVector> out;
  out.reserve(c2.size());
  for (const auto& mono : c2.monomials) out.push_back(ce_boundary(g, mono, 2, c1));
  return out;
}

}  // namespace

std::optional<std::size_t> WedgeBasis::index_of(const Monomial& mono) const {
  auto it = index_.find(key(mono, gdim_));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::string WedgeBasis::format(const LieSuperAlgebra& g, std::size_t k) const {
  std::string s;
  for (std::size_t i = 0; i < degree; ++i) s += (i ? "^" : "") + g.label(monomials[k][i]);
  return s;
}

WedgeBasis wedge_basis(const LieSuperAlgebra& g, std::size_t n) {
  WedgeBasis w;
  w.degree = n;
  w.gdim_ = g.dim();
  for_each_monomial(g, n, [&](const Monomial& m) {
    w.index_.emplace(key(m, w.gdim_), w.monomials.size());
    w.monomials.push_back(m);
  });
  return w;
}

std::size_t wedge_dim(std::size_t n0, std::size_t n1, std::size_t n) {
  switch (n) {
    case 0:
      return 1;
    case 1:
      return n0 + n1;
    case 2:
      return choose2(n0) + n0 * n1 + choose2(n1 + 1);
    case 3:
      // Lambda^3 g0 + Lambda^2 g0 (x) g1 + g0 (x) S^2 g1 + S^3 g1
      return choose3(n0) + choose2(n0) * n1 + n0 * choose2(n1 + 1) + choose3(n1 + 2);
    default:
      throw Error("wedge degree must be at most 3");
  }
}

int normalize_monomial(Monomial& mono, std::size_t n, const LieSuperAlgebra& g) {
  int sign = 1;
  for (std::size_t i = 1; i < n; ++i)
    for (std::size_t j = i; j > 0 && mono[j - 1] > mono[j]; --j) {
      const int p = g.parity(mono[j - 1]), q = g.parity(mono[j]);
      if (((1 + p * q) & 1) != 0) sign = -sign;
      std::swap(mono[j - 1], mono[j]);
    }
  for (std::size_t i = 1; i < n; ++i)
    if (mono[i] == mono[i - 1] && g.parity(mono[i]) == 0) return 0;
  return sign;
}

SparseVector ce_boundary(const LieSuperAlgebra& g, const Monomial& mono, std::size_t n, const WedgeBasis& target) {
  if (n != 2 && n != 3) throw Error("ce_boundary: degree must be 2 or 3");
  const FieldSpec& f = g.field();
  int par[3] = {0, 0, 0};
  int prefix[3] = {0, 0, 0};
  for (std::size_t i = 0; i < n; ++i) {
    par[i] = g.parity(mono[i]);
    prefix[i] = i == 0 ? 0 : prefix[i - 1] + par[i - 1];
  }
  SparseAccumulator acc;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      // 1-based positions i+1, j+1.
      const int e = static_cast<int>(i + j + 2) + par[i] * prefix[i] + par[j] * prefix[j] + par[i] * par[j];
      const Scalar s = (e & 1) ? f.from_int(-1) : f.one();
      const SparseVector& br = g.bracket(mono[i], mono[j]);
      if (br.empty()) continue;
      std::uint32_t rest = 0;
      for (std::size_t k = 0; k < n; ++k)
        if (k != i && k != j) rest = mono[k];
      for (const auto& t : br) {
        if (n == 2) {
          acc.add(t.index, s * t.value);
          continue;
        }
        Monomial m{static_cast<std::uint32_t>(t.index), rest, 0};
        const int ns = normalize_monomial(m, 2, g);
        if (ns == 0) continue;
        auto idx = target.index_of(m);
        if (!idx) throw Error("ce_boundary: monomial missing from target basis");
        acc.add(*idx, ns < 0 ? -(s * t.value) : s * t.value);
      }
    }
  return acc.take();
}

SparseMatrix ce_differential(const LieSuperAlgebra& g, std::size_t n) {
  if (n != 2 && n != 3) throw Error("ce_differential: degree must be 2 or 3");
  WedgeBasis source = wedge_basis(g, n);
  WedgeBasis target = wedge_basis(g, n - 1);
  SparseMatrix images(g.field(), source.size(), target.size());
  for (std::size_t k = 0; k < source.size(); ++k) images.set_row(k, ce_boundary(g, source.monomials[k], n, target));
  return images.transpose();
}

std::size_t h1_dim(const LieSuperAlgebra& g) {
  WedgeBasis c2 = wedge_basis(g, 2);
  return g.dim() - rank_of_rows(g.field(), g.dim(), d2_images(g, c2));
}

H2Result h2(const LieSuperAlgebra& g, bool with_representatives) {
  H2Result r;
  WedgeBasis c2 = wedge_basis(g, 2);
  std::vector<SparseVector> d2 = d2_images(g, c2);
  std::vector<SparseVector> d3;
  for_each_monomial(g, 3, [&](const Monomial& m) {
    SparseVector v = ce_boundary(g, m, 3, c2);
    if (!v.empty()) d3.push_back(std::move(v));
    ++r.c3;
  });
  r.c1 = g.dim();
  r.c2 = c2.size();
  r.rank_d2 = rank_of_rows(g.field(), g.dim(), d2);
  r.rank_d3 = rank_of_rows(g.field(), c2.size(), d3);
  r.dim = r.c2 - r.rank_d2 - r.rank_d3;
  if (with_representatives) {
    SparseMatrix t(g.field(), c2.size(), g.dim());
    for (std::size_t k = 0; k < c2.size(); ++k) t.set_row(k, d2[k]);
    Subspace cycles = kernel_basis(t.transpose());
    Echelon ech(g.field(), c2.size());
    for (auto& v : d3) ech.insert(std::move(v));
    for (const auto& z : cycles.basis())
      if (ech.insert(z)) r.representatives.push_back(z);
    if (r.representatives.size() != r.dim) throw Error("h2: representative count disagrees with the dimension");
  }
  return r;
}

CheckReport check_d2_d3(const LieSuperAlgebra& g) {
  CheckReport report;
  WedgeBasis c2 = wedge_basis(g, 2);
  std::vector<SparseVector> d2 = d2_images(g, c2);
  DenseAccumulator acc(g.field(), g.dim());
  std::string witness;
  std::size_t count = 0;
  for_each_monomial(g, 3, [&](const Monomial& m) {
    if (!witness.empty()) return;
    ++count;
    for (const auto& e : ce_boundary(g, m, 3, c2)) acc.add(d2[e.index], e.value);
    SparseVector s = acc.take();
    if (!s.empty())
      witness = "d2(d3(" + g.label(m[0]) + "^" + g.label(m[1]) + "^" + g.label(m[2]) + ")) = " + g.format(s);
  });
  report.add("d2 o d3 = 0", witness.empty(), witness);
  return report;
}

}  // namespace superhom
