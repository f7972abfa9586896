#include "superhom/closedform.hpp"

#include "superhom/homology.hpp"
#include "superhom/lie.hpp"

namespace superhom {

namespace {

Scalar sign(const FieldSpec& f, int e) { return (e & 1) ? f.from_int(-1) : f.one(); }

// Cyclic relation (-1)^{|a||c|} ab(x)c + (-1)^{|b||a|} bc(x)a + (-1)^{|c||b|} ca(x)b.
SparseVector cyclic_relation(const SuperAlgebra& s, std::size_t a, std::size_t b, std::size_t c) {
  const FieldSpec& f = s.field();
  const std::size_t d = s.dim();
  const int pa = s.parity(a), pb = s.parity(b), pc = s.parity(c);
  SparseAccumulator acc;
  acc.add(tensor(s.mul(a, b), s.basis_vector(c), d), sign(f, pa * pc));
  acc.add(tensor(s.mul(b, c), s.basis_vector(a), d), sign(f, pb * pa));
  acc.add(tensor(s.mul(c, a), s.basis_vector(b), d), sign(f, pc * pb));
  return acc.take();
}

SparseVector transposition_relation(const SuperAlgebra& s, std::size_t a, std::size_t b, CyclicSign sg) {
  const FieldSpec& f = s.field();
  const std::size_t d = s.dim();
  Scalar c = sign(f, s.parity(a) * s.parity(b));
  if (sg == CyclicSign::minus) c = -c;
  SparseVector v = SparseVector::unit(a * d + b, f.one());
  v.add_scaled(SparseVector::unit(b * d + a, f.one()), c);
  return v;
}

// Image of a tensor under a bilinear map given on basis pairs.
template <class Fn>
SparseVector lift(const SparseVector& t, std::size_t d, Fn&& on_pair) {
  SparseAccumulator acc;
  for (const auto& e : t) acc.add(on_pair(e.index / d, e.index % d), e.value);
  return acc.take();
}

// Kernel of the map induced on q by `images` of its section vectors.
Subspace induced_kernel(const FieldSpec& f, std::size_t target_dim, const std::vector<SparseVector>& images) {
  SparseMatrix t(f, images.size(), target_dim);
  for (std::size_t k = 0; k < images.size(); ++k) t.set_row(k, images[k]);
  return kernel_basis(t.transpose());
}

}  // namespace

SparseVector tensor(const SparseVector& a, const SparseVector& b, std::size_t d) {
  SparseVector out;
  for (const auto& x : a)
    for (const auto& y : b) out.push_back(x.index * d + y.index, x.value * y.value);
  return out;
}

SparseVector AngleModule::angle(const SparseVector& a, const SparseVector& b) const {
  return quotient.project(tensor(a, b, source.dim()));
}

std::vector<SparseVector> angle_relations(const InvolutedAlgebra& r) {
  const SuperAlgebra& s = r.algebra;
  const std::size_t d = s.dim();
  std::vector<SparseVector> rel;
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = 0; b < d; ++b) {
      rel.push_back(transposition_relation(s, a, b, CyclicSign::plus));
      SparseVector v = SparseVector::unit(a * d + b, r.field().one());
      v += tensor(r.bar(s.basis_vector(a)), r.bar(s.basis_vector(b)), d);
      rel.push_back(std::move(v));
    }
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = 0; b < d; ++b)
      for (std::size_t c = 0; c < d; ++c) rel.push_back(cyclic_relation(s, a, b, c));
  return rel;
}

AngleModule angle_module(const InvolutedAlgebra& r) {
  const std::size_t d = r.dim();
  std::vector<SparseVector> rel = angle_relations(r);
  return AngleModule{r, Quotient(Subspace::span(r.field(), d * d, rel))};
}

DihedralHomology hd1_plus(const InvolutedAlgebra& r) {
  const SuperAlgebra& s = r.algebra;
  const std::size_t d = s.dim();
  auto boundary = [&](std::size_t a, std::size_t b) {
    SparseVector c = s.supercommutator(s.basis_vector(a), s.basis_vector(b));
    return r.bar(c) + c;
  };
  std::vector<SparseVector> rel = angle_relations(r);
  for (const auto& v : rel)
    if (!lift(v, d, boundary).empty()) throw Error("hd1_plus: boundary map does not vanish on the relations");
  AngleModule mod{r, Quotient(Subspace::span(r.field(), d * d, rel))};
  std::vector<SparseVector> images;
  for (std::size_t k = 0; k < mod.dim(); ++k) images.push_back(lift(mod.quotient.section(k), d, boundary));
  Subspace cycles = induced_kernel(r.field(), d, images);
  return DihedralHomology{std::move(mod), std::move(cycles)};
}

CyclicHomology hc1(const SuperAlgebra& s, CyclicSign sg) {
  const std::size_t d = s.dim();
  std::vector<SparseVector> rel;
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = 0; b < d; ++b) rel.push_back(transposition_relation(s, a, b, sg));
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = 0; b < d; ++b)
      for (std::size_t c = 0; c < d; ++c) rel.push_back(cyclic_relation(s, a, b, c));
  auto boundary = [&](std::size_t a, std::size_t b) {
    return s.supercommutator(s.basis_vector(a), s.basis_vector(b));
  };
  for (const auto& v : rel)
    if (!lift(v, d, boundary).empty()) throw Error("hc1: bracket does not descend to the cyclic module");
  Quotient q(Subspace::span(s.field(), d * d, rel));
  std::vector<SparseVector> images;
  for (std::size_t k = 0; k < q.dim(); ++k) images.push_back(lift(q.section(k), d, boundary));
  Subspace cycles = induced_kernel(s.field(), d, images);
  return CyclicHomology{std::move(q), std::move(cycles)};
}

Subspace rminus_ideal(const InvolutedAlgebra& r) {
  const SuperAlgebra& s = r.algebra;
  std::vector<SparseVector> gens;
  for (std::size_t a = 0; a < s.dim(); ++a) {
    SparseVector x = r.bar(s.basis_vector(a)) - s.rho(s.basis_vector(a));
    if (x.empty()) continue;
    for (std::size_t b = 0; b < s.dim(); ++b) gens.push_back(s.multiply(x, s.basis_vector(b)));
  }
  return Subspace::span(r.field(), s.dim(), gens);
}

std::size_t rminus_quotient_dim(const InvolutedAlgebra& r) { return r.dim() - rminus_ideal(r).dim(); }

std::size_t z3_module(const InvolutedAlgebra& r) {
  if (r.field().characteristic() != 3) return 0;
  return rminus_quotient_dim(r);
}

HomologyReport h2_closed_form(const InvolutedAlgebra& r, std::size_t m) {
  if (m < 3) throw Error("h2_closed_form: m must be at least 3");
  HomologyReport rep;
  rep.m = m;
  rep.hd1 = hd1_plus(compose_with_rho(r)).dim();
  if (m == 4) rep.quotient_correction = rminus_quotient_dim(r);
  if (m == 3) rep.z3 = 3 * z3_module(r);
  rep.closed_dim = rep.hd1 + rep.quotient_correction + rep.z3;
  return rep;
}

HomologyReport compare_h2(const InvolutedAlgebra& r, std::size_t m) {
  HomologyReport rep = h2_closed_form(r, m);
  rep.ce_dim = h2(build_p(r, m).p.lie).dim;
  return rep;
}

}  // namespace superhom
