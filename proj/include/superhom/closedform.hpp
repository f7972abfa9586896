#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "superhom/linalg.hpp"
#include "superhom/superalgebra.hpp"

namespace superhom {

/// Coordinates of a (x) b in R (x) R, where e_i (x) e_j sits at i * d + j.
SparseVector tensor(const SparseVector& a, const SparseVector& b, std::size_t d);

/// <R,R> = (R (x) R) / I for the involution carried by `source`.
struct AngleModule {
  InvolutedAlgebra source;
  Quotient quotient;

  std::size_t dim() const { return quotient.dim(); }
  /// <a,b> in quotient coordinates.
  SparseVector angle(const SparseVector& a, const SparseVector& b) const;
  SparseMatrix projection() const { return quotient.projection(); }
};

/// Spanning set of I over basis pairs and triples.
std::vector<SparseVector> angle_relations(const InvolutedAlgebra& r);
AngleModule angle_module(const InvolutedAlgebra& r);

/// Degree-one dihedral homology: the kernel of <a,b> -> bar([a,b]) + [a,b]
/// on <R,R>, for the involution handed in.
struct DihedralHomology {
  AngleModule module;
  Subspace cycles;  // in module coordinates

  std::size_t dim() const { return cycles.dim(); }
};

/// Throws if the lift of the boundary map does not vanish on I.
DihedralHomology hd1_plus(const InvolutedAlgebra& r);

/// Sign of the transposition relation in the cyclic module:
/// plus is a(x)b + (-1)^{|a||b|} b(x)a, minus is a(x)b - (-1)^{|a||b|} b(x)a.
enum class CyclicSign { plus, minus };

struct CyclicHomology {
  Quotient module;  // (S (x) S) / I_c
  Subspace cycles;  // kernel of <a,b>_c -> [a,b]

  std::size_t dim() const { return cycles.dim(); }
};

/// Throws if [a,b] does not descend to the cyclic module for this sign.
CyclicHomology hc1(const SuperAlgebra& s, CyclicSign sign = CyclicSign::plus);

/// Right ideal spanned by (bar(a) - rho(a)) b.
Subspace rminus_ideal(const InvolutedAlgebra& r);
/// dim R / (R_(-) R).
std::size_t rminus_quotient_dim(const InvolutedAlgebra& r);
/// dim R / (3R + R_(-) R).
std::size_t z3_module(const InvolutedAlgebra& r);

struct HomologyReport {
  std::size_t m = 0;
  std::optional<std::size_t> ce_dim;
  std::size_t closed_dim = 0;
  std::size_t hd1 = 0;
  std::size_t quotient_correction = 0;  // m = 4 summand
  std::size_t z3 = 0;                   // m = 3 summand, all three copies

  bool agrees() const { return ce_dim && *ce_dim == closed_dim; }
};

/// Closed-form dim H2(p_m(R)) for m >= 3.
HomologyReport h2_closed_form(const InvolutedAlgebra& r, std::size_t m);
/// Closed form plus the Chevalley-Eilenberg computation on p_m(R).
HomologyReport compare_h2(const InvolutedAlgebra& r, std::size_t m);

}  // namespace superhom
