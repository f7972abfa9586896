#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "superhom/linalg.hpp"
#include "superhom/report.hpp"
#include "superhom/superalgebra.hpp"

namespace superhom {

/// Lie superalgebra given by bracket structure constants on a
/// parity-homogeneous basis. bracket(i, j) = coordinates of [x_i, x_j].
class LieSuperAlgebra {
 public:
  LieSuperAlgebra(FieldSpec field, std::vector<BasisElement> basis, std::vector<std::vector<SparseVector>> bracket);

  const FieldSpec& field() const { return field_; }
  std::size_t dim() const { return basis_.size(); }
  const std::vector<BasisElement>& basis() const { return basis_; }
  Parity parity(std::size_t i) const { return basis_[i].parity; }
  const std::string& label(std::size_t i) const { return basis_[i].label; }
  std::size_t even_dim() const;
  std::size_t odd_dim() const { return dim() - even_dim(); }
  const SparseVector& bracket(std::size_t i, std::size_t j) const { return table_[i][j]; }
  SparseVector bracket(const SparseVector& x, const SparseVector& y) const;
  Parity parity_of(const SparseVector& x) const;
  std::string format(const SparseVector& x) const;

  /// Optional Z^k grading with homogeneous basis vectors and additive bracket;
  /// empty when unknown.
  const std::vector<std::vector<int>>& weights() const { return weights_; }
  void set_weights(std::vector<std::vector<int>> w);

 private:
  FieldSpec field_;
  std::vector<BasisElement> basis_;
  std::vector<std::vector<SparseVector>> table_;
  std::vector<std::vector<int>> weights_;
};

/// Parity homogeneity, super antisymmetry and super Jacobi on basis elements.
CheckReport verify_lie(const LieSuperAlgebra& g);

/// [x, y] = xy - (-1)^{|x||y|} yx on A's basis.
LieSuperAlgebra commutator_lie(const SuperAlgebra& a);

/// A Lie superalgebra with a linear embedding into a parent space.
/// inclusion.basis()[k] is the image of lie basis element k.
struct Subalgebra {
  LieSuperAlgebra lie;
  Subspace inclusion;

  SparseVector embed(const SparseVector& x) const { return inclusion.combine(x); }
  /// Coordinates of a parent vector; throws if it is not in the subalgebra.
  SparseVector coordinates(const SparseVector& v) const;
};

/// Subalgebra spanned by `span` inside g. Throws if not closed under the
/// bracket or if the echelon basis is not parity homogeneous.
Subalgebra subalgebra(const LieSuperAlgebra& g, const Subspace& span);
Subalgebra derived_subalgebra(const LieSuperAlgebra& g);
bool is_perfect(const LieSuperAlgebra& g);

/// Lie sub-superalgebra of the commutator algebra of M_{m|m}(R) spanned by
/// `span`; basis elements carry matrix-unit weights in Z^m.
Subalgebra matrix_subalgebra(const MatrixSuperAlgebra& mat, const Subspace& span);

/// p~_m(R) and p_m(R) inside M_{m|m}(R).
struct PConstruction {
  MatrixSuperAlgebra matrix;
  Subalgebra ptilde;          // inclusion in matrix coordinates
  Subalgebra p;               // inclusion in matrix coordinates
  Subspace p_in_ptilde;       // p's basis in ptilde coordinates

  const InvolutedAlgebra& ring() const { return matrix.coefficients(); }
  std::size_t m() const { return matrix.m(); }
  /// Coordinates in p of a matrix lying in p; throws otherwise.
  SparseVector to_p(const SparseVector& matrix_vec) const { return p.coordinates(matrix_vec); }
  SparseVector to_matrix(const SparseVector& p_vec) const { return p.embed(p_vec); }
};

/// p~_m as the kernel of X -> X^prp + X; p_m is not filled in.
Subalgebra build_ptilde(const MatrixSuperAlgebra& mat);
/// Builds both p~_m(R) and its derived subalgebra p_m(R).
PConstruction build_p(const InvolutedAlgebra& r, std::size_t m);
/// dim R / ([R,R] + R_(-)).
std::size_t trace_quotient_dim(const InvolutedAlgebra& r);

/// Images of t_ij(b_r), f_ij(b_r), g_ij(b_r) (0-based, i != j) in some Lie
/// superalgebra, extended linearly in the R argument.
struct Generators {
  std::size_t m = 0;
  std::size_t rdim = 0;
  std::vector<SparseVector> t_basis, f_basis, g_basis;  // index (i*m + j)*rdim + r

  std::size_t slot(std::size_t i, std::size_t j, std::size_t r) const { return (i * m + j) * rdim + r; }
  SparseVector t(std::size_t i, std::size_t j, const SparseVector& a) const { return extend(t_basis, i, j, a); }
  SparseVector f(std::size_t i, std::size_t j, const SparseVector& a) const { return extend(f_basis, i, j, a); }
  SparseVector g(std::size_t i, std::size_t j, const SparseVector& a) const { return extend(g_basis, i, j, a); }

 private:
  SparseVector extend(const std::vector<SparseVector>& v, std::size_t i, std::size_t j, const SparseVector& a) const;
};

/// Matrices t_ij(a) = e_ij(a) - e_{m+j,m+i}(bar a) etc. in M_{m|m}(R) coordinates.
Generators matrix_generators(const MatrixSuperAlgebra& mat);
/// Generator images in p coordinates. Throws if some generator is not in p
/// or if they fail to generate p.
Generators p_generators(const PConstruction& p);
/// Iterated bracket closure of the generators inside g.
Subspace generated_subalgebra(const LieSuperAlgebra& g, const Generators& gens);

struct StpOptions {
  /// Central extensions of p_3 and p_4 may violate these two; the weaker
  /// variants (a/b) are checked instead when the flag is false.
  bool full_stp04 = true;
  bool full_stp10 = true;
};

/// Checks relations STP00..STP12 on all basis arguments and index tuples.
CheckReport stp_relation_check(const LieSuperAlgebra& g, const Generators& gens, const InvolutedAlgebra& r,
                               StpOptions options = {});

/// gl_{m|m}(S) = commutator algebra of 2m x 2m matrices over S.
LieSuperAlgebra build_gl(const SuperAlgebra& s, std::size_t m);
/// sl_{m|m}(S) = [gl, gl] with its inclusion into gl coordinates.
Subalgebra build_sl(const SuperAlgebra& s, std::size_t m);
/// Explicit map gl_{m|m}(S) -> p~_m(S + S^op, ex): bijective, parity and
/// bracket preserving, and carrying sl onto p.
CheckReport iso_p_double_sl(const SuperAlgebra& s, std::size_t m);

}  // namespace superhom
