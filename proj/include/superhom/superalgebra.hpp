#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "superhom/field.hpp"
#include "superhom/linalg.hpp"
#include "superhom/report.hpp"

namespace superhom {

/// Parity of a homogeneous element: 0 even, 1 odd.
using Parity = int;

struct BasisElement {
  std::string label;
  Parity parity = 0;

  friend bool operator==(const BasisElement&, const BasisElement&) = default;
};

/// Finite-dimensional associative superalgebra on a parity-homogeneous
/// basis. mul(i, j) holds the coordinates of basis_i * basis_j.
class SuperAlgebra {
 public:
  SuperAlgebra(FieldSpec field, std::vector<BasisElement> basis, std::vector<std::vector<SparseVector>> mul,
               SparseVector unit);

  const FieldSpec& field() const { return field_; }
  std::size_t dim() const { return basis_.size(); }
  const std::vector<BasisElement>& basis() const { return basis_; }
  Parity parity(std::size_t i) const { return basis_[i].parity; }
  const std::string& label(std::size_t i) const { return basis_[i].label; }
  const SparseVector& mul(std::size_t i, std::size_t j) const { return mul_[i][j]; }
  const SparseVector& unit() const { return unit_; }
  SparseVector basis_vector(std::size_t i) const { return SparseVector::unit(i, field_.one()); }

  SparseVector multiply(const SparseVector& a, const SparseVector& b) const;
  /// Super-commutator ab - (-1)^{|a||b|} ba, extended bilinearly.
  SparseVector supercommutator(const SparseVector& a, const SparseVector& b) const;
  /// The sign map a -> (-1)^{|a|} a.
  SparseVector rho(const SparseVector& a) const;
  /// Parity of a nonzero homogeneous vector; -1 if inhomogeneous, 0 for zero.
  Parity parity_of(const SparseVector& a) const;
  std::string format(const SparseVector& a) const;

  bool same_structure(const SuperAlgebra& other) const;

 private:
  FieldSpec field_;
  std::vector<BasisElement> basis_;
  std::vector<std::vector<SparseVector>> mul_;
  SparseVector unit_;
};

/// Linear map on the coordinate space; column j is the image of basis_j.
class Superinvolution {
 public:
  explicit Superinvolution(SparseMatrix matrix);
  static Superinvolution identity(const SuperAlgebra& a);
  static Superinvolution rho(const SuperAlgebra& a);

  const SparseMatrix& matrix() const { return matrix_; }
  SparseVector apply(const SparseVector& v) const { return matrix_.apply(v); }

 private:
  SparseMatrix matrix_;
};

/// (R, bar): a superalgebra together with a superinvolution.
struct InvolutedAlgebra {
  SuperAlgebra algebra;
  Superinvolution involution;
  std::string name;

  std::size_t dim() const { return algebra.dim(); }
  const FieldSpec& field() const { return algebra.field(); }
  SparseVector bar(const SparseVector& v) const { return involution.apply(v); }
};

CheckReport verify_superalgebra(const SuperAlgebra& a);
CheckReport verify_superinvolution(const InvolutedAlgebra& r);

enum class BuiltinInvolution { identity, rho, transpose };

struct BuiltinParams {
  FieldSpec field = FieldSpec::rationals();
  std::size_t n = 1;
  BuiltinInvolution involution = BuiltinInvolution::identity;
};

/// Named example algebras: base_field, dual_numbers, grassmann (n odd
/// generators), group_algebra_z2, matrix_algebra (n x n, all even).
/// Throws on an unknown name or when the involution fails verification.
InvolutedAlgebra builtin_algebra(std::string_view name, const BuiltinParams& params);

/// Opposite superalgebra: a o b = (-1)^{|a||b|} b a.
SuperAlgebra opposite(const SuperAlgebra& s);
/// (S + S^op, ex) with ex(a + b) = b + a. Basis: S's basis, then S^op's.
InvolutedAlgebra double_with_exchange(const SuperAlgebra& s);
/// The same algebra with involution a -> (-1)^{|a|} bar(a).
InvolutedAlgebra compose_with_rho(const InvolutedAlgebra& r);
/// (R_(+), R_(-)) where R_(+-) = { a : bar(a) = +-rho(a) }.
std::pair<Subspace, Subspace> r_plus_minus(const InvolutedAlgebra& r);

/// M_{m|m}(R) with basis e_ij(b_r), 0 <= i, j < 2m, ordered
/// lexicographically in (i, j, r); rows/columns >= m are odd.
class MatrixSuperAlgebra {
 public:
  MatrixSuperAlgebra(InvolutedAlgebra coefficients, std::size_t m);

  const InvolutedAlgebra& coefficients() const { return r_; }
  const SuperAlgebra& ring() const { return r_.algebra; }
  const FieldSpec& field() const { return r_.field(); }
  std::size_t m() const { return m_; }
  std::size_t size() const { return 2 * m_; }
  std::size_t dim() const { return 4 * m_ * m_ * r_.dim(); }
  std::size_t index(std::size_t i, std::size_t j, std::size_t r) const { return (i * size() + j) * r_.dim() + r; }
  Parity index_parity(std::size_t i) const { return i >= m_ ? 1 : 0; }
  Parity parity(std::size_t idx) const;

  /// e_ij(a) for a in R given by coordinates.
  SparseVector e(std::size_t i, std::size_t j, const SparseVector& a) const;
  /// Entry (i, j) of X as an element of R.
  SparseVector entry(const SparseVector& x, std::size_t i, std::size_t j) const;
  SparseVector multiply(const SparseVector& x, const SparseVector& y) const;
  SparseVector supercommutator(const SparseVector& x, const SparseVector& y) const;
  /// Periplectic superinvolution (A B; C D) -> (D^t-bar, -rho(B)^t-bar; rho(C)^t-bar, A^t-bar).
  SparseVector prp(const SparseVector& x) const;
  SparseMatrix prp_matrix() const;
  /// Superinvolution axioms for prp, checked on all pairs of basis elements
  /// without materializing the full multiplication table.
  CheckReport verify_prp() const;
  SuperAlgebra to_superalgebra() const;
  InvolutedAlgebra with_prp() const;
  std::string format(const SparseVector& x) const;

 private:
  InvolutedAlgebra r_;
  std::size_t m_;
};

MatrixSuperAlgebra matrix_superalgebra(const InvolutedAlgebra& r, std::size_t m);

}  // namespace superhom
