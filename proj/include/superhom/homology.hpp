#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "superhom/lie.hpp"
#include "superhom/linalg.hpp"
#include "superhom/report.hpp"

namespace superhom {

using Monomial = std::array<std::uint32_t, 3>;

/// Basis of the super exterior power of g in degree 1..3: ascending index
/// tuples, where an index may repeat only if its basis element is odd.
struct WedgeBasis {
  std::size_t degree = 0;
  std::vector<Monomial> monomials;  // entries past `degree` are zero

  std::size_t size() const { return monomials.size(); }
  std::optional<std::size_t> index_of(const Monomial& mono) const;
  std::string format(const LieSuperAlgebra& g, std::size_t k) const;

 private:
  friend WedgeBasis wedge_basis(const LieSuperAlgebra& g, std::size_t n);
  std::size_t gdim_ = 0;
  std::unordered_map<std::uint64_t, std::size_t> index_;
};

WedgeBasis wedge_basis(const LieSuperAlgebra& g, std::size_t n);
/// dim of the degree-n super exterior power for (even, odd) dims (n0, n1).
std::size_t wedge_dim(std::size_t n0, std::size_t n1, std::size_t n);

/// Sorts the first n factors ascending; each adjacent swap of parities p, q
/// contributes (-1)^{1+pq}. Returns the accumulated sign, or 0 when the
/// monomial vanishes (a repeated even factor).
int normalize_monomial(Monomial& mono, std::size_t n, const LieSuperAlgebra& g);

/// Image of one degree-n monomial (n = 2 or 3) under the CE differential, in
/// coordinates of wedge_basis(g, n - 1).
SparseVector ce_boundary(const LieSuperAlgebra& g, const Monomial& mono, std::size_t n, const WedgeBasis& target);

/// Matrix of d_n : Lambda^n g -> Lambda^{n-1} g, n in {2, 3}.
SparseMatrix ce_differential(const LieSuperAlgebra& g, std::size_t n);

/// dim g - rank d2.
std::size_t h1_dim(const LieSuperAlgebra& g);

struct H2Result {
  std::size_t dim = 0;
  std::size_t c1 = 0, c2 = 0, c3 = 0;
  std::size_t rank_d2 = 0, rank_d3 = 0;
  /// Cycles completing im d3 to ker d2, in wedge_basis(g, 2) coordinates.
  std::vector<SparseVector> representatives;
};

/// dim ker d2 - rank d3. Representatives are computed on request.
H2Result h2(const LieSuperAlgebra& g, bool with_representatives = false);

/// Streams over every degree-3 monomial and checks d2(d3(x)) = 0 without
/// storing d3.
CheckReport check_d2_d3(const LieSuperAlgebra& g);

}  // namespace superhom
