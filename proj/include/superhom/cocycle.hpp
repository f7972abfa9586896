#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "superhom/closedform.hpp"
#include "superhom/lie.hpp"
#include "superhom/report.hpp"

namespace superhom {

/// Bilinear map g x g -> V into a trivial module V with a homogeneous basis,
/// stored on basis pairs.
struct TwoCocycle {
  LieSuperAlgebra carrier;
  std::vector<Parity> value_parity;               // one per basis vector of V
  std::vector<std::vector<SparseVector>> table;   // table[i][j] = beta(x_i, x_j)
  std::string name;

  std::size_t values_dim() const { return value_parity.size(); }
  SparseVector operator()(const SparseVector& x, const SparseVector& y) const;
};

TwoCocycle make_cocycle(LieSuperAlgebra carrier, std::vector<Parity> value_parity,
                        const std::function<SparseVector(std::size_t, std::size_t)>& on_basis, std::string name);
/// Pulls c back along the inclusion of s into c.carrier.
TwoCocycle restrict_cocycle(const TwoCocycle& c, const Subalgebra& s);
TwoCocycle zero_cocycle(LieSuperAlgebra carrier, std::size_t values_dim);

/// Parity, super antisymmetry and the cocycle identity on basis elements.
CheckReport verify_cocycle(const TwoCocycle& c);

/// f with beta(x, y) = f([x, y]) as the list f(x_k), or nullopt.
std::optional<std::vector<SparseVector>> is_coboundary(const TwoCocycle& c);
/// Number of coordinate cocycles of c independent modulo coboundaries.
std::size_t class_rank(const TwoCocycle& c);

/// alpha(e_ij(a), e_kl(b)) = d_jk d_il (-1)^{|i|(|i|+|a|+|b|)} <a,b> with values
/// in <R,R> for the involution bar o rho, on gl_{m|m}(R) and restricted to p_m.
struct AlphaCocycle {
  AngleModule module;
  TwoCocycle gl;
  TwoCocycle p;
};
AlphaCocycle alpha_cocycle(const PConstruction& pc);

/// Cocycle on p_4 with values in R / (R_(-) R), read off lower-left blocks.
TwoCocycle beta4_cocycle(const PConstruction& pc);

/// Which entry of the antisymmetric lower-left pair a g_jk coordinate is
/// read from: j < k (upper) or j > k (lower).
enum class GReading { upper, lower };

/// Cocycle on p_3 with values in three copies of R / (3R + R_(-) R).
TwoCocycle beta3_cocycle(const PConstruction& pc, GReading reading = GReading::upper);

struct CentralExtension {
  TwoCocycle cocycle;
  LieSuperAlgebra total;  // base basis first, then V's basis

  const LieSuperAlgebra& base() const { return cocycle.carrier; }
  std::size_t central_offset() const { return base().dim(); }
};

/// [x + c, y + c'] = [x, y] + beta(x, y). Throws if the result fails Jacobi.
CentralExtension central_extension(const TwoCocycle& c);
/// Lie axioms on the total space, centrality of V, and the projection to the
/// base being a homomorphism.
CheckReport verify_extension(const CentralExtension& e);

/// Identities for h_ij(a,b) = [f_ij(a), g_ji(b)], lambda and mu inside an
/// extension of p_m built from alpha, with generators lifted with zero
/// central part.
CheckReport lambda_mu_suite(const PConstruction& pc, const AlphaCocycle& alpha, const CentralExtension& e);

}  // namespace superhom
