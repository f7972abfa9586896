#include "doctest.h"

#include "superhom/lie.hpp"

using namespace superhom;

namespace {

const FieldSpec Q = FieldSpec::rationals();

InvolutedAlgebra builtin(std::string_view name, BuiltinInvolution inv = BuiltinInvolution::identity,
                         FieldSpec f = Q) {
  return builtin_algebra(name, BuiltinParams{f, 1, inv});
}

std::vector<InvolutedAlgebra> test_algebras() {
  return {builtin("base_field"),
          builtin("base_field", BuiltinInvolution::identity, FieldSpec::prime(3)),
          builtin("grassmann", BuiltinInvolution::rho),
          builtin("group_algebra_z2"),
          double_with_exchange(builtin("base_field").algebra),
          double_with_exchange(builtin("grassmann", BuiltinInvolution::rho).algebra)};
}

// Dimension of p~ read off the element parametrization: m copies of R on the
// diagonal, t_ij for i != j, R_(+) and R_(-) on the two symmetric diagonals,
// and f_ij, g_ij for i < j.
std::size_t ptilde_dim_oracle(const InvolutedAlgebra& r, std::size_t m) {
  auto [plus, minus] = r_plus_minus(r);
  const std::size_t d = r.dim();
  return m * d + m * (m - 1) * d + m * (plus.dim() + minus.dim()) + m * (m - 1) * d;
}

}  // namespace

TEST_CASE("commutator_lie examples") {
  auto z = commutator_lie(builtin("group_algebra_z2").algebra);
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) CHECK(z.bracket(i, j).empty());

  auto k = builtin("base_field");
  MatrixSuperAlgebra m1(k, 1);
  LieSuperAlgebra gl11 = commutator_lie(m1.to_superalgebra());
  SparseVector one = k.algebra.unit();
  SparseVector lhs = gl11.bracket(m1.e(0, 1, one), m1.e(1, 0, one));
  CHECK(lhs == m1.e(0, 0, one) + m1.e(1, 1, one));

  MatrixSuperAlgebra m2(k, 2);
  CHECK(verify_lie(commutator_lie(m2.to_superalgebra())).passed());
}

TEST_CASE("verify_lie catches a broken table") {
  std::vector<std::vector<SparseVector>> t(2, std::vector<SparseVector>(2));
  t[0][1] = SparseVector::unit(1, Q.one());
  t[1][0] = SparseVector::unit(1, Q.one());  // should be -x1
  LieSuperAlgebra bad(Q, {{"x0", 0}, {"x1", 0}}, t);
  CHECK_FALSE(verify_lie(bad).passed());
  t[1][0] = SparseVector::unit(1, Q.from_int(-1));
  CHECK(verify_lie(LieSuperAlgebra(Q, {{"x0", 0}, {"x1", 0}}, t)).passed());
}

TEST_CASE("p~ and p dimensions over Q") {
  auto k = builtin("base_field");
  PConstruction p3 = build_p(k, 3);
  CHECK(p3.ptilde.lie.dim() == 18);
  CHECK(p3.ptilde.lie.even_dim() == 9);
  CHECK(p3.ptilde.lie.odd_dim() == 9);
  CHECK(p3.p.lie.dim() == 17);
  CHECK(p3.p.lie.even_dim() == 8);
  CHECK(p3.p.lie.odd_dim() == 9);

  PConstruction p4 = build_p(k, 4);
  CHECK(p4.ptilde.lie.dim() == 32);
  CHECK(p4.p.lie.dim() == 31);

  PConstruction g3 = build_p(builtin("grassmann", BuiltinInvolution::rho), 3);
  CHECK(g3.ptilde.lie.dim() == 36);
}

TEST_CASE("every element of p~ is prp-skew") {
  for (const auto& r : test_algebras()) {
    MatrixSuperAlgebra mat(r, 3);
    Subalgebra pt = build_ptilde(mat);
    for (const auto& v : pt.inclusion.basis()) CHECK(mat.prp(v) == -v);
  }
}

TEST_CASE("exact sequence, perfectness and Lie axioms on every test algebra") {
  for (const auto& r : test_algebras()) {
    for (std::size_t m = 3; m <= 5; ++m) {
      INFO(r.name, " m=", m);
      PConstruction pc = build_p(r, m);
      CHECK(pc.ptilde.lie.dim() == ptilde_dim_oracle(r, m));
      CHECK(pc.ptilde.lie.dim() - pc.p.lie.dim() == trace_quotient_dim(r));
      CHECK(is_perfect(pc.p.lie));
      if (m <= 4) {
        CHECK(verify_lie(pc.ptilde.lie).passed());
        CHECK(verify_lie(pc.p.lie).passed());
      }
    }
  }
}

TEST_CASE("trace quotient dims") {
  CHECK(trace_quotient_dim(builtin("base_field")) == 1);
  CHECK(trace_quotient_dim(builtin("group_algebra_z2")) == 2);
  CHECK(trace_quotient_dim(double_with_exchange(builtin("base_field").algebra)) == 1);
  // Lambda(xi): [xi, xi] = 2 xi^2 = 0, R_(-) = 0, so nothing is killed.
  CHECK(trace_quotient_dim(builtin("grassmann", BuiltinInvolution::rho)) == 2);
}

TEST_CASE("generators of p_3(Q)") {
  auto k = builtin("base_field");
  PConstruction pc = build_p(k, 3);
  const auto& mat = pc.matrix;
  Generators mg = matrix_generators(mat);
  SparseVector one = k.algebra.unit();
  // 1-based: t12(1) = e12(1) - e54(1), f12(1) = e15(1) + e24(1).
  CHECK(mg.t(0, 1, one) == mat.e(0, 1, one) - mat.e(4, 3, one));
  CHECK(mg.f(0, 1, one) == mat.e(0, 4, one) + mat.e(1, 3, one));
  CHECK(mg.g(0, 1, one) == mat.e(3, 1, one) - mat.e(4, 0, one));

  Generators gens = p_generators(pc);
  const auto& p = pc.p.lie;
  CHECK(p.bracket(gens.t(0, 1, one), gens.t(1, 2, one)) == gens.t(0, 2, one));
  CHECK(p.bracket(gens.f(0, 1, one), gens.f(1, 2, one)).empty());
  CHECK(p.bracket(gens.f(0, 1, one), gens.g(1, 2, one)) == gens.t(0, 2, one));
  CHECK(generated_subalgebra(p, gens).dim() == p.dim());
}

TEST_CASE("STP relations hold in p_m for every test algebra") {
  for (const auto& r : test_algebras()) {
    for (std::size_t m = 3; m <= 5; ++m) {
      PConstruction pc = build_p(r, m);
      Generators gens = p_generators(pc);
      CheckReport rep = stp_relation_check(pc.p.lie, gens, r);
      INFO(r.name, " m=", m, " ", rep.first_failure());
      CHECK(rep.passed());
      CHECK(rep.checks.size() == 13);
    }
  }
}

TEST_CASE("STP check detects a wrong generator image") {
  auto k = builtin("base_field");
  PConstruction pc = build_p(k, 3);
  Generators gens = p_generators(pc);
  std::swap(gens.f_basis[gens.slot(0, 1, 0)], gens.g_basis[gens.slot(0, 1, 0)]);
  CHECK_FALSE(stp_relation_check(pc.p.lie, gens, k).passed());
}

TEST_CASE("sl dimensions") {
  auto q = builtin("base_field").algebra;
  Subalgebra sl3 = build_sl(q, 3);
  CHECK(sl3.lie.dim() == 35);
  CHECK(verify_lie(sl3.lie).passed());
  CHECK(build_sl(q, 1).lie.dim() == 3);
  CHECK(is_perfect(sl3.lie));
}

TEST_CASE("explicit gl -> p~ isomorphism for doubles") {
  auto q = builtin("base_field").algebra;
  CheckReport r = iso_p_double_sl(q, 3);
  INFO(r.first_failure());
  CHECK(r.passed());
  CHECK(build_p(double_with_exchange(q), 3).ptilde.lie.dim() == 36);
  for (std::size_t m = 1; m <= 2; ++m) CHECK(iso_p_double_sl(q, m).passed());
  CheckReport g = iso_p_double_sl(builtin("grassmann", BuiltinInvolution::rho).algebra, 2);
  INFO(g.first_failure());
  CHECK(g.passed());
  CHECK(iso_p_double_sl(builtin("dual_numbers").algebra, 2).passed());
}

TEST_CASE("weights are recorded on matrix subalgebras") {
  PConstruction pc = build_p(builtin("base_field"), 3);
  REQUIRE(pc.p.lie.weights().size() == pc.p.lie.dim());
  const auto& w = pc.p.lie.weights();
  for (std::size_t i = 0; i < pc.p.lie.dim(); ++i)
    for (std::size_t j = 0; j < pc.p.lie.dim(); ++j)
      for (const auto& e : pc.p.lie.bracket(i, j)) {
        std::vector<int> sum(3);
        for (int k = 0; k < 3; ++k) sum[k] = w[i][k] + w[j][k];
        CHECK(w[e.index] == sum);
      }
}
