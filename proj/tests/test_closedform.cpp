#include "doctest.h"

#include "superhom/closedform.hpp"
#include "superhom/homology.hpp"
#include "superhom/lie.hpp"

using namespace superhom;

namespace {

const FieldSpec Q = FieldSpec::rationals();
const FieldSpec GF3 = FieldSpec::prime(3);

InvolutedAlgebra builtin(std::string_view name, BuiltinInvolution inv = BuiltinInvolution::identity,
                         FieldSpec f = Q, std::size_t n = 1) {
  return builtin_algebra(name, BuiltinParams{f, n, inv});
}

std::vector<InvolutedAlgebra> test_algebras() {
  return {builtin("base_field"),
          builtin("base_field", BuiltinInvolution::identity, GF3),
          builtin("grassmann", BuiltinInvolution::rho),
          builtin("group_algebra_z2"),
          double_with_exchange(builtin("base_field").algebra),
          double_with_exchange(builtin("grassmann", BuiltinInvolution::rho).algebra)};
}

}  // namespace

TEST_CASE("tensor coordinates") {
  SparseVector a = SparseVector::unit(0, Q.one()) + SparseVector::unit(1, Q.from_int(2));
  SparseVector b = SparseVector::unit(1, Q.from_int(3));
  SparseVector t = tensor(a, b, 2);
  REQUIRE(t.nnz() == 2);
  CHECK(t[0].index == 1);
  CHECK(t[0].value == Q.from_int(3));
  CHECK(t[1].index == 3);
  CHECK(t[1].value == Q.from_int(6));
}

TEST_CASE("angle module examples") {
  CHECK(angle_module(builtin("base_field")).dim() == 0);
  // With the identity involution a(x)b + a(x)b = 2 a(x)b is a relation.
  CHECK(angle_module(compose_with_rho(builtin("grassmann", BuiltinInvolution::rho))).dim() == 0);

  InvolutedAlgebra dbl = compose_with_rho(double_with_exchange(builtin("base_field").algebra));
  AngleModule mod = angle_module(dbl);
  SparseVector left = SparseVector::unit(0, Q.one()), right = SparseVector::unit(1, Q.one());
  CHECK(mod.angle(left, right).empty());
  CHECK(mod.angle(right, left).empty());
}

TEST_CASE("<1,a> = 0 and the relations project to zero") {
  for (const auto& r : test_algebras()) {
    InvolutedAlgebra j = compose_with_rho(r);
    AngleModule mod = angle_module(j);
    INFO(r.name);
    for (std::size_t a = 0; a < r.dim(); ++a) CHECK(mod.angle(r.algebra.unit(), r.algebra.basis_vector(a)).empty());
    for (const auto& v : angle_relations(j)) CHECK(mod.quotient.project(v).empty());
  }
}

TEST_CASE("mixed terms vanish in the double") {
  for (auto s : {builtin("grassmann", BuiltinInvolution::rho).algebra, builtin("dual_numbers").algebra}) {
    InvolutedAlgebra dbl = compose_with_rho(double_with_exchange(s));
    AngleModule mod = angle_module(dbl);
    const std::size_t d = s.dim();
    for (std::size_t a = 0; a < d; ++a)
      for (std::size_t b = 0; b < d; ++b) {
        CHECK(mod.angle(dbl.algebra.basis_vector(a), dbl.algebra.basis_vector(d + b)).empty());
        CHECK(mod.angle(dbl.algebra.basis_vector(d + a), dbl.algebra.basis_vector(b)).empty());
      }
  }
}

TEST_CASE("hd1_plus vanishes for super-commutative algebras with the identity") {
  CHECK(hd1_plus(builtin("base_field")).dim() == 0);
  CHECK(hd1_plus(builtin("group_algebra_z2")).dim() == 0);
  CHECK(hd1_plus(builtin("dual_numbers")).dim() == 0);
  CHECK(hd1_plus(compose_with_rho(builtin("grassmann", BuiltinInvolution::rho))).dim() == 0);
  CHECK(hd1_plus(builtin("base_field", BuiltinInvolution::identity, GF3)).dim() == 0);
}

TEST_CASE("hc1 examples") {
  CHECK(hc1(builtin("base_field").algebra).dim() == 0);
  CHECK(hc1(builtin("dual_numbers").algebra).dim() == 0);
  CHECK(hc1(builtin("grassmann", BuiltinInvolution::rho).algebra).dim() == 1);
  // Commutative even algebra: the kernel condition is vacuous.
  for (auto s : {builtin("group_algebra_z2").algebra, builtin("dual_numbers").algebra}) {
    CyclicHomology h = hc1(s);
    CHECK(h.dim() == h.module.dim());
  }
  CHECK(hc1(builtin("matrix_algebra", BuiltinInvolution::transpose, Q, 2).algebra).dim() == 0);
}

TEST_CASE("hc1 agrees with CE H2 of sl_{3|3}(S) only for the antisymmetric convention") {
  for (auto s : {builtin("base_field").algebra, builtin("grassmann", BuiltinInvolution::rho).algebra,
                 builtin("dual_numbers").algebra}) {
    INFO(s.dim());
    const std::size_t ce = h2(build_sl(s, 3).lie).dim;
    CHECK(hc1(s).dim() == ce);
    CHECK(hd1_plus(compose_with_rho(double_with_exchange(s))).dim() == ce);
  }
  // Lambda(xi): the symmetric sign drops the class <xi, xi>.
  auto g = builtin("grassmann", BuiltinInvolution::rho).algebra;
  CHECK(hc1(g, CyclicSign::minus).dim() == 0);
  // On a non-commutative algebra the symmetric sign is not even well defined.
  CHECK_THROWS_AS(hc1(builtin("matrix_algebra", BuiltinInvolution::transpose, Q, 2).algebra, CyclicSign::minus),
                  Error);
}

TEST_CASE("rminus_ideal examples") {
  CHECK(rminus_ideal(builtin("base_field")).dim() == 0);
  CHECK(rminus_quotient_dim(builtin("base_field")) == 1);
  CHECK(rminus_quotient_dim(double_with_exchange(builtin("base_field").algebra)) == 0);
  CHECK(rminus_quotient_dim(double_with_exchange(builtin("grassmann", BuiltinInvolution::rho).algebra)) == 0);
  CHECK(rminus_quotient_dim(builtin("grassmann", BuiltinInvolution::rho)) == 2);
  // Identity on Lambda(xi): bar(xi) - rho(xi) = 2 xi, so the ideal is <xi>.
  CHECK(rminus_quotient_dim(builtin("grassmann")) == 1);
}

TEST_CASE("rminus_ideal contains R_(-)") {
  auto algs = test_algebras();
  algs.push_back(builtin("grassmann"));
  algs.push_back(builtin("matrix_algebra", BuiltinInvolution::transpose, Q, 2));
  for (const auto& r : algs) {
    INFO(r.name);
    CHECK(rminus_ideal(r).contains(r_plus_minus(r).second));
  }
}

TEST_CASE("z3_module examples") {
  CHECK(z3_module(builtin("base_field")) == 0);
  CHECK(z3_module(builtin("base_field", BuiltinInvolution::identity, GF3)) == 1);
  CHECK(z3_module(builtin("group_algebra_z2", BuiltinInvolution::identity, GF3)) == 2);
  CHECK(z3_module(builtin("base_field", BuiltinInvolution::identity, FieldSpec::prime(5))) == 0);
}

TEST_CASE("h2_closed_form examples") {
  CHECK(h2_closed_form(builtin("base_field"), 5).closed_dim == 0);
  CHECK(h2_closed_form(builtin("base_field"), 4).closed_dim == 1);
  HomologyReport r = h2_closed_form(builtin("base_field", BuiltinInvolution::identity, GF3), 3);
  CHECK(r.closed_dim == 3);
  CHECK(r.z3 == 3);
  CHECK(r.hd1 == 0);
  CHECK_FALSE(r.ce_dim.has_value());
  CHECK_THROWS_AS(h2_closed_form(builtin("base_field"), 2), Error);
}

TEST_CASE("super-commutative R with rho: m = 4 closed form is dim R") {
  for (const auto& r : {builtin("base_field"), builtin("grassmann", BuiltinInvolution::rho)}) {
    CHECK(hd1_plus(compose_with_rho(r)).dim() == 0);
    CHECK(h2_closed_form(r, 4).closed_dim == r.dim());
  }
}

TEST_CASE("closed form equals CE H2 on every test algebra, m = 3..5") {
  auto algs = test_algebras();
  algs.push_back(builtin("grassmann"));
  algs.push_back(builtin("group_algebra_z2", BuiltinInvolution::identity, GF3));
  for (const auto& r : algs) {
    for (std::size_t m = 3; m <= 5; ++m) {
      HomologyReport rep = compare_h2(r, m);
      INFO(r.name, " over ", r.field().name(), " m=", m, " ce=", *rep.ce_dim, " closed=", rep.closed_dim);
      CHECK(rep.agrees());
    }
  }
}
