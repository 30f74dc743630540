#include "qha/builders.hpp"
#include "qha/cyclic.hpp"
#include "classical.hpp"
#include "support.hpp"

#include <doctest.h>

using namespace qha;
using namespace qha::testing;

namespace {

template <class S>
Matrix<S> evaluation_at_unit(const HModule<S>& M) {
  const auto& H = M.algebra();
  const Index dm = M.dim(), n = H.dim();
  Matrix<S> mu = Matrix<S>::Constant(dm, dm * n, H.scalar(0));
  const Vector<S> one = H.unit();
  for (Index a = 0; a < dm; ++a)
    for (Index x = 0; x < n; ++x) mu(a, a * n + x) = one(x);
  return mu;
}

template <class S>
HopfContramodule<S> trivial_coefficient(const AlgebraPtr<S>& H) {
  auto k = trivial_module(H);
  return HopfContramodule<S>(k, evaluation_at_unit(k), H->is_hopf() ? Flavor::HopfMu : Flavor::QuasiTypeI);
}

template <class S>
void require_identities(const CocyclicModule<S>& C) {
  CHECK(C.identities.passed());
  for (const auto& id : {"cosimplicial_dd", "cosimplicial_ss", "cosimplicial_sd", "cyclic_td", "cyclic_ts",
                         "cyclic_power"})
    CHECK(C.identities.passed(id));
  CHECK(verify_cocyclic(C).passed());
  for (Index n = 0; n <= C.n_max; ++n) {
    Matrix<S> p = identity<S>(C.dim(n), C.field);
    for (Index i = 0; i <= n; ++i) p = p * C.t(n);
    CHECK(equal<S>(p, identity<S>(C.dim(n), C.field)));
  }
}

template <class S>
void check_unit_example(const FieldSpec& f) {
  auto H = group_algebra<S>(cyclic_group_table(2), f, "kC2");
  const auto C = build_cocyclic(unit_algebra(trivial_module(H)), trivial_coefficient(H), 5);
  require_identities(C);
  for (Index n = 0; n <= 5; ++n) {
    CHECK(C.dim(n) == 1);
    CHECK(equal<S>(C.t(n), identity<S>(1, f)));
  }
  CHECK(hochschild_cohomology(C, 3).dims == std::vector<Index>{1, 0, 0, 0});
  CHECK(cyclic_cohomology(C, 4).dims == std::vector<Index>{1, 0, 1, 0, 1});
}

}  // namespace

TEST_CASE("algebra objects") {
  auto H = group_algebra<Rational>(cyclic_group_table(2), Q, "kC2");
  CHECK(check_algebra_object(unit_algebra(trivial_module(H))).passed());
  auto fun = function_algebra(H, cyclic_group_table(2));
  CHECK(check_algebra_object(fun).passed());
  auto s3 = group_algebra<Rational>(symmetric_group_s3_table(), Q, "kS3");
  CHECK(check_algebra_object(function_algebra(s3, symmetric_group_s3_table())).passed());

  auto bad = fun;
  bad.mult(1, 0) = Rational(1);
  CHECK_FALSE(check_algebra_object(bad).passed("associativity"));
  auto nonunital = fun;
  nonunital.mult(0, 0) = Rational(2);
  CHECK(check_algebra_object(nonunital).passed("associativity"));
  CHECK_FALSE(check_algebra_object(nonunital).passed("left_unit"));
  auto twisted = fun;
  twisted.carrier = regular_module(H);
  twisted.mult = Matrix<Rational>::Zero(2, 4);
  twisted.mult(0, 0) = twisted.mult(0, 3) = Rational(1);
  CHECK_FALSE(check_algebra_object(twisted).passed());

  for (auto Hq : {twisted_dual_z2<Rational>(Q), twisted_h4<Rational>(Q)}) {
    auto [mult, unit] = truncated_polynomials<Rational>(2, Q);
    CHECK(check_algebra_object(trivial_action_algebra(Hq, mult, unit)).passed());
    CHECK(check_algebra_object(unit_algebra(trivial_module(Hq))).passed());
  }
  auto A = enveloping_algebroid<Zp>(truncated_polynomial_ring<Zp>(F5, 2));
  CHECK(check_algebra_object(unit_algebra(base_module(A))).passed());
}

TEST_CASE("bracketed tensor powers") {
  auto H = twisted_dual_z2<Rational>(Q);
  auto A = regular_module(H);
  CHECK(tensor_power_bracketed(A, 1).module.dim() == 2);
  CHECK_THROWS(tensor_power_bracketed(A, 0));
  const auto p3 = tensor_power_bracketed(A, 3);
  CHECK(p3.module.dim() == 8);
  const Matrix<Rational>& r = p3.to_split;
  bool diagonal_signs = true, trivial = true;
  for (Index i = 0; i < 8; ++i)
    for (Index j = 0; j < 8; ++j) {
      if (i != j && r(i, j) != 0) diagonal_signs = false;
      if (i == j && r(i, i) != 1 && r(i, i) != -1) diagonal_signs = false;
      if (i == j && r(i, i) != 1) trivial = false;
    }
  CHECK(diagonal_signs);
  CHECK_FALSE(trivial);
  CHECK(equal<Rational>(Matrix<Rational>(p3.to_split * p3.from_split), identity<Rational>(8, Q)));
  auto kc2 = group_algebra<Rational>(cyclic_group_table(2), Q, "kC2");
  const auto q3 = tensor_power_bracketed(regular_module(kc2), 3);
  CHECK(equal<Rational>(q3.to_split, identity<Rational>(8, Q)));
}

TEST_CASE("cyclic cohomology of the unit over kC2") {
  check_unit_example<Rational>(Q);
  check_unit_example<Zp>(F5);
}

TEST_CASE("textbook cyclic cohomology of the dual numbers") {
  auto H = group_algebra<Rational>(cyclic_group_table(1), Q, "k");
  auto [mult, unit] = truncated_polynomials<Rational>(2, Q);
  const auto A = trivial_action_algebra(H, mult, unit);
  const auto C = build_cocyclic(A, trivial_coefficient(H), 4);
  require_identities(C);
  const ClassicalCyclic oracle{mult, 2};
  const auto hh = hochschild_cohomology(C, 3).dims;
  const auto hc = cyclic_cohomology(C, 3).dims;
  CHECK(hh == oracle.hochschild(3));
  CHECK(hc == oracle.cyclic(3));
  // spot values: traces on k[x]/(x^2) are all functionals
  CHECK(hh[0] == 2);
  CHECK(hc[0] == 2);
}

TEST_CASE("textbook comparison for upper triangular matrices") {
  auto H = group_algebra<Rational>(cyclic_group_table(1), Q, "k");
  auto [mult, unit] = upper_triangular<Rational>(Q);
  const auto C = build_cocyclic(trivial_action_algebra(H, mult, unit), trivial_coefficient(H), 3);
  require_identities(C);
  const ClassicalCyclic oracle{mult, 3};
  CHECK(hochschild_cohomology(C, 2).dims == oracle.hochschild(2));
  CHECK(cyclic_cohomology(C, 2).dims == oracle.cyclic(2));
}

TEST_CASE("cocyclic identities on every example") {
  auto kc2 = group_algebra<Zp>(cyclic_group_table(2), F5, "kC2");
  require_identities(build_cocyclic(function_algebra(kc2, cyclic_group_table(2)), trivial_coefficient(kc2), 4));
  {
    auto reg = regular_module(kc2);
    HopfContramodule<Zp> C(reg, evaluation_at_unit(reg), Flavor::HopfMu);
    require_identities(build_cocyclic(function_algebra(kc2, cyclic_group_table(2)), C, 4));
  }
  for (auto Hq : {twisted_dual_z2<Zp>(F5), twisted_h4<Zp>(F5)}) {
    auto k = trivial_module(Hq);
    auto coef = stable_ayd_candidate(k, Flavor::QuasiTypeI);
    REQUIRE(coef.has_value());
    require_identities(build_cocyclic(unit_algebra(k), *coef, 4));
    auto [mult, unit] = truncated_polynomials<Zp>(2, F5);
    require_identities(build_cocyclic(trivial_action_algebra(Hq, mult, unit), *coef, 4));
  }
  {
    auto regq = trivial_module(twisted_dual_z2<Zp>(F5));
    const auto C = build_cocyclic(unit_algebra(regq), trivial_coefficient(twisted_dual_z2<Zp>(F5)), 4);
    require_identities(C);
    CHECK(cyclic_cohomology(C, 3).dims == std::vector<Index>{1, 0, 1, 0});
  }
  auto h4 = sweedler_h4<Zp>(F5);
  auto coef = stable_ayd_candidate(regular_module(h4), Flavor::HopfMu);
  REQUIRE(coef.has_value());
  const auto C = build_cocyclic(unit_algebra(regular_module(h4)), *coef, 4);
  require_identities(C);
  CHECK(hochschild_cohomology(C, 3).dims.size() == 4);
}

TEST_CASE("cyclic cohomology over the enveloping algebroid") {
  auto A = enveloping_algebroid<Zp>(truncated_polynomial_ring<Zp>(F5, 2));
  auto R = base_module(A);
  auto coef = stable_ayd_candidate(R, Flavor::AlgebroidMu);
  REQUIRE(coef.has_value());
  const auto C = build_cocyclic(unit_algebra(R), *coef, 4);
  require_identities(C);
  const auto hc = cyclic_cohomology(C, 3).dims;
  const auto hh = hochschild_cohomology(C, 3).dims;
  CHECK(hh.size() == 4);
  CHECK(hc.size() == 4);
}

TEST_CASE("the complexes square to zero and respect the bicomplex relations") {
  auto kc2 = group_algebra<Rational>(cyclic_group_table(2), Q, "kC2");
  const auto C = build_cocyclic(function_algebra(kc2, cyclic_group_table(2)), trivial_coefficient(kc2), 4);
  const FieldSpec& f = C.field;
  for (Index n = 0; n + 1 < 4; ++n) {
    CHECK(is_zero_matrix<Rational>(Matrix<Rational>(hochschild_coboundary(C, n + 1) * hochschild_coboundary(C, n))));
    CHECK(is_zero_matrix<Rational>(Matrix<Rational>(bar_coboundary(C, n + 1) * bar_coboundary(C, n))));
    CHECK(is_zero_matrix<Rational>(
        Matrix<Rational>(cyclic_total_differential(C, n + 1) * cyclic_total_differential(C, n))));
  }
  for (Index n = 0; n <= 4; ++n) {
    const Matrix<Rational> lambda = Rational(n % 2 ? -1 : 1) * C.t(n);
    Matrix<Rational> N = Matrix<Rational>::Zero(C.dim(n), C.dim(n)), pw = identity<Rational>(C.dim(n), f);
    for (Index i = 0; i <= n; ++i) {
      N += pw;
      pw = pw * lambda;
    }
    const Matrix<Rational> one_minus = identity<Rational>(C.dim(n), f) - lambda;
    CHECK(is_zero_matrix<Rational>(Matrix<Rational>(N * one_minus)));
    CHECK(is_zero_matrix<Rational>(Matrix<Rational>(one_minus * N)));
  }
}

TEST_CASE("dimensions are invariant under a change of basis") {
  std::mt19937 rng(7);
  auto H = group_algebra<Rational>(cyclic_group_table(2), Q, "kC2");
  auto A = function_algebra(H, cyclic_group_table(2));
  auto M = regular_module(H);
  HopfContramodule<Rational> coef(M, evaluation_at_unit(M), Flavor::HopfMu);
  const auto base = build_cocyclic(A, coef, 4);
  const auto hh = hochschild_cohomology(base, 3).dims, hc = cyclic_cohomology(base, 3).dims;
  for (int trial = 0; trial < 2; ++trial) {
    const Matrix<Rational> p = random_invertible<Rational>(2, Q, rng);
    const Matrix<Rational> pinv = inverse<Rational>(p).value();
    ModuleAlgebra<HModule<Rational>> A2{conjugate(A.carrier, p), Matrix<Rational>(p * A.mult * kron<Rational>(pinv, pinv)),
                                        Matrix<Rational>(p * A.unit)};
    REQUIRE(check_algebra_object(A2).passed());
    const Matrix<Rational> q = random_invertible<Rational>(2, Q, rng);
    const Matrix<Rational> qinv = inverse<Rational>(q).value();
    const Matrix<Rational> mu = q * coef.mu() * kron<Rational>(qinv, identity<Rational>(2, Q));
    HopfContramodule<Rational> coef2(conjugate(M, q), mu, Flavor::HopfMu);
    const auto C = build_cocyclic(A2, coef2, 4);
    require_identities(C);
    CHECK(hochschild_cohomology(C, 3).dims == hh);
    CHECK(cyclic_cohomology(C, 3).dims == hc);
  }
}

TEST_CASE("preconditions are enforced") {
  auto H = group_algebra<Rational>(cyclic_group_table(2), Q, "kC2");
  auto k = trivial_module(H);
  auto A = unit_algebra(k);
  HopfContramodule<Rational> scaled(k, Rational(2) * evaluation_at_unit(k), Flavor::HopfMu);
  CHECK_THROWS_AS(build_cocyclic(A, scaled, 3), UnstableCoefficient);
  CHECK_THROWS_AS(build_cocyclic(A, trivial_coefficient(H), 0), TruncationError);
  const auto C = build_cocyclic(A, trivial_coefficient(H), 3);
  CHECK_THROWS_AS(hochschild_cohomology(C, 3), TruncationError);
  CHECK_THROWS_AS(cyclic_cohomology(C, 3), TruncationError);
  auto h4 = sweedler_h4<Rational>(Q);
  auto reg = regular_module(h4);
  HopfContramodule<Rational> not_ayd(reg, evaluation_at_unit(reg), Flavor::HopfMu);
  CHECK_THROWS_AS(build_cocyclic(unit_algebra(reg), not_ayd, 2), AydViolated);
  CHECK_THROWS_AS(build_cocyclic(function_algebra(H, cyclic_group_table(2)), trivial_coefficient(H), 12),
                  DimensionError);
}
