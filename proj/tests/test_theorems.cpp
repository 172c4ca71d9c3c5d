/* Copyright 2026 periodcalc contributors.
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at http://www.apache.org/licenses/LICENSE-2.0
 */
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "periodcalc/errors.hpp"
#include "periodcalc/random_instances.hpp"
#include "periodcalc/theorems.hpp"

using namespace periodcalc;
using A = AmbiguityField;

namespace {

ErrorCode code_of(const auto& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return ErrorCode::InvalidInput;
}

FieldPtr Q() { return TotallyRealField::make("Q", {"s"}); }

struct Example {
  HodgeData M;
  HeckeCharacter psi;
};

// n = 2 over Q, a = (0, 0), psi = (2, -1)
Example example() {
  auto K = Q();
  auto L = CMExtension::standard(K);
  auto M = hodge_from_weight(GLnWeight{K, {{"s", {0, 0}}}}, CoefficientField{});
  auto psi = HeckeCharacter::make(L, {{"ts", 2}, {"tbs", -1}}, std::nullopt, "psi");
  return {M, psi};
}

bool contains_note(const VerifyReport& r, const std::string& needle) {
  for (const auto& n : r.notes)
    if (n.find(needle) != std::string::npos) return true;
  return false;
}

}  // namespace

TEST_CASE("main theorem: frozen rank 2 example") {
  auto [M, psi] = example();
  auto rhs = main_theorem_rhs(M, psi, 4);
  CHECK(rhs.exponent(gen::two_pi_i()) == 5);
  CHECK(rhs.exponent(gen::cm_period("tilde", "psi", "Phi")) == 2);
  CHECK(rhs.exponents().size() == 2);
  CHECK(rhs.text() == "(2pi i)^5 * p(tilde(psi);Phi)^2  [~ E.Q(psi).K^Gal]");

  auto lhs = main_theorem_lhs(M, psi, 4);
  CHECK(lhs.same_exponents(rhs));

  auto raw = main_theorem_lhs_raw(M, psi, 4);
  CHECK(raw.exponent(gen::two_pi_i()) == 1 * ((4 - 1) * 2 - 1));
  int peterson = 0;
  for (const auto& [g, e] : raw.exponents())
    if (g.kind == GenKind::PetersonQhol) peterson += static_cast<int>(e);
  CHECK(peterson == 1);
  CHECK(raw.ambiguity().leq(A{A::E(), A::vf("Q(psi)"), A::lgal()}));

  auto rep = verify_main_theorem(M, psi, 4);
  CHECK(rep.pass);
  CHECK(rep.residual.is_identity());
  CHECK(rep.ambiguity.leq(rep.bound));
}

TEST_CASE("main theorem: range and hypothesis gates") {
  auto [M, psi] = example();
  CHECK(code_of([&] { main_theorem_lhs_raw(M, psi, 3); }) == ErrorCode::OutOfAutomorphicRange);
  CHECK(code_of([&] { main_theorem_lhs_raw(M, psi, 5); }) == ErrorCode::OutOfAutomorphicRange);
  CHECK_NOTHROW(main_theorem_lhs_raw(M, psi, 4));  // upper bound is inclusive

  auto r3 = verify_main_theorem(M, psi, 3);
  CHECK_FALSE(r3.pass);
  CHECK(contains_note(r3, "HypothesisFailed"));
  CHECK_FALSE(verify_main_theorem(M, psi, 9).pass);

  // non-automorphic weight
  auto bad = M;
  bad = tate_twist(M, 1);
  CHECK(code_of([&] { main_theorem_rhs(bad, psi, 4); }) == ErrorCode::HypothesisFailed);

  // the infinity-type differences must be large enough
  auto small = HeckeCharacter::make(psi.extension, {{"ts", 1}, {"tbs", 0}}, std::nullopt, "psi");
  CHECK(code_of([&] { main_theorem_rhs(M, small, 4); }) == ErrorCode::HypothesisFailed);
}

TEST_CASE("main theorem: odd rank needs the delta hypothesis") {
  auto K = Q();
  auto L = CMExtension::standard(K);
  auto off = hodge_from_weight(GLnWeight{K, {{"s", {1, 0, -1}}}}, CoefficientField{});
  HodgeFromWeightOptions o;
  o.delta_hypothesis = true;
  auto on = hodge_from_weight(GLnWeight{K, {{"s", {1, 0, -1}}}}, CoefficientField{}, o);
  auto psi = HeckeCharacter::make(L, {{"ts", 3}, {"tbs", -2}}, std::nullopt, "psi");
  PeriodContext ctx;
  auto S = main_setup(on, psi, ctx);
  std::vector<long long> ks;
  for (long long k : critical_integers_oracle(S.T).values())
    if (k > psi.weight + 3) ks.push_back(k);
  REQUIRE_FALSE(ks.empty());
  for (long long k : ks) {
    CHECK(verify_main_theorem(on, psi, k).pass);
    auto r = verify_main_theorem(off, psi, k);
    CHECK_FALSE(r.pass);
    CHECK(r.residual.exponent(gen::delta_total("M")) != 0);
    CHECK(code_of([&] { main_theorem_rhs(off, psi, k); }) == ErrorCode::HypothesisFailed);
  }
}

TEST_CASE("main theorem: random instances and mutations") {
  random::Rng rng(8);
  int checked = 0;
  for (int it = 0; it < 60; ++it) {
    random::MainOptions o;
    o.n = 2 + it % 5;
    o.delta_hypothesis = o.n % 2 == 1;
    o.max_degree = 2;
    o.n_plus = (it / 5) % 2 ? (o.n + 1) / 2 : o.n / 2;
    auto I = random::main_instance(rng, o);
    for (long long k : I.ks) {
      ++checked;
      auto r = verify_main_theorem(I.M, I.psi, k);
      REQUIRE(r.pass);
      auto closed = main_theorem_rhs(I.M, I.psi, k);
      CHECK(closed.same_exponents(r.rhs));
      for (const auto& [g, e] : r.rhs.exponents()) {
        for (int delta : {-1, 1}) {
          auto mutated = r.rhs;
          mutated.multiply(g, delta);
          CHECK_FALSE(compare_expressions(r.lhs, mutated, r.bound).pass);
        }
      }
    }
  }
  CHECK(checked >= 60);
}

TEST_CASE("compare_expressions enforces the ambiguity bound") {
  auto x = PeriodExpression::of(gen::two_pi_i(), 1, A{A::tilde_l()});
  auto y = PeriodExpression::of(gen::two_pi_i(), 1);
  auto r = compare_expressions(x, y, A{A::E(), A::lgal()});
  CHECK_FALSE(r.pass);
  CHECK(contains_note(r, "exceeds"));
  CHECK(compare_expressions(x, y, A{A::tilde_l()}).pass);
}

TEST_CASE("quadratic periods") {
  auto K = TotallyRealField::make("K", {"s1", "s2"});
  auto L = CMExtension::standard(K);
  auto phi = random::standard_type(L);
  auto M4 = hodge_from_weight(GLnWeight{K, {{"s1", {2, 1, -1, -2}}, {"s2", {3, 0, 0, -3}}}}, CoefficientField{});
  auto r1 = verify_qj(M4, phi, "1", 1);
  CHECK(r1.pass);
  auto x = qj_expr(M4, phi, "1", 1);
  CHECK_FALSE(x.is_identity());
  CHECK(code_of([&] { qj_expr(M4, phi, "1", 2); }) == ErrorCode::RangeError);

  auto M6 = hodge_from_weight(GLnWeight{K, {{"s1", {3, 2, 1, -1, -2, -3}}, {"s2", {4, 2, 0, 0, -2, -4}}}},
                              CoefficientField{});
  for (int j = 1; j <= 2; ++j) {
    CHECK(verify_qj(M6, phi, "1", j).pass);
    CHECK(verify_qj_telescoping(M6, phi, "1", j).pass);
  }
  auto M5 = hodge_from_weight(GLnWeight{K, {{"s1", {2, 1, 0, -1, -2}}, {"s2", {2, 2, 0, -2, -2}}}},
                              CoefficientField{});
  CHECK(verify_qj_telescoping(M5, phi, "1", 2).pass);
}

TEST_CASE("quadratic periods through L-values") {
  auto K = Q();
  auto L = CMExtension::standard(K);
  auto phi = validate_cm_type(L, {"ts"});
  auto M4 = hodge_from_weight(GLnWeight{K, {{"s", {2, 1, -1, -2}}}}, CoefficientField{});
  auto res = qj_lvalue(M4, phi, 1);
  CHECK(res.w0 == 4);
  CHECK(res.k0 == 4);
  REQUIRE(res.char_arguments.size() == 1);
  CHECK(res.char_arguments[0] == -res.w0 / 2);
  CHECK(res.check.pass);

  auto M6 = hodge_from_weight(GLnWeight{K, {{"s", {3, 2, 1, -1, -2, -3}}}}, CoefficientField{});
  CHECK(code_of([&] { qj_lvalue(M6, phi, 1); }) == ErrorCode::HypothesisFailed);
  auto M5 = hodge_from_weight(GLnWeight{K, {{"s", {2, 1, 0, -1, -2}}}}, CoefficientField{});
  CHECK(code_of([&] { qj_lvalue(M5, phi, 1); }) == ErrorCode::InvalidInput);
}

TEST_CASE("potentially automorphic descent") {
  auto [M, psi] = example();
  PotentialDetails det;
  auto triv = verify_potentially_automorphic(M, psi, 4, {DescentDatum{"Q", 1, 1, 1}}, &det);
  CHECK(triv.pass);
  CHECK(det.two_pi_i_sum == det.two_pi_i_target);
  CHECK(triv.lhs.same_exponents(verify_main_theorem(M, psi, 4).rhs));

  auto two = verify_potentially_automorphic(M, psi, 4, {DescentDatum{"K1", 2, 2, 1}, DescentDatum{"K2", 1, 1, -1}},
                                            &det);
  CHECK(two.pass);
  CHECK(det.two_pi_i_sum == 1 * 4 * 2);
  CHECK(det.two_pi_i_target == 1 * 4 * 2);
  CHECK(det.cm_compatibility_applied);

  auto mutated = verify_potentially_automorphic(M, psi, 4, {DescentDatum{"K1", 2, 2, 2}, DescentDatum{"K2", 1, 1, -1}},
                                                &det);
  CHECK_FALSE(mutated.pass);
  CHECK_FALSE(det.degrees.pass());
  CHECK(det.two_pi_i_sum != det.two_pi_i_target);
  CHECK_FALSE(mutated.residual.is_identity());
}
