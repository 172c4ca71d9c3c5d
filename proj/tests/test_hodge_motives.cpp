/* Copyright 2026 periodcalc contributors.
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at http://www.apache.org/licenses/LICENSE-2.0
 */
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "periodcalc/errors.hpp"
#include "periodcalc/hodge_motives.hpp"
#include "periodcalc/random_instances.hpp"

using namespace periodcalc;

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

HodgeData from(std::vector<int> a) {
  return hodge_from_weight(GLnWeight{Q(), {{"s", std::move(a)}}}, CoefficientField{});
}

}  // namespace

TEST_CASE("hodge_from_weight examples") {
  auto M2 = from({1, -1});
  CHECK(M2.rank == 2);
  CHECK(M2.weight == 1);
  CHECK(M2.p("s", "1") == std::vector<int>{2, -1});

  auto M1 = from({0});
  CHECK(M1.weight == 0);
  CHECK(M1.p("s", "1") == std::vector<int>{0});

  auto M3 = from({2, 0, -2});
  CHECK(M3.p("s", "1") == std::vector<int>{4, 1, -2});
  CHECK(M3.p_at("s", "1", 1) + M3.p_at("s", "1", 3) == M3.weight);
  CHECK(M3.weight == 2);
  CHECK(M3.polarization == Polarization::Symmetric);
  CHECK(M2.polarization == Polarization::Alternating);
}

TEST_CASE("default n_plus and explicit overrides") {
  CHECK(from({1, 0, -1}).n_plus == 2);
  CHECK(from({1, 0, -1}).n_minus == 1);
  CHECK(from({1, -1}).n_plus == 1);
  HodgeFromWeightOptions o;
  o.n_plus = 0;
  o.epsilon = -1;
  auto M = hodge_from_weight(GLnWeight{Q(), {{"s", {1, -1}}}}, CoefficientField{}, o);
  CHECK(M.n_plus == 0);
  CHECK(M.n_minus == 2);
  CHECK(M.epsilon == -1);
}

TEST_CASE("non self-dual weights are rejected") {
  CHECK(code_of([] { from({2, -1}); }) == ErrorCode::NotSelfDual);
  CHECK(code_of([] { from({0, 1}); }) != ErrorCode::NotSelfDual);  // not decreasing: plain bad input
}

TEST_CASE("phi columns follow the permutation") {
  auto K = TotallyRealField::make("K", {"s1", "s2"});
  GLnWeight wt{K, {{"s1", {1, -1}}, {"s2", {3, -3}}}};
  HodgeFromWeightOptions o;
  o.permutations["2"] = {{"s1", "s2"}, {"s2", "s1"}};
  auto M = hodge_from_weight(wt, CoefficientField::make("E", {"1", "2"}), o);
  CHECK(M.p("s1", "2") == M.p("s2", "1"));
  CHECK(M.p("s2", "2") == M.p("s1", "1"));
  M.validate();
}

TEST_CASE("validate catches each invariant") {
  auto M = from({1, -1});
  auto bad = M;
  bad.hodge[{"s", "1"}] = {0, 2};
  CHECK(code_of([&] { bad.validate(); }) == ErrorCode::InvalidInput);
  bad = M;
  bad.hodge[{"s", "1"}] = {3, 0};  // impure
  CHECK(code_of([&] { bad.validate(); }) == ErrorCode::InvalidInput);
  bad = M;
  bad.n_plus = 2;
  CHECK(code_of([&] { bad.validate(); }) == ErrorCode::InvalidInput);
  bad = from({1, 0, -1});
  bad.weight = 3;
  bad.hodge[{"s", "1"}] = {3, 2, 0};  // p1+p3 = 3 but odd rank needs even weight
  CHECK(code_of([&] { bad.validate(); }) == ErrorCode::InvalidInput);
  bad = M;
  bad.polarization = Polarization::Symmetric;
  CHECK(code_of([&] { bad.validate(); }) == ErrorCode::InvalidInput);
}

TEST_CASE("tate_twist") {
  auto M = from({1, -1});
  auto T0 = tate_twist(M, 0);
  CHECK(T0.p("s", "1") == M.p("s", "1"));
  CHECK(T0.weight == M.weight);
  CHECK(T0.n_plus == M.n_plus);

  auto T1 = tate_twist(M, 1);
  CHECK(T1.p("s", "1") == std::vector<int>{1, -2});
  CHECK(T1.weight == -1);

  auto M3 = hodge_from_weight(GLnWeight{Q(), {{"s", {2, 0, -2}}}}, CoefficientField{},
                              HodgeFromWeightOptions{{}, 1, 1, false, "M"});
  auto odd = tate_twist(M3, 3);
  CHECK(odd.n_plus == M3.n_minus);
  CHECK(odd.n_minus == M3.n_plus);
  CHECK(odd.epsilon == M3.epsilon);
  odd.validate();

  auto back = tate_twist(tate_twist(M3, 5), -5);
  CHECK(back.p("s", "1") == M3.p("s", "1"));
  CHECK(back.weight == M3.weight);
  CHECK(back.n_plus == M3.n_plus);
}

TEST_CASE("random self-dual weights round trip") {
  random::Rng rng(11);
  for (int it = 0; it < 400; ++it) {
    auto K = random::totally_real(rng, 3);
    const int n = 1 + it % 8;
    auto wt = random::self_dual_weight(rng, K, n, 4);
    auto M = hodge_from_weight(wt, CoefficientField{});
    M.validate();
    CHECK(M.weight == n - 1);
    for (const auto& s : K->embeddings) {
      for (int i = 1; i <= n; ++i) {
        CHECK(M.p_at(s, "1", i) + M.p_at(s, "1", n + 1 - i) == n - 1);
        CHECK(M.p_at(s, "1", i) - n + i == wt.a.at(s)[static_cast<size_t>(i - 1)]);
      }
    }
    CHECK(weight_from_hodge(M).a == wt.a);
    auto T = tate_twist(M, 1 + it % 5);
    T.validate();
  }
}

TEST_CASE("restrict_scalars_degrees examples") {
  auto M = from({1, -1});
  CHECK(restrict_scalars_degrees(M, {DescentDatum{"Q", 1, 1, 1}}).pass());

  auto two = restrict_scalars_degrees(M, {DescentDatum{"K1", 2, 2, 1}, DescentDatum{"K2", 1, 1, -1}});
  CHECK(two.pass());
  CHECK(two.sum_q == 1);
  CHECK(two.sum_k == 1);

  auto bad = restrict_scalars_degrees(M, {DescentDatum{"K1", 3, 3, 1}});
  CHECK_FALSE(bad.q_identity);
  CHECK_FALSE(bad.pass());

  // degree_over_Q must equal degree_over_K [K:Q]
  auto inconsistent = restrict_scalars_degrees(M, {DescentDatum{"K1", 2, 1, 1}});
  CHECK_FALSE(inconsistent.data_consistent);
}

TEST_CASE("base change of a motive copies columns along the restriction") {
  auto K = TotallyRealField::make("Q", {"s"});
  auto M = from({1, -1});
  auto Kj = TotallyRealField::make("K1", {"u1", "u2"});
  auto Mj = base_change_motive(M, Kj, {{"u1", "s"}, {"u2", "s"}});
  CHECK(Mj.K->degree() == 2);
  CHECK(Mj.p("u1", "1") == M.p("s", "1"));
  CHECK(Mj.p("u2", "1") == M.p("s", "1"));
  CHECK(Mj.weight == M.weight);
}
