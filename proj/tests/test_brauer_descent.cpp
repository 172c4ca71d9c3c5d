/* Copyright 2026 periodcalc contributors.
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at http://www.apache.org/licenses/LICENSE-2.0
 */
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "periodcalc/errors.hpp"

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

// Index of the first subgroup of the given order that is cyclic/non-cyclic as asked.
Subgroup find_subgroup(const FiniteGroup& G, int order, bool want_cyclic) {
  for (const auto& H : all_subgroups(G)) {
    if (H.order != order) continue;
    bool cyclic = false;
    for (int h : H.list()) cyclic = cyclic || G.element_order(h) == order;
    if (cyclic == want_cyclic) return H;
  }
  FAIL("no such subgroup");
  return trivial_subgroup(G);
}

}  // namespace

TEST_CASE("group construction") {
  auto s3 = groups::symmetric(3);
  CHECK(s3->order() == 6);
  CHECK(s3->mul(0, 4) == 4);
  for (int g = 0; g < 6; ++g) CHECK(s3->mul(g, s3->inv(g)) == 0);

  auto a5 = FiniteGroup::from_permutations("A5", {{1, 2, 0, 3, 4}, {1, 2, 3, 4, 0}});
  CHECK(a5->order() == 60);

  // Z/3 by table with the identity listed second
  auto t = FiniteGroup::from_table("C3", {{1, 2, 0}, {2, 0, 1}, {0, 1, 2}});
  CHECK(t->order() == 3);
  CHECK(t->element_order(1) == 3);

  CHECK(code_of([] { FiniteGroup::from_table("bad", {{0, 1}, {1, 1}}); }) == ErrorCode::InvalidInput);
  // a Latin square that is not associative
  CHECK(code_of([] {
          FiniteGroup::from_table("loop", {{0, 1, 2, 3, 4},
                                           {1, 0, 3, 4, 2},
                                           {2, 4, 0, 1, 3},
                                           {3, 2, 4, 0, 1},
                                           {4, 3, 1, 2, 0}});
        }) == ErrorCode::InvalidInput);

  CHECK(groups::by_name("D4")->order() == 8);
  CHECK(groups::by_name("C2xS3")->order() == 12);
  CHECK(groups::by_name("Q8")->order() == 8);
  CHECK_THROWS_AS(groups::by_name("Z9"), Error);
}

TEST_CASE("conjugacy classes and solvability") {
  CHECK(conjugacy_classes(*groups::symmetric(3)).size() == 3);
  CHECK(is_solvable(*groups::symmetric(3)));
  CHECK(conjugacy_classes(*groups::alternating(5)).size() == 5);
  CHECK_FALSE(is_solvable(*groups::alternating(5)));
  CHECK(is_solvable(*groups::cyclic(1)));
  CHECK(conjugacy_classes(*groups::symmetric(4)).size() == 5);
  CHECK(conjugacy_classes(*groups::quaternion()).size() == 5);
  CHECK(is_solvable(*groups::symmetric(4)));
}

TEST_CASE("subgroups") {
  auto s4 = groups::symmetric(4);
  CHECK(all_subgroups(*s4).size() == 30);
  CHECK(subgroup_class_representatives(*s4).size() == 11);
  auto a5 = groups::alternating(5);
  CHECK(all_subgroups(*a5).size() == 59);
  CHECK(subgroup_class_representatives(*a5).size() == 9);
  auto s3 = groups::symmetric(3);
  CHECK(code_of([&] {
          std::vector<int> not_closed;
          for (int g = 1; g < 6; ++g)
            if (s3->element_order(g) == 2) not_closed.push_back(g);
          not_closed.push_back(0);
          make_subgroup(*s3, not_closed);
        }) == ErrorCode::NotASubgroup);
}

TEST_CASE("induced trivial characters") {
  auto s3 = groups::symmetric(3);
  auto G = whole_group(*s3);
  CHECK(induce_trivial(s3, G) == ClassFunction::trivial(s3));
  auto reg = induce_trivial(s3, trivial_subgroup(*s3));
  for (int g = 0; g < 6; ++g) CHECK(reg.at(g) == Rational(g == 0 ? 6 : 0));

  auto c3 = find_subgroup(*s3, 3, true);
  auto ind = induce_trivial(s3, c3);
  for (int g = 0; g < 6; ++g) {
    const int o = s3->element_order(g);
    const int want = o == 1 ? 2 : (o == 2 ? 0 : 2);
    CHECK(ind.at(g) == Rational(want));
  }

  // against the coset-count oracle on every subgroup of S4 and A5
  for (auto G2 : {groups::symmetric(4), groups::alternating(5)}) {
    for (const auto& H : all_subgroups(*G2)) {
      auto f = induce_trivial(G2, H);
      for (int g = 0; g < G2->order(); ++g) CHECK(f.at(g) == Rational(oracle::induced_at(*G2, H, g)));
    }
  }
}

TEST_CASE("Frobenius reciprocity for every subgroup of every fixture") {
  for (const auto& G : groups::fixtures()) {
    const auto one = ClassFunction::trivial(G);
    for (const auto& H : all_subgroups(*G)) {
      CHECK(inner_product(induce_trivial(G, H), one) == Rational(1));
    }
  }
}

TEST_CASE("Brauer decompositions") {
  for (const auto& G : groups::fixtures()) {
    auto dec = brauer_decompose(G);
    CHECK(dec.verify());
    if (is_solvable(*G)) {
      REQUIRE(dec.terms.size() == 1);
      CHECK(dec.terms[0].H.order == G->order());
      CHECK(dec.terms[0].n == 1);
      CHECK(dec.fast_path);
    }
  }
  auto a5 = groups::alternating(5);
  auto dec = brauer_decompose(a5);
  CHECK_FALSE(dec.fast_path);
  CHECK(dec.sum() == ClassFunction::trivial(a5));
  std::map<int, long long> by_order;
  long long at_identity = 0;
  for (const auto& t : dec.terms) {
    CHECK(is_solvable(*a5, t.H));
    by_order[t.H.order] += t.n;
    at_identity += t.n * (60 / t.H.order);
  }
  CHECK(at_identity == 1);
  // frozen: -Ind_V4 + Ind_S3 + Ind_D5
  CHECK(by_order == std::map<int, long long>{{4, -1}, {6, 1}, {10, 1}});
  CHECK(dec.l1_norm == 3);
}

TEST_CASE("cyclotomic arithmetic") {
  auto z = Cyclotomic::root_power(4, 1);
  auto s = z;
  s += Cyclotomic::root_power(4, 3);
  CHECK(s == Cyclotomic(4));  // i + (-i) = 0
  auto w = Cyclotomic::root_power(3, 1);
  w += Cyclotomic::root_power(3, 2);
  w += Cyclotomic::root_power(3, 0);
  CHECK(w == Cyclotomic(3));
  auto two = Cyclotomic::root_power(6, 0);
  two += Cyclotomic::root_power(6, 6);
  CHECK(two.divided_by(2) == Cyclotomic::root_power(6, 0));
  CHECK_THROWS_AS(Cyclotomic::root_power(6, 1).divided_by(2), Error);
}

TEST_CASE("linear characters") {
  auto c4 = groups::cyclic(4);
  auto lams = linear_characters(*c4, whole_group(*c4), 4);
  CHECK(lams.size() == 4);
  auto s3 = groups::symmetric(3);
  CHECK(linear_characters(*s3, whole_group(*s3), 4).size() == 2);
}

TEST_CASE("induction-restriction identity") {
  auto v4 = groups::klein_four();
  std::vector<Subgroup> twos;
  for (const auto& H : all_subgroups(*v4))
    if (H.order == 2) twos.push_back(H);
  REQUIRE(twos.size() == 3);
  const auto& N = twos[0];
  const auto& H = twos[1];
  LinearCharacter triv{1, std::vector<int>(4, 0)};
  auto rep = induction_restriction(*v4, N, H, triv);
  CHECK(rep.g_equals_hn);
  CHECK(rep.holds);
  // regular character of H: 2 at e, 0 at the other element
  for (size_t i = 0; i < rep.lhs.size(); ++i) {
    auto want = Cyclotomic(1);
    if (H.list()[i] == 0) {
      want = Cyclotomic::root_power(1, 0);
      want += Cyclotomic::root_power(1, 0);
    }
    CHECK(rep.lhs[i] == want);
  }
  CHECK(verify_induction_restriction(*v4, N, whole_group(*v4), triv));
  CHECK(code_of([&] { verify_induction_restriction(*v4, N, N, triv); }) == ErrorCode::HypothesisFailed);
  CHECK(code_of([&] { verify_induction_restriction(*v4, trivial_subgroup(*v4), H, triv); }) ==
        ErrorCode::InvalidInput);
}

TEST_CASE("sweep agrees with the numeric oracle") {
  for (auto G : {groups::dihedral(4), groups::symmetric(4), groups::quaternion(), groups::by_name("C2xA4")}) {
    auto subs = all_subgroups(*G);
    for (const auto& N : subs) {
      if (N.order * 2 != G->order()) continue;
      for (const auto& lam : linear_characters(*G, N, 4)) {
        for (const auto& H : subs) {
          auto rep = induction_restriction(*G, N, H, lam);
          CHECK(rep.holds == oracle::induction_restriction_numeric(*G, N, H, lam));
          if (rep.g_equals_hn) CHECK(rep.holds);
        }
      }
    }
    auto st = induction_restriction_sweep(*G, 4);
    CHECK(st.failures == 0);
    CHECK(st.tuples > 0);
  }
}

TEST_CASE("descent data from decompositions") {
  auto s3 = groups::symmetric(3);
  auto d1 = descent_data_from_decomposition(brauer_decompose(s3), 1);
  REQUIRE(d1.size() == 1);
  CHECK(d1[0].subfield_label == "K");
  CHECK(d1[0].multiplicity == 1);
  CHECK(d1[0].degree_over_K == 1);

  auto a5 = groups::alternating(5);
  for (int base : {1, 2, 3}) {
    auto d = descent_data_from_decomposition(brauer_decompose(a5), base);
    long long sum_k = 0, sum_q = 0;
    for (const auto& x : d) {
      CHECK(x.degree_over_Q == x.degree_over_K * base);
      sum_k += static_cast<long long>(x.multiplicity) * x.degree_over_K;
      sum_q += static_cast<long long>(x.multiplicity) * x.degree_over_Q;
    }
    CHECK(sum_k == 1);
    CHECK(sum_q == base);
    std::vector<std::string> emb;
    for (int i = 1; i <= base; ++i) emb.push_back("s" + std::to_string(i));
    HodgeData M;
    M.K = TotallyRealField::make("K", emb);
    CHECK(restrict_scalars_degrees(M, d).pass());
  }
}
