/* Copyright 2026 periodcalc contributors.
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at http://www.apache.org/licenses/LICENSE-2.0
 */
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fixtures.hpp"
#include "periodcalc/errors.hpp"
#include "periodcalc/period_formulas.hpp"

using namespace periodcalc;
using A = AmbiguityField;

namespace {

FieldPtr Q() { return TotallyRealField::make("Q", {"s"}); }

}  // namespace

TEST_CASE("ambiguity lattice") {
  CHECK(atom_leq(A::vf("Q(psi)/sq"), A::vf("Q(psi)")));
  CHECK_FALSE(atom_leq(A::vf("Q(psi)"), A::vf("Q(psi)/sq")));
  CHECK_FALSE(atom_leq(A::vf("Q(psi)x/sq"), A::vf("Q(psi)")));
  CHECK(atom_leq(A::sigma("s"), A::kgal()));
  CHECK(atom_leq(A::kgal(), A::lgal()));
  CHECK(atom_leq(A::lgal(), A::tilde_l()));
  CHECK_FALSE(atom_leq(A::E(), A::tilde_l()));

  A a{A::E(), A::kgal()};
  a.add(A::sigma("s"));
  CHECK(a.atoms().size() == 2);
  a.add(A::lgal());
  CHECK(a == (A{A::E(), A::lgal()}));
  CHECK(A{A::E()}.join(A{A::vf("Q(chi)")}) == (A{A::E(), A::vf("Q(chi)")}));
  CHECK((A{A::E()}).leq(A::e_pi()));
  CHECK_FALSE(A::e_pi().leq(A{A::E()}));
  CHECK(A{}.text() == "Q");
}

TEST_CASE("monomial arithmetic") {
  auto x = PeriodExpression::of(gen::g_total("chi"), 3, A{A::E()});
  auto one = x * pow(x, -1);
  CHECK(one.is_identity());
  CHECK(one.ambiguity() == A{A::E()});
  CHECK(pow(x, 0).is_identity());
  auto y = PeriodExpression::of(gen::two_pi_i(), 2, A{A::vf("Q(chi)")});
  auto xy = x * y;
  CHECK(xy.ambiguity() == (A{A::E(), A::vf("Q(chi)")}));
  CHECK(xy.exponent(gen::two_pi_i()) == 2);
  CHECK((xy / y).same_exponents(x));
  CHECK(xy.text() == "(2pi i)^2 * G(chi)^3  [~ E.Q(chi)]");
}

TEST_CASE("generator printing") {
  CHECK(gen::cm_period("tilde", "psi", "Phi").text() == "p(tilde(psi);Phi)");
  CHECK(gen::quad_sigma("M", "s", "1", 2).text() == "Q_2,s,1(M)");
  CHECK(gen::cplus_sigma("chi", "s", -1).text() == "c-_s(chi)");
  CHECK(gen::cm_period("check", "chi", "Phi").latex() == "p(\\check\\chi;\\Phi)");
  CHECK(gen::two_pi_i().latex() == "(2\\pi i)");
}

TEST_CASE("substitute joins rule ambiguity") {
  auto x = PeriodExpression::of(gen::g_total("chi"), 2);
  std::map<Generator, PeriodExpression> rules;
  rules[gen::g_total("chi")] = PeriodExpression::of(gen::two_pi_i(), 3, A{A::kgal()});
  auto y = substitute(x, rules);
  CHECK(y.exponent(gen::two_pi_i()) == 6);
  CHECK(y.ambiguity() == A{A::kgal()});
}

TEST_CASE("deligne_period_expr shapes") {
  auto K = Q();
  auto L = CMExtension::standard(K);
  auto phi = validate_cm_type(L, {"ts"});
  auto M = hodge_from_weight(GLnWeight{K, {{"s", {1, -1}}}}, CoefficientField{});
  auto chi = build_interval_twist(M, phi, 2, "1");
  auto x = deligne_period_expr(TwistData{M, chi, phi}, "s", "1");
  CHECK(x.exponent(gen::quad_sigma("M", "s", "1", 1)) == 0);
  CHECK(x.exponent(gen::cplus_sigma(chi.label, "s", 1)) == 2);
  CHECK(x.exponent(gen::delta_sigma("M", "s")) == 1);

  auto c1 = build_interval_twist(M, phi, 0, "1");
  auto y = deligne_period_expr(TwistData{M, c1, phi}, "s", "1");
  CHECK(y.exponent(gen::quad_sigma("M", "s", "1", 1)) == 0);  // r-index is 2 here too

  auto M1 = hodge_from_weight(GLnWeight{K, {{"s", {0}}}}, CoefficientField{});
  auto c = build_interval_twist(M1, phi, 1, "1");
  auto odd = deligne_period_expr(TwistData{M1, c, phi}, "s", "1");
  CHECK(M1.n_plus == 1);
  CHECK(odd.exponent(gen::cplus_sigma(c.label, "s", 1)) == 1);
  auto M1m = M1;
  M1m.n_plus = 0;
  M1m.n_minus = 1;
  auto odd_minus = deligne_period_expr(TwistData{M1m, c, phi}, "s", "1");
  CHECK(odd_minus.exponent(gen::cplus_sigma(c.label, "s", -1)) == 1);
}

TEST_CASE("top-interval local factor is P_sigma times delta_sigma") {
  auto K = Q();
  auto L = CMExtension::standard(K);
  auto phi = validate_cm_type(L, {"ts"});
  auto M = hodge_from_weight(GLnWeight{K, {{"s", {2, 1, -1, -2}}}}, CoefficientField{});
  auto chi = build_interval_twist(M, phi, 4, "1");
  auto x = deligne_period_expr(TwistData{M, chi, phi}, "s", "1");
  auto want = local_character_factor(chi, phi, "s", 4, 4, M.n_plus);
  want.multiply(gen::delta_sigma("M", "s"), 1);
  CHECK(x.same_exponents(want));
}

TEST_CASE("globalize") {
  PeriodContext ctx;
  auto x = PeriodExpression::of(gen::g_sigma("chi", "s"), 1);
  auto g = globalize({{"s", x}}, {"s"}, "Q", 3, ctx);
  CHECK(g.exponent(gen::g_total("chi")) == 1);
  CHECK(g.exponent(gen::disc_half("Q")) == 3);
  CHECK_THROWS_AS(globalize({{"s", x}}, {"s", "s2"}, "Q", 0, ctx), Error);

  // uneven families stay local
  auto a = PeriodExpression::of(gen::g_sigma("chi", "s1"), 1);
  auto b = PeriodExpression::of(gen::g_sigma("chi", "s2"), 2);
  auto u = globalize({{"s1", a}, {"s2", b}}, {"s1", "s2"}, "K", 0, ctx);
  CHECK(u.exponent(gen::g_total("chi")) == 0);
  CHECK(u.exponent(gen::g_sigma("chi", "s2")) == 2);

  // D^{1/2} goes away once K^Gal is in the ambiguity
  PeriodExpression d = PeriodExpression::of(gen::disc_half("K"), 5, A{A::kgal()});
  CHECK(normalize(d, ctx).is_identity());
}

TEST_CASE("tate_twist_expr") {
  auto K = TotallyRealField::make("K", {"s1", "s2"});
  auto L = CMExtension::standard(K);
  auto phi = validate_cm_type(L, {"ts1", "ts2"});
  auto M = hodge_from_weight(GLnWeight{K, {{"s1", {1, 0, -1}}, {"s2", {2, 0, -2}}}}, CoefficientField{});
  auto chi = build_interval_twist(M, phi, 3, "1");
  TwistData T{M, chi, phi};
  PeriodExpression base;
  auto t1 = tate_twist_expr(base, T, 1);
  auto t3 = tate_twist_expr(base, T, 3);
  CHECK(t1.exponent(gen::two_pi_i()) == 6);
  CHECK(t3.exponent(gen::two_pi_i()) - t1.exponent(gen::two_pi_i()) == 2 * 2 * 3);
  auto t0 = tate_twist_expr(base, T, 0);
  CHECK(t0.exponent(gen::e_tau(chi.label, "ts1")) == 1);
  PeriodContext ctx;
  ctx.add_twist(T);
  CHECK(normalize(t0, ctx).is_identity());
}

TEST_CASE("normalize spot rules") {
  auto pool = fixture::rewrite_pool();
  const auto& ctx = pool.ctx;

  PeriodExpression x(A{A::vf("Q(chi)")});
  x.multiply(gen::cplus_sigma("chi", "s1", -1), 1);
  x.multiply(gen::cplus_sigma("chi", "s1", 1), -1);
  CHECK(normalize(x, ctx).is_identity());

  auto c = PeriodExpression::of(gen::cplus_total("chi", 1), 1, A{A::vf("Q(chi)"), A::kgal()});
  auto n = normalize(c, ctx);
  CHECK(n.exponents().size() == 1);
  CHECK(n.exponent(gen::cm_period("check", "chi", "Phi")) == 1);

  // the square character keeps going to p(tilde psi)
  auto s = PeriodExpression::of(gen::cm_period("check", "chi(psi)", "Phi"), 2);
  auto sn = normalize(s, ctx);
  CHECK(sn.exponent(gen::cm_period("tilde", "psi", "Phi")) == 2);
  CHECK(sn.exponent(gen::two_pi_i()) == -2 * 2 * 1);

  // delta of an odd-weight motive is a power of 2 pi i
  auto d = normalize(PeriodExpression::of(gen::delta_total("M"), 1), ctx);
  CHECK(d.exponent(gen::two_pi_i()) == -2 * 1 * 2 / 2);
  CHECK(d.exponent(gen::delta_total("M")) == 0);
  // even weight only with the hypothesis flag
  auto e = normalize(PeriodExpression::of(gen::delta_total("N"), 1), ctx);
  CHECK(e.exponent(gen::two_pi_i()) == -2 * 3 * 2 / 2);
  NormalizeOptions off;
  off.delta_rule = false;
  CHECK(normalize(PeriodExpression::of(gen::delta_total("N"), 1), ctx, off).exponent(gen::delta_total("N")) == 1);

  NormalizeOptions desc;
  desc.descent = true;
  desc.delta_rule = false;
  auto dj = normalize(PeriodExpression::of(gen::delta_total("M@K1"), 1), ctx, desc);
  CHECK(dj.exponent(gen::delta_total("M")) == 2);
  CHECK(dj.ambiguity().contains(A::tilde_l()));
}

TEST_CASE("p_chi_expr closed form") {
  auto K = Q();
  auto L = CMExtension::standard(K);
  auto phi = validate_cm_type(L, {"ts"});
  auto chi = HeckeCharacter::make(L, {{"ts", 5}, {"tbs", -1}});
  auto top = p_chi_expr(chi, phi, 4, 4);
  CHECK(top.exponent(gen::cm_period("check", chi.label, "Phi")) == 4);
  CHECK(top.exponent(gen::g_total(chi.label)) == 0);
  CHECK(top.exponent(gen::two_pi_i()) == 0);
  auto r3 = p_chi_expr(chi, phi, 3, 4);
  CHECK(r3.exponent(gen::g_total(chi.label)) == 1);
  CHECK(r3.exponent(gen::cm_period("check", chi.label, "Phi")) == 2);
  CHECK(r3.exponent(gen::two_pi_i()) == -4);
  CHECK_THROWS_AS(p_chi_expr(chi, phi, 2, 4), Error);
  auto neg = HeckeCharacter::make(L, {{"ts", -1}, {"tbs", 5}});
  CHECK_THROWS_AS(p_chi_expr(neg, phi, 4, 4), Error);
}

TEST_CASE("P(chi) definition matches the closed form, both parities of t") {
  for (int d = 1; d <= 2; ++d) {
    std::vector<std::string> emb;
    for (int i = 1; i <= d; ++i) emb.push_back("s" + std::to_string(i));
    auto K = TotallyRealField::make(d == 1 ? "Q" : "K", emb);
    auto L = CMExtension::standard(K);
    std::set<std::string> members;
    for (const auto& s : emb) members.insert("t" + s);
    auto phi = validate_cm_type(L, members);
    for (int gap : {1, 2, 3, 4}) {  // gap 1: single odd critical integer, so t = 1
      std::map<std::string, int> inf;
      for (const auto& s : emb) {
        inf["t" + s] = gap;
        inf["tb" + s] = 0;
      }
      auto chi = HeckeCharacter::make(L, inf);
      for (int n = 1; n <= 8; ++n) {
        for (int r = n / 2 + 1; r <= n; ++r) {
          for (int np : {n / 2, (n + 1) / 2}) {
            PeriodContext ctx;
            ctx.add_character(chi, phi);
            auto def = normalize(p_chi_definition(chi, phi, r, n, np, ctx), ctx);
            auto closed = normalize(p_chi_expr(chi, phi, r, n), ctx);
            CHECK_MESSAGE(def.same_exponents(closed), "n=" << n << " r=" << r << " gap=" << gap);
          }
        }
      }
    }
  }
}

TEST_CASE("normalize properties on random monomials") {
  auto pool = fixture::rewrite_pool();
  std::mt19937_64 rng(2024);
  for (int i = 0; i < 1000; ++i) {
    auto x = fixture::random_monomial(rng, pool);
    auto y = fixture::random_monomial(rng, pool);
    NormalizeTrace trace;
    auto nx = normalize(x, pool.ctx, {}, &trace);
    CHECK(normalize(nx, pool.ctx) == nx);
    CHECK(x.ambiguity().leq(nx.ambiguity()));
    for (const auto& st : trace) {
      CHECK(st.before.leq(st.after));
      CHECK(st.required.leq(st.after));
    }
    auto lhs = normalize(x * y, pool.ctx);
    auto rhs = normalize(nx * normalize(y, pool.ctx), pool.ctx);
    CHECK(lhs == rhs);
  }
}
