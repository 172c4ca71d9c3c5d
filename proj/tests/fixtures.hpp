/* Copyright 2026 periodcalc contributors.
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at http://www.apache.org/licenses/LICENSE-2.0
 */
// Shared builders for the rewrite-system property tests.
#pragma once

#include <random>
#include <vector>

#include "periodcalc/critical_calculus.hpp"
#include "periodcalc/period_algebra.hpp"

namespace fixture {

using namespace periodcalc;

struct Pool {
  PeriodContext ctx;
  std::vector<Generator> gens;
  std::vector<FieldAtom> atoms;
};

// A context with plain, squared and psi characters plus odd, even and descended motives.
inline Pool rewrite_pool() {
  Pool p;
  auto K = TotallyRealField::make("K", {"s1", "s2"});
  auto L = CMExtension::standard(K);
  auto phi = validate_cm_type(L, {"ts1", "ts2"});
  auto chi = HeckeCharacter::make(L, {{"ts1", 3}, {"tbs1", -1}, {"ts2", 4}, {"tbs2", -2}}, std::nullopt, "chi");
  auto eta = HeckeCharacter::make(L, {{"ts1", 1}, {"tbs1", 0}, {"ts2", 2}, {"tbs2", -1}}, std::nullopt, "eta");
  auto psi = HeckeCharacter::make(L, {{"ts1", 2}, {"tbs1", -1}, {"ts2", 3}, {"tbs2", -2}}, std::nullopt, "psi");
  auto sq = chi_from_psi(psi);
  p.ctx.add_character(chi, phi);
  p.ctx.add_character(eta, phi);
  p.ctx.add_character(sq, phi);
  p.ctx.add_psi(psi, phi, 2);

  auto Modd = hodge_from_weight(GLnWeight{K, {{"s1", {1, -1}}, {"s2", {2, -2}}}}, CoefficientField{});
  Modd.label = "M";
  auto Meven = hodge_from_weight(GLnWeight{K, {{"s1", {1, 0, -1}}, {"s2", {2, 0, -2}}}}, CoefficientField{},
                                 HodgeFromWeightOptions{{}, std::nullopt, 1, true, "N"});
  auto Kj = TotallyRealField::make("K1", {"u1", "u2", "u3", "u4"});
  auto Mj = base_change_motive(Modd, Kj, {{"u1", "s1"}, {"u2", "s1"}, {"u3", "s2"}, {"u4", "s2"}});
  Mj.label = "M@K1";
  p.ctx.add_motive(Modd);
  p.ctx.add_motive(Meven);
  p.ctx.add_motive(Mj, std::string("M"), 2);

  for (const std::string& c : std::vector<std::string>{"chi", "eta", sq.label}) {
    for (const std::string s : {"s1", "s2"}) {
      p.gens.push_back(gen::cplus_sigma(c, s, 1));
      p.gens.push_back(gen::cplus_sigma(c, s, -1));
      p.gens.push_back(gen::g_sigma(c, s));
      p.gens.push_back(gen::e_tau(c, "t" + s));
      p.gens.push_back(gen::e_tau(c, "tb" + s));
    }
    p.gens.push_back(gen::cplus_total(c, 1));
    p.gens.push_back(gen::cplus_total(c, -1));
    p.gens.push_back(gen::g_total(c));
    p.gens.push_back(gen::cm_period("check", c, "Phi"));
  }
  p.gens.push_back(gen::cm_period("", "psi", "h"));
  p.gens.push_back(gen::cm_period("inv", "psi", "hbar"));
  p.gens.push_back(gen::cm_period("tilde", "psi", "Phi"));
  p.gens.push_back(gen::two_pi_i());
  p.gens.push_back(gen::disc_half("K"));
  for (const std::string m : {"M", "N", "M@K1"}) {
    p.gens.push_back(gen::delta_total(m));
    p.gens.push_back(gen::delta_sigma(m, "s1"));
    p.gens.push_back(gen::quad_total(m, "1", 1));
  }
  p.gens.push_back(gen::peterson("pi"));
  p.gens.push_back(gen::lvalue_char("chi", 2));
  p.gens.push_back(gen::lvalue_motive("M(chi)", 3));

  p.atoms = {AmbiguityField::E(),      AmbiguityField::vf("Q(chi)"),   AmbiguityField::vf("Q(eta)"),
             AmbiguityField::vf("Q(psi)"), AmbiguityField::vf("Q(psi)/sq"), AmbiguityField::sigma("s1"),
             AmbiguityField::kgal(),   AmbiguityField::lgal(),         AmbiguityField::tilde_l()};
  return p;
}

inline PeriodExpression random_monomial(std::mt19937_64& rng, const Pool& p) {
  std::uniform_int_distribution<size_t> pick(0, p.gens.size() - 1);
  std::uniform_int_distribution<size_t> atom(0, p.atoms.size() - 1);
  std::uniform_int_distribution<int> len(1, 5), ex(-3, 3), natoms(0, 3);
  AmbiguityField amb;
  for (int i = natoms(rng); i > 0; --i) amb.add(p.atoms[atom(rng)]);
  PeriodExpression x(amb);
  for (int i = len(rng); i > 0; --i) x.multiply(p.gens[pick(rng)], ex(rng));
  return x;
}

}  // namespace fixture
