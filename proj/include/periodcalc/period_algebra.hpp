/* Copyright 2026 periodcalc contributors.
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at http://www.apache.org/licenses/LICENSE-2.0
 */
#pragma once

#include <compare>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "periodcalc/critical_calculus.hpp"

namespace periodcalc {

// ---- ambiguity fields -------------------------------------------------------

enum class AtomKind { E, ValueField, SigmaK, KGal, LGal, TildeL };

struct FieldAtom {
  AtomKind kind = AtomKind::E;
  std::string label;  // value-field path or sigma label
  auto operator<=>(const FieldAtom&) const = default;
  std::string text() const;
  std::string latex() const;
};

// a <= b in the declared inclusions.
bool atom_leq(const FieldAtom& a, const FieldAtom& b);

class AmbiguityField {
 public:
  AmbiguityField() = default;
  explicit AmbiguityField(std::initializer_list<FieldAtom> atoms);

  static FieldAtom E() { return {AtomKind::E, ""}; }
  static FieldAtom vf(std::string label) { return {AtomKind::ValueField, std::move(label)}; }
  static FieldAtom sigma(std::string s) { return {AtomKind::SigmaK, std::move(s)}; }
  static FieldAtom kgal() { return {AtomKind::KGal, ""}; }
  static FieldAtom lgal() { return {AtomKind::LGal, ""}; }
  static FieldAtom tilde_l() { return {AtomKind::TildeL, ""}; }
  // E(pi) is modelled as E joined with L^Gal.
  static AmbiguityField e_pi();

  void add(const FieldAtom& a);
  AmbiguityField join(const AmbiguityField& o) const;
  AmbiguityField& operator|=(const AmbiguityField& o);
  bool leq(const AmbiguityField& o) const;
  bool contains(const FieldAtom& a) const;
  const std::set<FieldAtom>& atoms() const { return atoms_; }
  bool operator==(const AmbiguityField& o) const { return atoms_ == o.atoms_; }
  std::string text() const;
  std::string latex() const;

 private:
  std::set<FieldAtom> atoms_;  // kept reduced: no atom below another
};

// ---- generators -------------------------------------------------------------

enum class GenKind {
  TwoPiI,
  DiscriminantHalf,
  DeltaSigma,
  DeltaTotal,
  QuadSigma,
  QuadTotal,
  CPlusSigma,
  CPlusTotal,
  CPlusMotive,
  GSigma,
  GTotal,
  CMPeriod,
  ETau,
  LValueChar,
  LValueMotive,
  PetersonQhol,
};

const char* gen_kind_name(GenKind k);

struct Generator {
  GenKind kind = GenKind::TwoPiI;
  std::vector<std::string> s;
  std::vector<long long> i;
  auto operator<=>(const Generator&) const = default;
  std::string text() const;
  std::string latex() const;
};

namespace gen {
Generator two_pi_i();
Generator disc_half(const std::string& K);
Generator delta_sigma(const std::string& M, const std::string& sigma);
Generator delta_total(const std::string& M);
Generator quad_sigma(const std::string& M, const std::string& sigma, const std::string& phi, int j);
Generator quad_total(const std::string& M, const std::string& phi, int j);
Generator cplus_sigma(const std::string& chi, const std::string& sigma, int sign);
Generator cplus_total(const std::string& chi, int sign);
Generator cplus_motive(const std::string& twist, int k);
Generator g_sigma(const std::string& chi, const std::string& sigma);
Generator g_total(const std::string& chi);
// op: "" (p(psi;h)), "check", "tilde", "inv".
Generator cm_period(const std::string& op, const std::string& base, const std::string& type);
Generator e_tau(const std::string& chi, const std::string& tau);
Generator lvalue_char(const std::string& chi, long long m);
Generator lvalue_motive(const std::string& twist, long long k);
Generator peterson(const std::string& pi);
}  // namespace gen

// ---- expressions ------------------------------------------------------------

class PeriodExpression {
 public:
  PeriodExpression() = default;
  explicit PeriodExpression(AmbiguityField amb) : ambiguity_(std::move(amb)) {}
  static PeriodExpression of(const Generator& g, long long e = 1, AmbiguityField amb = {});

  const std::map<Generator, long long>& exponents() const { return exponents_; }
  const AmbiguityField& ambiguity() const { return ambiguity_; }
  // Every generator that ever occurred, including cancelled ones.
  const std::set<Generator>& mentioned() const { return mentioned_; }
  long long exponent(const Generator& g) const;
  bool is_identity() const { return exponents_.empty(); }

  void multiply(const Generator& g, long long e);
  void join(const AmbiguityField& f) { ambiguity_ |= f; }
  void set_exponent(const Generator& g, long long e);
  void mention(const Generator& g) { mentioned_.insert(g); }
  void mention_all(const std::set<Generator>& gs) { mentioned_.insert(gs.begin(), gs.end()); }

  PeriodExpression& operator*=(const PeriodExpression& o);
  PeriodExpression& operator/=(const PeriodExpression& o);
  PeriodExpression pow(long long k) const;

  // Equality ignores the mention history.
  bool operator==(const PeriodExpression& o) const {
    return exponents_ == o.exponents_ && ambiguity_ == o.ambiguity_;
  }
  bool same_exponents(const PeriodExpression& o) const { return exponents_ == o.exponents_; }

  std::string text() const;
  std::string latex() const;

 private:
  std::map<Generator, long long> exponents_;
  AmbiguityField ambiguity_;
  std::set<Generator> mentioned_;
};

PeriodExpression operator*(PeriodExpression a, const PeriodExpression& b);
PeriodExpression operator/(PeriodExpression a, const PeriodExpression& b);
PeriodExpression pow(const PeriodExpression& a, long long k);

// Replace each g^e with R(g)^e, joining R(g)'s ambiguity.
PeriodExpression substitute(const PeriodExpression& x, const std::map<Generator, PeriodExpression>& rules);

// ---- context for the rewrite system ----------------------------------------

struct CharInfo {
  std::string label;
  std::string value_field;
  std::string K;
  int degree = 1;  // [K:Q]
  int weight = 0;
  std::string phi_label;
  std::set<std::string> phi;
  std::map<std::string, std::string> conj;
  std::map<std::string, std::string> tau_over_sigma;  // sigma -> tau in Phi
  int t = 0;  // 0 iff [chi] has an even critical integer
  std::optional<SquareOrigin> origin;
};

struct MotiveInfo {
  std::string label;
  std::string K;
  int rank = 0;
  int weight = 0;
  int degree = 1;
  bool delta_hypothesis = false;
  std::vector<std::string> sigmas;
  std::optional<std::string> parent;
  int degree_over_parent = 1;
};

struct PsiInfo {
  std::string label;
  std::string value_field;
  std::string phi_label;
  int rank = 0;  // the n in h_tau(z) = z^n
};

class PeriodContext {
 public:
  void add_character(const HeckeCharacter& chi, const CMType& phi);
  void add_motive(const HodgeData& M, std::optional<std::string> parent = std::nullopt, int degree_over_parent = 1);
  void add_psi(const HeckeCharacter& psi, const CMType& phi, int rank);
  void add_twist(const TwistData& T);

  const CharInfo* character(const std::string& label) const;
  const MotiveInfo* motive(const std::string& label) const;
  const PsiInfo* psi(const std::string& label) const;

  const std::map<std::string, CharInfo>& characters() const { return chars_; }
  const std::map<std::string, MotiveInfo>& motives() const { return motives_; }

 private:
  std::map<std::string, CharInfo> chars_;
  std::map<std::string, MotiveInfo> motives_;
  std::map<std::string, PsiInfo> psis_;
};

struct NormalizeOptions {
  bool delta_rule = true;
  bool expr_cm = true;
  bool absorb = true;
  bool descent = false;  // delta(M_j) -> delta(M)^[K_j:K]
};

struct TraceStep {
  std::string rule;
  Generator generator;
  AmbiguityField before;
  AmbiguityField after;
  AmbiguityField required;  // absorptions: the field that licenses them
};

using NormalizeTrace = std::vector<TraceStep>;

PeriodExpression normalize(const PeriodExpression& x, const PeriodContext& ctx, const NormalizeOptions& opts = {},
                           NormalizeTrace* trace = nullptr);

}  // namespace periodcalc
