/* Copyright 2026 periodcalc contributors.
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at http://www.apache.org/licenses/LICENSE-2.0
 */
#include "periodcalc/period_algebra.hpp"

#include <cctype>
#include <deque>
#include <functional>

#include "periodcalc/errors.hpp"

namespace periodcalc {

namespace {

const std::set<std::string>& greek() {
  static const std::set<std::string> g{"psi", "chi", "phi", "Phi", "pi", "sigma", "tau", "delta", "lambda", "rho"};
  return g;
}

// Plain labels to TeX: greek words get a backslash, "^(...)" gets braces.
std::string tex(const std::string& s) {
  std::string out;
  for (std::size_t i = 0; i < s.size();) {
    const char c = s[i];
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < s.size() && std::isalpha(static_cast<unsigned char>(s[j]))) ++j;
      const std::string w = s.substr(i, j - i);
      if (w == "check" || w == "tilde" || w == "inv") {
        if (j < s.size() && s[j] == '(') {
          int depth = 0;
          std::size_t k = j;
          for (; k < s.size(); ++k) {
            if (s[k] == '(') ++depth;
            if (s[k] == ')' && --depth == 0) break;
          }
          const std::string inner = tex(s.substr(j + 1, k - j - 1));
          if (w == "inv") out += "{" + inner + "}^{-1}";
          else out += "\\" + w + "{" + inner + "}";
          i = k + 1;
          continue;
        }
      }
      if (greek().count(w)) out += "\\" + w + " ";
      else out += w;
      i = j;
    } else if (c == '^' && i + 1 < s.size() && s[i + 1] == '(') {
      int depth = 0;
      std::size_t k = i + 1;
      for (; k < s.size(); ++k) {
        if (s[k] == '(') ++depth;
        if (s[k] == ')' && --depth == 0) break;
      }
      out += "^{" + tex(s.substr(i + 1, k - i)) + "}";
      i = k + 1;
    } else if (c == '#') {
      out += "\\#";
      ++i;
    } else {
      out += c;
      ++i;
    }
  }
  // Drop a trailing space left by a greek macro.
  while (!out.empty() && out.back() == ' ') out.pop_back();
  return out;
}

std::string field_tex(const std::string& label) {
  std::string top = label.substr(0, label.find('/'));
  if (top.rfind("Q(", 0) == 0) return "\\mathbb{Q}" + tex(top.substr(1));
  return tex(top);
}

int atom_rank(AtomKind k) {
  switch (k) {
    case AtomKind::SigmaK: return 0;
    case AtomKind::KGal: return 1;
    case AtomKind::LGal: return 2;
    case AtomKind::TildeL: return 3;
    default: return -1;
  }
}

}  // namespace

// ---- ambiguity ----------------------------------------------------------------

std::string FieldAtom::text() const {
  switch (kind) {
    case AtomKind::E: return "E";
    case AtomKind::ValueField: return label;
    case AtomKind::SigmaK: return label + "(K)";
    case AtomKind::KGal: return "K^Gal";
    case AtomKind::LGal: return "L^Gal";
    case AtomKind::TildeL: return "tilde_L";
  }
  return "?";
}

std::string FieldAtom::latex() const {
  switch (kind) {
    case AtomKind::E: return "E";
    case AtomKind::ValueField: return field_tex(label);
    case AtomKind::SigmaK: return "\\sigma(K)";
    case AtomKind::KGal: return "K^{\\mathrm{Gal}}";
    case AtomKind::LGal: return "L^{\\mathrm{Gal}}";
    case AtomKind::TildeL: return "\\tilde{L}";
  }
  return "?";
}

bool atom_leq(const FieldAtom& a, const FieldAtom& b) {
  if (a == b) return true;
  if (a.kind == AtomKind::ValueField && b.kind == AtomKind::ValueField) {
    return a.label.size() > b.label.size() && a.label.compare(0, b.label.size(), b.label) == 0 &&
           a.label[b.label.size()] == '/';
  }
  const int ra = atom_rank(a.kind), rb = atom_rank(b.kind);
  return ra >= 0 && rb >= 0 && ra < rb;
}

AmbiguityField::AmbiguityField(std::initializer_list<FieldAtom> atoms) {
  for (const auto& a : atoms) add(a);
}

AmbiguityField AmbiguityField::e_pi() { return AmbiguityField{E(), lgal()}; }

void AmbiguityField::add(const FieldAtom& a) {
  for (const auto& b : atoms_) {
    if (atom_leq(a, b)) return;
  }
  for (auto it = atoms_.begin(); it != atoms_.end();) {
    if (atom_leq(*it, a)) it = atoms_.erase(it);
    else ++it;
  }
  atoms_.insert(a);
}

AmbiguityField AmbiguityField::join(const AmbiguityField& o) const {
  AmbiguityField r = *this;
  r |= o;
  return r;
}

AmbiguityField& AmbiguityField::operator|=(const AmbiguityField& o) {
  for (const auto& a : o.atoms_) add(a);
  return *this;
}

bool AmbiguityField::contains(const FieldAtom& a) const {
  for (const auto& b : atoms_) {
    if (atom_leq(a, b)) return true;
  }
  return false;
}

bool AmbiguityField::leq(const AmbiguityField& o) const {
  for (const auto& a : atoms_) {
    if (!o.contains(a)) return false;
  }
  return true;
}

std::string AmbiguityField::text() const {
  if (atoms_.empty()) return "Q";
  std::string s;
  for (const auto& a : atoms_) s += (s.empty() ? "" : ".") + a.text();
  return s;
}

std::string AmbiguityField::latex() const {
  if (atoms_.empty()) return "\\mathbb{Q}";
  std::set<std::string> seen;
  std::string s;
  for (const auto& a : atoms_) {
    const std::string t = a.latex();
    if (seen.insert(t).second) s += t;
  }
  return s;
}

// ---- generators ----------------------------------------------------------------

const char* gen_kind_name(GenKind k) {
  switch (k) {
    case GenKind::TwoPiI: return "TwoPiI";
    case GenKind::DiscriminantHalf: return "DiscriminantHalf";
    case GenKind::DeltaSigma: return "DeltaSigma";
    case GenKind::DeltaTotal: return "DeltaTotal";
    case GenKind::QuadSigma: return "QuadSigma";
    case GenKind::QuadTotal: return "QuadTotal";
    case GenKind::CPlusSigma: return "CPlusSigma";
    case GenKind::CPlusTotal: return "CPlusTotal";
    case GenKind::CPlusMotive: return "CPlusMotive";
    case GenKind::GSigma: return "GSigma";
    case GenKind::GTotal: return "GTotal";
    case GenKind::CMPeriod: return "CMPeriod";
    case GenKind::ETau: return "ETau";
    case GenKind::LValueChar: return "LValueChar";
    case GenKind::LValueMotive: return "LValueMotive";
    case GenKind::PetersonQhol: return "PetersonQhol";
  }
  return "?";
}

namespace {
std::string sign_str(long long s) { return s > 0 ? "+" : "-"; }
std::string cm_name(const Generator& g) {
  const std::string& op = g.s[0];
  return op.empty() ? g.s[1] : op + "(" + g.s[1] + ")";
}
}  // namespace

std::string Generator::text() const {
  switch (kind) {
    case GenKind::TwoPiI: return "(2pi i)";
    case GenKind::DiscriminantHalf: return "D_" + s[0] + "^(1/2)";
    case GenKind::DeltaSigma: return "delta_" + s[1] + "(" + s[0] + ")";
    case GenKind::DeltaTotal: return "delta(" + s[0] + ")";
    case GenKind::QuadSigma:
      return "Q_" + std::to_string(i[0]) + "," + s[1] + "," + s[2] + "(" + s[0] + ")";
    case GenKind::QuadTotal: return "Q_" + std::to_string(i[0]) + "," + s[1] + "(" + s[0] + ")";
    case GenKind::CPlusSigma: return "c" + sign_str(i[0]) + "_" + s[1] + "(" + s[0] + ")";
    case GenKind::CPlusTotal: return "c" + sign_str(i[0]) + "(" + s[0] + ")";
    case GenKind::CPlusMotive: return "c+(" + s[0] + "(" + std::to_string(i[0]) + "))";
    case GenKind::GSigma: return "G_" + s[1] + "(" + s[0] + ")";
    case GenKind::GTotal: return "G(" + s[0] + ")";
    case GenKind::CMPeriod: return "p(" + cm_name(*this) + ";" + s[2] + ")";
    case GenKind::ETau: return "e_" + s[1] + "(" + s[0] + ")";
    case GenKind::LValueChar: return "L(" + s[0] + "," + std::to_string(i[0]) + ")";
    case GenKind::LValueMotive: return "L(" + s[0] + "," + std::to_string(i[0]) + ")";
    case GenKind::PetersonQhol: return "Qhol(" + s[0] + ")";
  }
  return "?";
}

std::string Generator::latex() const {
  switch (kind) {
    case GenKind::TwoPiI: return "(2\\pi i)";
    case GenKind::DiscriminantHalf: return "D_{" + tex(s[0]) + "}^{1/2}";
    case GenKind::DeltaSigma: return "\\delta_{" + tex(s[1]) + "}(" + tex(s[0]) + ")";
    case GenKind::DeltaTotal: return "\\delta(" + tex(s[0]) + ")";
    case GenKind::QuadSigma:
      return "Q_{" + std::to_string(i[0]) + "," + tex(s[1]) + "," + tex(s[2]) + "}(" + tex(s[0]) + ")";
    case GenKind::QuadTotal: return "Q_{" + std::to_string(i[0]) + "," + tex(s[1]) + "}(" + tex(s[0]) + ")";
    case GenKind::CPlusSigma: return "c^{" + sign_str(i[0]) + "}_{" + tex(s[1]) + "}(" + tex(s[0]) + ")";
    case GenKind::CPlusTotal: return "c^{" + sign_str(i[0]) + "}(" + tex(s[0]) + ")";
    case GenKind::CPlusMotive: return "c^{+}(" + tex(s[0]) + "(" + std::to_string(i[0]) + "))";
    case GenKind::GSigma: return "G_{" + tex(s[1]) + "}(" + tex(s[0]) + ")";
    case GenKind::GTotal: return "G(" + tex(s[0]) + ")";
    case GenKind::CMPeriod: {
      std::string b = tex(s[1]);
      const std::string& op = s[0];
      if (op == "check" || op == "tilde") {
        const bool simple = b.size() > 1 && b[0] == '\\' && b.find_first_of(" ^_{(", 1) == std::string::npos;
        b = simple ? "\\" + op + b : "\\" + op + "{" + b + "}";
      } else if (op == "inv") {
        b = b + "^{-1}";
      }
      std::string type = s[2] == "hbar" ? "\\bar h" : tex(s[2]);
      return "p(" + b + ";" + type + ")";
    }
    case GenKind::ETau: return "e_{" + tex(s[1]) + "}(" + tex(s[0]) + ")";
    case GenKind::LValueChar:
    case GenKind::LValueMotive: return "L(" + tex(s[0]) + "," + std::to_string(i[0]) + ")";
    case GenKind::PetersonQhol: return "Q^{\\mathrm{hol}}(" + tex(s[0]) + ")";
  }
  return "?";
}

namespace gen {
Generator two_pi_i() { return {GenKind::TwoPiI, {}, {}}; }
Generator disc_half(const std::string& K) { return {GenKind::DiscriminantHalf, {K}, {}}; }
Generator delta_sigma(const std::string& M, const std::string& sigma) { return {GenKind::DeltaSigma, {M, sigma}, {}}; }
Generator delta_total(const std::string& M) { return {GenKind::DeltaTotal, {M}, {}}; }
Generator quad_sigma(const std::string& M, const std::string& sigma, const std::string& phi, int j) {
  return {GenKind::QuadSigma, {M, sigma, phi}, {j}};
}
Generator quad_total(const std::string& M, const std::string& phi, int j) {
  return {GenKind::QuadTotal, {M, phi}, {j}};
}
Generator cplus_sigma(const std::string& chi, const std::string& sigma, int sign) {
  return {GenKind::CPlusSigma, {chi, sigma}, {sign > 0 ? 1 : -1}};
}
Generator cplus_total(const std::string& chi, int sign) { return {GenKind::CPlusTotal, {chi}, {sign > 0 ? 1 : -1}}; }
Generator cplus_motive(const std::string& twist, int k) { return {GenKind::CPlusMotive, {twist}, {k}}; }
Generator g_sigma(const std::string& chi, const std::string& sigma) { return {GenKind::GSigma, {chi, sigma}, {}}; }
Generator g_total(const std::string& chi) { return {GenKind::GTotal, {chi}, {}}; }
Generator cm_period(const std::string& op, const std::string& base, const std::string& type) {
  return {GenKind::CMPeriod, {op, base, type}, {}};
}
Generator e_tau(const std::string& chi, const std::string& tau) { return {GenKind::ETau, {chi, tau}, {}}; }
Generator lvalue_char(const std::string& chi, long long m) { return {GenKind::LValueChar, {chi}, {m}}; }
Generator lvalue_motive(const std::string& twist, long long k) { return {GenKind::LValueMotive, {twist}, {k}}; }
Generator peterson(const std::string& pi) { return {GenKind::PetersonQhol, {pi}, {}}; }
}  // namespace gen

// ---- expressions ---------------------------------------------------------------

PeriodExpression PeriodExpression::of(const Generator& g, long long e, AmbiguityField amb) {
  PeriodExpression x(std::move(amb));
  x.multiply(g, e);
  return x;
}

long long PeriodExpression::exponent(const Generator& g) const {
  auto it = exponents_.find(g);
  return it == exponents_.end() ? 0 : it->second;
}

void PeriodExpression::multiply(const Generator& g, long long e) {
  mentioned_.insert(g);
  if (e == 0) return;
  auto& v = exponents_[g];
  v += e;
  if (v == 0) exponents_.erase(g);
}

void PeriodExpression::set_exponent(const Generator& g, long long e) {
  mentioned_.insert(g);
  if (e == 0) exponents_.erase(g);
  else exponents_[g] = e;
}

PeriodExpression& PeriodExpression::operator*=(const PeriodExpression& o) {
  for (const auto& [g, e] : o.exponents_) multiply(g, e);
  mentioned_.insert(o.mentioned_.begin(), o.mentioned_.end());
  ambiguity_ |= o.ambiguity_;
  return *this;
}

PeriodExpression& PeriodExpression::operator/=(const PeriodExpression& o) {
  for (const auto& [g, e] : o.exponents_) multiply(g, -e);
  mentioned_.insert(o.mentioned_.begin(), o.mentioned_.end());
  ambiguity_ |= o.ambiguity_;
  return *this;
}

PeriodExpression PeriodExpression::pow(long long k) const {
  PeriodExpression r(ambiguity_);
  r.mentioned_ = mentioned_;
  if (k == 0) return r;
  for (const auto& [g, e] : exponents_) r.exponents_[g] = e * k;
  return r;
}

std::string PeriodExpression::text() const {
  std::string s;
  for (const auto& [g, e] : exponents_) {
    if (!s.empty()) s += " * ";
    s += g.text();
    if (e != 1) s += "^" + std::to_string(e);
  }
  if (s.empty()) s = "1";
  return s + "  [~ " + ambiguity_.text() + "]";
}

std::string PeriodExpression::latex() const {
  std::string s;
  for (const auto& [g, e] : exponents_) {
    if (!s.empty()) s += "\\,";
    s += g.latex();
    if (e != 1) s += "^{" + std::to_string(e) + "}";
  }
  if (s.empty()) s = "1";
  return s + " \\quad (\\sim_{" + ambiguity_.latex() + "})";
}

PeriodExpression operator*(PeriodExpression a, const PeriodExpression& b) { return a *= b; }
PeriodExpression operator/(PeriodExpression a, const PeriodExpression& b) { return a /= b; }
PeriodExpression pow(const PeriodExpression& a, long long k) { return a.pow(k); }

PeriodExpression substitute(const PeriodExpression& x, const std::map<Generator, PeriodExpression>& rules) {
  PeriodExpression r(x.ambiguity());
  r.mention_all(x.mentioned());
  for (const auto& [g, e] : x.exponents()) {
    auto it = rules.find(g);
    if (it == rules.end()) {
      r.multiply(g, e);
    } else {
      r *= it->second.pow(e);
      r.join(it->second.ambiguity());
    }
  }
  return r;
}

// ---- context -------------------------------------------------------------------

void PeriodContext::add_character(const HeckeCharacter& chi, const CMType& phi) {
  CharInfo c;
  c.label = chi.label;
  c.value_field = chi.value_field_label;
  c.K = chi.extension->base->label;
  c.degree = chi.extension->base->degree();
  c.weight = chi.weight;
  c.phi_label = phi.label;
  c.phi = phi.members;
  c.conj = chi.extension->conjugation;
  for (const auto& s : chi.extension->base->embeddings) c.tau_over_sigma[s] = phi.over(s);
  c.t = is_critical(chi) ? character_t_parity(chi) : 1;
  c.origin = chi.origin;
  chars_[c.label] = std::move(c);
}

void PeriodContext::add_motive(const HodgeData& M, std::optional<std::string> parent, int degree_over_parent) {
  MotiveInfo m;
  m.label = M.label;
  m.K = M.K->label;
  m.rank = M.rank;
  m.weight = M.weight;
  m.degree = M.K->degree();
  m.delta_hypothesis = M.delta_hypothesis;
  m.sigmas = M.K->embeddings;
  m.parent = std::move(parent);
  m.degree_over_parent = degree_over_parent;
  motives_[m.label] = std::move(m);
}

void PeriodContext::add_psi(const HeckeCharacter& psi, const CMType& phi, int rank) {
  psis_[psi.label] = PsiInfo{psi.label, psi.value_field_label, phi.label, rank};
}

void PeriodContext::add_twist(const TwistData& T) {
  if (!motive(T.M.label)) add_motive(T.M);
  add_character(T.chi, T.phi);
}

const CharInfo* PeriodContext::character(const std::string& label) const {
  auto it = chars_.find(label);
  return it == chars_.end() ? nullptr : &it->second;
}

const MotiveInfo* PeriodContext::motive(const std::string& label) const {
  auto it = motives_.find(label);
  return it == motives_.end() ? nullptr : &it->second;
}

const PsiInfo* PeriodContext::psi(const std::string& label) const {
  auto it = psis_.find(label);
  return it == psis_.end() ? nullptr : &it->second;
}

// ---- normalization ---------------------------------------------------------------

namespace {

struct Rule {
  std::string name;
  std::map<Generator, long long> rhs;
  AmbiguityField join;
};

using A = AmbiguityField;

std::optional<Rule> rule_for(const Generator& g, const PeriodContext& ctx, const NormalizeOptions& o) {
  switch (g.kind) {
    case GenKind::ETau: {
      const CharInfo* c = ctx.character(g.s[0]);
      if (!c || c->phi.count(g.s[1]) || !c->conj.count(g.s[1])) return std::nullopt;
      return Rule{"e-conjugate", {{gen::e_tau(g.s[0], c->conj.at(g.s[1])), -1}}, {}};
    }
    case GenKind::CPlusSigma: {
      const CharInfo* c = ctx.character(g.s[0]);
      if (!c || g.i[0] > 0 || !c->tau_over_sigma.count(g.s[1])) return std::nullopt;
      return Rule{"c-minus-local",
                  {{gen::e_tau(g.s[0], c->tau_over_sigma.at(g.s[1])), 1}, {gen::cplus_sigma(g.s[0], g.s[1], 1), 1}},
                  A{A::vf(c->value_field), A::sigma(g.s[1])}};
    }
    case GenKind::CPlusTotal: {
      const CharInfo* c = ctx.character(g.s[0]);
      if (!c) return std::nullopt;
      if (g.i[0] < 0) {
        Rule r{"c-minus", {{gen::cplus_total(g.s[0], 1), 1}}, A{A::vf(c->value_field), A::kgal()}};
        for (const auto& t : c->phi) r.rhs[gen::e_tau(g.s[0], t)] += 1;
        return r;
      }
      Rule r{"cm-value", {{gen::disc_half(c->K), 1}, {gen::cm_period("check", g.s[0], c->phi_label), 1}},
             A{A::vf(c->value_field)}};
      if (c->t != 0) {
        for (const auto& t : c->phi) r.rhs[gen::e_tau(g.s[0], t)] += c->t;
      }
      return r;
    }
    case GenKind::CMPeriod: {
      if (g.s[0] == "check" && o.expr_cm) {
        const CharInfo* c = ctx.character(g.s[1]);
        if (!c || !c->origin || g.s[2] != c->phi_label) return std::nullopt;
        return Rule{"cm-square",
                    {{gen::cm_period("tilde", c->origin->psi_label, c->phi_label), 1},
                     {gen::two_pi_i(), -static_cast<long long>(c->degree) * c->origin->psi_weight}},
                    A{A::vf(c->origin->psi_value_field)}};
      }
      if (g.s[0].empty() && g.s[2] == "h") {
        const PsiInfo* p = ctx.psi(g.s[1]);
        if (!p) return std::nullopt;
        return Rule{"cm-unitary",
                    {{gen::cm_period("tilde", g.s[1], p->phi_label), p->rank},
                     {gen::cm_period("inv", g.s[1], "hbar"), -1}},
                    A{A::vf(p->value_field), A::lgal()}};
      }
      return std::nullopt;
    }
    case GenKind::DeltaTotal: {
      const MotiveInfo* m = ctx.motive(g.s[0]);
      if (!m) return std::nullopt;
      if (o.descent && m->parent) {
        return Rule{"delta-descent", {{gen::delta_total(*m->parent), m->degree_over_parent}}, A{A::E(), A::tilde_l()}};
      }
      if (!o.delta_rule) return std::nullopt;
      const long long n = m->rank, w = m->weight, d = m->degree;
      if (w % 2 != 0) return Rule{"delta-odd-weight", {{gen::two_pi_i(), -d * w * n / 2}}, A{A::E(), A::kgal()}};
      if (m->delta_hypothesis) {
        return Rule{"delta-hypothesis", {{gen::two_pi_i(), -d * n * (n - 1) / 2}}, A{A::E(), A::kgal()}};
      }
      return std::nullopt;
    }
    case GenKind::DeltaSigma: {
      const MotiveInfo* m = ctx.motive(g.s[0]);
      if (!m || !o.delta_rule || m->weight % 2 == 0) return std::nullopt;
      const long long n = m->rank, w = m->weight;
      return Rule{"delta-odd-weight-local", {{gen::two_pi_i(), -w * n / 2}}, A{A::E(), A::sigma(g.s[1])}};
    }
    default: return std::nullopt;
  }
}

}  // namespace

PeriodExpression normalize(const PeriodExpression& x, const PeriodContext& ctx, const NormalizeOptions& opts,
                           NormalizeTrace* trace) {
  std::map<Generator, std::optional<Rule>> rules;
  std::deque<Generator> queue(x.mentioned().begin(), x.mentioned().end());
  for (const auto& [g, e] : x.exponents()) queue.push_back(g);
  while (!queue.empty()) {
    Generator g = queue.front();
    queue.pop_front();
    if (rules.count(g)) continue;
    auto r = rule_for(g, ctx, opts);
    if (r) {
      for (const auto& [h, e] : r->rhs) queue.push_back(h);
    }
    rules.emplace(std::move(g), std::move(r));
  }

  AmbiguityField amb = x.ambiguity();
  for (const auto& [g, r] : rules) {
    if (!r) continue;
    AmbiguityField before = amb;
    amb |= r->join;
    if (trace) trace->push_back({r->name, g, before, amb, r->join});
  }

  std::map<Generator, std::map<Generator, long long>> memo;
  std::function<const std::map<Generator, long long>&(const Generator&)> expand =
      [&](const Generator& g) -> const std::map<Generator, long long>& {
    auto it = memo.find(g);
    if (it != memo.end()) return it->second;
    std::map<Generator, long long> out;
    const auto& r = rules.at(g);
    if (!r) {
      out[g] = 1;
    } else {
      for (const auto& [h, e] : r->rhs) {
        for (const auto& [k, f] : expand(h)) out[k] += e * f;
      }
    }
    return memo.emplace(g, std::move(out)).first->second;
  };

  std::map<Generator, long long> acc;
  for (const auto& [g, e] : x.exponents()) {
    for (const auto& [k, f] : expand(g)) acc[k] += e * f;
  }

  PeriodExpression out(amb);
  for (const auto& [g, r] : rules) out.mention(g);
  for (auto& [g, e] : acc) {
    if (g.kind == GenKind::ETau) e = ((e % 2) + 2) % 2;  // e_tau = +-1
    if (opts.absorb) {
      std::optional<AmbiguityField> need;
      if (g.kind == GenKind::ETau) {
        if (const CharInfo* c = ctx.character(g.s[0])) need = A{A::vf(c->value_field)};
      } else if (g.kind == GenKind::DiscriminantHalf) {
        need = A{A::kgal()};
      } else if (g.kind == GenKind::PetersonQhol) {
        need = A::e_pi();
      }
      if (need && need->leq(amb)) {
        if (trace && e != 0) trace->push_back({"absorb", g, amb, amb, *need});
        e = 0;
      }
    }
    out.set_exponent(g, e);
  }
  return out;
}

}  // namespace periodcalc
