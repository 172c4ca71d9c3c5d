/* Copyright 2026 periodcalc contributors.
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at http://www.apache.org/licenses/LICENSE-2.0
 */
#include "periodcalc/hecke_characters.hpp"

#include <cstdlib>

#include "periodcalc/errors.hpp"

namespace periodcalc {

namespace {
bool same_parity(long long a, long long b) { return ((a - b) % 2) == 0; }
}  // namespace

int HeckeCharacter::n(const std::string& tau) const {
  auto it = infinity_type.find(tau);
  if (it == infinity_type.end()) fail(ErrorCode::InvalidInput, "no infinity type at " + tau);
  return it->second;
}

void HeckeCharacter::validate() const {
  if (!extension) fail(ErrorCode::InvalidInput, "character without CM extension");
  for (const auto& t : extension->embeddings) {
    auto it = infinity_type.find(t);
    if (it == infinity_type.end()) fail(ErrorCode::InvalidInput, "missing n_tau for " + t, "/infinity_type/" + t);
    if (it->second + n(extension->conj(t)) != weight) {
      fail(ErrorCode::InvalidInput, "n_tau + n_taubar differs from the weight at " + t, "/infinity_type/" + t);
    }
  }
  if (infinity_type.size() != extension->embeddings.size()) {
    fail(ErrorCode::InvalidInput, "infinity type mentions unknown embeddings", "/infinity_type");
  }
}

HeckeCharacter HeckeCharacter::make(ExtensionPtr ext, std::map<std::string, int> infinity_type,
                                    std::optional<int> weight, std::string label) {
  HeckeCharacter c;
  c.extension = std::move(ext);
  c.infinity_type = std::move(infinity_type);
  c.label = label;
  c.finite_part_label = label + "_0";
  c.value_field_label = "Q(" + label + ")";
  if (weight) {
    c.weight = *weight;
  } else {
    if (!c.extension || c.extension->embeddings.empty()) fail(ErrorCode::InvalidInput, "character without embeddings");
    const auto& t = c.extension->embeddings.front();
    auto a = c.infinity_type.find(t), b = c.infinity_type.find(c.extension->conj(t));
    if (a == c.infinity_type.end() || b == c.infinity_type.end()) {
      fail(ErrorCode::InvalidInput, "missing n_tau for " + t, "/infinity_type");
    }
    c.weight = a->second + b->second;
  }
  c.validate();
  return c;
}

HeckeCharacter construct_with_differences(const CMType& phi, const std::map<std::string, int>& a,
                                          int w0, std::string label) {
  const auto& ext = phi.extension;
  std::optional<int> parity;
  for (const auto& t : phi.members) {
    auto it = a.find(t);
    if (it == a.end()) fail(ErrorCode::InvalidInput, "no difference given for " + t);
    if (parity && !same_parity(*parity, it->second)) {
      fail(ErrorCode::ParityMismatch, "differences a_tau have mixed parity");
    }
    parity = it->second;
  }
  if (parity && !same_parity(*parity, w0)) fail(ErrorCode::ParityMismatch, "w0 and a_tau have different parity");
  std::map<std::string, int> inf;
  for (const auto& t : phi.members) {
    const int at = a.at(t);
    inf[t] = (w0 + at) / 2;
    inf[ext->conj(t)] = (w0 - at) / 2;
  }
  return HeckeCharacter::make(ext, std::move(inf), w0, std::move(label));
}

bool is_critical(const HeckeCharacter& chi) {
  for (const auto& t : chi.extension->embeddings) {
    if (chi.n(t) == chi.n(chi.extension->conj(t))) return false;
  }
  return true;
}

HeckeCharacter chi_from_psi(const HeckeCharacter& psi) {
  HeckeCharacter c = psi;
  for (auto& [t, v] : c.infinity_type) v *= 2;
  c.weight = 2 * psi.weight;
  c.label = "chi(" + psi.label + ")";
  c.finite_part_label = "(" + psi.label + ")^2/(" + psi.finite_part_label + "oN)";
  c.value_field_label = psi.value_field_label + "/sq";
  c.origin = SquareOrigin{psi.label, psi.value_field_label, psi.weight};
  c.validate();
  return c;
}

HeckeCharacter dual_conjugate(const HeckeCharacter& chi) {
  HeckeCharacter c = chi;
  for (const auto& t : chi.extension->embeddings) c.infinity_type[t] = -chi.n(chi.extension->conj(t));
  c.weight = -chi.weight;
  c.label = "check(" + chi.label + ")";
  c.finite_part_label = "check(" + chi.finite_part_label + ")";
  c.origin.reset();
  c.validate();
  return c;
}

HeckeCharacter tilde_psi(const HeckeCharacter& psi) {
  HeckeCharacter c = psi;
  for (const auto& t : psi.extension->embeddings) c.infinity_type[t] = psi.n(t) - psi.n(psi.extension->conj(t));
  c.weight = 0;
  c.label = "tilde(" + psi.label + ")";
  c.finite_part_label = "tilde(" + psi.finite_part_label + ")";
  c.value_field_label = psi.value_field_label + "/tilde";
  c.origin.reset();
  c.validate();
  return c;
}

HeckeCharacter base_change(const HeckeCharacter& chi, const ExtensionPtr& ext_j,
                           const std::map<std::string, std::string>& lift,
                           const std::map<std::string, std::string>& base_restriction) {
  const auto& ext = chi.extension;
  for (const auto& t : ext_j->embeddings) {
    auto it = lift.find(t);
    if (it == lift.end()) fail(ErrorCode::IncompatibleLift, "lift undefined at " + t);
    if (!ext->has(it->second)) fail(ErrorCode::IncompatibleLift, "lift of " + t + " is not in J_L");
    auto jt = lift.find(ext_j->conj(t));
    if (jt == lift.end() || jt->second != ext->conj(it->second)) {
      fail(ErrorCode::IncompatibleLift, "lift does not commute with conjugation at " + t);
    }
    if (!base_restriction.empty()) {
      auto r = base_restriction.find(ext_j->restrict_to_base(t));
      if (r == base_restriction.end() || r->second != ext->restrict_to_base(it->second)) {
        fail(ErrorCode::IncompatibleLift, "lift does not commute with restriction at " + t);
      }
    }
  }
  std::map<std::string, int> inf;
  for (const auto& t : ext_j->embeddings) inf[t] = chi.n(lift.at(t));
  HeckeCharacter c = chi;
  c.extension = ext_j;
  c.infinity_type = std::move(inf);
  c.label = chi.label + "@" + ext_j->label;
  c.finite_part_label = chi.finite_part_label + "oN";
  c.value_field_label = chi.value_field_label + "/bc(" + ext_j->label + ")";
  c.origin.reset();
  c.validate();
  return c;
}

HeckeCharacter norm_shift(const HeckeCharacter& chi, int k) {
  HeckeCharacter c = chi;
  for (auto& [t, v] : c.infinity_type) v += k;
  c.weight = chi.weight + 2 * k;
  c.label = chi.label + "|.|^" + std::to_string(k);
  c.origin.reset();
  c.validate();
  return c;
}

CMType positive_type(const HeckeCharacter& chi, std::string label) {
  if (!is_critical(chi)) fail(ErrorCode::NotCritical, "character " + chi.label + " is not critical");
  std::set<std::string> m;
  for (const auto& t : chi.extension->embeddings) {
    if (chi.n(t) > chi.n(chi.extension->conj(t))) m.insert(t);
  }
  return validate_cm_type(chi.extension, m, std::move(label));
}

}  // namespace periodcalc
