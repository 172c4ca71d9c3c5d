/* Copyright 2026 periodcalc contributors.
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at http://www.apache.org/licenses/LICENSE-2.0
 */
#pragma once

#include <map>
#include <optional>
#include <string>

#include "periodcalc/arithmetic_base.hpp"

namespace periodcalc {

// Records that a character is the square construction applied to another one.
struct SquareOrigin {
  std::string psi_label;
  std::string psi_value_field;
  int psi_weight = 0;
};

struct HeckeCharacter {
  ExtensionPtr extension;
  std::map<std::string, int> infinity_type;
  int weight = 0;
  std::string label = "chi";
  std::string finite_part_label = "chi_0";
  // Subfield symbols use '/' paths: "Q(psi)/sq" is contained in "Q(psi)".
  std::string value_field_label = "Q(chi)";
  std::optional<SquareOrigin> origin;

  int n(const std::string& tau) const;
  void validate() const;

  static HeckeCharacter make(ExtensionPtr ext, std::map<std::string, int> infinity_type,
                             std::optional<int> weight = std::nullopt, std::string label = "chi");
};

HeckeCharacter construct_with_differences(const CMType& phi, const std::map<std::string, int>& a,
                                          int w0, std::string label = "chi");
bool is_critical(const HeckeCharacter& chi);
HeckeCharacter chi_from_psi(const HeckeCharacter& psi);
HeckeCharacter dual_conjugate(const HeckeCharacter& chi);
HeckeCharacter tilde_psi(const HeckeCharacter& psi);
// lift: J_{L_j} -> J_L. base_restriction (J_{K_j} -> J_K) is checked when given.
HeckeCharacter base_change(const HeckeCharacter& chi, const ExtensionPtr& ext_j,
                           const std::map<std::string, std::string>& lift,
                           const std::map<std::string, std::string>& base_restriction = {});
// Twist by the k-th power of the norm: n_tau -> n_tau + k.
HeckeCharacter norm_shift(const HeckeCharacter& chi, int k);

// The CM type {tau : n_tau > n_taubar}; needs a critical character.
CMType positive_type(const HeckeCharacter& chi, std::string label = "Phi");

}  // namespace periodcalc
