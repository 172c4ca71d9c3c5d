/* Copyright 2026 periodcalc contributors.
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at http://www.apache.org/licenses/LICENSE-2.0
 */
#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "periodcalc/arithmetic_base.hpp"

namespace periodcalc {

enum class Polarization { Symmetric, Alternating };

struct HodgeData {
  FieldPtr K;
  CoefficientField E;
  int rank = 0;
  int weight = 0;
  // (sigma, phi) -> [p_1 > ... > p_n]
  std::map<std::pair<std::string, std::string>, std::vector<int>> hodge;
  int epsilon = 1;
  int n_plus = 0;
  int n_minus = 0;
  Polarization polarization = Polarization::Symmetric;
  bool delta_hypothesis = false;
  std::string label = "M";

  const std::vector<int>& p(const std::string& sigma, const std::string& phi) const;
  // 1-based index into p(sigma, phi).
  int p_at(const std::string& sigma, const std::string& phi, int i) const;

  // Checks every structural invariant; throws InvalidInput naming the first violation.
  void validate() const;
};

struct GLnWeight {
  FieldPtr K;
  std::map<std::string, std::vector<int>> a;

  int rank() const;
  bool is_self_dual() const;
  void validate() const;
};

struct DescentDatum {
  std::string subfield_label;
  int degree_over_Q = 1;
  int degree_over_K = 1;
  int multiplicity = 1;
};

struct HodgeFromWeightOptions {
  // phi -> (sigma -> sigma'): column p(., phi) copies p(sigma', 1).
  std::map<std::string, std::map<std::string, std::string>> permutations;
  std::optional<int> n_plus;
  int epsilon = 1;
  bool delta_hypothesis = false;
  std::string label = "M";
};

HodgeData hodge_from_weight(const GLnWeight& wt, const CoefficientField& E,
                            const HodgeFromWeightOptions& opts = {});

// Reads a_{sigma,i} = p_i(sigma,1) - n + i back off an automorphic motive.
GLnWeight weight_from_hodge(const HodgeData& M);

HodgeData tate_twist(const HodgeData& M, int k);

struct DegreeReport {
  bool q_identity = false;
  bool k_identity = false;
  bool data_consistent = false;
  long long sum_q = 0;
  long long sum_k = 0;
  bool pass() const { return q_identity && k_identity && data_consistent; }
};

DegreeReport restrict_scalars_degrees(const HodgeData& M, const std::vector<DescentDatum>& descent);

// M viewed over an extension K_j, given the restriction J_{K_j} -> J_K.
HodgeData base_change_motive(const HodgeData& M, const FieldPtr& Kj,
                             const std::map<std::string, std::string>& restriction);

}  // namespace periodcalc
