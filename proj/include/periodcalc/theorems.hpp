/* Copyright 2026 periodcalc contributors.
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at http://www.apache.org/licenses/LICENSE-2.0
 */
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "periodcalc/period_formulas.hpp"

namespace periodcalc {

struct VerifyReport {
  bool pass = false;
  PeriodExpression lhs;
  PeriodExpression rhs;
  PeriodExpression residual;  // lhs / rhs, exponents only
  AmbiguityField ambiguity;
  AmbiguityField bound;
  std::vector<std::string> notes;

  std::string verdict() const { return pass ? "PASS" : "FAIL"; }
};

VerifyReport compare_expressions(const PeriodExpression& lhs, const PeriodExpression& rhs,
                                 const AmbiguityField& bound);

// Everything derived from (M, psi): Phi, chi = psi^2/(psi_0 o N), the twist, and a context.
struct MainSetup {
  HodgeData M;
  HeckeCharacter psi;
  HeckeCharacter chi;
  CMType phi;
  TwistData T;
  std::string pi_label;
};

MainSetup main_setup(const HodgeData& M, const HeckeCharacter& psi, PeriodContext& ctx);

// Hypotheses (2), criticality of k and k > w + n; (1) only when require_delta.
void check_main_hypotheses(const MainSetup& S, long long k, bool require_delta);

PeriodExpression main_theorem_rhs(const HodgeData& M, const HeckeCharacter& psi, long long k);
PeriodExpression main_theorem_lhs_raw(const HodgeData& M, const HeckeCharacter& psi, long long k);
PeriodExpression main_theorem_lhs(const HodgeData& M, const HeckeCharacter& psi, long long k);
VerifyReport verify_main_theorem(const HodgeData& M, const HeckeCharacter& psi, long long k);

// ---- quadratic periods --------------------------------------------------------------

struct QjSetup {
  HodgeData M;
  CMType phi;
  std::string phi_E;
  int j = 1;
  HeckeCharacter chi_lo;  // r = n - j
  HeckeCharacter chi_hi;  // r = n - j + 1
  TwistData T_lo;
  TwistData T_hi;
};

QjSetup qj_setup(const HodgeData& M, const CMType& phi, const std::string& phi_E, int j,
                 std::optional<int> w0, PeriodContext& ctx);
PeriodExpression qj_expr(const HodgeData& M, const CMType& phi, const std::string& phi_E, int j,
                         std::optional<int> w0 = std::nullopt);
VerifyReport verify_qj(const HodgeData& M, const CMType& phi, const std::string& phi_E, int j,
                       std::optional<int> w0 = std::nullopt);
// prod_{i<=j} Q_i expressions against c+(M(chi^(n-j)))/(delta(M) P(chi^(n-j))).
VerifyReport verify_qj_telescoping(const HodgeData& M, const CMType& phi, const std::string& phi_E, int j,
                                   std::optional<int> w0 = std::nullopt);

struct QjLValueResult {
  PeriodExpression expr;
  int w0 = 0;
  long long k0 = 0;
  std::vector<long long> char_arguments;  // m for chi^(n-j), then chi^(n-j+1) when present
  VerifyReport check;
};

// Assumes the weak Deligne conjecture for the two twists; n even, automorphic M.
QjLValueResult qj_lvalue(const HodgeData& M, const CMType& phi, int j);

// ---- potentially automorphic -----------------------------------------------------

struct PotentialDetails {
  DegreeReport degrees;
  std::vector<VerifyReport> per_j;
  long long two_pi_i_sum = 0;    // sum_j n_j [K_j:Q] k n
  long long two_pi_i_target = 0; // [K:Q] k n
  bool cm_compatibility_applied = false;
};

VerifyReport verify_potentially_automorphic(const HodgeData& M, const HeckeCharacter& psi, long long k,
                                            const std::vector<DescentDatum>& descent,
                                            PotentialDetails* details = nullptr);

}  // namespace periodcalc
