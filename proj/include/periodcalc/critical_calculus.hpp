/* Copyright 2026 periodcalc contributors.
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at http://www.apache.org/licenses/LICENSE-2.0
 */
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "periodcalc/hecke_characters.hpp"
#include "periodcalc/hodge_motives.hpp"

namespace periodcalc {

struct TwistData {
  HodgeData M;
  HeckeCharacter chi;
  CMType phi;

  std::string label() const { return M.label + "(" + chi.label + ")"; }
  void validate() const;
};

// Half-open integer interval (lo, hi]; empty when hi <= lo.
struct CriticalInterval {
  long long lo = 0;
  long long hi = 0;

  bool empty() const { return hi <= lo; }
  bool contains(long long k) const { return lo < k && k <= hi; }
  long long size() const { return empty() ? 0 : hi - lo; }
  std::vector<long long> values() const;
  bool operator==(const CriticalInterval& o) const {
    return (empty() && o.empty()) || (lo == o.lo && hi == o.hi);
  }
};

int t_invariant(const HeckeCharacter& chi, const std::string& sigma);
bool has_critical_values(const TwistData& T);
int r_index(const TwistData& T, const std::string& sigma, const std::string& phi);

// w0 == nullopt picks the smallest |w0| of the right parity (non-negative on ties).
HeckeCharacter build_interval_twist(const HodgeData& M, const CMType& phi, int r,
                                    const std::string& phi_E, std::optional<int> w0 = std::nullopt);
int interval_lemma_value(int n, int r);
bool verify_interval_lemma(const HodgeData& M, const CMType& phi, int r, const std::string& phi_E);

CriticalInterval critical_integers(const TwistData& T);
CriticalInterval critical_integers_oracle(const TwistData& T);

// Critical integers of the rank-one motive attached to chi alone.
CriticalInterval character_critical_integers(const HeckeCharacter& chi);
// 0 when some critical integer of chi is even, 1 otherwise.
int character_t_parity(const HeckeCharacter& chi);

struct SingleCriticalResult {
  bool satisfiable = false;
  int w0 = 0;
  long long search_bound = 0;
  int r = 0;
  std::optional<HeckeCharacter> psi;  // absent when w0/2 has the wrong parity for the differences
  std::optional<HeckeCharacter> chi;
  long long critical_integer = 0;
  std::string note;
};

// Smallest positive w0 with w0 = n (2), (2r'-n) | w0 for n/2 < r' < n, 4 | (w0+n).
std::optional<int> single_critical_weight(int n, long long bound);
SingleCriticalResult build_single_critical_character(const HodgeData& M, const CMType& phi, int r);

}  // namespace periodcalc
