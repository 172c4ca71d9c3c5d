/* Copyright 2026 periodcalc contributors.
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at http://www.apache.org/licenses/LICENSE-2.0
 */
#include "periodcalc/critical_calculus.hpp"

#include <algorithm>
#include <climits>
#include <cstdlib>
#include <set>

#include "periodcalc/errors.hpp"

namespace periodcalc {

namespace {

bool is_even(long long x) { return x % 2 == 0; }

long long floor_div2(long long x) { return x >= 0 ? x / 2 : -((-x + 1) / 2); }

bool same_base(const HodgeData& M, const HeckeCharacter& chi) {
  const auto& a = M.K->embeddings;
  const auto& b = chi.extension->base->embeddings;
  return std::set<std::string>(a.begin(), a.end()) == std::set<std::string>(b.begin(), b.end());
}

// The embedding over sigma with the larger exponent.
std::string top_tau(const HeckeCharacter& chi, const CMType& phi, const std::string& sigma) {
  const std::string& t = phi.over(sigma);
  const std::string& tb = chi.extension->conj(t);
  return chi.n(t) >= chi.n(tb) ? t : tb;
}

}  // namespace

std::vector<long long> CriticalInterval::values() const {
  std::vector<long long> v;
  for (long long k = lo + 1; k <= hi; ++k) v.push_back(k);
  return v;
}

void TwistData::validate() const {
  M.validate();
  chi.validate();
  if (!same_base(M, chi)) fail(ErrorCode::InvalidInput, "motive and character live over different fields");
  if (phi.extension->embeddings != chi.extension->embeddings) {
    fail(ErrorCode::InvalidInput, "CM type and character use different extensions");
  }
  validate_cm_type(chi.extension, phi.members, phi.label);
}

int t_invariant(const HeckeCharacter& chi, const std::string& sigma) {
  if (!is_critical(chi)) fail(ErrorCode::NotCritical, "character " + chi.label + " is not critical");
  const auto fib = chi.extension->fiber(sigma);
  if (fib.size() != 2) fail(ErrorCode::InvalidInput, "unknown embedding " + sigma);
  return std::abs(chi.n(fib[0]) - chi.n(fib[1]));
}

bool has_critical_values(const TwistData& T) {
  if (!is_critical(T.chi)) return false;
  for (const auto& s : T.M.K->embeddings) {
    const int t = t_invariant(T.chi, s);
    for (const auto& f : T.M.E.embeddings) {
      for (int p : T.M.p(s, f)) {
        if (t == T.M.weight - 2 * p) return false;
      }
    }
  }
  return true;
}

int r_index(const TwistData& T, const std::string& sigma, const std::string& phi) {
  if (!has_critical_values(T)) fail(ErrorCode::NoCriticalValues, T.label() + " has no critical values");
  const int t = t_invariant(T.chi, sigma);
  int r = 0;
  for (int p : T.M.p(sigma, phi)) {
    if (T.M.weight - 2 * p < t) ++r;
  }
  return r;
}

HeckeCharacter build_interval_twist(const HodgeData& M, const CMType& phi, int r,
                                    const std::string& phi_E, std::optional<int> w0) {
  const int n = M.rank;
  const int w = M.weight;
  if (r < 0 || r > n) fail(ErrorCode::RangeError, "r must lie in 0..n");
  if (!M.E.has(phi_E)) fail(ErrorCode::InvalidInput, "unknown coefficient embedding " + phi_E);
  if (is_even(n) && r == n / 2 && r > 0) {
    for (const auto& s : M.K->embeddings) {
      if (M.p_at(s, phi_E, n / 2) == M.p_at(s, phi_E, n / 2 + 1) + 1) {
        fail(ErrorCode::MidpointDegenerate, "r = n/2 twist is not critical at " + s);
      }
    }
  }
  std::map<std::string, int> a;
  if (r > 0) {
    for (const auto& t : phi.members) {
      const auto& s = phi.extension->restrict_to_base(t);
      a[t] = w - 2 * M.p_at(s, phi_E, r) + 1;
    }
  } else {
    int lowest = INT_MAX;
    for (const auto& s : M.K->embeddings) {
      for (const auto& f : M.E.embeddings) lowest = std::min(lowest, w - 2 * M.p_at(s, f, 1));
    }
    int a0 = lowest - 1;
    if (!is_even(a0 - (w + 1))) --a0;
    for (const auto& t : phi.members) a[t] = a0;
  }
  const int weight0 = w0.value_or(is_even(w) ? 1 : 0);
  const std::string label = "chi^(" + std::to_string(r) + "," + phi_E + ")";
  HeckeCharacter chi = construct_with_differences(phi, a, weight0, label);
  chi.value_field_label = "F/Q(" + label + ")";
  return chi;
}

int interval_lemma_value(int n, int r) { return r <= n / 2 ? n - r : r; }

bool verify_interval_lemma(const HodgeData& M, const CMType& phi, int r, const std::string& phi_E) {
  const HeckeCharacter chi = build_interval_twist(M, phi, r, phi_E);
  const TwistData T{M, chi, phi};
  if (!has_critical_values(T)) return false;
  const int expected = interval_lemma_value(M.rank, r);
  for (const auto& s : M.K->embeddings) {
    if (r_index(T, s, phi_E) != expected) return false;
  }
  return true;
}

CriticalInterval critical_integers(const TwistData& T) {
  for (const auto& s : T.M.K->embeddings) {
    for (const auto& f : T.M.E.embeddings) {
      if (r_index(T, s, f) != T.M.rank) {
        fail(ErrorCode::NotInTopInterval, "r-index below n at (" + s + "," + f + ")");
      }
    }
  }
  // Hodge numbers may move with the coefficient embedding, so intersect over all of them.
  CriticalInterval I{LLONG_MIN, LLONG_MAX};
  for (const auto& s : T.M.K->embeddings) {
    const std::string tau = top_tau(T.chi, T.phi, s);
    const std::string taub = T.chi.extension->conj(tau);
    for (const auto& f : T.M.E.embeddings) {
      I.lo = std::max<long long>(I.lo, T.M.p_at(s, f, 1) + T.chi.n(taub));
      I.hi = std::min<long long>(I.hi, T.M.p_at(s, f, T.M.rank) + T.chi.n(tau));
    }
  }
  return I;
}

CriticalInterval critical_integers_oracle(const TwistData& T) {
  const long long wtot = static_cast<long long>(T.M.weight) + T.chi.weight;
  CriticalInterval I{LLONG_MIN, LLONG_MAX};
  for (const auto& s : T.M.K->embeddings) {
    const auto fib = T.chi.extension->fiber(s);
    for (const auto& f : T.M.E.embeddings) {
      long long below = LLONG_MIN, above = LLONG_MAX;
      for (int p : T.M.p(s, f)) {
        for (const auto& t : fib) {
          const long long type = static_cast<long long>(p) + T.chi.n(t);
          if (2 * type == wtot) fail(ErrorCode::MiddleTypePresent, "middle Hodge type at " + s);
          if (2 * type < wtot) below = std::max(below, type);
          else above = std::min(above, type);
        }
      }
      I.lo = std::max(I.lo, below);
      I.hi = std::min(I.hi, above);
    }
  }
  return I;
}

CriticalInterval character_critical_integers(const HeckeCharacter& chi) {
  if (!is_critical(chi)) fail(ErrorCode::NotCritical, "character " + chi.label + " is not critical");
  CriticalInterval I{LLONG_MIN, LLONG_MAX};
  for (const auto& s : chi.extension->base->embeddings) {
    const auto fib = chi.extension->fiber(s);
    const long long a = chi.n(fib[0]), b = chi.n(fib[1]);
    I.lo = std::max(I.lo, std::min(a, b));
    I.hi = std::min(I.hi, std::max(a, b));
  }
  return I;
}

int character_t_parity(const HeckeCharacter& chi) {
  const CriticalInterval I = character_critical_integers(chi);
  if (I.empty()) return 1;
  // Some even integer lies in (lo, hi] unless the interval is a single odd integer.
  if (I.size() >= 2) return 0;
  return is_even(I.hi) ? 0 : 1;
}

std::optional<int> single_critical_weight(int n, long long bound) {
  for (long long w0 = 1; w0 <= bound; ++w0) {
    if (!is_even(w0 - n)) continue;
    if ((w0 + n) % 4 != 0) continue;
    bool ok = true;
    for (int r = n / 2 + 1; r <= n - 1 && ok; ++r) ok = (w0 % (2 * r - n)) == 0;
    if (ok) return static_cast<int>(w0);
  }
  return std::nullopt;
}

SingleCriticalResult build_single_critical_character(const HodgeData& M, const CMType& phi, int r) {
  const int n = M.rank;
  if (!is_even(n)) fail(ErrorCode::InvalidInput, "the construction needs even rank");
  if (M.weight != n - 1) fail(ErrorCode::InvalidInput, "the construction needs weight n-1");
  if (r < n / 2 + 1 || r > n - 1) fail(ErrorCode::RangeError, "r must lie in n/2+1..n-1");
  const std::string& one = M.E.one();
  auto a = [&](const std::string& s, int i) { return M.p_at(s, one, i) - n + i; };
  const auto& sig = M.K->embeddings;
  for (const auto& s : sig) {
    if (!is_even(a(s, r) - a(sig.front(), r))) {
      fail(ErrorCode::ParityHypothesisFailed, "a_{sigma,r} parity differs at " + s);
    }
    for (int rr = n / 2 + 1; rr <= n - 1; ++rr) {
      if (!is_even(a(s, rr + 1) - a(s, rr) - 1)) {
        fail(ErrorCode::ParityHypothesisFailed,
             "a_{sigma,r+1} = a_{sigma,r} + 1 (mod 2) fails at " + s + ", r=" + std::to_string(rr));
      }
    }
  }
  SingleCriticalResult res;
  res.r = r;
  long long bound = 8;
  for (int i = 2; i <= n; ++i) bound *= i;
  res.search_bound = bound;
  const auto w0 = single_critical_weight(n, bound);
  if (!w0) {
    res.satisfiable = false;
    res.note = "UNSAT: no positive w0 up to the search bound meets the three congruences";
    return res;
  }
  res.satisfiable = true;
  res.w0 = *w0;
  std::map<std::string, int> d, d2;
  for (const auto& t : phi.members) {
    const auto& s = phi.extension->restrict_to_base(t);
    d[t] = n / 2 - M.p_at(s, one, r);
    d2[t] = 2 * d[t];
  }
  const std::string chi_label = "chi^(" + std::to_string(r) + ",1)";
  bool psi_ok = true;
  for (const auto& [t, v] : d) psi_ok = psi_ok && is_even(v - *w0 / 2);
  HeckeCharacter chi;
  if (psi_ok) {
    HeckeCharacter psi = construct_with_differences(phi, d, *w0 / 2, "psi^(" + std::to_string(r) + ",1)");
    chi = chi_from_psi(psi);
    res.psi = psi;
  } else {
    chi = construct_with_differences(phi, d2, *w0);
    res.note = "w0/2 and m_tau - m_taubar have different parity; chi built directly from its differences";
  }
  chi.label = chi_label;
  chi.value_field_label = "F/Q(" + chi_label + ")";
  res.chi = chi;
  const CriticalInterval I = critical_integers_oracle(TwistData{M, chi, phi});
  res.critical_integer = I.size() == 1 ? I.hi : floor_div2(n + *w0);
  if (I.size() != 1 || I.hi * 2 != n + *w0) {
    res.note += (res.note.empty() ? "" : "; ") + std::string("critical set is not the expected singleton");
  }
  return res;
}

}  // namespace periodcalc
