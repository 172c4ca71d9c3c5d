/* Copyright 2026 periodcalc contributors.
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at http://www.apache.org/licenses/LICENSE-2.0
 */
#include "periodcalc/random_instances.hpp"

#include <algorithm>
#include <climits>

#include "periodcalc/errors.hpp"

namespace periodcalc::random {

namespace {
int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }
}  // namespace

FieldPtr totally_real(Rng& rng, int max_degree) {
  const int d = uniform(rng, 1, std::max(1, max_degree));
  std::vector<std::string> em;
  for (int i = 1; i <= d; ++i) em.push_back("s" + std::to_string(i));
  return TotallyRealField::make(d == 1 ? "Q" : "K", em);
}

CoefficientField coefficients(Rng& rng, int max_embeddings) {
  const int m = uniform(rng, 1, std::max(1, max_embeddings));
  std::vector<std::string> em;
  for (int i = 1; i <= m; ++i) em.push_back(std::to_string(i));
  return CoefficientField::make(m == 1 ? "E" : "E" + std::to_string(m), em);
}

CMType standard_type(const ExtensionPtr& L) {
  std::set<std::string> mem;
  for (const auto& s : L->base->embeddings) mem.insert(L->fiber(s)[0]);
  return validate_cm_type(L, mem);
}

HodgeData regular_hodge(Rng& rng, int n, const FieldPtr& K, const CoefficientField& E) {
  HodgeData M;
  M.K = K;
  M.E = E;
  M.rank = n;
  // odd rank needs even weight
  int w = uniform(rng, -3, 5);
  if (n % 2 != 0 && w % 2 != 0) ++w;
  M.weight = w;
  std::map<std::string, std::vector<int>> col;
  for (const auto& s : K->embeddings) {
    // p_1 > ... > p_n with p_i + p_{n+1-i} = w: pick the upper half by gaps
    std::vector<int> p(n);
    const int h = n / 2;
    int cur;
    if (n % 2 != 0) {
      cur = w / 2;
      p[h] = cur;
    } else {
      // smallest value strictly above w/2
      const int floor_half = w >= 0 ? w / 2 : -((-w + 1) / 2);
      cur = floor_half + 1 + uniform(rng, 0, 1);
      p[h - 1] = cur;
      p[h] = w - cur;
    }
    const int start = n % 2 != 0 ? h - 1 : h - 2;
    for (int i = start; i >= 0; --i) {
      cur += uniform(rng, 1, 3);
      p[i] = cur;
      p[n - 1 - i] = w - cur;
    }
    col[s] = p;
  }
  std::vector<std::string> order = K->embeddings;
  for (size_t fi = 0; fi < E.embeddings.size(); ++fi) {
    if (fi > 0) std::shuffle(order.begin(), order.end(), rng);
    for (size_t i = 0; i < K->embeddings.size(); ++i) M.hodge[{K->embeddings[i], E.embeddings[fi]}] = col[order[i]];
  }
  M.n_plus = uniform(rng, 0, n);
  M.n_minus = n - M.n_plus;
  M.polarization = w % 2 == 0 ? Polarization::Symmetric : Polarization::Alternating;
  M.validate();
  return M;
}

GLnWeight self_dual_weight(Rng& rng, const FieldPtr& K, int n, int spread) {
  GLnWeight wt;
  wt.K = K;
  for (const auto& s : K->embeddings) {
    std::vector<int> a(n, 0);
    int cur = 0;
    for (int i = n / 2 - 1; i >= 0; --i) {
      cur += uniform(rng, 0, spread);
      a[i] = cur;
      a[n - 1 - i] = -cur;
    }
    wt.a[s] = a;
  }
  return wt;
}

MainInstance main_instance(Rng& rng, const MainOptions& opts) {
  for (int attempt = 0; attempt < 1000; ++attempt) {
    const FieldPtr K = totally_real(rng, opts.max_degree);
    const CoefficientField E;
    HodgeFromWeightOptions ho;
    ho.delta_hypothesis = opts.delta_hypothesis;
    ho.n_plus = opts.n_plus;
    const HodgeData M = hodge_from_weight(self_dual_weight(rng, K, opts.n, 2), E, ho);
    const ExtensionPtr L = CMExtension::standard(K, "L");
    const CMType phi = standard_type(L);
    int bound = INT_MIN;
    for (const auto& s : K->embeddings) bound = std::max(bound, opts.n - M.p_at(s, "1", opts.n));
    const int w = uniform(rng, -3, 3);
    std::map<std::string, int> inf;
    for (const auto& s : K->embeddings) {
      int D = bound + uniform(rng, 1, 4);
      if ((D - w) % 2 != 0) ++D;
      const auto& t = phi.over(s);
      inf[t] = (w + D) / 2;
      inf[L->conj(t)] = (w - D) / 2;
    }
    HeckeCharacter psi = HeckeCharacter::make(L, inf, w, "psi");
    psi.value_field_label = "Q(psi)";
    MainInstance out{M, psi, {}};
    try {
      const HeckeCharacter chi = chi_from_psi(psi);
      const TwistData T{M, chi, phi};
      const CriticalInterval I = critical_integers_oracle(T);
      for (long long k : I.values()) {
        if (k > w + opts.n) out.ks.push_back(k);
      }
    } catch (const Error&) {
      continue;
    }
    if (!out.ks.empty()) return out;
  }
  fail(ErrorCode::InvalidInput, "could not sample a main-theorem instance");
}

}  // namespace periodcalc::random
