/* Copyright 2026 periodcalc contributors.
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at http://www.apache.org/licenses/LICENSE-2.0
 */
#include "periodcalc/hodge_motives.hpp"

#include <algorithm>

#include "periodcalc/errors.hpp"

namespace periodcalc {

namespace {

std::string key_str(const std::string& sigma, const std::string& phi) { return sigma + "|" + phi; }

bool is_even(long long x) { return x % 2 == 0; }

}  // namespace

const std::vector<int>& HodgeData::p(const std::string& sigma, const std::string& phi) const {
  auto it = hodge.find({sigma, phi});
  if (it == hodge.end()) fail(ErrorCode::InvalidInput, "no Hodge numbers for " + key_str(sigma, phi));
  return it->second;
}

int HodgeData::p_at(const std::string& sigma, const std::string& phi, int i) const {
  const auto& v = p(sigma, phi);
  if (i < 1 || i > static_cast<int>(v.size())) fail(ErrorCode::RangeError, "Hodge index out of range");
  return v[static_cast<std::size_t>(i - 1)];
}

void HodgeData::validate() const {
  if (!K) fail(ErrorCode::InvalidInput, "motive without base field");
  if (rank < 1) fail(ErrorCode::InvalidInput, "rank must be positive", "/rank");
  for (const auto& s : K->embeddings) {
    for (const auto& f : E.embeddings) {
      auto it = hodge.find({s, f});
      const std::string ptr = "/hodge/" + key_str(s, f);
      if (it == hodge.end()) fail(ErrorCode::InvalidInput, "missing Hodge column " + key_str(s, f), ptr);
      const auto& v = it->second;
      if (static_cast<int>(v.size()) != rank) fail(ErrorCode::InvalidInput, "Hodge column has wrong length", ptr);
      for (int i = 0; i + 1 < rank; ++i) {
        if (v[i] <= v[i + 1]) fail(ErrorCode::InvalidInput, "Hodge numbers not strictly decreasing", ptr);
      }
      for (int i = 0; i < rank; ++i) {
        if (v[i] + v[rank - 1 - i] != weight) fail(ErrorCode::InvalidInput, "Hodge numbers violate purity", ptr);
      }
    }
  }
  if (hodge.size() != K->embeddings.size() * E.embeddings.size()) {
    fail(ErrorCode::InvalidInput, "Hodge table mentions unknown embeddings", "/hodge");
  }
  if (epsilon != 1 && epsilon != -1) fail(ErrorCode::InvalidInput, "epsilon must be +1 or -1", "/epsilon");
  if (n_plus < 0 || n_minus < 0 || n_plus + n_minus != rank) {
    fail(ErrorCode::InvalidInput, "n_plus + n_minus must equal the rank", "/n_plus");
  }
  if (!is_even(rank) && !is_even(weight)) fail(ErrorCode::InvalidInput, "odd rank forces even weight", "/weight");
  if ((polarization == Polarization::Symmetric) != is_even(weight)) {
    fail(ErrorCode::InvalidInput, "polarization must be symmetric exactly when the weight is even",
         "/polarization");
  }
  std::vector<int> reference;
  for (std::size_t fi = 0; fi < E.embeddings.size(); ++fi) {
    std::vector<int> all;
    for (const auto& s : K->embeddings) {
      const auto& v = hodge.at({s, E.embeddings[fi]});
      all.insert(all.end(), v.begin(), v.end());
    }
    std::sort(all.begin(), all.end());
    if (fi == 0) {
      reference = std::move(all);
    } else if (all != reference) {
      fail(ErrorCode::InvalidInput, "Hodge multiset depends on the coefficient embedding", "/hodge");
    }
  }
}

int GLnWeight::rank() const { return a.empty() ? 0 : static_cast<int>(a.begin()->second.size()); }

void GLnWeight::validate() const {
  if (!K) fail(ErrorCode::InvalidInput, "weight without base field");
  const int n = rank();
  if (n < 1) fail(ErrorCode::InvalidInput, "weight of rank zero", "/weight");
  for (const auto& s : K->embeddings) {
    auto it = a.find(s);
    if (it == a.end()) fail(ErrorCode::InvalidInput, "missing weight for " + s, "/weight/" + s);
    if (static_cast<int>(it->second.size()) != n) fail(ErrorCode::InvalidInput, "ragged weight", "/weight/" + s);
    for (int i = 0; i + 1 < n; ++i) {
      if (it->second[i] < it->second[i + 1]) fail(ErrorCode::InvalidInput, "weight not decreasing", "/weight/" + s);
    }
  }
  if (a.size() != K->embeddings.size()) fail(ErrorCode::InvalidInput, "weight mentions unknown embeddings");
}

bool GLnWeight::is_self_dual() const {
  const int n = rank();
  for (const auto& [s, v] : a) {
    for (int i = 0; i < n; ++i) {
      if (v[i] != -v[n - 1 - i]) return false;
    }
  }
  return true;
}

HodgeData hodge_from_weight(const GLnWeight& wt, const CoefficientField& E,
                            const HodgeFromWeightOptions& opts) {
  wt.validate();
  if (!wt.is_self_dual()) fail(ErrorCode::NotSelfDual, "weight is not self-dual", "/weight");
  const int n = wt.rank();
  HodgeData M;
  M.K = wt.K;
  M.E = E;
  M.rank = n;
  M.weight = n - 1;
  M.label = opts.label;
  std::map<std::string, std::vector<int>> col1;
  for (const auto& s : wt.K->embeddings) {
    std::vector<int> p(n);
    for (int i = 1; i <= n; ++i) p[i - 1] = wt.a.at(s)[i - 1] + n - i;
    col1[s] = p;
  }
  for (const auto& f : E.embeddings) {
    std::map<std::string, std::string> perm;
    auto it = opts.permutations.find(f);
    if (f != E.one() && it != opts.permutations.end()) perm = it->second;
    std::set<std::string> image;
    for (const auto& s : wt.K->embeddings) {
      const std::string src = perm.count(s) ? perm.at(s) : s;
      if (!wt.K->has(src)) fail(ErrorCode::InvalidInput, "permutation target " + src + " not in J_K");
      image.insert(src);
      M.hodge[{s, f}] = col1.at(src);
    }
    if (image.size() != wt.K->embeddings.size()) {
      fail(ErrorCode::InvalidInput, "column map for " + f + " is not a permutation");
    }
  }
  M.n_plus = opts.n_plus.value_or((n + 1) / 2);
  M.n_minus = n - M.n_plus;
  M.epsilon = opts.epsilon;
  M.delta_hypothesis = opts.delta_hypothesis;
  M.polarization = is_even(M.weight) ? Polarization::Symmetric : Polarization::Alternating;
  M.validate();
  return M;
}

GLnWeight weight_from_hodge(const HodgeData& M) {
  GLnWeight wt;
  wt.K = M.K;
  const int n = M.rank;
  for (const auto& s : M.K->embeddings) {
    std::vector<int> a(n);
    for (int i = 1; i <= n; ++i) a[i - 1] = M.p_at(s, M.E.one(), i) - n + i;
    wt.a[s] = a;
  }
  return wt;
}

HodgeData tate_twist(const HodgeData& M, int k) {
  HodgeData out = M;
  out.weight = M.weight - 2 * k;
  for (auto& [key, v] : out.hodge) {
    for (auto& p : v) p -= k;
  }
  if (!is_even(k)) std::swap(out.n_plus, out.n_minus);
  return out;
}

DegreeReport restrict_scalars_degrees(const HodgeData& M, const std::vector<DescentDatum>& descent) {
  DegreeReport r;
  const long long d = M.K->degree();
  r.data_consistent = true;
  for (const auto& dd : descent) {
    r.sum_q += static_cast<long long>(dd.multiplicity) * dd.degree_over_Q;
    r.sum_k += static_cast<long long>(dd.multiplicity) * dd.degree_over_K;
    if (dd.degree_over_Q != static_cast<long long>(dd.degree_over_K) * d || dd.degree_over_K < 1) {
      r.data_consistent = false;
    }
  }
  r.q_identity = r.sum_q == d;
  r.k_identity = r.sum_k == 1;
  return r;
}

HodgeData base_change_motive(const HodgeData& M, const FieldPtr& Kj,
                             const std::map<std::string, std::string>& restriction) {
  HodgeData out = M;
  out.K = Kj;
  out.label = M.label + "_" + Kj->label;
  out.hodge.clear();
  for (const auto& s : Kj->embeddings) {
    auto it = restriction.find(s);
    if (it == restriction.end() || !M.K->has(it->second)) {
      fail(ErrorCode::InvalidInput, "embedding " + s + " does not restrict to J_K");
    }
    for (const auto& f : M.E.embeddings) out.hodge[{s, f}] = M.p(it->second, f);
  }
  out.validate();
  return out;
}

}  // namespace periodcalc
