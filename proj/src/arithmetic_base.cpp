/* Copyright 2026 periodcalc contributors.
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at http://www.apache.org/licenses/LICENSE-2.0
 */
#include "periodcalc/arithmetic_base.hpp"

#include <algorithm>

#include "periodcalc/errors.hpp"

namespace periodcalc {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidInput: return "InvalidInput";
    case ErrorCode::NotACMType: return "NotACMType";
    case ErrorCode::NotSelfDual: return "NotSelfDual";
    case ErrorCode::ParityMismatch: return "ParityMismatch";
    case ErrorCode::IncompatibleLift: return "IncompatibleLift";
    case ErrorCode::NotCritical: return "NotCritical";
    case ErrorCode::NoCriticalValues: return "NoCriticalValues";
    case ErrorCode::MidpointDegenerate: return "MidpointDegenerate";
    case ErrorCode::NotInTopInterval: return "NotInTopInterval";
    case ErrorCode::MiddleTypePresent: return "MiddleTypePresent";
    case ErrorCode::ParityHypothesisFailed: return "ParityHypothesisFailed";
    case ErrorCode::MissingSigma: return "MissingSigma";
    case ErrorCode::HypothesisFailed: return "HypothesisFailed";
    case ErrorCode::OutOfAutomorphicRange: return "OutOfAutomorphicRange";
    case ErrorCode::NotASubgroup: return "NotASubgroup";
    case ErrorCode::RangeError: return "RangeError";
  }
  return "Unknown";
}

bool TotallyRealField::has(const std::string& sigma) const {
  return std::find(embeddings.begin(), embeddings.end(), sigma) != embeddings.end();
}

FieldPtr TotallyRealField::make(std::string label, std::vector<std::string> embeddings,
                                std::string galois_closure_label) {
  if (embeddings.empty()) fail(ErrorCode::InvalidInput, "field " + label + " has no embeddings");
  std::set<std::string> seen;
  for (const auto& s : embeddings) {
    if (!seen.insert(s).second) fail(ErrorCode::InvalidInput, "duplicate embedding label " + s);
  }
  auto f = std::make_shared<TotallyRealField>();
  f->label = std::move(label);
  f->embeddings = std::move(embeddings);
  f->galois_closure_label =
      galois_closure_label.empty() ? f->label + "^Gal" : std::move(galois_closure_label);
  return f;
}

const std::string& CMExtension::conj(const std::string& tau) const {
  auto it = conjugation.find(tau);
  if (it == conjugation.end()) fail(ErrorCode::InvalidInput, "unknown embedding " + tau);
  return it->second;
}

const std::string& CMExtension::restrict_to_base(const std::string& tau) const {
  auto it = restriction.find(tau);
  if (it == restriction.end()) fail(ErrorCode::InvalidInput, "unknown embedding " + tau);
  return it->second;
}

std::vector<std::string> CMExtension::fiber(const std::string& sigma) const {
  std::vector<std::string> out;
  for (const auto& t : embeddings) {
    if (restriction.at(t) == sigma) out.push_back(t);
  }
  return out;
}

ExtensionPtr CMExtension::make(FieldPtr base, std::string label, std::vector<std::string> embeddings,
                               std::map<std::string, std::string> conjugation,
                               std::map<std::string, std::string> restriction) {
  if (!base) fail(ErrorCode::InvalidInput, "CM extension without base field");
  std::set<std::string> seen;
  for (const auto& t : embeddings) {
    if (!seen.insert(t).second) fail(ErrorCode::InvalidInput, "duplicate embedding label " + t);
    if (base->has(t)) fail(ErrorCode::InvalidInput, "embedding label " + t + " reused from base");
  }
  if (embeddings.size() != 2 * base->embeddings.size()) {
    fail(ErrorCode::InvalidInput, "|J_L| must be 2|J_K|");
  }
  for (const auto& t : embeddings) {
    auto c = conjugation.find(t);
    if (c == conjugation.end()) fail(ErrorCode::InvalidInput, "no conjugate for " + t, "/L/conjugation");
    if (!seen.count(c->second)) fail(ErrorCode::InvalidInput, "conjugate of " + t + " unknown", "/L/conjugation");
    if (c->second == t) fail(ErrorCode::InvalidInput, "conjugation fixes " + t, "/L/conjugation");
    if (conjugation.at(c->second) != t) fail(ErrorCode::InvalidInput, "conjugation not an involution at " + t, "/L/conjugation");
    auto r = restriction.find(t);
    if (r == restriction.end()) fail(ErrorCode::InvalidInput, "no restriction for " + t, "/L/restriction");
    if (!base->has(r->second)) fail(ErrorCode::InvalidInput, "restriction of " + t + " not in J_K", "/L/restriction");
  }
  if (conjugation.size() != embeddings.size() || restriction.size() != embeddings.size()) {
    fail(ErrorCode::InvalidInput, "structure maps mention unknown embeddings");
  }
  std::map<std::string, int> count;
  for (const auto& t : embeddings) {
    if (restriction.at(t) != restriction.at(conjugation.at(t))) {
      fail(ErrorCode::InvalidInput, "restriction not compatible with conjugation at " + t, "/L/restriction");
    }
    ++count[restriction.at(t)];
  }
  for (const auto& s : base->embeddings) {
    if (count[s] != 2) fail(ErrorCode::InvalidInput, "restriction is not 2-to-1 over " + s, "/L/restriction");
  }
  auto e = std::make_shared<CMExtension>();
  e->base = std::move(base);
  e->label = std::move(label);
  e->embeddings = std::move(embeddings);
  e->conjugation = std::move(conjugation);
  e->restriction = std::move(restriction);
  return e;
}

ExtensionPtr CMExtension::standard(FieldPtr base, std::string label) {
  std::vector<std::string> emb;
  std::map<std::string, std::string> conj, res;
  for (const auto& s : base->embeddings) {
    std::string t = "t" + s, tb = "tb" + s;
    emb.push_back(t);
    emb.push_back(tb);
    conj[t] = tb;
    conj[tb] = t;
    res[t] = s;
    res[tb] = s;
  }
  return make(std::move(base), std::move(label), std::move(emb), std::move(conj), std::move(res));
}

const std::string& CMType::over(const std::string& sigma) const {
  for (const auto& t : members) {
    if (extension->restrict_to_base(t) == sigma) return t;
  }
  fail(ErrorCode::InvalidInput, "CM type has no member over " + sigma);
}

bool CoefficientField::has(const std::string& phi) const {
  return std::find(embeddings.begin(), embeddings.end(), phi) != embeddings.end();
}

const std::string& CoefficientField::one() const {
  return distinguished.empty() ? embeddings.front() : distinguished;
}

CoefficientField CoefficientField::make(std::string label, std::vector<std::string> embeddings,
                                        std::string distinguished) {
  if (embeddings.empty()) fail(ErrorCode::InvalidInput, "coefficient field without embeddings");
  std::set<std::string> seen(embeddings.begin(), embeddings.end());
  if (seen.size() != embeddings.size()) fail(ErrorCode::InvalidInput, "duplicate embedding in J_E");
  if (!distinguished.empty() && !seen.count(distinguished)) {
    fail(ErrorCode::InvalidInput, "distinguished embedding " + distinguished + " not in J_E");
  }
  CoefficientField f;
  f.label = std::move(label);
  f.embeddings = std::move(embeddings);
  f.distinguished = std::move(distinguished);
  return f;
}

CMType validate_cm_type(const ExtensionPtr& ext, const std::set<std::string>& members,
                        std::string label) {
  for (const auto& t : members) {
    if (!ext->has(t)) fail(ErrorCode::InvalidInput, "embedding " + t + " not in J_L", "/cm_type");
  }
  for (const auto& s : ext->base->embeddings) {
    int hits = 0;
    for (const auto& t : ext->fiber(s)) hits += members.count(t) ? 1 : 0;
    if (hits == 0) fail(ErrorCode::NotACMType, "CM type misses the fiber over " + s, "/cm_type");
    if (hits > 1) fail(ErrorCode::NotACMType, "CM type meets the fiber over " + s + " twice", "/cm_type");
  }
  return CMType{ext, members, std::move(label)};
}

CMType conjugate_type(const CMType& phi) {
  std::set<std::string> out;
  for (const auto& t : phi.members) out.insert(phi.extension->conj(t));
  return CMType{phi.extension, std::move(out), phi.label + "bar"};
}

std::vector<CMType> all_cm_types(const ExtensionPtr& ext) {
  const auto& sig = ext->base->embeddings;
  std::vector<CMType> out;
  const std::size_t d = sig.size();
  for (std::size_t mask = 0; mask < (std::size_t{1} << d); ++mask) {
    std::set<std::string> m;
    for (std::size_t i = 0; i < d; ++i) m.insert(ext->fiber(sig[i])[(mask >> i) & 1]);
    out.push_back(CMType{ext, std::move(m), "Phi"});
  }
  return out;
}

}  // namespace periodcalc
