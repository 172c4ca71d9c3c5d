/* Copyright 2026 periodcalc contributors.
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at http://www.apache.org/licenses/LICENSE-2.0
 */
#pragma once

#include <map>
#include <memory>
#include <set>
#include <string>
#include <vector>

namespace periodcalc {

// Fields are labeled finite sets of complex embeddings; no arithmetic.
struct TotallyRealField {
  std::string label;
  std::vector<std::string> embeddings;
  std::string galois_closure_label;

  int degree() const { return static_cast<int>(embeddings.size()); }
  bool has(const std::string& sigma) const;

  static std::shared_ptr<const TotallyRealField> make(std::string label,
                                                      std::vector<std::string> embeddings,
                                                      std::string galois_closure_label = {});
};

using FieldPtr = std::shared_ptr<const TotallyRealField>;

struct CMExtension {
  FieldPtr base;
  std::string label;
  std::vector<std::string> embeddings;
  std::map<std::string, std::string> conjugation;
  std::map<std::string, std::string> restriction;

  int degree() const { return static_cast<int>(embeddings.size()); }
  bool has(const std::string& tau) const { return conjugation.count(tau) != 0; }
  const std::string& conj(const std::string& tau) const;
  const std::string& restrict_to_base(const std::string& tau) const;
  // The two embeddings above sigma, in the order they were declared.
  std::vector<std::string> fiber(const std::string& sigma) const;

  static std::shared_ptr<const CMExtension> make(FieldPtr base, std::string label,
                                                 std::vector<std::string> embeddings,
                                                 std::map<std::string, std::string> conjugation,
                                                 std::map<std::string, std::string> restriction);

  // L = K(sqrt(-1))-style extension with embeddings "t<sigma>" and "tb<sigma>".
  static std::shared_ptr<const CMExtension> standard(FieldPtr base, std::string label = "L");
};

using ExtensionPtr = std::shared_ptr<const CMExtension>;

struct CMType {
  ExtensionPtr extension;
  std::set<std::string> members;
  std::string label = "Phi";

  bool contains(const std::string& tau) const { return members.count(tau) != 0; }
  // The member of the CM type lying over sigma.
  const std::string& over(const std::string& sigma) const;
};

struct CoefficientField {
  std::string label = "E";
  std::vector<std::string> embeddings{"1"};
  std::string distinguished = "1";

  bool has(const std::string& phi) const;
  const std::string& one() const;

  static CoefficientField make(std::string label, std::vector<std::string> embeddings,
                               std::string distinguished = "1");
};

CMType validate_cm_type(const ExtensionPtr& ext, const std::set<std::string>& members,
                        std::string label = "Phi");
CMType conjugate_type(const CMType& phi);

// Every subset of J_L that is a CM type, in a fixed order.
std::vector<CMType> all_cm_types(const ExtensionPtr& ext);

}  // namespace periodcalc
