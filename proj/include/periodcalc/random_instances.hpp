/* Copyright 2026 periodcalc contributors.
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at http://www.apache.org/licenses/LICENSE-2.0
 */
#pragma once

#include <optional>
#include <random>
#include <vector>

#include "periodcalc/critical_calculus.hpp"

namespace periodcalc::random {

using Rng = std::mt19937_64;

// Embeddings s1..sd; label "Q" when d == 1.
FieldPtr totally_real(Rng& rng, int max_degree);
CoefficientField coefficients(Rng& rng, int max_embeddings);
// Standard CM type {t<sigma>} on CMExtension::standard.
CMType standard_type(const ExtensionPtr& L);

// Regular pure Hodge data of rank n; columns for the second coefficient embedding permute sigma.
HodgeData regular_hodge(Rng& rng, int n, const FieldPtr& K, const CoefficientField& E);

GLnWeight self_dual_weight(Rng& rng, const FieldPtr& K, int n, int spread);

struct MainInstance {
  HodgeData M;
  HeckeCharacter psi;
  std::vector<long long> ks;  // critical k > w + n
};

struct MainOptions {
  int n = 2;
  int max_degree = 2;
  bool delta_hypothesis = false;
  std::optional<int> n_plus;
};

// Automorphic M with a psi meeting the size condition and at least one admissible k.
MainInstance main_instance(Rng& rng, const MainOptions& opts);

}  // namespace periodcalc::random
