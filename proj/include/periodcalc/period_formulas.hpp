/* Copyright 2026 periodcalc contributors.
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at http://www.apache.org/licenses/LICENSE-2.0
 */
#pragma once

#include <map>
#include <string>

#include "periodcalc/critical_calculus.hpp"
#include "periodcalc/period_algebra.hpp"

namespace periodcalc {

// (2pi i)^{-ceil(n/2) w} G_s^r a*_s Q_s^{r - ceil(n/2)}: the part of c+_s(M(chi)) coming from chi.
PeriodExpression local_character_factor(const HeckeCharacter& chi, const CMType& phi, const std::string& sigma,
                                        int r, int n, int n_plus);

// c+_sigma(M(chi)) at the (sigma, phi) coordinate.
PeriodExpression deligne_period_expr(const TwistData& T, const std::string& sigma, const std::string& phi);

// Product over sigma times D_K^{nexp/2}; equal-exponent sigma families become global periods.
PeriodExpression globalize(const std::map<std::string, PeriodExpression>& local, const std::vector<std::string>& sigmas,
                           const std::string& K, long long nexp, const PeriodContext& ctx);

// c+(M(chi)) -> c+(M(chi)(k)).
PeriodExpression tate_twist_expr(const PeriodExpression& expr, const TwistData& T, long long k);

// c+(M(chi)) = globalize(deligne_period_expr(T, sigma, phi)), unnormalized.
PeriodExpression cplus_global(const TwistData& T, const std::string& phi, const PeriodContext& ctx);
// tate_twist_expr(cplus_global(T, phi), k), unnormalized.
PeriodExpression cplus_twist_chain(const TwistData& T, long long k, const std::string& phi, const PeriodContext& ctx);

// P(chi) = prod_sigma P_sigma(chi), globalized; the definition side.
PeriodExpression p_chi_definition(const HeckeCharacter& chi, const CMType& phi, int r, int n, int n_plus,
                                  const PeriodContext& ctx);
// (2pi i)^{-d w0 s} G(chi)^s p(check chi; Phi)^{r-s}; the closed form.
PeriodExpression p_chi_expr(const HeckeCharacter& chi, const CMType& phi, int r, int n);

}  // namespace periodcalc
