/* Copyright 2026 periodcalc contributors.
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at http://www.apache.org/licenses/LICENSE-2.0
 */
#include "periodcalc/period_formulas.hpp"

#include <set>

#include "periodcalc/errors.hpp"

namespace periodcalc {

namespace {
using A = AmbiguityField;
int ceil_half(int n) { return (n + 1) / 2; }
}  // namespace

PeriodExpression local_character_factor(const HeckeCharacter& chi, const CMType& phi, const std::string& sigma,
                                        int r, int n, int n_plus) {
  const std::string& c = chi.label;
  const long long w = chi.weight;
  const int h = ceil_half(n);
  PeriodExpression x(A{A::vf(chi.value_field_label), A::sigma(sigma)});
  x.multiply(gen::two_pi_i(), -h * w);
  x.multiply(gen::g_sigma(c, sigma), r);
  if (n % 2 != 0) {
    // a^-(chi) = (2pi i)^w G^-1 c^+ when n+ > n-, a^+ uses c^- otherwise.
    const int sign = n_plus > n - n_plus ? 1 : -1;
    x.multiply(gen::two_pi_i(), w);
    x.multiply(gen::g_sigma(c, sigma), -1);
    x.multiply(gen::cplus_sigma(c, sigma, sign), 1);
  }
  const long long q = r - h;
  x.multiply(gen::two_pi_i(), w * q);
  x.multiply(gen::g_sigma(c, sigma), -2 * q);
  x.multiply(gen::e_tau(c, phi.over(sigma)), q);
  x.multiply(gen::cplus_sigma(c, sigma, 1), 2 * q);
  return x;
}

PeriodExpression deligne_period_expr(const TwistData& T, const std::string& sigma, const std::string& phi) {
  const int r = r_index(T, sigma, phi);
  const int n = T.M.rank;
  PeriodExpression x = local_character_factor(T.chi, T.phi, sigma, r, n, T.M.n_plus);
  x.multiply(gen::delta_sigma(T.M.label, sigma), 1);
  for (int j = 1; j <= n - r; ++j) x.multiply(gen::quad_sigma(T.M.label, sigma, phi, j), 1);
  x.join(A{A::E(), A::vf(T.chi.value_field_label), A::sigma(sigma)});
  return x;
}

PeriodExpression globalize(const std::map<std::string, PeriodExpression>& local, const std::vector<std::string>& sigmas,
                           const std::string& K, long long nexp, const PeriodContext& ctx) {
  PeriodExpression x;
  for (const auto& s : sigmas) {
    auto it = local.find(s);
    if (it == local.end()) fail(ErrorCode::MissingSigma, "no local expression for " + s);
    x *= it->second;
  }
  x.multiply(gen::disc_half(K), nexp);
  x.join(A{A::kgal()});

  // key (generator with sigma slot blanked) -> sigma -> exponent
  std::map<Generator, std::map<std::string, long long>> families;
  for (const auto& [g, e] : x.exponents()) {
    switch (g.kind) {
      case GenKind::DeltaSigma:
      case GenKind::CPlusSigma:
      case GenKind::GSigma:
      case GenKind::QuadSigma: {
        Generator key = g;
        key.s[1].clear();
        families[key][g.s[1]] = e;
        break;
      }
      default: break;
    }
  }
  const std::set<std::string> all(sigmas.begin(), sigmas.end());
  for (const auto& [key, per] : families) {
    if (per.size() != all.size()) continue;
    const long long e = per.begin()->second;
    bool uniform = true;
    for (const auto& [s, f] : per) uniform = uniform && all.count(s) && f == e;
    if (!uniform) continue;
    for (const auto& [s, f] : per) {
      Generator g = key;
      g.s[1] = s;
      x.multiply(g, -f);
    }
    switch (key.kind) {
      case GenKind::DeltaSigma: {
        // delta(M) ~ D^{n/2} prod delta_sigma
        const MotiveInfo* m = ctx.motive(key.s[0]);
        const long long n = m ? m->rank : 0;
        x.multiply(gen::delta_total(key.s[0]), e);
        x.multiply(gen::disc_half(K), -n * e);
        break;
      }
      case GenKind::CPlusSigma:
        x.multiply(gen::cplus_total(key.s[0], static_cast<int>(key.i[0])), e);
        x.multiply(gen::disc_half(K), -e);
        break;
      case GenKind::GSigma: x.multiply(gen::g_total(key.s[0]), e); break;
      case GenKind::QuadSigma: x.multiply(gen::quad_total(key.s[0], key.s[2], static_cast<int>(key.i[0])), e); break;
      default: break;
    }
  }
  return x;
}

PeriodExpression tate_twist_expr(const PeriodExpression& expr, const TwistData& T, long long k) {
  PeriodExpression x = expr;
  const long long d = T.M.K->degree();
  x.multiply(gen::two_pi_i(), d * k * T.M.rank);
  const long long sign = (k % 2 == 0) ? 1 : -1;
  for (const auto& t : T.phi.members) x.multiply(gen::e_tau(T.chi.label, t), sign);
  x.join(A{A::E(), A::vf(T.chi.value_field_label), A::kgal()});
  return x;
}

PeriodExpression cplus_global(const TwistData& T, const std::string& phi, const PeriodContext& ctx) {
  std::map<std::string, PeriodExpression> local;
  for (const auto& s : T.M.K->embeddings) local[s] = deligne_period_expr(T, s, phi);
  return globalize(local, T.M.K->embeddings, T.M.K->label, T.M.rank, ctx);
}

PeriodExpression cplus_twist_chain(const TwistData& T, long long k, const std::string& phi, const PeriodContext& ctx) {
  return tate_twist_expr(cplus_global(T, phi, ctx), T, k);
}

PeriodExpression p_chi_definition(const HeckeCharacter& chi, const CMType& phi, int r, int n, int n_plus,
                                  const PeriodContext& ctx) {
  std::map<std::string, PeriodExpression> local;
  const auto& sig = chi.extension->base->embeddings;
  for (const auto& s : sig) local[s] = local_character_factor(chi, phi, s, r, n, n_plus);
  PeriodExpression x = globalize(local, sig, chi.extension->base->label, 0, ctx);
  x.join(A{A::vf(chi.value_field_label)});
  return x;
}

PeriodExpression p_chi_expr(const HeckeCharacter& chi, const CMType& phi, int r, int n) {
  if (r <= n / 2 || r > n) fail(ErrorCode::RangeError, "need floor(n/2) < r <= n");
  for (const auto& t : phi.members) {
    if (chi.n(t) <= chi.n(chi.extension->conj(t))) {
      fail(ErrorCode::InvalidInput, "n_tau > n_taubar fails at " + t);
    }
  }
  const long long d = chi.extension->base->degree();
  const long long s = n - r;
  PeriodExpression x(A{A::vf(chi.value_field_label), A::kgal()});
  x.multiply(gen::two_pi_i(), -d * chi.weight * s);
  x.multiply(gen::g_total(chi.label), s);
  x.multiply(gen::cm_period("check", chi.label, phi.label), r - s);
  return x;
}

}  // namespace periodcalc
