/* Copyright 2026 periodcalc contributors.
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at http://www.apache.org/licenses/LICENSE-2.0
 */
#include "periodcalc/theorems.hpp"

#include <algorithm>
#include <climits>

#include "periodcalc/errors.hpp"

namespace periodcalc {

namespace {

using A = AmbiguityField;

std::string describe(const Error& e) { return std::string(error_code_name(e.code())) + ": " + e.what(); }

PeriodExpression lhs_raw(const MainSetup& S, long long k) {
  const long long n = S.M.rank;
  const long long d = S.M.K->degree();
  const long long m = k - S.psi.weight;
  if (m <= n) {
    fail(ErrorCode::OutOfAutomorphicRange, "m = k - w = " + std::to_string(m) + " must exceed n = " + std::to_string(n));
  }
  const std::string& one = S.M.E.one();
  for (const auto& t : S.phi.members) {
    const auto& s = S.phi.extension->restrict_to_base(t);
    const long long top = S.M.p_at(s, one, S.M.rank) + S.psi.n(t) - S.psi.n(S.phi.extension->conj(t));
    if (m > top) {
      fail(ErrorCode::OutOfAutomorphicRange,
           "m = " + std::to_string(m) + " exceeds a_{tau,n} + m_tau - m_taubar = " + std::to_string(top) + " at " + t);
    }
  }
  PeriodExpression x(A{A::E(), A::vf(S.psi.value_field_label)}.join(A::e_pi()));
  x.multiply(gen::two_pi_i(), d * (m * n - n * (n - 1) / 2));
  x.multiply(gen::peterson(S.pi_label), 1);
  x.multiply(gen::cm_period("", S.psi.label, "h"), 1);
  x.multiply(gen::cm_period("inv", S.psi.label, "hbar"), 1);
  return x;
}

PeriodExpression rhs_closed(const MainSetup& S, long long k) {
  const long long n = S.M.rank;
  const long long d = S.M.K->degree();
  const long long w = S.psi.weight;
  PeriodExpression x(A{A::E(), A::vf(S.psi.value_field_label), A::kgal()});
  x.multiply(gen::two_pi_i(), d * (n * k - n * w - n * (n - 1) / 2));
  x.multiply(gen::cm_period("tilde", S.psi.label, S.phi.label), n);
  return x;
}

}  // namespace

VerifyReport compare_expressions(const PeriodExpression& lhs, const PeriodExpression& rhs,
                                 const AmbiguityField& bound) {
  VerifyReport r;
  r.lhs = lhs;
  r.rhs = rhs;
  r.bound = bound;
  r.ambiguity = lhs.ambiguity().join(rhs.ambiguity());
  PeriodExpression res;
  for (const auto& [g, e] : lhs.exponents()) res.multiply(g, e);
  for (const auto& [g, e] : rhs.exponents()) res.multiply(g, -e);
  PeriodExpression clean;
  for (const auto& [g, e] : res.exponents()) clean.multiply(g, e);
  r.residual = clean;
  const bool same = lhs.same_exponents(rhs);
  const bool within = r.ambiguity.leq(bound);
  if (!same) r.notes.push_back("exponent vectors differ");
  if (!within) r.notes.push_back("ambiguity " + r.ambiguity.text() + " exceeds " + bound.text());
  r.pass = same && within;
  return r;
}

MainSetup main_setup(const HodgeData& M, const HeckeCharacter& psi, PeriodContext& ctx) {
  M.validate();
  psi.validate();
  if (!is_critical(psi)) fail(ErrorCode::HypothesisFailed, "psi is not critical");
  CMType phi = positive_type(psi, "Phi");
  HeckeCharacter chi = chi_from_psi(psi);
  MainSetup S{M, psi, chi, phi, TwistData{M, chi, phi}, "pi(" + M.label + ")"};
  S.T.validate();
  ctx.add_twist(S.T);
  ctx.add_psi(psi, phi, M.rank);
  return S;
}

void check_main_hypotheses(const MainSetup& S, long long k, bool require_delta) {
  const int n = S.M.rank;
  if (S.M.weight != n - 1) fail(ErrorCode::HypothesisFailed, "M is not automorphic: weight must be n-1");
  if (require_delta && n % 2 != 0 && !S.M.delta_hypothesis) {
    fail(ErrorCode::HypothesisFailed, "n is odd and the delta hypothesis is not assumed");
  }
  const std::string& one = S.M.E.one();
  int bound = INT_MIN;
  for (const auto& s : S.M.K->embeddings) bound = std::max(bound, n - S.M.p_at(s, one, n));
  for (const auto& t : S.phi.members) {
    const int diff = S.psi.n(t) - S.psi.n(S.phi.extension->conj(t));
    if (diff <= bound) {
      fail(ErrorCode::HypothesisFailed, "infinity-type gap too small at " + t + ": m_tau - m_taubar = " +
                                            std::to_string(diff) + " <= " + std::to_string(bound));
    }
  }
  const CriticalInterval I = critical_integers_oracle(S.T);
  if (!I.contains(k)) {
    fail(ErrorCode::HypothesisFailed, "k = " + std::to_string(k) + " is not critical for " + S.T.label());
  }
  if (k <= S.psi.weight + n) fail(ErrorCode::HypothesisFailed, "k must exceed w + n");
}

PeriodExpression main_theorem_rhs(const HodgeData& M, const HeckeCharacter& psi, long long k) {
  PeriodContext ctx;
  const MainSetup S = main_setup(M, psi, ctx);
  check_main_hypotheses(S, k, true);
  return rhs_closed(S, k);
}

PeriodExpression main_theorem_lhs_raw(const HodgeData& M, const HeckeCharacter& psi, long long k) {
  PeriodContext ctx;
  return lhs_raw(main_setup(M, psi, ctx), k);
}

PeriodExpression main_theorem_lhs(const HodgeData& M, const HeckeCharacter& psi, long long k) {
  PeriodContext ctx;
  const MainSetup S = main_setup(M, psi, ctx);
  return normalize(lhs_raw(S, k), ctx);
}

VerifyReport verify_main_theorem(const HodgeData& M, const HeckeCharacter& psi, long long k) {
  const A bound{A::E(), A::vf(psi.value_field_label), A::lgal()};
  try {
    PeriodContext ctx;
    const MainSetup S = main_setup(M, psi, ctx);
    check_main_hypotheses(S, k, false);
    const PeriodExpression lhs = normalize(lhs_raw(S, k), ctx);
    const PeriodExpression rhs = normalize(cplus_twist_chain(S.T, k, M.E.one(), ctx), ctx);
    VerifyReport r = compare_expressions(lhs, rhs, bound);
    if (M.rank % 2 != 0 && !M.delta_hypothesis) r.notes.push_back("delta(M) has no rewrite: n odd, hypothesis off");
    return r;
  } catch (const Error& e) {
    VerifyReport r;
    r.bound = bound;
    r.notes.push_back(describe(e));
    return r;
  }
}

// ---- quadratic periods ------------------------------------------------------------------

QjSetup qj_setup(const HodgeData& M, const CMType& phi, const std::string& phi_E, int j, std::optional<int> w0,
                 PeriodContext& ctx) {
  M.validate();
  const int n = M.rank;
  if (j < 1 || j >= (n + 1) / 2) fail(ErrorCode::RangeError, "need 1 <= j < ceil(n/2)");
  HeckeCharacter lo = build_interval_twist(M, phi, n - j, phi_E, w0);
  HeckeCharacter hi = build_interval_twist(M, phi, n - j + 1, phi_E, w0);
  QjSetup Q{M, phi, phi_E, j, lo, hi, TwistData{M, lo, phi}, TwistData{M, hi, phi}};
  if (!ctx.motive(M.label)) ctx.add_motive(M);
  ctx.add_twist(Q.T_lo);
  ctx.add_twist(Q.T_hi);
  return Q;
}

namespace {

PeriodExpression qj_expr_impl(const QjSetup& Q, const PeriodContext& ctx) {
  const int n = Q.M.rank;
  const int j = Q.j;
  PeriodExpression x = PeriodExpression::of(gen::cplus_motive(Q.T_lo.label(), 0));
  x /= p_chi_definition(Q.chi_lo, Q.phi, n - j, n, Q.M.n_plus, ctx);
  if (j == 1) {
    x.multiply(gen::delta_total(Q.M.label), -1);
  } else {
    x.multiply(gen::cplus_motive(Q.T_hi.label(), 0), -1);
    x *= p_chi_definition(Q.chi_hi, Q.phi, n - j + 1, n, Q.M.n_plus, ctx);
  }
  x.join(A{A::E(), A::vf(Q.chi_lo.value_field_label), A::kgal()});
  if (j > 1) x.join(A{A::vf(Q.chi_hi.value_field_label)});
  return x;
}

void add_cplus_rules(const QjSetup& Q, const PeriodContext& ctx, std::map<Generator, PeriodExpression>& rules) {
  rules[gen::cplus_motive(Q.T_lo.label(), 0)] = cplus_global(Q.T_lo, Q.phi_E, ctx);
  rules[gen::cplus_motive(Q.T_hi.label(), 0)] = cplus_global(Q.T_hi, Q.phi_E, ctx);
}

}  // namespace

PeriodExpression qj_expr(const HodgeData& M, const CMType& phi, const std::string& phi_E, int j,
                         std::optional<int> w0) {
  PeriodContext ctx;
  return qj_expr_impl(qj_setup(M, phi, phi_E, j, w0, ctx), ctx);
}

VerifyReport verify_qj(const HodgeData& M, const CMType& phi, const std::string& phi_E, int j,
                       std::optional<int> w0) {
  PeriodContext ctx;
  const QjSetup Q = qj_setup(M, phi, phi_E, j, w0, ctx);
  std::map<Generator, PeriodExpression> rules;
  add_cplus_rules(Q, ctx, rules);
  const PeriodExpression lhs = normalize(substitute(qj_expr_impl(Q, ctx), rules), ctx);
  const PeriodExpression rhs = normalize(PeriodExpression::of(gen::quad_total(M.label, phi_E, j)), ctx);
  const A bound{A::E(), A::vf(Q.chi_lo.value_field_label), A::vf(Q.chi_hi.value_field_label), A::kgal()};
  return compare_expressions(lhs, rhs, bound);
}

VerifyReport verify_qj_telescoping(const HodgeData& M, const CMType& phi, const std::string& phi_E, int j,
                                   std::optional<int> w0) {
  PeriodContext ctx;
  std::map<Generator, PeriodExpression> rules;
  PeriodExpression prod;
  PeriodExpression quads;
  A bound{A::E(), A::kgal()};
  std::optional<QjSetup> last;
  for (int i = 1; i <= j; ++i) {
    QjSetup Q = qj_setup(M, phi, phi_E, i, w0, ctx);
    prod *= qj_expr_impl(Q, ctx);
    add_cplus_rules(Q, ctx, rules);
    quads.multiply(gen::quad_total(M.label, phi_E, i), 1);
    bound |= A{A::vf(Q.chi_lo.value_field_label), A::vf(Q.chi_hi.value_field_label)};
    last = std::move(Q);
  }
  const int n = M.rank;
  PeriodExpression direct = PeriodExpression::of(gen::cplus_motive(last->T_lo.label(), 0));
  direct /= p_chi_definition(last->chi_lo, phi, n - j, n, M.n_plus, ctx);
  direct.multiply(gen::delta_total(M.label), -1);

  const PeriodExpression lhs = normalize(substitute(prod, rules), ctx);
  const PeriodExpression rhs = normalize(quads, ctx);
  VerifyReport r = compare_expressions(lhs, rhs, bound);
  if (!prod.same_exponents(direct)) {
    r.pass = false;
    r.notes.push_back("product of Q_i expressions is not the telescoped quotient");
  }
  const PeriodExpression direct_n = normalize(substitute(direct, rules), ctx);
  if (!direct_n.same_exponents(rhs)) {
    r.pass = false;
    r.notes.push_back("direct s = j expansion does not reduce to prod Q_i");
  }
  return r;
}

QjLValueResult qj_lvalue(const HodgeData& M, const CMType& phi, int j) {
  const int n = M.rank;
  if (n % 2 != 0) fail(ErrorCode::InvalidInput, "the L-value form needs even n");
  if (M.weight != n - 1) fail(ErrorCode::InvalidInput, "the L-value form needs automorphic M (weight n-1)");
  if (j < 1 || j >= n / 2) fail(ErrorCode::RangeError, "need 1 <= j < n/2");
  const SingleCriticalResult sc = build_single_critical_character(M, phi, n - j);
  if (!sc.satisfiable) fail(ErrorCode::HypothesisFailed, "no admissible w0: " + sc.note);

  QjLValueResult out;
  out.w0 = sc.w0;
  out.k0 = (n + sc.w0) / 2;
  PeriodContext ctx;
  const std::string& one = M.E.one();
  const QjSetup Q = qj_setup(M, phi, one, j, sc.w0, ctx);
  const long long d = M.K->degree();
  const long long w0 = sc.w0;
  const long long m_lo = -w0 * j / (n - 2 * j);
  out.char_arguments.push_back(m_lo);

  PeriodExpression x(A{A::E(), A::vf("F"), A::lgal()});
  x.multiply(gen::lvalue_motive(Q.T_lo.label(), out.k0), 1);
  x.multiply(gen::lvalue_char(Q.chi_lo.label, m_lo), -(n - 2 * j));
  x.multiply(gen::g_total(Q.chi_lo.label), -j);
  if (j == 1) {
    x.multiply(gen::delta_total(M.label), -1);
    x.multiply(gen::two_pi_i(), -d * out.k0 * n);
  } else {
    const long long m_hi = -w0 * (j - 1) / (n - 2 * (j - 1));
    out.char_arguments.push_back(m_hi);
    x.multiply(gen::lvalue_motive(Q.T_hi.label(), out.k0), -1);
    x.multiply(gen::lvalue_char(Q.chi_hi.label, m_hi), n - 2 * (j - 1));
    x.multiply(gen::g_total(Q.chi_hi.label), j - 1);
  }
  out.expr = x;

  std::map<Generator, PeriodExpression> rules;
  std::vector<std::string> notes;
  auto char_rule = [&](const HeckeCharacter& chi, long long m) {
    PeriodExpression r(A{A::vf(chi.value_field_label), A::lgal()});
    r.multiply(gen::disc_half(M.K->label), 1);
    r.multiply(gen::two_pi_i(), d * m);
    r.multiply(gen::cm_period("check", chi.label, phi.label), 1);
    rules[gen::lvalue_char(chi.label, m)] = r;
    if (!character_critical_integers(chi).contains(m)) {
      notes.push_back("m = " + std::to_string(m) + " lies outside the critical set of " + chi.label);
    }
  };
  auto motive_rule = [&](const TwistData& T) {
    rules[gen::lvalue_motive(T.label(), out.k0)] = cplus_twist_chain(T, out.k0, one, ctx);
    if (!critical_integers_oracle(T).contains(out.k0)) {
      notes.push_back("k0 = " + std::to_string(out.k0) + " is not critical for " + T.label());
    }
  };
  motive_rule(Q.T_lo);
  char_rule(Q.chi_lo, m_lo);
  if (j > 1) {
    motive_rule(Q.T_hi);
    char_rule(Q.chi_hi, out.char_arguments[1]);
  }
  const PeriodExpression lhs = normalize(substitute(x, rules), ctx);
  const PeriodExpression rhs = normalize(PeriodExpression::of(gen::quad_total(M.label, one, j)), ctx);
  out.check = compare_expressions(lhs, rhs, A{A::E(), A::vf("F"), A::lgal()});
  out.check.notes.insert(out.check.notes.end(), notes.begin(), notes.end());
  return out;
}

// ---- potentially automorphic ---------------------------------------------------------

VerifyReport verify_potentially_automorphic(const HodgeData& M, const HeckeCharacter& psi, long long k,
                                            const std::vector<DescentDatum>& descent, PotentialDetails* details) {
  PotentialDetails det;
  const A bound{A::E(), A::vf(psi.value_field_label), A::tilde_l()};
  VerifyReport rep;
  rep.bound = bound;
  try {
    PeriodContext ctx;
    det.degrees = restrict_scalars_degrees(M, descent);
    const MainSetup S = main_setup(M, psi, ctx);
    check_main_hypotheses(S, k, true);
    const PeriodExpression rhs = rhs_closed(S, k);
    const long long n = M.rank;
    const long long d = M.K->degree();
    const auto& L = S.phi.extension;

    PeriodExpression prod;
    std::vector<std::pair<std::string, long long>> cm_parts;
    bool all_pass = true;
    int idx = 0;
    for (const auto& dd : descent) {
      ++idx;
      if (dd.degree_over_K < 1) fail(ErrorCode::InvalidInput, "descent degree must be positive");
      const std::string label = dd.subfield_label.empty() ? "K" + std::to_string(idx) : dd.subfield_label;
      std::vector<std::string> kemb;
      std::map<std::string, std::string> kres;
      for (const auto& s : M.K->embeddings) {
        for (int i = 1; i <= dd.degree_over_K; ++i) {
          const std::string e = s + "#" + std::to_string(i);
          kemb.push_back(e);
          kres[e] = s;
        }
      }
      FieldPtr Kj = TotallyRealField::make(label, kemb);
      std::vector<std::string> lemb;
      std::map<std::string, std::string> conj, lres, lift;
      for (const auto& t : L->embeddings) {
        for (int i = 1; i <= dd.degree_over_K; ++i) {
          const std::string suffix = "#" + std::to_string(i);
          lemb.push_back(t + suffix);
          conj[t + suffix] = L->conj(t) + suffix;
          lres[t + suffix] = L->restrict_to_base(t) + suffix;
          lift[t + suffix] = t;
        }
      }
      ExtensionPtr Lj = CMExtension::make(Kj, "L_" + label, lemb, conj, lres);
      const HodgeData Mj = base_change_motive(M, Kj, kres);
      const HeckeCharacter psij = base_change(psi, Lj, lift, kres);

      VerifyReport pj = verify_main_theorem(Mj, psij, k);
      all_pass = all_pass && pj.pass;
      det.per_j.push_back(pj);

      ctx.add_motive(Mj, M.label, dd.degree_over_K);
      const MainSetup Sj = main_setup(Mj, psij, ctx);
      NormalizeOptions local;
      local.delta_rule = false;
      local.expr_cm = false;
      const PeriodExpression cj = normalize(cplus_twist_chain(Sj.T, k, Mj.E.one(), ctx), ctx, local);
      prod *= cj.pow(dd.multiplicity);
      det.two_pi_i_sum += static_cast<long long>(dd.multiplicity) * Kj->degree() * k * n;
      cm_parts.emplace_back(Sj.chi.label, dd.multiplicity);
    }
    det.two_pi_i_target = d * k * n;

    if (det.degrees.pass() && !cm_parts.empty()) {
      // prod_j p(check chi_j)^{c n_j} -> p(check chi)^c
      std::optional<long long> c;
      bool proportional = true;
      for (const auto& [lbl, nj] : cm_parts) {
        const long long e = prod.exponent(gen::cm_period("check", lbl, "Phi"));
        if (nj == 0) {
          proportional = proportional && e == 0;
          continue;
        }
        if (e % nj != 0) {
          proportional = false;
          continue;
        }
        if (!c) c = e / nj;
        proportional = proportional && (*c == e / nj);
      }
      if (proportional && c) {
        for (const auto& [lbl, nj] : cm_parts) {
          const Generator g = gen::cm_period("check", lbl, "Phi");
          prod.multiply(g, -prod.exponent(g));
        }
        prod.multiply(gen::cm_period("check", S.chi.label, S.phi.label), *c);
        prod.join(A{A::vf(S.chi.value_field_label), A::tilde_l()});
        det.cm_compatibility_applied = true;
      }
    }
    NormalizeOptions full;
    full.descent = true;
    const PeriodExpression lhs = normalize(prod, ctx, full);
    rep = compare_expressions(lhs, normalize(rhs, ctx), bound);
    if (!det.degrees.pass()) {
      rep.pass = false;
      rep.notes.push_back("degree identities fail: sum n_j[K_j:Q] = " + std::to_string(det.degrees.sum_q) +
                          ", sum n_j[K_j:K] = " + std::to_string(det.degrees.sum_k));
    }
    if (!all_pass) {
      rep.pass = false;
      rep.notes.push_back("some (M_j, psi_j, k) fails the automorphic identity");
    }
  } catch (const Error& e) {
    rep = VerifyReport{};
    rep.bound = bound;
    rep.notes.push_back(describe(e));
  }
  if (details) *details = det;
  return rep;
}

}  // namespace periodcalc
