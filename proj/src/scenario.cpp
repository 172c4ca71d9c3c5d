/* Copyright 2026 periodcalc contributors.
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at http://www.apache.org/licenses/LICENSE-2.0
 */
#include "periodcalc/scenario.hpp"

#include <algorithm>
#include <climits>
#include <sstream>

#include "periodcalc/errors.hpp"
#include "periodcalc/random_instances.hpp"

namespace periodcalc {

namespace {

std::string child(const std::string& ptr, const std::string& key) {
  std::string k;
  for (char c : key) {
    if (c == '~') k += "~0";
    else if (c == '/') k += "~1";
    else k += c;
  }
  return ptr + "/" + k;
}

const json& need(const json& j, const std::string& key, const std::string& ptr) {
  if (!j.is_object()) fail(ErrorCode::InvalidInput, "expected an object", ptr);
  auto it = j.find(key);
  if (it == j.end()) fail(ErrorCode::InvalidInput, "missing field '" + key + "'", child(ptr, key));
  return *it;
}

template <typename T>
T as(const json& j, const std::string& ptr) {
  try {
    return j.get<T>();
  } catch (const json::exception&) {
    fail(ErrorCode::InvalidInput, "wrong type: " + std::string(j.type_name()), ptr);
  }
}

template <typename T>
T opt(const json& j, const std::string& key, T dflt, const std::string& ptr) {
  if (!j.is_object() || !j.contains(key) || j.at(key).is_null()) return dflt;
  return as<T>(j.at(key), child(ptr, key));
}

// Library pointers are relative to the object they were raised on; anchor them at ptr.
template <typename F>
auto at_pointer(const std::string& ptr, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const Error& e) {
    if (e.pointer().rfind(ptr, 0) == 0 && !ptr.empty()) throw;
    throw Error(e.code(), e.what(), ptr + e.pointer());
  }
}

std::vector<std::string> string_list(const json& j, const std::string& ptr) {
  if (!j.is_array()) fail(ErrorCode::InvalidInput, "expected an array of strings", ptr);
  std::vector<std::string> out;
  for (size_t i = 0; i < j.size(); ++i) out.push_back(as<std::string>(j[i], ptr + "/" + std::to_string(i)));
  return out;
}

std::map<std::string, std::string> string_map(const json& j, const std::string& ptr) {
  if (!j.is_object()) fail(ErrorCode::InvalidInput, "expected an object", ptr);
  std::map<std::string, std::string> out;
  for (auto it = j.begin(); it != j.end(); ++it) out[it.key()] = as<std::string>(it.value(), child(ptr, it.key()));
  return out;
}

std::map<std::string, int> int_map(const json& j, const std::string& ptr) {
  if (!j.is_object()) fail(ErrorCode::InvalidInput, "expected an object", ptr);
  std::map<std::string, int> out;
  for (auto it = j.begin(); it != j.end(); ++it) out[it.key()] = as<int>(it.value(), child(ptr, it.key()));
  return out;
}

HodgeData parse_motive(const json& j, const Scenario& s, const std::string& ptr) {
  if (!s.K) fail(ErrorCode::InvalidInput, "a motive needs the K block", "/K");
  const std::string label = opt<std::string>(j, "label", "M", ptr);
  const bool delta = opt<bool>(j, "delta_hypothesis", false, ptr);
  const int epsilon = opt<int>(j, "epsilon", 1, ptr);
  if (j.contains("gln_weight")) {
    GLnWeight wt;
    wt.K = s.K;
    const std::string wp = child(ptr, "gln_weight");
    const json& w = j.at("gln_weight");
    if (!w.is_object()) fail(ErrorCode::InvalidInput, "expected an object", wp);
    for (auto it = w.begin(); it != w.end(); ++it) wt.a[it.key()] = as<std::vector<int>>(it.value(), child(wp, it.key()));
    HodgeFromWeightOptions ho;
    ho.label = label;
    ho.delta_hypothesis = delta;
    ho.epsilon = epsilon;
    if (j.contains("n_plus")) ho.n_plus = as<int>(j.at("n_plus"), child(ptr, "n_plus"));
    if (j.contains("permutations")) {
      const std::string pp = child(ptr, "permutations");
      const json& pj = j.at("permutations");
      if (!pj.is_object()) fail(ErrorCode::InvalidInput, "expected an object", pp);
      for (auto it = pj.begin(); it != pj.end(); ++it) ho.permutations[it.key()] = string_map(it.value(), child(pp, it.key()));
    }
    return at_pointer(wp, [&] { return hodge_from_weight(wt, s.E, ho); });
  }
  HodgeData M;
  M.K = s.K;
  M.E = s.E;
  M.label = label;
  M.rank = as<int>(need(j, "rank", ptr), child(ptr, "rank"));
  M.weight = as<int>(need(j, "weight", ptr), child(ptr, "weight"));
  const std::string hp = child(ptr, "hodge");
  const json& h = need(j, "hodge", ptr);
  if (!h.is_object()) fail(ErrorCode::InvalidInput, "expected an object keyed by 'sigma|phi'", hp);
  for (auto it = h.begin(); it != h.end(); ++it) {
    const auto bar = it.key().find('|');
    if (bar == std::string::npos) fail(ErrorCode::InvalidInput, "Hodge key must look like 'sigma|phi'", child(hp, it.key()));
    const std::string sg = it.key().substr(0, bar), f = it.key().substr(bar + 1);
    if (!s.K->has(sg)) fail(ErrorCode::InvalidInput, "unknown embedding " + sg, child(hp, it.key()));
    if (!s.E.has(f)) fail(ErrorCode::InvalidInput, "unknown coefficient embedding " + f, child(hp, it.key()));
    M.hodge[{sg, f}] = as<std::vector<int>>(it.value(), child(hp, it.key()));
  }
  M.epsilon = epsilon;
  M.n_plus = opt<int>(j, "n_plus", (M.rank + 1) / 2, ptr);
  M.n_minus = M.rank - M.n_plus;
  const std::string pol = opt<std::string>(j, "polarization", M.weight % 2 == 0 ? "symmetric" : "alternating", ptr);
  if (pol == "symmetric") M.polarization = Polarization::Symmetric;
  else if (pol == "alternating") M.polarization = Polarization::Alternating;
  else fail(ErrorCode::InvalidInput, "polarization must be 'symmetric' or 'alternating'", child(ptr, "polarization"));
  M.delta_hypothesis = delta;
  at_pointer(ptr, [&] { M.validate(); });
  return M;
}

}  // namespace

GroupPtr parse_group(const json& j, const std::string& ptr) {
  const std::string name = opt<std::string>(j, "name", "G", ptr);
  if (j.contains("permutations")) {
    const std::string pp = child(ptr, "permutations");
    const auto gens = as<std::vector<std::vector<int>>>(j.at("permutations"), pp);
    try {
      return FiniteGroup::from_permutations(name, gens);
    } catch (const Error& e) {
      std::string sub = e.pointer();
      const std::string pre = "/generators";
      if (sub.rfind(pre, 0) == 0) sub = sub.substr(pre.size());
      throw Error(e.code(), e.what(), pp + sub);
    }
  }
  if (j.contains("table")) {
    const auto t = as<std::vector<std::vector<int>>>(j.at("table"), child(ptr, "table"));
    try {
      return FiniteGroup::from_table(name, t);
    } catch (const Error& e) {
      throw Error(e.code(), e.what(), ptr + (e.pointer().empty() ? "/table" : e.pointer()));
    }
  }
  if (j.contains("name")) return at_pointer(child(ptr, "name"), [&] { return groups::by_name(name); });
  fail(ErrorCode::InvalidInput, "group needs 'permutations', 'table' or 'name'", ptr);
}

Scenario load_scenario(const json& j) {
  if (!j.is_object()) fail(ErrorCode::InvalidInput, "scenario must be a JSON object", "");
  Scenario s;
  s.source = j;
  if (j.contains("E")) {
    const json& e = j.at("E");
    s.E = at_pointer("/E", [&] {
      return CoefficientField::make(opt<std::string>(e, "label", "E", "/E"),
                                    e.contains("embeddings") ? string_list(e.at("embeddings"), "/E/embeddings")
                                                             : std::vector<std::string>{"1"},
                                    opt<std::string>(e, "distinguished", "1", "/E"));
    });
  }
  if (j.contains("K")) {
    const json& k = j.at("K");
    s.K = at_pointer("/K", [&] {
      return TotallyRealField::make(opt<std::string>(k, "label", "K", "/K"),
                                    string_list(need(k, "embeddings", "/K"), "/K/embeddings"),
                                    opt<std::string>(k, "galois_closure", "", "/K"));
    });
    const json l = j.contains("L") ? j.at("L") : json{{"standard", true}};
    if (l.contains("embeddings")) {
      s.L = at_pointer("/L", [&] {
        return CMExtension::make(s.K, opt<std::string>(l, "label", "L", "/L"),
                                 string_list(l.at("embeddings"), "/L/embeddings"),
                                 string_map(need(l, "conjugation", "/L"), "/L/conjugation"),
                                 string_map(need(l, "restriction", "/L"), "/L/restriction"));
      });
    } else {
      s.L = CMExtension::standard(s.K, opt<std::string>(l, "label", "L", "/L"));
    }
    if (j.contains("cm_type")) {
      const auto mem = string_list(j.at("cm_type"), "/cm_type");
      s.phi = at_pointer("/cm_type", [&] {
        return validate_cm_type(s.L, std::set<std::string>(mem.begin(), mem.end()),
                                opt<std::string>(j, "cm_type_label", "Phi", ""));
      });
    }
  }
  if (j.contains("motive")) s.M = parse_motive(j.at("motive"), s, "/motive");
  if (j.contains("characters")) {
    const json& cs = j.at("characters");
    if (!cs.is_array()) fail(ErrorCode::InvalidInput, "expected an array of characters", "/characters");
    if (!s.L) fail(ErrorCode::InvalidInput, "characters need the K block", "/K");
    for (size_t i = 0; i < cs.size(); ++i) {
      const std::string ptr = "/characters/" + std::to_string(i);
      const json& c = cs[i];
      const std::string label = opt<std::string>(c, "label", "chi" + std::to_string(i + 1), ptr);
      const auto inf = int_map(need(c, "infinity_type", ptr), ptr + "/infinity_type");
      std::optional<int> w;
      if (c.contains("weight")) w = as<int>(c.at("weight"), ptr + "/weight");
      HeckeCharacter chi = at_pointer(ptr, [&] { return HeckeCharacter::make(s.L, inf, w, label); });
      chi.value_field_label = opt<std::string>(c, "value_field", "Q(" + label + ")", ptr);
      if (s.characters.count(label)) fail(ErrorCode::InvalidInput, "duplicate character label " + label, ptr + "/label");
      s.characters.emplace(label, chi);
      s.character_order.push_back(label);
    }
  }
  if (j.contains("group")) s.group = parse_group(j.at("group"), "/group");
  s.command = opt<std::string>(j, "command", "", "");
  if (j.contains("params")) {
    if (!j.at("params").is_object()) fail(ErrorCode::InvalidInput, "expected an object", "/params");
    s.params = j.at("params");
  }
  return s;
}

Scenario load_scenario_text(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    fail(ErrorCode::InvalidInput, std::string("malformed JSON: ") + e.what(), "");
  }
  return load_scenario(j);
}

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Ok: return "OK";
    case Verdict::Pass: return "PASS";
    case Verdict::Fail: return "FAIL";
  }
  return "?";
}

const std::vector<std::string>& command_names() {
  static const std::vector<std::string> names{"critical-set", "r-index",        "build-twist",
                                              "build-s5",     "period-expr",    "verify-main",
                                              "verify-potential", "qj",         "brauer"};
  return names;
}

json expression_json(const PeriodExpression& x) {
  json mono = json::array();
  for (const auto& [g, e] : x.exponents()) {
    mono.push_back({{"generator", g.text()}, {"kind", gen_kind_name(g.kind)}, {"exponent", e}});
  }
  return {{"text", x.text()}, {"latex", x.latex()}, {"ambiguity", x.ambiguity().text()}, {"monomial", mono}};
}

json report_json(const VerifyReport& r) {
  return {{"verdict", r.verdict()},
          {"lhs_normal", expression_json(r.lhs)},
          {"rhs_normal", expression_json(r.rhs)},
          {"residual", expression_json(r.residual)},
          {"ambiguity", r.ambiguity.text()},
          {"bound", r.bound.text()},
          {"notes", r.notes}};
}

namespace {

json interval_json(const CriticalInterval& I) {
  return {{"lo", I.lo}, {"hi", I.hi}, {"empty", I.empty()}, {"values", I.values()}};
}

std::string interval_text(const CriticalInterval& I) {
  if (I.empty()) return "{}";
  std::ostringstream os;
  os << "(" << I.lo << ", " << I.hi << "]";
  return os.str();
}

json character_json(const HeckeCharacter& chi) {
  return {{"label", chi.label},
          {"weight", chi.weight},
          {"infinity_type", chi.infinity_type},
          {"value_field", chi.value_field_label}};
}

std::string character_text(const HeckeCharacter& chi) {
  std::ostringstream os;
  os << chi.label << ": weight " << chi.weight << ", infinity type";
  for (const auto& [t, v] : chi.infinity_type) os << " " << t << "=" << v;
  return os.str();
}

class Runner {
 public:
  Runner(const Scenario& s, json params) : s_(s), p_(std::move(params)) {}

  RunResult run(const std::string& cmd) {
    if (cmd == "critical-set") critical_set();
    else if (cmd == "r-index") r_index_cmd();
    else if (cmd == "build-twist") build_twist();
    else if (cmd == "build-s5") build_s5();
    else if (cmd == "period-expr") period_expr();
    else if (cmd == "verify-main") verify_main();
    else if (cmd == "verify-potential") verify_potential();
    else if (cmd == "qj") qj();
    else if (cmd == "brauer") brauer();
    else fail(ErrorCode::InvalidInput, "unknown command '" + cmd + "'", "/command");
    out_.report["command"] = cmd;
    out_.report["verdict"] = verdict_name(out_.verdict);
    return out_;
  }

 private:
  const Scenario& s_;
  json p_;
  RunResult out_;
  std::ostringstream text_;
  std::ostringstream tex_;

  std::string pp(const std::string& key) const { return "/params/" + key; }

  template <typename T>
  T param(const std::string& key, T dflt) const {
    return opt<T>(p_, key, dflt, "/params");
  }
  template <typename T>
  T required(const std::string& key) const {
    return as<T>(need(p_, key, "/params"), pp(key));
  }

  const HodgeData& motive() const {
    if (!s_.M) fail(ErrorCode::InvalidInput, "this command needs a motive block", "/motive");
    return *s_.M;
  }

  const HeckeCharacter& character(const std::string& key, const std::string& dflt = {}) const {
    std::string label = param<std::string>(key, dflt);
    if (label.empty()) {
      if (s_.character_order.empty()) fail(ErrorCode::InvalidInput, "no characters declared", "/characters");
      label = s_.character_order.front();
    }
    auto it = s_.characters.find(label);
    if (it == s_.characters.end()) fail(ErrorCode::InvalidInput, "unknown character '" + label + "'", pp(key));
    return it->second;
  }

  CMType cm_type_for(const HeckeCharacter* chi) const {
    if (s_.phi) return *s_.phi;
    if (chi && is_critical(*chi)) return positive_type(*chi, "Phi");
    if (!s_.L) fail(ErrorCode::InvalidInput, "this command needs the K block", "/K");
    return random::standard_type(s_.L);
  }

  std::string phi_E() const {
    const std::string f = param<std::string>("phi", s_.E.one());
    if (!s_.E.has(f)) fail(ErrorCode::InvalidInput, "unknown coefficient embedding " + f, pp("phi"));
    return f;
  }

  void set_verdict(bool ok) { out_.verdict = ok ? Verdict::Pass : Verdict::Fail; }

  void finish_text() {
    out_.text = text_.str();
    out_.latex = tex_.str();
  }

  TwistData twist_for_character() const {
    HeckeCharacter chi = character("character");
    if (param<bool>("square", false)) chi = chi_from_psi(chi);
    const CMType phi = cm_type_for(&chi);
    TwistData T{motive(), chi, phi};
    at_pointer("/params", [&] { T.validate(); });
    return T;
  }

  void critical_set() {
    if (p_.contains("random")) {
      random_critical();
      return;
    }
    const TwistData T = twist_for_character();
    const CriticalInterval oracle = critical_integers_oracle(T);
    json rep{{"twist", T.label()}, {"interval", interval_json(oracle)}};
    text_ << "critical integers of " << T.label() << ": " << interval_text(oracle) << "\n";
    bool agree = true;
    try {
      const CriticalInterval f = critical_integers(T);
      agree = f == oracle;
      rep["formula"] = interval_json(f);
      text_ << "closed formula (top interval):  " << interval_text(f) << (agree ? "" : "  MISMATCH") << "\n";
    } catch (const Error& e) {
      if (e.code() != ErrorCode::NotInTopInterval) throw;
      rep["formula"] = nullptr;
      rep["notes"] = json::array({e.what()});
      text_ << "closed formula not applicable: " << e.what() << "\n";
    }
    rep["agree"] = agree;
    out_.report = rep;
    out_.verdict = agree ? Verdict::Ok : Verdict::Fail;
    tex_ << "\\mathrm{Crit}(" << T.label() << ") = " << interval_text(oracle) << "\n";
    finish_text();
  }

  void r_index_cmd() {
    const TwistData T = twist_for_character();
    json rows = json::array();
    text_ << "sigma  t   r per coefficient embedding\n";
    for (const auto& sg : T.M.K->embeddings) {
      json r = json::object();
      text_ << sg << "  " << t_invariant(T.chi, sg) << " ";
      for (const auto& f : T.M.E.embeddings) {
        const int v = r_index(T, sg, f);
        r[f] = v;
        text_ << " " << f << ":" << v;
      }
      text_ << "\n";
      rows.push_back({{"sigma", sg}, {"t", t_invariant(T.chi, sg)}, {"r", r}});
    }
    out_.report = {{"twist", T.label()}, {"rows", rows}};
    finish_text();
  }

  void build_twist() {
    const HodgeData& M = motive();
    const int r = required<int>("r");
    const std::string f = phi_E();
    std::optional<int> w0;
    if (p_.contains("w0")) w0 = required<int>("w0");
    const CMType phi = cm_type_for(nullptr);
    const HeckeCharacter chi = at_pointer(pp("r"), [&] { return build_interval_twist(M, phi, r, f, w0); });
    const TwistData T{M, chi, phi};
    const bool lemma = w0 ? true : verify_interval_lemma(M, phi, r, f);
    json idx = json::object();
    bool all = true;
    const int expect = interval_lemma_value(M.rank, r);
    for (const auto& sg : M.K->embeddings) {
      const int v = r_index(T, sg, f);
      idx[sg] = v;
      all = all && v == expect;
    }
    json rep{{"character", character_json(chi)}, {"r_index", idx}, {"expected_r_index", expect},
             {"interval_lemma", lemma && all}};
    text_ << character_text(chi) << "\n";
    text_ << "r-index " << (lemma && all ? "matches" : "DOES NOT match") << " the expected value " << expect << "\n";
    if (r == M.rank) {
      const CriticalInterval I = critical_integers_oracle(T);
      rep["critical_set"] = interval_json(I);
      text_ << "critical integers: " << interval_text(I) << "\n";
    }
    out_.report = rep;
    set_verdict(lemma && all);
    finish_text();
  }

  void build_s5() {
    const HodgeData& M = motive();
    const int r = required<int>("r");
    const CMType phi = cm_type_for(nullptr);
    const SingleCriticalResult res = at_pointer(pp("r"), [&] { return build_single_critical_character(M, phi, r); });
    json rep{{"satisfiable", res.satisfiable}, {"w0", res.w0}, {"search_bound", res.search_bound}, {"r", res.r},
             {"note", res.note}};
    bool ok = res.satisfiable;
    if (res.satisfiable && res.chi) {
      rep["character"] = character_json(*res.chi);
      if (res.psi) rep["psi"] = character_json(*res.psi);
      const CriticalInterval I = critical_integers_oracle(TwistData{M, *res.chi, phi});
      rep["critical_set"] = interval_json(I);
      rep["critical_integer"] = res.critical_integer;
      const long long target = (M.rank + res.w0) / 2;
      rep["expected_critical_integer"] = target;
      ok = I.size() == 1 && I.hi == target && res.critical_integer == target;
      text_ << character_text(*res.chi) << "\nw0 = " << res.w0 << ", critical set " << interval_text(I)
            << ", expected {" << target << "}\n";
    } else {
      text_ << "unsatisfiable: " << res.note << "\n";
    }
    if (!res.note.empty() && res.satisfiable) text_ << "note: " << res.note << "\n";
    out_.report = rep;
    set_verdict(ok);
    finish_text();
  }

  PeriodExpression maybe_normalize(const PeriodExpression& x, const PeriodContext& ctx, json& rep) {
    if (!param<bool>("normalize", true)) return x;
    NormalizeTrace trace;
    PeriodExpression n = normalize(x, ctx, {}, &trace);
    if (param<bool>("trace", false)) {
      json steps = json::array();
      for (const auto& t : trace) {
        steps.push_back({{"rule", t.rule}, {"generator", t.generator.text()}, {"before", t.before.text()},
                         {"after", t.after.text()}, {"required", t.required.text()}});
      }
      rep["trace"] = steps;
    }
    return n;
  }

  void emit_expr(const std::string& title, const PeriodExpression& raw, const PeriodExpression& normal, json& rep) {
    rep["raw"] = expression_json(raw);
    rep["normal"] = expression_json(normal);
    text_ << title << "\n  raw:    " << raw.text() << "\n  normal: " << normal.text() << "\n";
    tex_ << normal.latex() << "\n";
  }

  void period_expr() {
    const std::string kind = param<std::string>("kind", "cplus");
    json rep{{"kind", kind}};
    PeriodContext ctx;
    if (kind == "main-lhs" || kind == "main-rhs") {
      const HeckeCharacter& psi = character("psi");
      const long long k = required<long long>("k");
      const MainSetup S = main_setup(motive(), psi, ctx);
      PeriodExpression raw;
      if (kind == "main-lhs") {
        raw = main_theorem_lhs_raw(motive(), psi, k);
      } else {
        raw = main_theorem_rhs(motive(), psi, k);
      }
      emit_expr(kind + " for " + S.T.label() + " at k = " + std::to_string(k), raw, maybe_normalize(raw, ctx, rep), rep);
    } else if (kind == "qj") {
      const int j = required<int>("j");
      std::optional<int> w0;
      if (p_.contains("w0")) w0 = required<int>("w0");
      qj_setup(motive(), cm_type_for(nullptr), phi_E(), j, w0, ctx);
      const PeriodExpression raw = qj_expr(motive(), cm_type_for(nullptr), phi_E(), j, w0);
      emit_expr("Q_" + std::to_string(j) + " expression", raw, maybe_normalize(raw, ctx, rep), rep);
    } else {
      const TwistData T = twist_for_character();
      ctx.add_twist(T);
      const std::string f = phi_E();
      if (kind == "deligne") {
        const std::string sg = param<std::string>("sigma", T.M.K->embeddings.front());
        if (!T.M.K->has(sg)) fail(ErrorCode::InvalidInput, "unknown embedding " + sg, pp("sigma"));
        const PeriodExpression raw = deligne_period_expr(T, sg, f);
        emit_expr("c+_" + sg + "(" + T.label() + ")", raw, maybe_normalize(raw, ctx, rep), rep);
      } else if (kind == "cplus") {
        const PeriodExpression raw = cplus_global(T, f, ctx);
        emit_expr("c+(" + T.label() + ")", raw, maybe_normalize(raw, ctx, rep), rep);
      } else if (kind == "twist") {
        const long long k = required<long long>("k");
        const PeriodExpression raw = cplus_twist_chain(T, k, f, ctx);
        emit_expr("c+(" + T.label() + "(" + std::to_string(k) + "))", raw, maybe_normalize(raw, ctx, rep), rep);
      } else if (kind == "p-chi") {
        const int n = T.M.rank;
        const int r = param<int>("r", n);
        const PeriodExpression def = p_chi_definition(T.chi, T.phi, r, n, T.M.n_plus, ctx);
        const PeriodExpression closed = p_chi_expr(T.chi, T.phi, r, n);
        const PeriodExpression dn = normalize(def, ctx);
        const PeriodExpression cn = normalize(closed, ctx);
        emit_expr("P(" + T.chi.label + ") definition", def, dn, rep);
        rep["closed_form"] = expression_json(cn);
        text_ << "  closed: " << cn.text() << "\n";
        const bool ok = dn.same_exponents(cn);
        set_verdict(ok);
      } else {
        fail(ErrorCode::InvalidInput, "unknown expression kind '" + kind + "'", pp("kind"));
      }
    }
    out_.report = rep;
    finish_text();
  }

  std::vector<long long> ks_for(const MainSetup& S) const {
    if (p_.contains("k")) {
      if (p_.at("k").is_array()) return as<std::vector<long long>>(p_.at("k"), pp("k"));
      return {required<long long>("k")};
    }
    std::vector<long long> ks;
    for (long long k : critical_integers_oracle(S.T).values()) {
      if (k > S.psi.weight + S.M.rank) ks.push_back(k);
    }
    return ks;
  }

  VerifyReport mutate(const VerifyReport& r) const {
    if (!p_.contains("mutate")) return r;
    const json& m = p_.at("mutate");
    const std::string mp = pp("mutate");
    const long long delta = opt<long long>(m, "delta", 1, mp);
    PeriodExpression rhs = r.rhs;
    Generator g = gen::two_pi_i();
    if (m.contains("index")) {
      const auto idx = as<size_t>(m.at("index"), mp + "/index");
      if (idx >= rhs.exponents().size()) fail(ErrorCode::InvalidInput, "mutation index out of range", mp + "/index");
      g = std::next(rhs.exponents().begin(), static_cast<long>(idx))->first;
    }
    rhs.multiply(g, delta);
    VerifyReport out = compare_expressions(r.lhs, rhs, r.bound);
    out.notes.push_back("rhs mutated: " + g.text() + " exponent shifted by " + std::to_string(delta));
    return out;
  }

  struct RandomSpec {
    long long count = 0;
    unsigned long long seed = 0;
  };

  RandomSpec random_spec() const {
    const json& r = p_.at("random");
    const std::string rp = pp("random");
    RandomSpec spec;
    if (r.is_number_integer()) {
      spec.count = r.get<long long>();
    } else {
      spec.count = as<long long>(need(r, "count", rp), rp + "/count");
    }
    spec.seed = param<unsigned long long>("seed", 0);
    if (spec.count < 1 || spec.count > 1000000) fail(ErrorCode::InvalidInput, "random count must be in 1..1000000", rp);
    return spec;
  }

  // Random automorphic instances; optionally every +-1 exponent mutation must be caught.
  void random_main() {
    const RandomSpec spec = random_spec();
    const bool mutations = param<bool>("mutations", false);
    random::Rng rng(spec.seed);
    long long checked = 0, passed = 0, mutants = 0, caught = 0;
    json failures = json::array();
    for (long long i = 0; i < spec.count; ++i) {
      random::MainOptions o;
      o.n = 2 + static_cast<int>(i % 5);
      o.max_degree = 3;
      o.delta_hypothesis = o.n % 2 != 0;
      o.n_plus = (i / 5) % 2 == 0 ? (o.n + 1) / 2 : o.n / 2;
      const random::MainInstance inst = random::main_instance(rng, o);
      for (long long k : inst.ks) {
        const VerifyReport r = verify_main_theorem(inst.M, inst.psi, k);
        ++checked;
        if (r.pass) {
          ++passed;
        } else if (failures.size() < 5) {
          failures.push_back({{"instance", i}, {"n", o.n}, {"k", k}, {"report", report_json(r)}});
        }
        if (!mutations) continue;
        for (const auto& [g, e] : r.rhs.exponents()) {
          for (long long d : {-1LL, 1LL}) {
            PeriodExpression m = r.rhs;
            m.multiply(g, d);
            ++mutants;
            if (!compare_expressions(r.lhs, m, r.bound).pass) ++caught;
          }
        }
        PeriodExpression m = r.rhs;
        m.multiply(gen::two_pi_i(), 1);
        ++mutants;
        if (!compare_expressions(r.lhs, m, r.bound).pass) ++caught;
      }
    }
    const bool ok = passed == checked && caught == mutants && checked > 0;
    out_.report = {{"instances", spec.count}, {"seed", spec.seed}, {"checked", checked}, {"passed", passed},
                   {"mutants", mutants}, {"mutants_caught", caught}, {"failures", failures}};
    text_ << "random main-theorem suite, seed " << spec.seed << ": " << passed << "/" << checked << " PASS";
    if (mutations) text_ << ", " << caught << "/" << mutants << " mutants caught";
    text_ << "\n";
    set_verdict(ok);
    finish_text();
  }

  // critical_integers against the oracle on random r = n twists.
  void random_critical() {
    const RandomSpec spec = random_spec();
    random::Rng rng(spec.seed);
    long long agree = 0;
    json failures = json::array();
    for (long long i = 0; i < spec.count; ++i) {
      const FieldPtr K = random::totally_real(rng, 3);
      const CoefficientField E = random::coefficients(rng, 2);
      const int n = 1 + static_cast<int>(i % 8);
      const HodgeData M = random::regular_hodge(rng, n, K, E);
      const CMType phi = random::standard_type(CMExtension::standard(K, "L"));
      // past the top gap at every coefficient embedding, not just the first
      std::map<std::string, int> diffs;
      for (const auto& t : phi.members) {
        const auto& s = phi.extension->restrict_to_base(t);
        int need = INT_MIN;
        for (const auto& f : E.embeddings) need = std::max(need, M.weight - 2 * M.p_at(s, f, n) + 1);
        diffs[t] = need;
      }
      const int w0 = M.weight + 1;
      for (auto& [t, v] : diffs)
        if ((v - w0) % 2 != 0) ++v;
      const HeckeCharacter chi = construct_with_differences(phi, diffs, w0);
      const TwistData T{M, chi, phi};
      const CriticalInterval a = critical_integers(T);
      const CriticalInterval b = critical_integers_oracle(T);
      if (a == b) {
        ++agree;
      } else if (failures.size() < 5) {
        failures.push_back({{"instance", i}, {"formula", interval_json(a)}, {"oracle", interval_json(b)}});
      }
    }
    out_.report = {{"instances", spec.count}, {"seed", spec.seed}, {"agree", agree}, {"failures", failures}};
    text_ << "random critical-set suite, seed " << spec.seed << ": " << agree << "/" << spec.count << " agree\n";
    set_verdict(agree == spec.count);
    finish_text();
  }

  void verify_main() {
    if (p_.contains("random")) {
      random_main();
      return;
    }
    const HeckeCharacter& psi = character("psi");
    PeriodContext ctx;
    const MainSetup S = main_setup(motive(), psi, ctx);
    const auto ks = ks_for(S);
    json rows = json::array();
    bool all = !ks.empty();
    if (ks.empty()) text_ << "no critical k > w + n for " << S.T.label() << "\n";
    for (long long k : ks) {
      const VerifyReport r = mutate(verify_main_theorem(motive(), psi, k));
      json row = report_json(r);
      row["k"] = k;
      rows.push_back(row);
      all = all && r.pass;
      text_ << "k = " << k << ": " << r.verdict() << "\n  lhs      " << r.lhs.text() << "\n  rhs      " << r.rhs.text()
            << "\n  residual " << r.residual.text() << "\n";
      for (const auto& n : r.notes) text_ << "  note: " << n << "\n";
      tex_ << "% k = " << k << "\n" << r.lhs.latex() << " \\;=\\; " << r.rhs.latex() << "\n";
    }
    out_.report = {{"twist", S.T.label()}, {"results", rows}};
    set_verdict(all);
    finish_text();
  }

  void verify_potential() {
    const HeckeCharacter& psi = character("psi");
    const HodgeData& M = motive();
    std::vector<DescentDatum> descent;
    json source;
    if (p_.contains("descent")) {
      const json& d = p_.at("descent");
      if (!d.is_array()) fail(ErrorCode::InvalidInput, "expected an array", pp("descent"));
      for (size_t i = 0; i < d.size(); ++i) {
        const std::string ptr = pp("descent") + "/" + std::to_string(i);
        DescentDatum dd;
        dd.subfield_label = opt<std::string>(d[i], "subfield", "K" + std::to_string(i + 1), ptr);
        dd.degree_over_K = as<int>(need(d[i], "degree_over_K", ptr), ptr + "/degree_over_K");
        dd.degree_over_Q = opt<int>(d[i], "degree_over_Q", dd.degree_over_K * M.K->degree(), ptr);
        dd.multiplicity = opt<int>(d[i], "multiplicity", 1, ptr);
        descent.push_back(dd);
      }
      source = "params";
    } else {
      if (!s_.group) fail(ErrorCode::InvalidInput, "verify-potential needs params.descent or a group block", "/group");
      descent = descent_data_from_decomposition(brauer_decompose(s_.group), M.K->degree());
      source = "brauer:" + s_.group->name();
    }
    PeriodContext ctx;
    const MainSetup S = main_setup(M, psi, ctx);
    const auto ks = ks_for(S);
    if (ks.empty()) fail(ErrorCode::HypothesisFailed, "no critical k > w + n", pp("k"));
    json rows = json::array();
    bool all = true;
    for (long long k : ks) {
      PotentialDetails det;
      const VerifyReport r = mutate(verify_potentially_automorphic(M, psi, k, descent, &det));
      json row = report_json(r);
      row["k"] = k;
      row["degrees"] = {{"sum_q", det.degrees.sum_q}, {"sum_k", det.degrees.sum_k},
                        {"q_identity", det.degrees.q_identity}, {"k_identity", det.degrees.k_identity},
                        {"consistent", det.degrees.data_consistent}};
      row["two_pi_i"] = {{"sum", det.two_pi_i_sum}, {"target", det.two_pi_i_target}};
      row["cm_compatibility_applied"] = det.cm_compatibility_applied;
      json per = json::array();
      for (const auto& pj : det.per_j) per.push_back(pj.verdict());
      row["per_field"] = per;
      rows.push_back(row);
      all = all && r.pass;
      text_ << "k = " << k << ": " << r.verdict() << "  (sum n_j[K_j:Q] = " << det.degrees.sum_q
            << ", sum n_j[K_j:K] = " << det.degrees.sum_k << ", 2pi i exponents " << det.two_pi_i_sum << "/"
            << det.two_pi_i_target << ")\n  lhs " << r.lhs.text() << "\n  rhs " << r.rhs.text() << "\n";
      for (const auto& n : r.notes) text_ << "  note: " << n << "\n";
      tex_ << "% k = " << k << "\n" << r.lhs.latex() << " \\;=\\; " << r.rhs.latex() << "\n";
    }
    json dj = json::array();
    for (const auto& d : descent) {
      dj.push_back({{"subfield", d.subfield_label}, {"degree_over_Q", d.degree_over_Q},
                    {"degree_over_K", d.degree_over_K}, {"multiplicity", d.multiplicity}});
    }
    out_.report = {{"descent", dj}, {"descent_source", source}, {"results", rows}};
    set_verdict(all);
    finish_text();
  }

  void qj() {
    const HodgeData& M = motive();
    const CMType phi = cm_type_for(nullptr);
    const std::string f = phi_E();
    const std::string mode = param<std::string>("mode", "period");
    std::optional<int> w0;
    if (p_.contains("w0")) w0 = required<int>("w0");
    std::vector<int> js;
    if (p_.contains("j")) {
      js.push_back(required<int>("j"));
    } else {
      for (int j = 1; j < (M.rank + 1) / 2; ++j) js.push_back(j);
    }
    json rows = json::array();
    bool all = !js.empty();
    for (int j : js) {
      json row{{"j", j}};
      if (mode == "period") {
        const VerifyReport a = verify_qj(M, phi, f, j, w0);
        const VerifyReport t = verify_qj_telescoping(M, phi, f, j, w0);
        row["identity"] = report_json(a);
        row["telescoping"] = report_json(t);
        row["expression"] = expression_json(qj_expr(M, phi, f, j, w0));
        all = all && a.pass && t.pass;
        text_ << "j = " << j << ": identity " << a.verdict() << ", telescoping " << t.verdict() << "\n  "
              << a.lhs.text() << "\n";
        for (const auto& n : a.notes) text_ << "  note: " << n << "\n";
        for (const auto& n : t.notes) text_ << "  note: " << n << "\n";
        tex_ << a.lhs.latex() << "\n";
      } else if (mode == "lvalue") {
        const QjLValueResult r = qj_lvalue(M, phi, j);
        row["w0"] = r.w0;
        row["k0"] = r.k0;
        row["char_arguments"] = r.char_arguments;
        row["expression"] = expression_json(r.expr);
        row["check"] = report_json(r.check);
        all = all && r.check.pass;
        text_ << "j = " << j << ": w0 = " << r.w0 << ", k0 = " << r.k0 << ", " << r.check.verdict() << "\n  Q_j ~ "
              << r.expr.text() << "\n";
        for (const auto& n : r.check.notes) text_ << "  note: " << n << "\n";
        tex_ << "Q_{" << j << "} \\sim " << r.expr.latex() << "\n";
      } else {
        fail(ErrorCode::InvalidInput, "mode must be 'period' or 'lvalue'", pp("mode"));
      }
      rows.push_back(row);
    }
    out_.report = {{"mode", mode}, {"results", rows}};
    set_verdict(all);
    finish_text();
  }

  void brauer() {
    if (!s_.group) fail(ErrorCode::InvalidInput, "brauer needs a group block", "/group");
    const GroupPtr G = s_.group;
    const BrauerDecomposition dec = brauer_decompose(G);
    const ClassFunction sum = dec.sum();
    json terms = json::array();
    long long degree = 0;
    text_ << "group " << G->name() << " of order " << G->order() << ", " << G->classes().size()
          << " conjugacy classes, " << (dec.fast_path ? "solvable" : "not solvable") << "\n";
    for (const auto& t : dec.terms) {
      const int index = G->order() / t.H.order;
      degree += t.n * index;
      terms.push_back({{"order", t.H.order}, {"index", index}, {"n", t.n}, {"elements", t.H.list()},
                       {"solvable", is_solvable(*G, t.H)}});
      text_ << "  " << (t.n >= 0 ? "+" : "") << t.n << " * Ind from subgroup of order " << t.H.order << " (index "
            << index << ")\n";
    }
    json values = json::array();
    for (const auto& v : sum.values) {
      std::ostringstream os;
      os << v;
      values.push_back(os.str());
    }
    const bool trivial = sum == ClassFunction::trivial(G);
    bool frob = true;
    const auto subs = all_subgroups(*G);
    for (const auto& H : subs) frob = frob && inner_product(induce_trivial(G, H), ClassFunction::trivial(G)) == Rational(1);
    const int base = param<int>("base_degree", 1);
    const auto data = descent_data_from_decomposition(dec, base);
    long long sum_q = 0;
    long long sum_k = 0;
    for (const auto& d : data) {
      sum_q += static_cast<long long>(d.multiplicity) * d.degree_over_Q;
      sum_k += static_cast<long long>(d.multiplicity) * d.degree_over_K;
    }
    const bool degrees = sum_q == base && sum_k == 1;
    const bool ok = trivial && frob && degrees && dec.verify();
    text_ << "certificate: sum of induced characters = (";
    for (size_t i = 0; i < values.size(); ++i) text_ << (i ? ", " : "") << values[i].get<std::string>();
    text_ << ") on classes; trivial " << (trivial ? "yes" : "NO") << "; degree identity " << degree
          << "; Frobenius reciprocity over " << subs.size() << " subgroups " << (frob ? "holds" : "FAILS") << "\n";
    out_.report = {{"group", G->name()},
                   {"order", G->order()},
                   {"classes", G->classes().size()},
                   {"solvable", dec.fast_path},
                   {"terms", terms},
                   {"l1_norm", dec.l1_norm},
                   {"certificate",
                    {{"sum_on_classes", values},
                     {"equals_trivial", trivial},
                     {"degree_at_identity", degree},
                     {"frobenius_all_subgroups", frob},
                     {"subgroups", subs.size()},
                     {"descent_degrees", {{"sum_q", sum_q}, {"sum_k", sum_k}, {"base_degree", base}}}}}};
    set_verdict(ok);
    finish_text();
  }
};

}  // namespace

RunResult run_command(const Scenario& s, const std::string& command, const json& params) {
  json merged = s.params.is_object() ? s.params : json::object();
  if (!params.is_null()) {
    if (!params.is_object()) fail(ErrorCode::InvalidInput, "params must be a JSON object", "/params");
    // shallow merge patch: null drops the file's key
    for (auto it = params.begin(); it != params.end(); ++it) {
      if (it.value().is_null()) merged.erase(it.key());
      else merged[it.key()] = it.value();
    }
  }
  const std::string cmd = command.empty() ? s.command : command;
  if (cmd.empty()) fail(ErrorCode::InvalidInput, "no command given", "/command");
  Runner r(s, merged);
  return r.run(cmd);
}

}  // namespace periodcalc
