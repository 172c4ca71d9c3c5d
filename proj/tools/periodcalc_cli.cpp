/* Copyright 2026 periodcalc contributors.
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at http://www.apache.org/licenses/LICENSE-2.0
 */
// Batch front-end over the C API. Exit codes: 0 success/PASS, 1 verification FAIL, 2 input error.

#include <CLI11.hpp>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "periodcalc/periodcalc.h"

namespace {

using json = nlohmann::json;

struct Common {
  std::string scenario;
  bool as_json = false;
  bool latex = false;
  std::optional<unsigned long long> seed;
  std::string out_dir;
};

struct Options {
  std::string character;
  std::string psi;
  bool square = false;
  std::optional<int> r;
  std::optional<int> j;
  std::optional<int> w0;
  std::string phi;
  std::vector<long long> k;
  std::string kind;
  std::string sigma;
  bool trace = false;
  bool no_normalize = false;
  std::optional<long long> mutate_index;
  std::optional<long long> mutate_delta;
  std::optional<long long> random;
  bool mutations = false;
  std::string group;
  std::string mode;
  std::optional<int> base_degree;
};

bool read_file(const std::string& path, std::string& out) {
  std::ifstream in(path);
  if (!in) return false;
  std::ostringstream ss;
  ss << in.rdbuf();
  out = ss.str();
  return true;
}

json build_params(const Options& o, const Common& c) {
  json p = json::object();
  if (!o.character.empty()) p["character"] = o.character;
  if (!o.psi.empty()) p["psi"] = o.psi;
  if (o.square) p["square"] = true;
  if (o.r) p["r"] = *o.r;
  if (o.j) p["j"] = *o.j;
  if (o.w0) p["w0"] = *o.w0;
  if (!o.phi.empty()) p["phi"] = o.phi;
  if (o.k.size() == 1) p["k"] = o.k.front();
  if (o.k.size() > 1) p["k"] = o.k;
  if (!o.kind.empty()) p["kind"] = o.kind;
  if (!o.sigma.empty()) p["sigma"] = o.sigma;
  if (o.trace) p["trace"] = true;
  if (o.no_normalize) p["normalize"] = false;
  if (o.mutate_index || o.mutate_delta) {
    json m = json::object();
    if (o.mutate_index) m["index"] = *o.mutate_index;
    m["delta"] = o.mutate_delta.value_or(1);
    p["mutate"] = m;
  }
  if (o.random) p["random"] = {{"count", *o.random}};
  if (o.mutations) p["mutations"] = true;
  if (c.seed) p["seed"] = *c.seed;
  if (!o.mode.empty()) p["mode"] = o.mode;
  if (o.base_degree) p["base_degree"] = *o.base_degree;
  return p;
}

int report_error(int rc) {
  std::cerr << "error [" << pc_last_error_code() << "]";
  const std::string ptr = pc_last_error_pointer();
  if (!ptr.empty()) std::cerr << " at " << ptr;
  std::cerr << ": " << pc_last_error() << "\n";
  return rc == PC_INTERNAL_ERROR ? 3 : 2;
}

bool write_text(const std::filesystem::path& p, const std::string& s) {
  std::ofstream out(p);
  out << s;
  return static_cast<bool>(out);
}

int run(const std::string& command, const Common& c, const Options& o) {
  std::string doc;
  if (!o.group.empty()) {
    std::string g;
    if (!read_file(o.group, g)) {
      std::cerr << "error: cannot read " << o.group << "\n";
      return 2;
    }
    json gj;
    try {
      gj = json::parse(g);
    } catch (const json::parse_error& e) {
      std::cerr << "error [InvalidInput]: malformed group file: " << e.what() << "\n";
      return 2;
    }
    json base = json::object();
    if (!c.scenario.empty()) {
      std::string s;
      if (!read_file(c.scenario, s)) {
        std::cerr << "error: cannot read " << c.scenario << "\n";
        return 2;
      }
      try {
        base = json::parse(s);
      } catch (const json::parse_error& e) {
        std::cerr << "error [InvalidInput]: malformed scenario: " << e.what() << "\n";
        return 2;
      }
    }
    base["group"] = gj.contains("group") ? gj["group"] : gj;
    doc = base.dump();
  } else if (!c.scenario.empty()) {
    if (!read_file(c.scenario, doc)) {
      std::cerr << "error: cannot read " << c.scenario << "\n";
      return 2;
    }
    if (command == "brauer") {
      // a bare group file is accepted too
      try {
        json j = json::parse(doc);
        if (!j.contains("group")) doc = json{{"group", j}}.dump();
      } catch (const json::parse_error&) {
        // let the loader report it
      }
    }
  } else if (o.random) {
    doc = "{}";
  } else {
    std::cerr << "error: a scenario file is required\n";
    return 2;
  }

  pc_scenario* sc = nullptr;
  int rc = pc_scenario_load(doc.c_str(), &sc);
  if (rc != PC_OK) return report_error(rc);
  std::unique_ptr<pc_scenario, void (*)(pc_scenario*)> guard(sc, pc_scenario_free);

  const std::string params = build_params(o, c).dump();
  pc_result* res = nullptr;
  rc = pc_scenario_run(sc, command.c_str(), params.c_str(), &res);
  if (rc != PC_OK && rc != PC_FAIL) return report_error(rc);
  std::unique_ptr<pc_result, void (*)(pc_result*)> rguard(res, pc_result_free);

  if (c.as_json) {
    std::cout << pc_result_json(res) << "\n";
  } else {
    std::cout << pc_result_text(res);
    std::cout << "verdict: " << pc_result_verdict(res) << "\n";
  }
  if (c.latex) std::cout << pc_result_latex(res);

  if (!c.out_dir.empty()) {
    std::error_code ec;
    std::filesystem::create_directories(c.out_dir, ec);
    const std::filesystem::path dir(c.out_dir);
    bool ok = !ec && write_text(dir / (command + ".json"), std::string(pc_result_json(res)) + "\n") &&
              write_text(dir / (command + ".txt"), pc_result_text(res));
    if (ok && c.latex) ok = write_text(dir / (command + ".tex"), pc_result_latex(res));
    if (!ok) {
      std::cerr << "error: cannot write into " << c.out_dir << "\n";
      return 2;
    }
  }
  return rc == PC_OK ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"periodcalc: period relations for twisted motives"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(pc_version()));

  Common common;
  Options opt;

  auto add_common = [&](CLI::App* sub, bool scenario_required) {
    auto* s = sub->add_option("scenario", common.scenario, "scenario JSON file");
    if (scenario_required) s->required();
    sub->add_flag("--json", common.as_json, "print the JSON report");
    sub->add_flag("--latex", common.latex, "print LaTeX");
    sub->add_option("--seed", common.seed, "seed for randomized suites");
    sub->add_option("--out", common.out_dir, "write report files into DIR");
  };

  auto* crit = app.add_subcommand("critical-set", "critical integers of M(chi)");
  add_common(crit, false);
  crit->add_option("--character", opt.character, "character label");
  crit->add_flag("--square", opt.square, "use chi = psi^2/(psi_0 o N)");
  crit->add_option("--random", opt.random, "random r = n suite of this size (no scenario needed)");

  auto* ridx = app.add_subcommand("r-index", "t-invariants and r-indices");
  add_common(ridx, true);
  ridx->add_option("--character", opt.character, "character label");
  ridx->add_flag("--square", opt.square, "use chi = psi^2/(psi_0 o N)");

  auto* bt = app.add_subcommand("build-twist", "character with prescribed r-index");
  add_common(bt, true);
  bt->add_option("--r", opt.r, "target r-index")->required();
  bt->add_option("--phi", opt.phi, "coefficient embedding");
  bt->add_option("--w0", opt.w0, "weight of the built character");

  auto* bs = app.add_subcommand("build-s5", "character with a single critical integer");
  add_common(bs, true);
  bs->add_option("--r", opt.r, "r in n/2+1..n-1")->required();

  auto* pe = app.add_subcommand("period-expr", "period expressions in normal form");
  add_common(pe, true);
  pe->add_option("--kind", opt.kind, "deligne|cplus|twist|p-chi|main-lhs|main-rhs|qj");
  pe->add_option("--character", opt.character, "character label");
  pe->add_option("--psi", opt.psi, "label of psi");
  pe->add_option("--k", opt.k, "critical integer");
  pe->add_option("--r", opt.r, "r-index");
  pe->add_option("--j", opt.j, "index of Q_j");
  pe->add_option("--w0", opt.w0, "character weight");
  pe->add_option("--sigma", opt.sigma, "real embedding for local factors");
  pe->add_option("--phi", opt.phi, "coefficient embedding");
  pe->add_flag("--square", opt.square, "use chi = psi^2/(psi_0 o N)");
  pe->add_flag("--trace", opt.trace, "include the rewrite trace");
  pe->add_flag("--no-normalize", opt.no_normalize, "print the raw expression only");

  auto* vm = app.add_subcommand("verify-main", "check the automorphic period identity");
  add_common(vm, false);
  vm->add_option("--psi", opt.psi, "label of psi");
  vm->add_option("--k", opt.k, "critical integers to check (default: all in range)");
  vm->add_option("--mutate-index", opt.mutate_index, "shift the exponent of the i-th rhs generator");
  vm->add_option("--mutate-delta", opt.mutate_delta, "shift applied by --mutate-index");
  vm->add_option("--random", opt.random, "random suite of this size (no scenario needed)");
  vm->add_flag("--mutations", opt.mutations, "with --random: every +-1 exponent mutation must FAIL");

  auto* vp = app.add_subcommand("verify-potential", "check the descent identity");
  add_common(vp, true);
  vp->add_option("--psi", opt.psi, "label of psi");
  vp->add_option("--k", opt.k, "critical integers to check");
  vp->add_option("--group", opt.group, "group JSON whose Brauer decomposition gives the descent");

  auto* q = app.add_subcommand("qj", "quadratic period relations");
  add_common(q, true);
  q->add_option("--j", opt.j, "index j < n/2");
  q->add_option("--phi", opt.phi, "coefficient embedding");
  q->add_option("--w0", opt.w0, "character weight");
  q->add_option("--mode", opt.mode, "period|lvalue");

  auto* br = app.add_subcommand("brauer", "Brauer decomposition of the trivial character");
  add_common(br, false);
  br->add_option("--group", opt.group, "group JSON (permutations, table or name)");
  br->add_option("--base-degree", opt.base_degree, "[K:Q] used for the descent degrees");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }
  for (auto* sub : app.get_subcommands()) return run(sub->get_name(), common, opt);
  return 2;
}
