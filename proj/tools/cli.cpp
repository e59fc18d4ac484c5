/* Copyright 2026 The palogic Authors. All Rights Reserved.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

#include "cli.hpp"

#include <charconv>
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iomanip>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "palogic/belief.hpp"
#include "palogic/builtin.hpp"
#include "palogic/chain_model.hpp"
#include "palogic/english.hpp"
#include "palogic/enumerate.hpp"
#include "palogic/error.hpp"
#include "palogic/laws.hpp"
#include "palogic/tarpit.hpp"
#include "palogic/witness.hpp"

namespace palogic::cli {
namespace {

using Json = nlohmann::ordered_json;

struct Context {
  Context(std::ostream& o, std::ostream& e) : out(o), err(e) {}

  std::ostream& out;
  std::ostream& err;
  bool json = false;
  bool timing = false;
  unsigned jobs = 1;
  std::uint64_t seed = 1;
  std::string laws_arg;
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();

  void emit(const Json& record) const { out << record.dump() << '\n'; }
  double elapsed_ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  }
};

// --laws wins; then a law-set file named by PALOGIC_LAWS; then the default.
LawSet active_laws(const Context& ctx) {
  if (!ctx.laws_arg.empty()) return resolve_law_set(ctx.laws_arg);
  if (const char* env = std::getenv("PALOGIC_LAWS"); env && *env) return load_law_set_file(env);
  return LawSet::default_set();
}

Json run_record(const Context& ctx, const std::string& sub, Json inputs, const std::string& law_set) {
  Json r;
  r["record"] = "run";
  r["tool"] = "palogic";
  r["version"] = PALOGIC_VERSION;
  r["subcommand"] = sub;
  r["law_set"] = law_set;
  r["seed"] = ctx.seed;
  r["inputs"] = std::move(inputs);
  return r;
}

int finish(const Context& ctx, int code, const std::string& status) {
  if (ctx.json) {
    Json s;
    s["record"] = "summary";
    s["status"] = status;
    s["exit_code"] = code;
    if (ctx.timing) s["timing_ms"] = ctx.elapsed_ms();
    ctx.emit(s);
  } else {
    ctx.out << "result: " << status << '\n';
    if (ctx.timing) ctx.out << "elapsed: " << ctx.elapsed_ms() << " ms\n";
  }
  return code;
}

Json model_json(const ChainModel& m) {
  Json j;
  j["n"] = m.size();
  Json i = Json::array();
  for (auto e : m.i_table()) i.push_back(e.rank);
  j["i"] = i;
  Json rows = Json::array();
  for (std::size_t p = 0; p < m.size(); ++p) {
    Json row = Json::array();
    for (std::size_t q = 0; q < m.size(); ++q) row.push_back(m.h_table()[p * m.size() + q].rank);
    rows.push_back(row);
  }
  j["h"] = rows;
  return j;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// ---------------------------------------------------------------- enumerate

int cmd_enumerate(const Context& ctx, std::size_t size, const std::string& emit_dir) {
  const LawSet laws = active_laws(ctx);
  const auto result = enumerate_models(size, laws, {EnumerationOptions{}.max_size, ctx.jobs});
  if (!emit_dir.empty()) {
    std::filesystem::create_directories(emit_dir);
    for (std::size_t k = 0; k < result.models.size(); ++k)
      save_chain_model(result.models[k],
                       (std::filesystem::path(emit_dir) / ("n" + std::to_string(size) + "_" + std::to_string(k + 1) + ".model")).string());
  }
  if (ctx.json) {
    Json in;
    in["size"] = size;
    if (!emit_dir.empty()) in["emit_models"] = emit_dir;
    ctx.emit(run_record(ctx, "enumerate", in, laws.name()));
    for (std::size_t k = 0; k < result.models.size(); ++k) {
      Json r;
      r["record"] = "model";
      r["index"] = k + 1;
      r["model"] = model_json(result.models[k]);
      ctx.emit(r);
    }
    Json c;
    c["record"] = "count";
    c["n"] = size;
    c["count"] = result.count;
    ctx.emit(c);
  } else {
    ctx.out << "enumerate n=" << size << "  law set: " << laws.name() << '\n';
    for (std::size_t k = 0; k < result.models.size(); ++k)
      ctx.out << "\n# model " << k + 1 << '\n' << format_chain_model(result.models[k]);
    ctx.out << "\ncount: " << result.count << '\n';
  }
  return finish(ctx, kExitOk, "ok");
}

// ------------------------------------------------------------------- census

std::string counts_text(const CensusReport& r) {
  std::string s;
  for (const auto& row : r.rows) s += (s.empty() ? "" : ",") + std::to_string(row.actual);
  return s;
}

int cmd_census(const Context& ctx, bool calibration) {
  const LawSet laws = active_laws(ctx);
  const EnumerationOptions opts{EnumerationOptions{}.max_size, ctx.jobs};
  const auto report = census(laws, opts);
  const bool ok = report.matches();
  std::optional<CalibrationReport> cal;
  if (!ok || calibration) cal = calibrate(calibration_variants(), opts);

  if (ctx.json) {
    ctx.emit(run_record(ctx, "census", Json::object(), laws.name()));
    for (const auto& row : report.rows) {
      Json r;
      r["record"] = "census";
      r["n"] = row.n;
      r["expected"] = row.expected;
      r["actual"] = row.actual;
      r["match"] = row.expected == row.actual;
      ctx.emit(r);
    }
    if (cal)
      for (const auto& v : cal->variants) {
        Json r;
        r["record"] = "calibration";
        r["law_set"] = v.law_set;
        Json counts = Json::array();
        for (const auto& row : v.rows) counts.push_back(row.actual);
        r["counts"] = counts;
        r["match"] = v.matches();
        ctx.emit(r);
      }
  } else {
    ctx.out << "census  law set: " << laws.name() << "\n\n";
    ctx.out << "   n  expected  actual\n";
    for (const auto& row : report.rows) {
      char line[64];
      std::snprintf(line, sizeof line, "%4zu  %8zu  %6zu  %s\n", row.n, row.expected, row.actual,
                    row.expected == row.actual ? "" : "MISMATCH");
      ctx.out << line;
    }
    if (cal) {
      ctx.out << "\ncalibration (counts for n=2..7):\n";
      for (const auto& v : cal->variants) {
        ctx.out << "  " << v.law_set << std::string(v.law_set.size() < 12 ? 12 - v.law_set.size() : 1, ' ')
                << counts_text(v) << (v.matches() ? "  matches" : "") << '\n';
      }
    }
    ctx.out << '\n';
  }
  return finish(ctx, ok ? kExitOk : kExitFailure, ok ? "match" : "mismatch");
}

// -------------------------------------------------------------------- check

int cmd_check(const Context& ctx, const std::string& model_path, const std::string& algebra,
              std::size_t samples, double tolerance) {
  const LawSet laws = active_laws(ctx);
  Json in;
  struct Row {
    Law law;
    bool pass;
    std::string witness;
    std::string detail;
  };
  std::vector<Row> rows;
  std::string subject;
  if (!model_path.empty() || algebra == "two") {
    const ChainModel m = model_path.empty() ? two_element_model() : load_chain_model(model_path);
    subject = model_path.empty() ? "two" : model_path;
    if (model_path.empty()) in["algebra"] = "two";
    else in["model"] = model_path;
    for (Law law : laws.laws()) {
      const auto r = check_law(m, law);
      std::string w;
      if (r)
        for (auto e : r->witness) w += (w.empty() ? "" : ",") + std::to_string(e.rank);
      rows.push_back({law, !r, w, r ? r->detail : ""});
    }
  } else if (algebra == "real") {
    subject = "real";
    in["algebra"] = "real";
    in["samples"] = samples;
    in["tolerance"] = tolerance;
    const RealInterval real(tolerance);
    for (Law law : laws.laws()) {
      const auto r = check_law_sampled(real, law, samples, tolerance, ctx.seed);
      std::string w;
      if (r)
        for (double x : r->witness) {
          char buf[64];
          const auto end = std::to_chars(buf, buf + sizeof buf, x).ptr;
          w += (w.empty() ? "" : ",") + std::string(buf, end);
        }
      rows.push_back({law, !r, w, r ? r->detail : ""});
    }
  } else {
    throw CLI::ValidationError("check", "needs --model FILE or --algebra two|real");
  }

  std::size_t failed = 0;
  for (const auto& r : rows) failed += !r.pass;
  if (ctx.json) {
    ctx.emit(run_record(ctx, "check", in, laws.name()));
    for (const auto& r : rows) {
      Json j;
      j["record"] = "law";
      j["law"] = std::string(law_id(r.law));
      j["pass"] = r.pass;
      if (!r.pass) {
        j["witness"] = r.witness;
        j["detail"] = r.detail;
      }
      ctx.emit(j);
    }
  } else {
    ctx.out << "check " << subject << "  law set: " << laws.name() << "\n\n";
    for (const auto& r : rows) {
      ctx.out << "  " << law_id(r.law) << (law_id(r.law).size() < 3 ? "  " : " ") << (r.pass ? "pass" : "FAIL")
              << "  " << law_description(r.law);
      if (!r.pass) ctx.out << "\n        witness (" << r.witness << "): " << r.detail;
      ctx.out << '\n';
    }
    ctx.out << '\n';
  }
  return finish(ctx, failed ? kExitFailure : kExitOk,
                failed ? std::to_string(failed) + " of " + std::to_string(rows.size()) + " laws failed" : "pass");
}

// ------------------------------------------------------------------ compare

int cmd_compare(const Context& ctx, const std::string& algebra_spec, const std::vector<std::string>& terms,
                bool residual) {
  Json in;
  in["algebra"] = algebra_spec;
  in["terms"] = terms;
  if (residual) in["residual"] = true;
  if (terms.size() != 2) throw CLI::ValidationError("compare", "expects exactly two values");

  std::string result_key, result;
  std::string left, right;
  if (algebra_spec == "english") {
    auto eng = std::make_shared<english::EnglishAlgebra>();
    const auto vals = belief::make_english_algebra(eng);
    const auto a = std::get<english::Term>(vals->parse(terms[0]));
    const auto b = std::get<english::Term>(vals->parse(terms[1]));
    left = english::to_string(a);
    right = english::to_string(b);
    if (residual) {
      const auto r = eng->residual(a, b);
      result_key = "residual";
      result = english::to_string(r.term) + (r.fresh ? "" : " (existing solution)");
    } else {
      result_key = "relation";
      result = to_string(eng->compare(a, b));
    }
  } else {
    if (residual) throw CLI::ValidationError("compare", "--residual needs --algebra english");
    const auto alg = belief::make_algebra(algebra_spec);
    const auto a = alg->parse(terms[0]);
    const auto b = alg->parse(terms[1]);
    left = alg->format(a);
    right = alg->format(b);
    result_key = "relation";
    result = to_string(alg->compare(a, b));
  }
  if (ctx.json) {
    ctx.emit(run_record(ctx, "compare", in, "-"));
    Json j;
    j["record"] = "compare";
    j["left"] = left;
    j["right"] = right;
    j[result_key] = result;
    ctx.emit(j);
  } else {
    if (result_key == "relation") ctx.out << left << "  " << result << "  " << right << '\n';
    else ctx.out << "s(" << left << "," << right << ") = " << result << '\n';
  }
  return finish(ctx, kExitOk, "ok");
}

// -------------------------------------------------------------------- infer

struct Query {
  std::string text;
  belief::Conditional left;
  std::optional<belief::Operand> right;  // absent: report the value
};

Query parse_query(const std::string& text, const belief::ValueAlgebra& alg) {
  int depth = 0;
  std::size_t q = std::string::npos;
  for (std::size_t k = 0; k < text.size() && q == std::string::npos; ++k) {
    if (text[k] == '(') ++depth;
    else if (text[k] == ')') --depth;
    else if (text[k] == '?' && depth == 0) q = k;
  }
  if (q == std::string::npos) return {text, belief::parse_conditional(text), std::nullopt};
  return {text, belief::parse_conditional(text.substr(0, q)), belief::parse_operand(text.substr(q + 1), alg)};
}

int cmd_infer(const Context& ctx, const std::string& algebra_spec, const std::string& kb_path,
              const std::vector<std::string>& queries, std::size_t depth) {
  const auto alg = belief::make_algebra(algebra_spec);
  belief::KbOptions opts;
  opts.combination_depth = depth;
  belief::BeliefKB kb(alg, opts);
  std::vector<belief::Fact> facts;
  try {
    facts = belief::parse_kb(read_file(kb_path), *alg);
  } catch (const ParseError& e) {
    throw ParseError(kb_path, e);
  }
  for (auto& f : facts) kb.add(std::move(f));
  std::vector<Query> parsed;
  for (const auto& q : queries) {
    try {
      parsed.push_back(parse_query(q, *alg));
    } catch (const ParseError& e) {
      throw ParseError("query '" + q + "': " + e.what());
    }
  }
  for (const auto& q : parsed) {
    kb.mention(q.left);
    if (q.right)
      if (const auto* c = std::get_if<belief::Conditional>(&*q.right)) kb.mention(*c);
  }
  kb.close();

  auto answer = [&](const Query& q) -> std::pair<std::string, std::string> {
    if (!q.right) {
      const auto v = kb.value_of(q.left);
      return {"value", v ? alg->format(*v) : "unknown"};
    }
    return {"relation", std::string(to_string(kb.query(q.left, *q.right)))};
  };
  const auto values = kb.derived_values();

  if (ctx.json) {
    Json in;
    in["algebra"] = algebra_spec;
    in["kb"] = kb_path;
    in["queries"] = queries;
    in["depth"] = depth;
    ctx.emit(run_record(ctx, "infer", in, "-"));
    Json s;
    s["record"] = "kb";
    s["facts"] = kb.facts().size();
    s["universe"] = kb.universe_size();
    s["consistent"] = kb.consistent();
    ctx.emit(s);
    for (const auto& c : kb.conflicts()) {
      Json j;
      j["record"] = "conflict";
      j["detail"] = c;
      ctx.emit(j);
    }
    for (const auto& v : values) {
      Json j;
      j["record"] = "value";
      j["conditional"] = belief::to_string(v.conditional);
      j["value"] = alg->format(v.value);
      ctx.emit(j);
    }
    for (const auto& p : kb.pending_cases()) {
      Json j;
      j["record"] = "pending";
      j["conjunction"] = belief::to_string(p.conjunction);
      j["either"] = belief::to_string(p.first);
      j["or"] = belief::to_string(p.second);
      j["open"] = p.open;
      ctx.emit(j);
    }
    for (const auto& q : parsed) {
      const auto [key, value] = answer(q);
      Json j;
      j["record"] = "query";
      j["query"] = q.text;
      j[key] = value;
      ctx.emit(j);
    }
  } else {
    ctx.out << "infer  algebra: " << alg->name() << "  facts: " << kb.facts().size()
            << "  universe: " << kb.universe_size() << " conditionals\n";
    if (!kb.consistent()) {
      ctx.out << "\nINCONSISTENT\n";
      for (const auto& c : kb.conflicts()) ctx.out << "  " << c << '\n';
    }
    ctx.out << "\nderived values:\n";
    for (const auto& v : values)
      ctx.out << "  " << belief::to_string(v.conditional) << " = " << alg->format(v.value) << '\n';
    std::size_t open = 0;
    for (const auto& p : kb.pending_cases()) open += p.open;
    if (open) {
      ctx.out << "\npending zero splits:\n";
      for (const auto& p : kb.pending_cases())
        if (p.open)
          ctx.out << "  " << belief::to_string(p.conjunction) << " = 0: " << belief::to_string(p.first)
                  << " = 0 or " << belief::to_string(p.second) << " = 0\n";
    }
    if (!parsed.empty()) {
      ctx.out << "\nqueries:\n";
      for (const auto& q : parsed) ctx.out << "  " << q.text << "  ->  " << answer(q).second << '\n';
    }
    ctx.out << '\n';
  }
  return finish(ctx, kb.consistent() ? kExitOk : kExitFailure, kb.consistent() ? "consistent" : "inconsistent");
}

// -------------------------------------------------------------------- embed

int cmd_embed(const Context& ctx, const std::string& model_path) {
  const ChainModel m = load_chain_model(model_path);
  const auto e = embed(m);
  const bool loud = e.verdict == Verdict::Infeasible;
  auto rank_name = [&](std::uint32_t r) {
    return r == 0 ? std::string("zero") : r + 1 == m.size() ? std::string("one") : std::to_string(r);
  };

  if (ctx.json) {
    Json in;
    in["model"] = model_path;
    ctx.emit(run_record(ctx, "embed", in, "-"));
    Json j;
    j["record"] = "embedding";
    j["verdict"] = to_string(e.verdict);
    j["lp_feasible"] = e.lp_feasible;
    if (e.archimedean_witness)
      j["archimedean_witness"] = {e.archimedean_witness->first.rank, e.archimedean_witness->second.rank};
    if (e.verdict == Verdict::Embedded) {
      Json logs = Json::object();
      for (std::uint32_t r = 0; r < m.size(); ++r)
        logs[std::to_string(r)] = e.log_value[r] ? linear::format_rational(*e.log_value[r]) : "inf";
      j["neg_log_values"] = logs;
    }
    if (e.i_compatible) j["i_compatible"] = *e.i_compatible;
    if (!e.contradiction.empty()) j["contradiction"] = e.contradiction;
    if (!e.notes.empty()) j["notes"] = e.notes;
    ctx.emit(j);
  } else {
    ctx.out << "embed " << model_path << " (n=" << m.size() << ")\n\n";
    ctx.out << "verdict: " << to_string(e.verdict) << '\n';
    if (e.archimedean_witness)
      ctx.out << "non-archimedean witness: p=" << rank_name(e.archimedean_witness->first.rank)
              << ", q=" << rank_name(e.archimedean_witness->second.rank) << " (p^n never drops below q)\n";
    ctx.out << "log-space system: " << (e.lp_feasible ? "feasible" : "infeasible") << '\n';
    if (e.verdict == Verdict::Embedded) {
      ctx.out << "\n  rank  -log v\n";
      for (std::uint32_t r = 0; r < m.size(); ++r)
        ctx.out << "  " << std::left << std::setw(6) << rank_name(r) << std::right << (e.log_value[r] ? linear::format_rational(*e.log_value[r]) : "inf")
                << '\n';
      if (e.i_compatible) ctx.out << "\ni-compatible: " << (*e.i_compatible ? "yes" : "no") << '\n';
    }
    if (!e.contradiction.empty()) {
      ctx.out << "\ncontradiction from:\n";
      for (const auto& c : e.contradiction) ctx.out << "  " << c << '\n';
    }
    for (const auto& n : e.notes) ctx.out << "note: " << n << '\n';
    ctx.out << '\n';
  }
  if (loud) ctx.err << "palogic: total archimedean model without an embedding: " << model_path << '\n';
  return finish(ctx, loud ? kExitFailure : kExitOk, to_string(e.verdict));
}

// ------------------------------------------------------------------ witness

int cmd_witness(const Context& ctx, const std::string& algebra_spec, int axiom, const std::vector<double>& targets) {
  const auto alg = belief::make_algebra(algebra_spec);
  const auto w = belief::richness_witness(axiom, targets, *alg);
  Json in;
  in["algebra"] = algebra_spec;
  in["axiom"] = axiom;
  in["targets"] = targets;
  if (!w) {
    if (ctx.json) ctx.emit(run_record(ctx, "witness", in, "-"));
    else ctx.out << "no witness construction for algebra " << alg->name() << '\n';
    return finish(ctx, kExitFailure, "unsupported");
  }
  const auto check = belief::verify_witness(*w, alg);
  if (ctx.json) {
    ctx.emit(run_record(ctx, "witness", in, "-"));
    Json j;
    j["record"] = "witness";
    j["atoms"] = w->atoms;
    j["layers"] = w->layers;
    j["verified"] = check.ok;
    if (!check.ok) j["detail"] = check.detail;
    ctx.emit(j);
  } else {
    ctx.out << "witness for axiom " << axiom << " over " << alg->name() << "\n\n";
    for (std::size_t l = 0; l < w->layers.size(); ++l) {
      ctx.out << "layer " << l + 1 << ":";
      for (std::size_t r = 0; r < w->layers[l].size(); ++r) {
        std::string cell;
        for (std::size_t k = 0; k < w->atoms.size(); ++k) cell += ((r >> k) & 1u ? "" : "~") + w->atoms[k];
        ctx.out << "  " << cell << "=" << w->layers[l][r];
      }
      ctx.out << '\n';
    }
    ctx.out << "\nre-derived through close(): " << (check.ok ? "yes" : "NO: " + check.detail) << "\n\n";
  }
  return finish(ctx, check.ok ? kExitOk : kExitFailure, check.ok ? "verified" : "not verified");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Abstract probability algebras: law checks, model census, belief inference, embeddings.", "palogic"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_version_flag("--version", PALOGIC_VERSION);

  Context ctx{out, err};
  app.add_flag("--json", ctx.json, "Line-delimited JSON records instead of the human report");
  app.add_flag("--timing", ctx.timing, "Include wall-clock timing (makes reports run-dependent)");
  app.add_option("--jobs", ctx.jobs, "Worker threads for enumeration")->check(CLI::Range(1u, 256u));
  app.add_option("--seed", ctx.seed, "Seed for sampled law checks")->capture_default_str();
  app.add_option("--laws", ctx.laws_arg, "Law set: default, full, no-L6, ... or a law-set file");

  std::function<int()> action;

  std::size_t size = 0;
  std::string emit_dir;
  auto* en = app.add_subcommand("enumerate", "List every model of the law set on the n-chain");
  en->add_option("--size", size, "Chain size n")->required();
  en->add_option("--emit-models", emit_dir, "Write each model to DIR/n<N>_<k>.model");
  en->callback([&] { action = [&] { return cmd_enumerate(ctx, size, emit_dir); }; });

  bool calibration = false;
  auto* ce = app.add_subcommand("census", "Count models for n = 2..7 against the reference table");
  ce->add_flag("--calibration", calibration, "Always print the law-set variant counts");
  ce->callback([&] { action = [&] { return cmd_census(ctx, calibration); }; });

  std::string model_path, algebra;
  std::size_t samples = 10000;
  double tolerance = RealInterval::kDefaultTolerance;
  auto* ch = app.add_subcommand("check", "Check a model file or built-in algebra against the law set");
  auto* model_opt = ch->add_option("--model", model_path, "Model file");
  ch->add_option("--algebra", algebra, "Built-in algebra: two or real")
      ->check(CLI::IsMember({"two", "real"}))
      ->excludes(model_opt);
  ch->add_option("--samples", samples, "Sampled tuples per law (real)")->capture_default_str();
  ch->add_option("--tolerance", tolerance, "Equality tolerance (real)")->check(CLI::NonNegativeNumber);
  ch->callback([&] { action = [&] { return cmd_check(ctx, model_path, algebra, samples, tolerance); }; });

  std::string cmp_algebra = "english";
  std::vector<std::string> terms;
  bool residual = false;
  auto* co = app.add_subcommand("compare", "Compare two values of an algebra");
  co->add_option("--algebra", cmp_algebra, "two, real, english or model:FILE")->capture_default_str();
  co->add_flag("--residual", residual, "Print the residual s(a,b) instead (english)");
  co->add_option("values", terms, "Two values")->required()->expected(2);
  co->callback([&] { action = [&] { return cmd_compare(ctx, cmp_algebra, terms, residual); }; });

  std::string inf_algebra, kb_path;
  std::vector<std::string> queries;
  std::size_t depth = belief::KbOptions{}.combination_depth;
  auto* in = app.add_subcommand("infer", "Close a belief knowledge base and answer queries");
  in->add_option("--algebra", inf_algebra, "two, real, english or model:FILE")->required();
  in->add_option("--kb", kb_path, "Knowledge base file")->required();
  in->add_option("--query", queries, "\"P(a|b) ? P(c|d)\", \"P(a|b) ? value\" or \"P(a|b)\"");
  in->add_option("--depth", depth, "Combination depth")->capture_default_str();
  in->callback([&] { action = [&] { return cmd_infer(ctx, inf_algebra, kb_path, queries, depth); }; });

  std::string embed_model;
  auto* em = app.add_subcommand("embed", "Decide an embedding of a chain model into [0,1]");
  em->add_option("--model", embed_model, "Model file")->required();
  em->callback([&] { action = [&] { return cmd_embed(ctx, embed_model); }; });

  std::string wit_algebra = "real";
  int axiom = 0;
  std::vector<double> targets;
  auto* wi = app.add_subcommand("witness", "Build and verify a belief function for a richness axiom");
  wi->add_option("--algebra", wit_algebra, "real or two")->capture_default_str();
  wi->add_option("--axiom", axiom, "10, 11 or 12")->required()->check(CLI::IsMember({10, 11, 12}));
  wi->add_option("targets", targets, "Target values")->required();
  wi->callback([&] { action = [&] { return cmd_witness(ctx, wit_algebra, axiom, targets); }; });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::CallForVersion&) {
    out << PALOGIC_VERSION << '\n';
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "palogic: " << e.what() << "\n\n" << app.help();
    return kExitUsage;
  }

  try {
    return action();
  } catch (const CLI::ParseError& e) {
    err << "palogic: " << e.what() << "\n\n" << app.help();
    return kExitUsage;
  } catch (const ParseError& e) {
    err << "palogic: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    err << "palogic: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "palogic: " << e.what() << '\n';
    return kExitUsage;
  }
}

}  // namespace palogic::cli
