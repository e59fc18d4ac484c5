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

// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "oracles.hpp"
#include "palogic/belief.hpp"
#include "palogic/builtin.hpp"
#include "palogic/chain_model.hpp"
#include "palogic/enumerate.hpp"
#include "palogic/english.hpp"
#include "palogic/laws.hpp"
#include "palogic/tarpit.hpp"
#include "palogic/witness.hpp"

using namespace palogic;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

int failures = 0;

void report(int id, const char* name, bool ok, const std::string& detail) {
  if (!ok) ++failures;
  std::printf("[%s] %d %s: %s\n", ok ? "PASS" : "FAIL", id, name, detail.c_str());
  std::fflush(stdout);
}

std::string fmt(double s) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2fs", s);
  return buf;
}

void census_reproduction() {
  const auto t0 = Clock::now();
  EnumerationOptions opt;
  opt.jobs = 4;
  const auto rep = census(LawSet::default_set(), opt);
  const double took = seconds_since(t0);
  std::string counts;
  for (const auto& r : rep.rows) counts += (counts.empty() ? "" : ",") + std::to_string(r.actual);
  std::string expected;
  for (auto c : kReferenceCensus) expected += (expected.empty() ? "" : ",") + std::to_string(c);
  const bool ok = rep.matches() && took < 60.0;
  std::string detail = "counts " + counts + " expected " + expected + " in " + fmt(took);
  if (!rep.matches()) {
    const auto cal = calibrate(calibration_variants(), opt);
    detail += "; calibration report:";
    for (const auto& v : cal.variants) {
      std::string c;
      for (const auto& r : v.rows) c += (c.empty() ? "" : ",") + std::to_string(r.actual);
      detail += " " + v.law_set + "=" + c + (v.matches() ? "(match)" : "");
    }
  }
  report(1, "census reproduction", ok, detail);
}

void law_suite() {
  const auto t0 = Clock::now();
  const auto defaults = LawSet::default_set();
  const auto m1 = check_laws(two_element_model(), defaults);
  const RealInterval real;
  std::size_t m2 = 0;
  for (Law law : defaults.laws())
    if (check_law_sampled(real, law, 10000, 1e-12, 2026)) ++m2;
  const double took = seconds_since(t0);
  report(2, "law suite", m1.empty() && m2 == 0 && took < 5.0,
         "two-element failures " + std::to_string(m1.size()) + ", real interval failures " +
             std::to_string(m2) + " over 10000 samples in " + fmt(took));
}

void tarpit_biconditional() {
  const auto t0 = Clock::now();
  std::size_t models = 0, embedded = 0, mismatches = 0, bad = 0;
  for (std::size_t n = 2; n <= 6; ++n)
    for (const auto& m : enumerate_models(n, LawSet::default_set()).models) {
      ++models;
      const auto e = embed(m);
      const bool ok = e.verdict == Verdict::Embedded;
      if (ok != oracle::archimedean_direct(m)) ++mismatches;
      if (ok) {
        ++embedded;
        if (verify_embedding(m, e)) ++bad;
      }
    }
  const double took = seconds_since(t0);
  report(3, "tar-pit biconditional", mismatches == 0 && bad == 0 && took < 30.0,
         std::to_string(models) + " models, " + std::to_string(embedded) + " embedded, " +
             std::to_string(mismatches) + " mismatches, " + std::to_string(bad) +
             " failed re-verification in " + fmt(took));
}

void oracle_equivalence() {
  bool ok = true;
  std::string detail;
  for (int n = 2; n <= 5; ++n) {
    const auto pruned = enumerate_models(n, LawSet::default_set()).models;
    const auto naive = oracle::naive_models(n, LawSet::default_set());
    ok &= pruned == naive;
    detail += "n=" + std::to_string(n) + ":" + std::to_string(pruned.size()) + "/" +
              std::to_string(naive.size()) + " ";
  }
  std::size_t checked = 0, disagree = 0;
  for (std::size_t n = 2; n <= 7; ++n)
    for (const auto& m : enumerate_models(n, LawSet::default_set()).models) {
      ++checked;
      if (is_archimedean_by_idempotents(m) != is_archimedean(m).archimedean) ++disagree;
    }
  ok &= disagree == 0;
  report(4, "oracle equivalence", ok,
         "pruned/naive " + detail + "; idempotent shortcut disagrees on " + std::to_string(disagree) +
             " of " + std::to_string(checked));
}

void english_properties() {
  using english::Term;
  std::mt19937_64 rng(2026);
  std::size_t bad_idem = 0, bad_confluence = 0;
  const int kTerms = 1000;
  for (int k = 0; k < kTerms; ++k) {
    const Term raw = oracle::random_term(rng, 4);
    const Term n = english::normalize(raw);
    if (!(english::normalize(n) == n)) ++bad_idem;
    for (int r = 0; r < 3; ++r)
      if (!(oracle::rewrite_randomly(raw, rng) == n)) ++bad_confluence;
  }

  english::EnglishAlgebra e;
  std::vector<Term> terms;
  for (int k = 0; k < 20; ++k) terms.push_back(e.reduce(oracle::random_term(rng, 2)));
  std::size_t bad_order = 0;
  for (const Term& a : terms)
    for (const Term& b : terms) {
      const Relation ab = e.compare(a, b);
      if (ab != converse(e.compare(b, a))) ++bad_order;
      if (entails_le(ab))
        for (const Term& c : terms)
          if (entails_le(e.compare(b, c)) && !entails_le(e.compare(a, c))) ++bad_order;
    }

  english::EnglishAlgebra fresh;
  const Term L = Term::likely(), U = Term::unlikely();
  const bool facts = fresh.compare(U, L) == Relation::LT &&
                     fresh.compare(Term::neg(Term::neg(L)), L) == Relation::EQ &&
                     fresh.compare(Term::product({L, L}), U) == Relation::Incomparable;
  report(5, "english algebra", bad_idem == 0 && bad_confluence == 0 && bad_order == 0 && facts && e.consistent(),
         std::to_string(kTerms) + " terms: " + std::to_string(bad_idem) + " not idempotent, " +
             std::to_string(bad_confluence) + " non-confluent rewrites; " + std::to_string(bad_order) +
             " order violations over " + std::to_string(terms.size()) + " terms; specific facts " +
             (facts ? "hold" : "fail"));
}

void belief_soundness() {
  using namespace palogic::belief;
  auto real = make_algebra("real");
  const std::vector<std::string> abc = {"A", "B", "C"};
  const char* const sentences[] = {"A", "B", "C", "~A", "~B", "A & B", "A | B", "A & ~C", "B | C", "TRUE", "~C", "A & B & C"};
  std::mt19937_64 rng(2026);
  const int kJoints = 100;
  std::size_t derived = 0, wrong = 0, inconsistent = 0;
  for (int trial = 0; trial < kJoints; ++trial) {
    const int atoms = 1 + trial % 3;
    const auto joint = oracle::random_positive_joint(atoms, rng);
    auto truth = [&](const Conditional& c) {
      const auto ev = logic::truth_table(c.evidence, abc);
      const auto hy = logic::truth_table(c.hypothesis, abc);
      return joint.conditional([&](int r) { return hy.get(r); }, [&](int r) { return ev.get(r); });
    };
    // sentences restricted to the joint's atoms
    std::vector<const char*> usable;
    for (const char* s : sentences) {
      const auto names = logic::atoms(logic::parse_sentence(s));
      bool fits = true;
      for (const auto& a : names) fits &= (a[0] - 'A') < atoms;
      if (fits) usable.push_back(s);
    }
    auto pick = [&] { return logic::parse_sentence(usable[rng() % usable.size()]); };
    BeliefKB kb(real);
    for (int k = 0; k < 3; ++k) {
      const Conditional c{pick(), pick()};
      kb.add({c, FactRelation::Eq, Value{truth(c)}});
    }
    kb.close();
    if (!kb.consistent()) ++inconsistent;
    for (const auto& d : kb.derived_values()) {
      ++derived;
      if (std::fabs(std::get<double>(d.value) - truth(d.conditional)) > 1e-9) ++wrong;
    }
    for (const auto& o : kb.derived_order()) {
      ++derived;
      const double lo = truth(o.lower), hi = truth(o.upper);
      if (lo > hi + 1e-9 || (o.strict && lo >= hi)) ++wrong;
    }
  }

  BeliefKB chain(real);
  for (auto& f : parse_kb("P(A|B & TRUE) = 0.5\nP(B|TRUE) = 0.4\n", *real)) chain.add(std::move(f));
  const Conditional ab = parse_conditional("P(A & B|TRUE)");
  chain.mention(ab);
  chain.close();
  const auto v = chain.value_of(ab);
  const bool chain_ok = v && std::fabs(std::get<double>(*v) - 0.5 * 0.4) <= 1e-12;

  std::size_t witnesses = 0, witness_fail = 0;
  const double grid[] = {0.0, 0.1, 0.25, 0.5, 0.9, 1.0};
  for (double a : grid)
    for (double b : grid) {
      for (double c : {0.0, 0.3, 1.0}) {
        ++witnesses;
        if (!verify_witness(*richness_witness(10, {a, b, c}, *real), real).ok) ++witness_fail;
      }
      ++witnesses;
      if (!verify_witness(*richness_witness(11, {a, b}, *real), real).ok) ++witness_fail;
      if (b <= a) {
        ++witnesses;
        if (!verify_witness(*richness_witness(12, {a, b}, *real), real).ok) ++witness_fail;
      }
    }

  report(6, "belief-engine soundness", wrong == 0 && inconsistent == 0 && chain_ok && witness_fail == 0,
         std::to_string(kJoints) + " joints, " + std::to_string(derived) + " derived facts, " +
             std::to_string(wrong) + " violated, " + std::to_string(inconsistent) +
             " inconsistent; chain example " + (chain_ok ? "0.2" : "wrong") + "; " +
             std::to_string(witnesses - witness_fail) + "/" + std::to_string(witnesses) +
             " witnesses re-derived");
}

void determinism(const std::string& data) {
  const std::vector<std::vector<std::string>> runs = {
      {"--json", "census"},
      {"--json", "check", "--algebra", "real", "--samples", "10000", "--seed", "7"},
      {"--json", "check", "--model", data + "/two.model"},
      {"--json", "infer", "--algebra", "real", "--kb", data + "/chain.kb"},
      {"--json", "infer", "--algebra", "english", "--kb", data + "/english.kb"},
  };
  std::size_t same = 0;
  for (const auto& args : runs) {
    std::ostringstream o1, e1, o2, e2;
    const int c1 = cli::run(args, o1, e1);
    const int c2 = cli::run(args, o2, e2);
    if (c1 == c2 && o1.str() == o2.str() && !o1.str().empty()) ++same;
  }
  report(7, "determinism", same == runs.size(),
         std::to_string(same) + "/" + std::to_string(runs.size()) + " reports byte-identical");
}

}  // namespace

int main() {
  census_reproduction();
  law_suite();
  tarpit_biconditional();
  oracle_equivalence();
  english_properties();
  belief_soundness();
  determinism(PALOGIC_TEST_DATA);
  std::printf("%d criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
