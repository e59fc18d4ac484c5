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

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include "oracles.hpp"
#include "palogic/belief.hpp"
#include "palogic/error.hpp"
#include "palogic/witness.hpp"

using namespace palogic;
using namespace palogic::belief;
using logic::Sentence;

namespace {

Conditional P(const char* text) { return parse_conditional(text); }

BeliefKB kb_from(const char* algebra, const char* text) {
  auto alg = make_algebra(algebra);
  BeliefKB kb(alg);
  for (auto& f : parse_kb(text, *alg)) kb.add(std::move(f));
  return kb;
}

double real_of(const std::optional<Value>& v) {
  REQUIRE(v);
  return std::get<double>(*v);
}

// Model 1 belief function: f(P|R) is 1 iff the best-ranked world of R satisfies P.
struct Ranking {
  std::vector<int> order;  // worlds, best first; bit k = atom k of {A, B}

  double f(const Conditional& c) const {
    static const std::vector<std::string> ab = {"A", "B"};
    const auto e = logic::truth_table(c.evidence, ab);
    const auto h = logic::truth_table(c.hypothesis, ab);
    for (int w : order)
      if (e.get(w)) return h.get(w) ? 1.0 : 0.0;
    return 1.0;
  }
};

const char* const kSentences[] = {"A", "B", "C", "~A", "~B", "A & B", "A | B", "A & ~C", "B | C", "TRUE"};

}  // namespace

TEST_CASE("kb files") {
  auto alg = make_algebra("real");
  const auto facts = parse_kb("P(A|B) = 0.5  # half\n\nP(A | C) <= P(A|B)\nP(B) > 0.1\n", *alg);
  REQUIRE(facts.size() == 3);
  CHECK(facts[1].relation == FactRelation::Le);
  CHECK(std::holds_alternative<Conditional>(facts[1].right));
  CHECK(facts[2].relation == FactRelation::Gt);
  CHECK(format_fact(facts[0], *alg) == "P(A|B) = 0.5");
  CHECK(to_string(P("P((A | B)|C)")) == "P((A | B)|C)");
  try {
    parse_kb("P(A|TRUE) = 0.3\nP(B|TRUE) =< 0.4\n", *alg);
    FAIL("accepted");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
  }
  CHECK_THROWS_AS(parse_kb("P(A|TRUE) = 1.5\n", *alg), ParseError);
  CHECK_THROWS_AS(parse_kb("P(A|TRUE) = 2\n", *make_algebra("two")), ParseError);
  CHECK_THROWS_AS(make_algebra("complex"), Error);
}

TEST_CASE("negation over the real interval") {
  auto kb = kb_from("real", "P(A|TRUE) = 0.3\n");
  kb.close();
  CHECK(real_of(kb.value_of(P("P(~A|TRUE)"))) == doctest::Approx(0.7).epsilon(1e-12));
  CHECK(kb.consistent());
}

TEST_CASE("chain rule example") {
  auto kb = kb_from("real", "P(A|B & TRUE) = 0.5\nP(B|TRUE) = 0.4\n");
  kb.mention(P("P(A & B|TRUE)"));
  kb.close();
  const double v = real_of(kb.value_of(P("P(A & B|TRUE)")));
  CHECK(std::fabs(v - 0.5 * 0.4) <= 1e-12);
  CHECK(kb.query(P("P(A & B|TRUE)"), Value{0.2}) == Relation::EQ);
  CHECK(kb.query(P("P(A & B|TRUE)"), P("P(B|TRUE)")) == Relation::LT);
}

TEST_CASE("contradictory values are flagged") {
  auto kb = kb_from("two", "P(A|TRUE) = 1\nP(A|TRUE) = 0\n");
  kb.close();
  CHECK_FALSE(kb.consistent());
  CHECK_FALSE(kb.conflicts().empty());
}

TEST_CASE("queries") {
  auto kb = kb_from("real", "P(A|B) >= P(C|D)\n");
  kb.close();
  CHECK(kb.query(P("P(A|B)"), P("P(C|D)")) == Relation::GE);
  CHECK(kb.query(P("P(C|D)"), P("P(A|B)")) == Relation::LE);
  CHECK(kb.query(P("P(A|A)"), Value{1.0}) == Relation::EQ);
  CHECK(kb.query(P("P(Z|Z)"), Value{1.0}) == Relation::EQ);
  CHECK(kb.query(P("P(A|B)"), Value{1.0}) == Relation::LE);

  auto empty = kb_from("real", "");
  empty.close();
  CHECK(empty.query(P("P(A|TRUE)"), P("P(B|TRUE)")) == Relation::Incomparable);
  CHECK(empty.query(P("P(A|A)"), Value{1.0}) == Relation::EQ);
  CHECK(empty.query(P("P(A & ~A|TRUE)"), Value{0.0}) == Relation::EQ);
  CHECK_THROWS_AS(kb_from("real", "P(A|B) = 0.1\n").query(P("P(A|B)"), Value{0.1}), Error);
}

TEST_CASE("absurd evidence gives one and blocks negation") {
  auto kb = kb_from("real", "P(A|B & ~B) = 1\n");
  kb.mention(P("P(~A|B & ~B)"));
  kb.close();
  CHECK(kb.consistent());
  CHECK(real_of(kb.value_of(P("P(~A|B & ~B)"))) == 1.0);
  auto bad = kb_from("real", "P(A|FALSE) = 0.4\n");
  bad.close();
  CHECK_FALSE(bad.consistent());
}

TEST_CASE("comparative facts travel through negation and mixing") {
  auto kb = kb_from("real", "P(A|B) <= P(A|~B)\nP(A|B) = 0.2\nP(A|~B) = 0.6\n");
  kb.mention(P("P(A|TRUE)"));
  kb.close();
  CHECK(kb.query(P("P(A|TRUE)"), Value{0.2}) == Relation::GE);
  CHECK(kb.query(P("P(A|TRUE)"), Value{0.6}) == Relation::LE);
  CHECK(kb.query(P("P(~A|B)"), P("P(~A|~B)")) == Relation::GT);
}

TEST_CASE("inference over the English algebra") {
  auto kb = kb_from("english", "P(Rain|Clouds) = LIKELY\nP(Clouds|TRUE) = LIKELY\n");
  kb.mention(P("P(Rain & Clouds|TRUE)"));
  kb.close();
  const auto v = kb.value_of(P("P(Rain & Clouds|TRUE)"));
  REQUIRE(v);
  CHECK(kb.algebra().format(*v) == "LIKELY*LIKELY");
  CHECK(kb.query(P("P(Rain & Clouds|TRUE)"), kb.algebra().parse("LIKELY")) == Relation::LE);
  CHECK(kb.query(P("P(Rain & Clouds|TRUE)"), kb.algebra().parse("UNLIKELY")) == Relation::Incomparable);
  CHECK(kb.algebra().format(*kb.value_of(P("P(~Rain|Clouds)"))) == "UNLIKELY");
}

TEST_CASE("soundness on random joints") {
  std::mt19937_64 rng(17);
  auto alg = make_algebra("real");
  const std::vector<std::string> abc = {"A", "B", "C"};
  for (int trial = 0; trial < 40; ++trial) {
    const auto joint = oracle::random_positive_joint(3, rng);
    auto truth = [&](const Conditional& c) {
      const auto e = logic::truth_table(c.evidence, abc);
      const auto h = logic::truth_table(c.hypothesis, abc);
      return joint.conditional([&](int r) { return h.get(r); }, [&](int r) { return e.get(r); });
    };
    BeliefKB kb(alg);
    for (int k = 0; k < 3; ++k) {
      const Conditional c{Sentence(logic::parse_sentence(kSentences[rng() % 10])),
                          logic::parse_sentence(kSentences[rng() % 10])};
      kb.add({c, FactRelation::Eq, Value{truth(c)}});
    }
    kb.close();
    CHECK(kb.consistent());
    for (const auto& d : kb.derived_values()) CHECK(std::fabs(std::get<double>(d.value) - truth(d.conditional)) <= 1e-9);
    for (const auto& o : kb.derived_order()) CHECK(truth(o.lower) <= truth(o.upper) + 1e-9);

    // idempotent and monotone
    const auto before = kb.derived_values();
    kb.close();
    CHECK(kb.derived_values().size() == before.size());
    const Conditional extra{logic::parse_sentence("A | C"), logic::parse_sentence("B")};
    kb.add({extra, FactRelation::Eq, Value{truth(extra)}});
    kb.close();
    for (const auto& d : before) {
      const auto v = kb.value_of(d.conditional);
      REQUIRE(v);
      CHECK(std::fabs(std::get<double>(*v) - std::get<double>(d.value)) <= 1e-12);
    }
  }
}

TEST_CASE("zero splits over the two-element algebra") {
  auto alg = make_algebra("two");
  auto kb = kb_from("two", "P(A & B|TRUE) = 0\n");
  kb.mention(P("P(A|B)"));
  kb.mention(P("P(B|TRUE)"));
  kb.close();
  bool found = false;
  for (const auto& p : kb.pending_cases()) found |= p.open && to_string(p.first) == "P(A|B)";
  CHECK(found);
  CHECK(kb.query(P("P(A|B)"), alg->zero()) == Relation::GE);

  kb.add({P("P(B|TRUE)"), FactRelation::Eq, alg->one()});
  kb.close();
  CHECK(kb.consistent());
  CHECK(kb.query(P("P(A|B)"), alg->zero()) == Relation::EQ);
}

TEST_CASE("zero splits agree with every ranking of two atoms") {
  auto alg = make_algebra("two");
  std::vector<int> order = {0, 1, 2, 3};
  const std::vector<Conditional> probes = {P("P(A & B|TRUE)"), P("P(A|B)"), P("P(B|TRUE)"), P("P(B|A)"),
                                           P("P(A|TRUE)"), P("P(~A|B)"), P("P(A & B|A | B)")};
  do {
    const Ranking f{order};
    BeliefKB kb(alg);
    kb.add({probes[0], FactRelation::Eq, *alg->from_real(f.f(probes[0]))});
    kb.add({probes[6], FactRelation::Eq, *alg->from_real(f.f(probes[6]))});
    for (const auto& c : probes) kb.mention(c);
    kb.close();
    REQUIRE(kb.consistent());
    for (const auto& d : kb.derived_values())
      CHECK(std::get<Element>(d.value).rank == static_cast<std::uint32_t>(f.f(d.conditional)));
    const bool zero_conj = kb.query(probes[0], alg->zero()) == Relation::EQ;
    if (zero_conj) CHECK_FALSE(kb.pending_cases().empty());
    for (const auto& p : kb.pending_cases()) {
      if (!p.open) continue;
      // the disjunct that the ranking makes true never contradicts the closure
      for (const auto& side : {p.first, p.second}) {
        if (f.f(side) != 0.0) continue;
        BeliefKB more = kb;
        more.add({side, FactRelation::Eq, alg->zero()});
        more.close();
        CHECK(more.consistent());
      }
    }
  } while (std::next_permutation(order.begin(), order.end()));
}

TEST_CASE("richness witnesses") {
  auto real = make_algebra("real");
  SUBCASE("sequential, uniform") {
    const auto w = richness_witness(10, {0.5, 0.5, 0.5}, *real);
    REQUIRE(w);
    REQUIRE(w->layers.size() == 1);
    for (double c : w->layers[0]) CHECK(c == 0.125);
    CHECK(verify_witness(*w, real).ok);
  }
  SUBCASE("independent pair") {
    const auto w = richness_witness(11, {0.3, 0.7}, *real);
    REQUIRE(w);
    const auto& c = w->layers[0];
    // bit 0 = A, bit 1 = B
    CHECK(c[3] == doctest::Approx(0.21).epsilon(1e-12));
    CHECK(c[1] == doctest::Approx(0.09).epsilon(1e-12));
    CHECK(c[2] == doctest::Approx(0.49).epsilon(1e-12));
    CHECK(c[0] == doctest::Approx(0.21).epsilon(1e-12));
    CHECK(verify_witness(*w, real).ok);
  }
  SUBCASE("marginal and conjunction") {
    const auto w = richness_witness(12, {0.6, 0.2}, *real);
    REQUIRE(w);
    const auto& c = w->layers[0];
    CHECK(c[1] + c[3] == doctest::Approx(0.6).epsilon(1e-12));
    CHECK(c[3] == doctest::Approx(0.2).epsilon(1e-12));
    CHECK(verify_witness(*w, real).ok);
  }
  SUBCASE("degenerate targets") {
    for (double a : {0.0, 0.25, 1.0})
      for (double b : {0.0, 0.5, 1.0}) {
        for (double c : {0.0, 1.0}) CHECK(verify_witness(*richness_witness(10, {a, b, c}, *real), real).ok);
        CHECK(verify_witness(*richness_witness(11, {a, b}, *real), real).ok);
        if (b <= a) CHECK(verify_witness(*richness_witness(12, {a, b}, *real), real).ok);
      }
  }
  SUBCASE("two-element algebra") {
    auto two = make_algebra("two");
    for (int bits = 0; bits < 8; ++bits) {
      const double a = bits & 1, b = (bits >> 1) & 1, c = (bits >> 2) & 1;
      CHECK(verify_witness(*richness_witness(10, {a, b, c}, *two), two).ok);
      CHECK(verify_witness(*richness_witness(11, {a, b}, *two), two).ok);
      if (b <= a) CHECK(verify_witness(*richness_witness(12, {a, b}, *two), two).ok);
    }
    CHECK_THROWS_AS(richness_witness(11, {0.5, 1.0}, *two), Error);
  }
  SUBCASE("errors and unsupported algebras") {
    CHECK_THROWS_AS(richness_witness(12, {0.2, 0.6}, *real), Error);
    CHECK_THROWS_AS(richness_witness(9, {0.2}, *real), Error);
    CHECK_THROWS_AS(richness_witness(11, {0.2, 1.5}, *real), Error);
    CHECK_FALSE(richness_witness(11, {0.2, 0.5}, *make_algebra("english")));
    CHECK_FALSE(richness_witness(11, {0.2, 0.5}, *make_algebra("model:" PALOGIC_TEST_DATA "/three_idempotent.model")));
  }
}
