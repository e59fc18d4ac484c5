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

#include <random>

#include "oracles.hpp"
#include "palogic/english.hpp"
#include "palogic/error.hpp"

using namespace palogic;
using namespace palogic::english;

namespace {

Term t(const char* s) { return parse_term(s); }

}  // namespace

TEST_CASE("normal forms") {
  CHECK(normalize(t("i(i(LIKELY))")) == Term::likely());
  CHECK(normalize(t("UNLIKELY")) == Term::neg(Term::likely()));
  CHECK(normalize(Term::product({Term::one(), Term::likely()})) == Term::likely());
  CHECK(normalize(t("LIKELY*0*UNLIKELY")) == Term::zero());
  CHECK(normalize(t("i(1)")) == Term::zero());
  CHECK(normalize(t("UNLIKELY*(LIKELY*UNLIKELY)")) == normalize(t("LIKELY*UNLIKELY*UNLIKELY")));
  CHECK(to_string(normalize(t("i(LIKELY) * LIKELY"))) == "LIKELY*UNLIKELY");
}

TEST_CASE("printing round-trips") {
  for (const char* s : {"LIKELY", "UNLIKELY", "0", "1", "LIKELY*UNLIKELY", "i(LIKELY*LIKELY)", "s(UNLIKELY,LIKELY)"})
    CHECK(to_string(normalize(t(s))) == s);
  CHECK(normalize(t(" i ( i ( LIKELY ) ) ")) == Term::likely());
  CHECK_THROWS_AS(t("LIKELY*"), ParseError);
  CHECK_THROWS_AS(t("MAYBE"), ParseError);
  std::mt19937_64 rng(9);
  for (int k = 0; k < 200; ++k) {
    const Term x = normalize(oracle::random_term(rng, 4));
    CHECK(normalize(parse_term(to_string(x))) == x);
  }
}

TEST_CASE("normalize is idempotent and agrees with random rewriting") {
  std::mt19937_64 rng(1);
  for (int k = 0; k < 500; ++k) {
    const Term raw = oracle::random_term(rng, 4);
    const Term n = normalize(raw);
    CHECK(normalize(n) == n);
    CHECK(is_normal(n));
    CHECK(oracle::rewrite_randomly(raw, rng) == n);
  }
}

TEST_CASE("order facts") {
  EnglishAlgebra e;
  const Term L = Term::likely(), U = t("UNLIKELY");
  CHECK(e.compare(U, L) == Relation::LT);
  CHECK(e.compare(L, U) == Relation::GT);
  CHECK(e.compare(Term::zero(), U) == Relation::LT);
  CHECK(e.compare(L, Term::one()) == Relation::LT);
  const Relation ll = e.compare(t("LIKELY*LIKELY"), L);
  CHECK((ll == Relation::LE || ll == Relation::LT));
  CHECK(ll == Relation::LE);  // strictness does not travel through products
  CHECK(e.compare(t("LIKELY*LIKELY"), U) == Relation::Incomparable);
  CHECK(e.compare(t("i(i(LIKELY))"), L) == Relation::EQ);
  CHECK(e.compare(t("LIKELY*UNLIKELY"), U) == Relation::LE);
  CHECK(e.compare(t("UNLIKELY*UNLIKELY"), t("LIKELY*UNLIKELY")) == Relation::LE);
  CHECK(e.compare(t("i(LIKELY*LIKELY)"), U) == Relation::GE);
  CHECK(e.consistent());
}

TEST_CASE("residuals") {
  EnglishAlgebra e;
  const Term L = Term::likely(), U = t("UNLIKELY");
  const auto r = e.residual(U, L);
  CHECK(r.fresh);
  CHECK(to_string(r.term) == "s(UNLIKELY,LIKELY)");
  CHECK(e.reduce(Term::product({L, r.term})) == e.reduce(U));
  CHECK(e.compare(U, r.term) == Relation::LE);
  const auto again = e.residual(U, L);
  CHECK_FALSE(again.fresh);
  CHECK(again.term == r.term);
  const auto one = e.residual(L, L);
  CHECK_FALSE(one.fresh);
  CHECK(one.term == Term::one());
  CHECK_THROWS_AS(e.residual(L, U), Error);
  CHECK(e.consistent());
}

TEST_CASE("totality fails with a witness") {
  EnglishAlgebra e;
  e.mention(t("LIKELY*LIKELY"));
  e.mention(t("UNLIKELY"));
  const auto pair = e.first_incomparable_pair();
  REQUIRE(pair);
  CHECK(e.compare(pair->first, pair->second) == Relation::Incomparable);
}

TEST_CASE("compare is antisymmetric, transitive and reverses under i") {
  EnglishAlgebra e;
  std::mt19937_64 rng(4);
  std::vector<Term> terms;
  for (int k = 0; k < 12; ++k) terms.push_back(e.reduce(oracle::random_term(rng, 2)));
  for (const Term& a : terms)
    for (const Term& b : terms) {
      const Relation ab = e.compare(a, b), ba = e.compare(b, a);
      CHECK(ab == converse(ba));
      if (ab == Relation::LT) CHECK(e.compare(e.i(b), e.i(a)) == Relation::LT);
      if (entails_le(ab))
        for (const Term& c : terms)
          if (entails_le(e.compare(b, c))) CHECK(entails_le(e.compare(a, c)));
    }
  CHECK(e.consistent());
}
