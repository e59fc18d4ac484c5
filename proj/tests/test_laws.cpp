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
#include "palogic/builtin.hpp"
#include "palogic/chain_model.hpp"
#include "palogic/enumerate.hpp"
#include "palogic/error.hpp"
#include "palogic/laws.hpp"

using namespace palogic;

namespace {

// [0,1] with the bounded difference product, which has nontrivial zeroes.
struct Lukasiewicz {
  double sample(std::mt19937_64& rng) const { return std::uniform_real_distribution<double>(0, 1)(rng); }
  double h(double p, double q) const { return std::max(0.0, p + q - 1); }
  double i(double p) const { return 1 - p; }
  double zero() const { return 0; }
  double one() const { return 1; }
};

ChainModel three(std::uint32_t mm) {
  return ChainModel::with_reversal(3, {Element{0}, Element{0}, Element{0}, Element{0}, Element{mm}, Element{1},
                                       Element{0}, Element{1}, Element{2}});
}

}  // namespace

TEST_CASE("law identifiers round-trip") {
  for (Law law : kAllLaws) CHECK(parse_law_id(law_id(law)) == law);
  CHECK_THROWS_AS(parse_law_id("L13"), ParseError);
  CHECK(LawSet::default_set().laws().size() == 10);
  CHECK_FALSE(LawSet::default_set().contains(Law::L11));
  CHECK(LawSet::builtin("no-L6")->laws().size() == 9);
  CHECK_FALSE(LawSet::builtin("nonsense"));
}

TEST_CASE("law-set files") {
  const LawSet s = parse_law_set("# name: mine\nL1\n  L2 # monotone\n\nL9\n");
  CHECK(s.name() == "mine");
  CHECK(s.laws() == std::vector<Law>{Law::L1, Law::L2, Law::L9});
  CHECK(parse_law_set(format_law_set(s)) == s);
  try {
    parse_law_set("L1\nL2\nL2\n");
    FAIL("duplicate accepted");
  } catch (const ParseError& e) {
    CHECK(e.line() == 3);
  }
  CHECK_THROWS_AS(parse_law_set("L1\nbogus\n"), ParseError);
  CHECK(resolve_law_set(PALOGIC_TEST_DATA "/laws_no_l6.txt").name() == "no-zero-divisor-law");
}

TEST_CASE("the two-element model") {
  const ChainModel m = two_element_model();
  CHECK_FALSE(check_law(m, Law::L4));
  CHECK_FALSE(check_law(m, Law::L7));
  CHECK(m.h(Element{0}, Element{1}) == Element{0});
  CHECK(m.h(Element{1}, Element{1}) == Element{1});
  CHECK(m.i(m.i(Element{0})) == Element{0});
  CHECK(check_laws(m, LawSet::full_set()).empty());
}

TEST_CASE("nontrivial zero is reported at (m, m)") {
  const auto r = check_law(three(0), Law::L6);
  REQUIRE(r);
  CHECK(r->witness == std::vector<Element>{Element{1}, Element{1}});
  CHECK_FALSE(check_law(three(1), Law::L6));
}

TEST_CASE("counterexamples are the lexicographically first tuple and stable") {
  // A 4-chain whose h is not commutative: h(1,2) = 0, h(2,1) = 1.
  std::vector<Element> h;
  const int t[16] = {0, 0, 0, 0, 0, 1, 0, 1, 0, 1, 2, 2, 0, 1, 2, 3};
  for (int v : t) h.push_back(Element{static_cast<std::uint32_t>(v)});
  const ChainModel m = ChainModel::with_reversal(4, h);
  for (Law law : kAllLaws) {
    const auto a = check_law(m, law);
    const auto b = check_law(m, law);
    REQUIRE(a.has_value() == b.has_value());
    if (a) CHECK(a->witness == b->witness);
  }
  const auto c = check_law(m, Law::L10);
  REQUIRE(c);
  // first (p,q) in rank order with h(p,q) != h(q,p)
  CHECK(c->witness == std::vector<Element>{Element{1}, Element{2}});
}

TEST_CASE("L5 agrees with its derivation on every default-law model") {
  for (std::size_t n = 2; n <= 6; ++n)
    for (const auto& m : enumerate_models(n, LawSet::default_set()).models) {
      CHECK_FALSE(check_law(m, Law::L5));
      // i is the order-reversing bijection
      for (std::uint32_t k = 0; k < n; ++k) CHECK(m.i(Element{k}).rank == n - 1 - k);
    }
}

TEST_CASE("sampled checks on the real interval") {
  const RealInterval real;
  CHECK_FALSE(check_law_sampled(real, Law::L9, 10000, 1e-12, 7));
  CHECK_FALSE(check_law_sampled(real, Law::L6, 10000, 0.0, 7));
  const auto defaults = LawSet::default_set();
  for (Law law : defaults.laws()) CHECK_FALSE(check_law_sampled(real, law, 10000, 1e-12, 11));
  CHECK_THROWS_AS(check_law_sampled(real, Law::L9, 10, -1.0, 7), Error);
}

TEST_CASE("sampled checks find the nontrivial zeroes of the bounded difference") {
  const auto r = check_law_sampled(Lukasiewicz{}, Law::L6, 10000, 0.0, 3);
  REQUIRE(r);
  const double p = r->witness[0], q = r->witness[1];
  CHECK(p > 0);
  CHECK(q > 0);
  CHECK(p + q <= 1);
  // the same seed gives the same report
  const auto again = check_law_sampled(Lukasiewicz{}, Law::L6, 10000, 0.0, 3);
  REQUIRE(again);
  CHECK(again->witness == r->witness);
}

TEST_CASE("direct oracle agrees with check_law on random tables") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 4);
    oracle::Table t(n * n);
    for (auto& v : t) v = static_cast<int>(rng() % n);
    const ChainModel m = oracle::to_model(n, t);
    for (Law law : kAllLaws) CHECK(oracle::law_holds(n, t, law) == !check_law(m, law).has_value());
  }
}
