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

#include "oracles.hpp"
#include "palogic/builtin.hpp"
#include "palogic/chain_model.hpp"
#include "palogic/enumerate.hpp"
#include "palogic/error.hpp"

using namespace palogic;

TEST_CASE("model files round-trip") {
  const ChainModel m = load_chain_model(PALOGIC_TEST_DATA "/four_idempotent_a.model");
  CHECK(m.size() == 4);
  CHECK(m.h(Element{2}, Element{2}) == Element{1});
  const std::string text = format_chain_model(m);
  CHECK(format_chain_model(parse_chain_model(text)) == text);
  CHECK(parse_chain_model(text) == m);
  CHECK(parse_chain_model("n=2\r\ni=1,0\r\n0,0\r\n0,1\r\n\n") == two_element_model());
}

TEST_CASE("malformed model files name the line") {
  auto line_of = [](const char* path) -> std::size_t {
    try {
      load_chain_model(path);
    } catch (const ParseError& e) {
      return e.line();
    }
    return 0;
  };
  CHECK(line_of(PALOGIC_TEST_DATA "/bad_rank.model") == 5);
  CHECK(line_of(PALOGIC_TEST_DATA "/bad_row.model") == 4);
  CHECK_THROWS_AS(parse_chain_model("n=x\n"), ParseError);
}

TEST_CASE("isomorphism on chains is the identity") {
  const auto models = enumerate_models(6, LawSet::default_set()).models;
  for (std::size_t a = 0; a < models.size(); ++a) {
    CHECK(canonical_form(models[a]) == models[a]);
    for (std::size_t b = 0; b < models.size(); ++b) CHECK(isomorphic(models[a], models[b]) == (a == b));
  }
}

TEST_CASE("small censuses") {
  CHECK(enumerate_models(2, LawSet::default_set()).count == 1);
  const auto three = enumerate_models(3, LawSet::default_set());
  REQUIRE(three.count == 1);
  CHECK(three.models[0].h(Element{1}, Element{1}) == Element{1});
  CHECK_THROWS_AS(enumerate_models(1, LawSet::default_set()), Error);
  CHECK_THROWS_AS(enumerate_models(9, LawSet::default_set()), Error);
  EnumerationOptions wide;
  wide.max_size = 9;
  CHECK_NOTHROW(enumerate_models(2, LawSet::default_set(), wide));
}

TEST_CASE("pruned search equals the naive scan") {
  for (const char* name : {"default", "no-L6", "no-L9", "no-L10", "full"}) {
    const LawSet laws = *LawSet::builtin(name);
    for (int n = 2; n <= 4; ++n) {
      const auto pruned = enumerate_models(n, laws).models;
      CHECK_MESSAGE(pruned == oracle::naive_models(n, laws), name << " n=" << n);
    }
  }
}

TEST_CASE("every enumerated model passes its law set and the counts match the list") {
  for (const char* name : {"default", "no-L6", "no-L10"}) {
    const LawSet laws = *LawSet::builtin(name);
    for (std::size_t n = 2; n <= 6; ++n) {
      const auto r = enumerate_models(n, laws);
      CHECK(r.count == r.models.size());
      CHECK(std::is_sorted(r.models.begin(), r.models.end()));
      for (const auto& m : r.models) CHECK(is_model(m, laws).empty());
    }
  }
}

TEST_CASE("parallel enumeration gives the same list") {
  EnumerationOptions par;
  par.jobs = 4;
  for (std::size_t n = 2; n <= 6; ++n)
    CHECK(enumerate_models(n, LawSet::default_set(), par).models ==
          enumerate_models(n, LawSet::default_set()).models);
}

TEST_CASE("census report") {
  const auto r = census(LawSet::default_set());
  REQUIRE(r.rows.size() == 6);
  for (std::size_t k = 0; k < 6; ++k) {
    CHECK(r.rows[k].n == k + 2);
    CHECK(r.rows[k].expected == kReferenceCensus[k]);
  }
  // n = 2..4 agree with the reference table for the default set
  CHECK(r.rows[0].actual == 1);
  CHECK(r.rows[1].actual == 1);
  CHECK(r.rows[2].actual == 2);
}
