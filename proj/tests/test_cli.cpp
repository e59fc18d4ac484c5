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

#include <cstdlib>
#include <filesystem>
#include <sstream>

#include "cli.hpp"
#include "palogic/chain_model.hpp"

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = palogic::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

const std::string kData = PALOGIC_TEST_DATA;

}  // namespace

TEST_CASE("usage errors exit 2") {
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"enumerate"}).code == 2);
  CHECK(run({"check", "--algebra", "three"}).code == 2);
  CHECK(run({"--jobs", "0", "census"}).code == 2);
  const auto help = run({"--help"});
  CHECK(help.code == 0);
  CHECK(help.out.find("enumerate") != std::string::npos);
}

TEST_CASE("check") {
  const auto two = run({"check", "--model", kData + "/two.model"});
  CHECK(two.code == 0);
  CHECK(two.out.find("FAIL") == std::string::npos);
  const auto nil = run({"check", "--model", kData + "/three_nilpotent.model"});
  CHECK(nil.code == 1);
  CHECK(nil.out.find("L6  FAIL") != std::string::npos);
  const auto real = run({"--json", "check", "--algebra", "real", "--samples", "2000", "--seed", "5"});
  CHECK(real.code == 0);
  CHECK(real.out.find("\"seed\":5") != std::string::npos);
  const auto bad = run({"check", "--model", kData + "/bad_rank.model"});
  CHECK(bad.code == 2);
  CHECK(bad.err.find(":5:") != std::string::npos);
}

TEST_CASE("compare") {
  const auto r = run({"compare", "--algebra", "english", "i(i(LIKELY))", "LIKELY"});
  CHECK(r.code == 0);
  CHECK(r.out.find("LIKELY  EQ  LIKELY") != std::string::npos);
  const auto j = run({"--json", "compare", "LIKELY*LIKELY", "UNLIKELY"});
  CHECK(j.out.find("\"relation\":\"INCOMPARABLE\"") != std::string::npos);
  const auto s = run({"compare", "--residual", "UNLIKELY", "LIKELY"});
  CHECK(s.out.find("s(UNLIKELY,LIKELY)") != std::string::npos);
  CHECK(run({"compare", "--residual", "LIKELY", "UNLIKELY"}).code == 2);
  CHECK(run({"compare", "--algebra", "real", "0.25", "0.5"}).out.find("LT") != std::string::npos);
}

TEST_CASE("infer") {
  const auto chain = run({"infer", "--algebra", "real", "--kb", kData + "/chain.kb", "--query", "P(A & B|TRUE)"});
  CHECK(chain.code == 0);
  CHECK(chain.out.find("P(A & B|TRUE)  ->  0.2") != std::string::npos);
  const auto bad = run({"infer", "--algebra", "two", "--kb", kData + "/contradiction.kb"});
  CHECK(bad.code == 1);
  CHECK(bad.out.find("INCONSISTENT") != std::string::npos);
  const auto cmp = run({"infer", "--algebra", "real", "--kb", kData + "/comparative.kb", "--query", "P(A|B) ? P(C|D)"});
  CHECK(cmp.out.find("->  GE") != std::string::npos);
  const auto syntax = run({"infer", "--algebra", "real", "--kb", kData + "/bad_syntax.kb"});
  CHECK(syntax.code == 2);
  CHECK(syntax.err.find("bad_syntax.kb:2:") != std::string::npos);
  const auto eng = run({"--json", "infer", "--algebra", "english", "--kb", kData + "/english.kb", "--query",
                        "P(Rain & Clouds|TRUE) ? LIKELY"});
  CHECK(eng.code == 0);
  CHECK(eng.out.find("\"relation\":\"LE\"") != std::string::npos);
}

TEST_CASE("embed") {
  const auto two = run({"embed", "--model", kData + "/two.model"});
  CHECK(two.code == 0);
  CHECK(two.out.find("verdict: embedded") != std::string::npos);
  const auto idem = run({"--json", "embed", "--model", kData + "/three_idempotent.model"});
  CHECK(idem.code == 0);
  CHECK(idem.out.find("refuted-non-archimedean") != std::string::npos);
}

TEST_CASE("enumerate writes model files") {
  const auto dir = std::filesystem::temp_directory_path() / "palogic_cli_test_models";
  std::filesystem::remove_all(dir);
  const auto r = run({"enumerate", "--size", "5", "--emit-models", dir.string()});
  CHECK(r.code == 0);
  CHECK(r.out.find("count: 6") != std::string::npos);
  std::size_t files = 0;
  for (const auto& e : std::filesystem::directory_iterator(dir)) {
    ++files;
    CHECK_NOTHROW(palogic::load_chain_model(e.path().string()));
  }
  CHECK(files == 6);
  std::filesystem::remove_all(dir);
}

TEST_CASE("law set from the command line and the environment") {
  const auto no6 = run({"--laws", "no-L6", "enumerate", "--size", "4"});
  CHECK(no6.out.find("count: 6") != std::string::npos);
  ::setenv("PALOGIC_LAWS", (kData + "/laws_no_l6.txt").c_str(), 1);
  const auto env = run({"--json", "enumerate", "--size", "4"});
  ::unsetenv("PALOGIC_LAWS");
  CHECK(env.out.find("\"law_set\":\"no-zero-divisor-law\"") != std::string::npos);
  CHECK(env.out.find("\"count\":6") != std::string::npos);
  CHECK(run({"--laws", kData + "/missing.txt", "enumerate", "--size", "3"}).code == 2);
}

TEST_CASE("reports are byte-identical across runs") {
  for (const std::vector<std::string>& args :
       {std::vector<std::string>{"--json", "check", "--algebra", "real", "--seed", "42", "--samples", "3000"},
        std::vector<std::string>{"--json", "enumerate", "--size", "6"},
        std::vector<std::string>{"--json", "infer", "--algebra", "real", "--kb", kData + "/chain.kb"},
        std::vector<std::string>{"--json", "--jobs", "3", "enumerate", "--size", "6"}}) {
    const auto a = run(args), b = run(args);
    CHECK(a.code == b.code);
    CHECK(a.out == b.out);
  }
  // worker count does not leak into the report
  CHECK(run({"--json", "enumerate", "--size", "6"}).out == run({"--json", "--jobs", "3", "enumerate", "--size", "6"}).out);
}

TEST_CASE("witness") {
  const auto r = run({"witness", "--axiom", "11", "0.3", "0.7"});
  CHECK(r.code == 0);
  CHECK(r.out.find("re-derived through close(): yes") != std::string::npos);
  CHECK(run({"witness", "--axiom", "12", "0.2", "0.6"}).code == 2);
}
