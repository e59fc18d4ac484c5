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

#include "palogic/laws.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

namespace palogic {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

std::string_view law_id(Law law) {
  static constexpr std::array<std::string_view, 12> ids = {
      "L1", "L2", "L3", "L4", "L5", "L6", "L7", "L8", "L9", "L10", "L11", "L12"};
  return ids[static_cast<std::size_t>(law) - 1];
}

std::string_view law_description(Law law) {
  switch (law) {
    case Law::L1: return "<= is a partial order with bounds zero and one";
    case Law::L2: return "h is monotone in each argument";
    case Law::L3: return "i is monotone non-increasing";
    case Law::L4: return "one is a two-sided unit of h";
    case Law::L5: return "zero is a two-sided annihilator of h";
    case Law::L6: return "no nontrivial zeroes: h(p,q) = zero implies p = zero or q = zero";
    case Law::L7: return "i is an involution";
    case Law::L8: return "i(zero) = one and i(one) = zero";
    case Law::L9: return "h is associative";
    case Law::L10: return "h is commutative";
    case Law::L11: return "h(p,q) <= p and h(p,q) <= q";
    case Law::L12: return "<= is total";
  }
  return "";
}

Law parse_law_id(std::string_view id) {
  for (Law law : kAllLaws)
    if (law_id(law) == id) return law;
  throw ParseError("unknown law identifier '" + std::string(id) + "'");
}

LawSet::LawSet(std::string name, std::vector<Law> laws)
    : name_(std::move(name)), laws_(std::move(laws)) {}

LawSet LawSet::default_set() {
  return LawSet("default", {Law::L1, Law::L2, Law::L3, Law::L4, Law::L5, Law::L6, Law::L7,
                            Law::L8, Law::L9, Law::L10});
}

LawSet LawSet::full_set() {
  return LawSet("full", std::vector<Law>(kAllLaws.begin(), kAllLaws.end()));
}

std::optional<LawSet> LawSet::builtin(std::string_view name) {
  if (name == "default") return default_set();
  if (name == "full") return full_set();
  if (!name.starts_with("no-")) return std::nullopt;
  LawSet out = default_set();
  std::string_view rest = name.substr(3);
  while (!rest.empty()) {
    const auto dash = rest.find('-');
    const std::string_view id = rest.substr(0, dash);
    Law law;
    try {
      law = parse_law_id(id);
    } catch (const ParseError&) {
      return std::nullopt;
    }
    if (!out.contains(law)) return std::nullopt;
    out = out.without(law);
    rest = dash == std::string_view::npos ? std::string_view{} : rest.substr(dash + 1);
  }
  out.name_ = std::string(name);
  return out;
}

bool LawSet::contains(Law law) const {
  return std::find(laws_.begin(), laws_.end(), law) != laws_.end();
}

LawSet LawSet::without(Law law) const {
  LawSet out = *this;
  std::erase(out.laws_, law);
  return out;
}

LawSet parse_law_set(std::string_view text, std::string_view fallback_name) {
  std::string name(fallback_name);
  std::vector<Law> laws;
  std::size_t line_no = 0;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) {
      const std::string_view comment = trim(line.substr(hash + 1));
      if (comment.starts_with("name:")) name = std::string(trim(comment.substr(5)));
      line = line.substr(0, hash);
    }
    line = trim(line);
    if (line.empty()) continue;
    try {
      const Law law = parse_law_id(line);
      if (std::find(laws.begin(), laws.end(), law) != laws.end())
        throw ParseError("duplicate law " + std::string(line), line_no);
      laws.push_back(law);
    } catch (const ParseError& e) {
      if (e.line() != 0) throw;
      throw ParseError(e.what(), line_no);
    }
  }
  return LawSet(std::move(name), std::move(laws));
}

std::string format_law_set(const LawSet& laws) {
  std::string out = "# name: " + laws.name() + "\n";
  for (Law law : laws.laws()) {
    out += law_id(law);
    out += '\n';
  }
  return out;
}

LawSet load_law_set_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open law-set file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  std::string stem = path;
  if (const auto slash = stem.find_last_of('/'); slash != std::string::npos)
    stem = stem.substr(slash + 1);
  if (const auto dot = stem.find('.'); dot != std::string::npos) stem = stem.substr(0, dot);
  return parse_law_set(buf.str(), stem);
}

LawSet resolve_law_set(std::string_view name_or_path) {
  if (auto b = LawSet::builtin(name_or_path)) return *b;
  return load_law_set_file(std::string(name_or_path));
}

}  // namespace palogic
