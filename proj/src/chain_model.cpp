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

#include "palogic/chain_model.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <numeric>
#include <sstream>

namespace palogic {

namespace {

std::vector<std::uint32_t> parse_ranks(std::string_view s, std::size_t line) {
  std::vector<std::uint32_t> out;
  while (true) {
    while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
    std::uint32_t v = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr == s.data()) throw ParseError("expected a rank", line);
    out.push_back(v);
    s.remove_prefix(static_cast<std::size_t>(ptr - s.data()));
    while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
    if (s.empty()) break;
    if (s.front() != ',') throw ParseError("expected ',' between ranks", line);
    s.remove_prefix(1);
  }
  return out;
}

}  // namespace

ChainModel::ChainModel(std::size_t n, std::vector<Element> h_table, std::vector<Element> i_table)
    : n_(n), h_(std::move(h_table)), i_(std::move(i_table)) {
  if (n_ < 1) throw Error("chain model needs at least one element");
  if (h_.size() != n_ * n_) throw Error("h table must have n*n entries");
  if (i_.size() != n_) throw Error("i table must have n entries");
  for (Element e : h_)
    if (e.rank >= n_) throw Error("h table entry out of range");
  for (Element e : i_)
    if (e.rank >= n_) throw Error("i table entry out of range");
}

ChainModel ChainModel::with_reversal(std::size_t n, std::vector<Element> h_table) {
  return ChainModel(n, std::move(h_table), reversal_table(n));
}

std::vector<Element> reversal_table(std::size_t n) {
  std::vector<Element> out(n);
  for (std::size_t k = 0; k < n; ++k) out[k] = Element{static_cast<std::uint32_t>(n - 1 - k)};
  return out;
}

std::string format_chain_model(const ChainModel& model) {
  const std::size_t n = model.size();
  std::string out = "n=" + std::to_string(n) + "\ni=";
  for (std::size_t k = 0; k < n; ++k) {
    if (k) out += ',';
    out += std::to_string(model.i_table()[k].rank);
  }
  out += '\n';
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      if (c) out += ',';
      out += std::to_string(model.h_table()[r * n + c].rank);
    }
    out += '\n';
  }
  return out;
}

ChainModel parse_chain_model(std::string_view text) {
  std::vector<std::string_view> lines;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    lines.push_back(line);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
  }
  while (!lines.empty() && lines.back().empty()) lines.pop_back();

  if (lines.empty() || !lines[0].starts_with("n=")) throw ParseError("expected 'n=<size>'", 1);
  const auto size = parse_ranks(lines[0].substr(2), 1);
  if (size.size() != 1 || size[0] < 1) throw ParseError("bad size", 1);
  const std::size_t n = size[0];
  if (lines.size() < 2 || !lines[1].starts_with("i=")) throw ParseError("expected 'i=<ranks>'", 2);
  const auto iv = parse_ranks(lines[1].substr(2), 2);
  if (iv.size() != n) throw ParseError("i table needs " + std::to_string(n) + " entries", 2);
  if (lines.size() != n + 2)
    throw ParseError("expected " + std::to_string(n) + " h rows", std::min(lines.size(), n + 2) + 1);

  std::vector<Element> h;
  h.reserve(n * n);
  for (std::size_t r = 0; r < n; ++r) {
    const auto row = parse_ranks(lines[r + 2], r + 3);
    if (row.size() != n) throw ParseError("h row needs " + std::to_string(n) + " entries", r + 3);
    for (auto v : row) {
      if (v >= n) throw ParseError("rank out of range", r + 3);
      h.push_back(Element{v});
    }
  }
  std::vector<Element> i;
  for (auto v : iv) {
    if (v >= n) throw ParseError("rank out of range", 2);
    i.push_back(Element{v});
  }
  return ChainModel(n, std::move(h), std::move(i));
}

ChainModel load_chain_model(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open model file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return parse_chain_model(buf.str());
  } catch (const ParseError& e) {
    throw ParseError(path, e);
  }
}

void save_chain_model(const ChainModel& model, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write model file '" + path + "'");
  out << format_chain_model(model);
}

std::vector<Counterexample<Element>> is_model(const ChainModel& model, const LawSet& laws) {
  return check_laws(model, laws);
}

ChainModel canonical_form(const ChainModel& model) { return model; }

bool isomorphic(const ChainModel& a, const ChainModel& b) {
  const std::size_t n = a.size();
  if (n != b.size()) return false;
  std::vector<std::uint32_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0u);
  auto map = [&](Element e) { return Element{perm[e.rank]}; };
  do {
    bool ok = true;
    for (std::uint32_t p = 0; p < n && ok; ++p) {
      const Element ep{p};
      if (map(a.i(ep)) != b.i(map(ep))) ok = false;
      for (std::uint32_t q = 0; q < n && ok; ++q) {
        const Element eq{q};
        if (a.le(ep, eq) != b.le(map(ep), map(eq))) ok = false;
        else if (map(a.h(ep, eq)) != b.h(map(ep), map(eq))) ok = false;
      }
    }
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

}  // namespace palogic
