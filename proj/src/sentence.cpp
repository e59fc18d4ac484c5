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

#include "palogic/sentence.hpp"

#include <algorithm>
#include <cctype>
#include <functional>

#include "palogic/error.hpp"

namespace palogic::logic {

Sentence Sentence::atom(std::string name) {
  return Sentence(std::make_shared<const Node>(Node{Kind::Atom, std::move(name), {}}));
}

Sentence Sentence::top() {
  static const Sentence t(std::make_shared<const Node>(Node{Kind::Top, "TRUE", {}}));
  return t;
}

Sentence Sentence::bottom() {
  static const Sentence b(std::make_shared<const Node>(Node{Kind::Bottom, "FALSE", {}}));
  return b;
}

Sentence Sentence::negation(Sentence s) {
  return Sentence(std::make_shared<const Node>(Node{Kind::Not, {}, {std::move(s)}}));
}

Sentence Sentence::conjunction(Sentence a, Sentence b) {
  return Sentence(std::make_shared<const Node>(Node{Kind::And, {}, {std::move(a), std::move(b)}}));
}

Sentence Sentence::disjunction(Sentence a, Sentence b) {
  return Sentence(std::make_shared<const Node>(Node{Kind::Or, {}, {std::move(a), std::move(b)}}));
}

Sentence operator&(Sentence a, Sentence b) { return Sentence::conjunction(std::move(a), std::move(b)); }
Sentence operator|(Sentence a, Sentence b) { return Sentence::disjunction(std::move(a), std::move(b)); }
Sentence operator~(Sentence a) { return Sentence::negation(std::move(a)); }

namespace {

class SentenceParser {
 public:
  explicit SentenceParser(std::string_view s) : s_(s) {}

  Sentence parse() {
    Sentence out = disj();
    skip();
    if (pos_ != s_.size()) error("unexpected trailing input");
    return out;
  }

 private:
  [[noreturn]] void error(const std::string& what) const {
    throw ParseError("sentence: " + what + " at column " + std::to_string(pos_ + 1));
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Sentence disj() {
    Sentence out = conj();
    while (eat('|')) out = out | conj();
    return out;
  }
  Sentence conj() {
    Sentence out = unary();
    while (eat('&')) out = out & unary();
    return out;
  }
  Sentence unary() {
    if (eat('~')) return ~unary();
    if (eat('(')) {
      Sentence out = disj();
      if (!eat(')')) error("expected ')'");
      return out;
    }
    skip();
    if (pos_ >= s_.size() || !std::isalpha(static_cast<unsigned char>(s_[pos_])))
      error("expected an atom");
    const std::size_t start = pos_;
    while (pos_ < s_.size() &&
           (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
      ++pos_;
    std::string name(s_.substr(start, pos_ - start));
    if (name == "TRUE") return Sentence::top();
    if (name == "FALSE") return Sentence::bottom();
    return Sentence::atom(std::move(name));
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

int precedence(Sentence::Kind k) {
  switch (k) {
    case Sentence::Kind::Or: return 1;
    case Sentence::Kind::And: return 2;
    default: return 3;
  }
}

void print(const Sentence& s, std::string& out) {
  using K = Sentence::Kind;
  auto child = [&](const Sentence& c, int min_prec) {
    if (precedence(c.kind()) < min_prec) {
      out += '(';
      print(c, out);
      out += ')';
    } else {
      print(c, out);
    }
  };
  switch (s.kind()) {
    case K::Atom: out += s.name(); return;
    case K::Top: out += "TRUE"; return;
    case K::Bottom: out += "FALSE"; return;
    case K::Not:
      out += '~';
      child(s.lhs(), 3);
      return;
    case K::And:
      child(s.lhs(), 2);
      out += " & ";
      child(s.rhs(), 3);
      return;
    case K::Or:
      child(s.lhs(), 1);
      out += " | ";
      child(s.rhs(), 2);
      return;
  }
}

void collect_atoms(const Sentence& s, std::vector<std::string>& out) {
  if (s.kind() == Sentence::Kind::Atom) out.push_back(s.name());
  for (const Sentence& a : s.args()) collect_atoms(a, out);
}

}  // namespace

Sentence parse_sentence(std::string_view text) { return SentenceParser(text).parse(); }

std::string to_string(const Sentence& s) {
  std::string out;
  print(s, out);
  return out;
}

std::vector<std::string> atoms(const std::vector<Sentence>& ss) {
  std::vector<std::string> out;
  for (const Sentence& s : ss) collect_atoms(s, out);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<std::string> atoms(const Sentence& s) { return atoms(std::vector<Sentence>{s}); }

// ---------------------------------------------------------------------------

TruthTable::TruthTable(std::size_t num_atoms)
    : num_atoms_(num_atoms), words_(((std::size_t{1} << num_atoms) + 63) / 64, 0) {}

TruthTable TruthTable::all(std::size_t num_atoms, bool value) {
  TruthTable t(num_atoms);
  if (value) {
    for (auto& w : t.words_) w = ~std::uint64_t{0};
    t.mask_tail();
  }
  return t;
}

void TruthTable::set(std::size_t row, bool v) {
  const std::uint64_t bit = std::uint64_t{1} << (row & 63);
  if (v) {
    words_[row >> 6] |= bit;
  } else {
    words_[row >> 6] &= ~bit;
  }
}

void TruthTable::mask_tail() {
  const std::size_t r = rows();
  if (r % 64 != 0) words_.back() &= (std::uint64_t{1} << (r % 64)) - 1;
}

bool TruthTable::none() const {
  return std::all_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w == 0; });
}

bool TruthTable::subset_of(const TruthTable& other) const {
  for (std::size_t k = 0; k < words_.size(); ++k)
    if (words_[k] & ~other.words_[k]) return false;
  return true;
}

TruthTable TruthTable::operator&(const TruthTable& o) const {
  TruthTable t = *this;
  for (std::size_t k = 0; k < words_.size(); ++k) t.words_[k] &= o.words_[k];
  return t;
}

TruthTable TruthTable::operator|(const TruthTable& o) const {
  TruthTable t = *this;
  for (std::size_t k = 0; k < words_.size(); ++k) t.words_[k] |= o.words_[k];
  return t;
}

TruthTable TruthTable::operator~() const {
  TruthTable t = *this;
  for (auto& w : t.words_) w = ~w;
  t.mask_tail();
  return t;
}

std::size_t TruthTable::hash() const {
  std::size_t h = num_atoms_ * 0x9e3779b97f4a7c15ull;
  for (auto w : words_) h ^= std::hash<std::uint64_t>{}(w) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  return h;
}

TruthTable truth_table(const Sentence& s, const std::vector<std::string>& atom_list,
                       std::size_t cap) {
  if (atom_list.size() > cap)
    throw Error("sentence mentions " + std::to_string(atom_list.size()) +
                " atoms; the cap is " + std::to_string(cap));
  const std::size_t n = atom_list.size();
  std::function<TruthTable(const Sentence&)> eval = [&](const Sentence& x) -> TruthTable {
    using K = Sentence::Kind;
    switch (x.kind()) {
      case K::Top: return TruthTable::all(n, true);
      case K::Bottom: return TruthTable::all(n, false);
      case K::Not: return ~eval(x.lhs());
      case K::And: return eval(x.lhs()) & eval(x.rhs());
      case K::Or: return eval(x.lhs()) | eval(x.rhs());
      case K::Atom: {
        const auto it = std::lower_bound(atom_list.begin(), atom_list.end(), x.name());
        std::size_t k = 0;
        if (it != atom_list.end() && *it == x.name()) {
          k = static_cast<std::size_t>(it - atom_list.begin());
        } else {
          const auto lin = std::find(atom_list.begin(), atom_list.end(), x.name());
          if (lin == atom_list.end()) throw Error("atom '" + x.name() + "' not in atom list");
          k = static_cast<std::size_t>(lin - atom_list.begin());
        }
        TruthTable t(n);
        for (std::size_t r = 0; r < t.rows(); ++r) t.set(r, (r >> k) & 1u);
        return t;
      }
    }
    return TruthTable(n);
  };
  return eval(s);
}

bool equivalent(const Sentence& a, const Sentence& b, std::size_t cap) {
  const auto list = atoms(std::vector<Sentence>{a, b});
  return truth_table(a, list, cap) == truth_table(b, list, cap);
}

bool is_absurd(const Sentence& q, std::size_t cap) {
  return truth_table(q, atoms(q), cap).none();
}

}  // namespace palogic::logic
