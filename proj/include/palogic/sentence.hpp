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

// Sentences of the free boolean algebra over primitive propositions, with
// equivalence decided by truth tables.

#ifndef PALOGIC_SENTENCE_HPP_
#define PALOGIC_SENTENCE_HPP_

#include <cstddef>
#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace palogic::logic {

inline constexpr std::size_t kDefaultAtomCap = 16;

class Sentence {
 public:
  enum class Kind : std::uint8_t { Atom, Top, Bottom, Not, And, Or };

  static Sentence atom(std::string name);
  /// Canonical constants: every Top (resp. Bottom) shares one node.
  static Sentence top();
  static Sentence bottom();
  static Sentence negation(Sentence s);
  static Sentence conjunction(Sentence a, Sentence b);
  static Sentence disjunction(Sentence a, Sentence b);

  Kind kind() const { return node_->kind; }
  const std::string& name() const { return node_->name; }
  const Sentence& lhs() const { return node_->args[0]; }
  const Sentence& rhs() const { return node_->args[1]; }
  const std::vector<Sentence>& args() const { return node_->args; }

  /// True when both refer to the same node (used for the constants).
  bool same_node(const Sentence& other) const { return node_ == other.node_; }

 private:
  struct Node {
    Kind kind;
    std::string name;
    std::vector<Sentence> args;
  };
  explicit Sentence(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

  std::shared_ptr<const Node> node_;
};

Sentence operator&(Sentence a, Sentence b);
Sentence operator|(Sentence a, Sentence b);
Sentence operator~(Sentence a);

/// Atoms `[A-Za-z][A-Za-z0-9_]*`, `&`, `|`, `~`, parentheses, TRUE, FALSE.
/// Precedence: ~ binds tightest, then &, then |.
Sentence parse_sentence(std::string_view text);
std::string to_string(const Sentence& s);

/// Sorted, de-duplicated atom names.
std::vector<std::string> atoms(const Sentence& s);
std::vector<std::string> atoms(const std::vector<Sentence>& ss);

/// Truth table over an ordered atom list: bit r is the value under the
/// valuation whose k-th atom is bit k of r.
class TruthTable {
 public:
  TruthTable() = default;
  /// All-false table over `num_atoms` atoms.
  explicit TruthTable(std::size_t num_atoms);

  static TruthTable all(std::size_t num_atoms, bool value);

  std::size_t num_atoms() const { return num_atoms_; }
  std::size_t rows() const { return std::size_t{1} << num_atoms_; }
  bool get(std::size_t row) const { return (words_[row >> 6] >> (row & 63)) & 1u; }
  void set(std::size_t row, bool v);

  bool none() const;
  /// Every row true in *this is true in `other`.
  bool subset_of(const TruthTable& other) const;

  TruthTable operator&(const TruthTable& o) const;
  TruthTable operator|(const TruthTable& o) const;
  TruthTable operator~() const;

  friend bool operator==(const TruthTable&, const TruthTable&) = default;
  friend auto operator<=>(const TruthTable&, const TruthTable&) = default;

  std::size_t hash() const;

 private:
  void mask_tail();

  std::size_t num_atoms_ = 0;
  std::vector<std::uint64_t> words_;
};

/// Throws Error if the atom list exceeds `cap` or `s` uses an atom not in it.
TruthTable truth_table(const Sentence& s, const std::vector<std::string>& atom_list,
                       std::size_t cap = kDefaultAtomCap);

/// a and b agree under every valuation of their combined atoms.
bool equivalent(const Sentence& a, const Sentence& b, std::size_t cap = kDefaultAtomCap);
/// q is false under every valuation.
bool is_absurd(const Sentence& q, std::size_t cap = kDefaultAtomCap);

}  // namespace palogic::logic

#endif  // PALOGIC_SENTENCE_HPP_
