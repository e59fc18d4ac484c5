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

// Conditional-belief knowledge bases valued in any probability algebra, and
// their forward-chaining closure.
//
// A conditional f(H|E) is identified by the pair of truth tables
// (H & E, E) over the knowledge base's atoms. That key already absorbs
// boolean equivalence of hypothesis and evidence and the identification
// f(H & E|E) = f(H|E). The closure works on a finite universe of such
// conditionals (the mentioned ones plus negation, composition, quotient and
// mixing combinations up to a configurable depth) together with the algebra
// values that occur; order facts live in a pair of bit matrices (<=, <).
//
// Rules:
//   absurd evidence, and evidence entailing the hypothesis, give one;
//   f(~H|E) = i(f(H|E)) for non-absurd E, in both directions, with order
//     reversed;
//   f(X|E) = h(f(X|Y), f(Y|E)) for X <= Y <= E, plus the bounds
//     f(X|E) <= f(X|Y) and f(X|E) <= f(Y|E) that follow from h <= min;
//   a zero conjunction records a pending disjunction "first factor is zero
//     or second factor is zero" (resolved only when one side is known to be
//     nonzero);
//   f(P|R) <= f(P|~R) gives f(P|R) <= f(P|TRUE) <= f(P|~R);
//   transitivity, antisymmetry and the algebra's own order.
// The "0*" of the chain rule's converse is the algebra's zero.

#ifndef PALOGIC_BELIEF_HPP_
#define PALOGIC_BELIEF_HPP_

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "palogic/bit_matrix.hpp"
#include "palogic/chain_model.hpp"
#include "palogic/english.hpp"
#include "palogic/relation.hpp"
#include "palogic/sentence.hpp"

namespace palogic::belief {

/// A belief value: a rank of a finite chain, a real number, or an English term.
using Value = std::variant<Element, double, english::Term>;

/// What the engine needs from an algebra. Implementations must be safe to
/// call from several threads when used by concurrent queries.
class ValueAlgebra {
 public:
  virtual ~ValueAlgebra() = default;

  virtual std::string name() const = 0;
  /// Throws ParseError on malformed input.
  virtual Value parse(std::string_view text) const = 0;
  virtual std::string format(const Value& v) const = 0;
  virtual Value zero() const = 0;
  virtual Value one() const = 0;
  virtual Value h(const Value& a, const Value& b) const = 0;
  virtual Value i(const Value& a) const = 0;
  virtual Relation compare(const Value& a, const Value& b) const = 0;
  /// Whether h has no nontrivial zeroes (L6), which licenses the zero split.
  virtual bool no_zero_divisors() const = 0;
  /// The value standing for a real number, where the algebra has one.
  virtual std::optional<Value> from_real(double x) const = 0;
};

std::shared_ptr<ValueAlgebra> make_chain_algebra(ChainModel model, std::string name);
std::shared_ptr<ValueAlgebra> make_real_algebra(double tolerance = 1e-12);
std::shared_ptr<ValueAlgebra> make_english_algebra(
    std::shared_ptr<english::EnglishAlgebra> algebra = nullptr);
/// "two", "real", "english" or "model:<file>".
std::shared_ptr<ValueAlgebra> make_algebra(std::string_view spec);

struct Conditional {
  logic::Sentence hypothesis;
  logic::Sentence evidence;
};

std::string to_string(const Conditional& c);
/// "P(<sentence>|<sentence>)". The first top-level '|' separates hypothesis
/// from evidence, so a disjunctive hypothesis must be parenthesized.
Conditional parse_conditional(std::string_view text);

enum class FactRelation { Eq, Le, Lt, Ge, Gt };

using Operand = std::variant<Value, Conditional>;

struct Fact {
  Conditional left;
  FactRelation relation;
  Operand right;
};

/// One fact per line: `P(h|e) <rel> <value-or-conditional>` with <rel> one of
/// = <= < >= >. '#' starts a comment.
std::vector<Fact> parse_kb(std::string_view text, const ValueAlgebra& algebra);
Operand parse_operand(std::string_view text, const ValueAlgebra& algebra);
std::string format_fact(const Fact& fact, const ValueAlgebra& algebra);

struct KbOptions {
  std::size_t combination_depth = 2;
  std::size_t atom_cap = logic::kDefaultAtomCap;
  std::size_t max_rounds = 1000;
  /// Expansion stops adding combinations once the universe reaches this size.
  std::size_t max_universe = 2048;
};

/// Disjunction from a zero conjunction f(X|E) = 0: f(X|Y) = 0 or
/// f(Y|E) = 0. Every such split is recorded; `open` is false once one side
/// is known to be zero, or the other side is known to be nonzero and the
/// remaining one was forced.
struct PendingCase {
  Conditional conjunction;
  Conditional first;
  Conditional second;
  bool open;
};

struct DerivedValue {
  Conditional conditional;
  Value value;
};

struct DerivedOrder {
  Conditional lower;
  Conditional upper;
  bool strict;
};

class BeliefKB {
 public:
  explicit BeliefKB(std::shared_ptr<const ValueAlgebra> algebra, KbOptions options = {});

  const ValueAlgebra& algebra() const { return *algebra_; }
  std::shared_ptr<const ValueAlgebra> algebra_ptr() const { return algebra_; }
  const KbOptions& options() const { return options_; }

  void add(Fact fact);
  /// Adds a conditional to the universe without asserting anything about it.
  void mention(Conditional c);
  const std::vector<Fact>& facts() const { return facts_; }

  /// Computes the least fixpoint of the rules. Idempotent. Throws Error when
  /// the atom cap is exceeded.
  void close();
  bool closed() const { return closed_; }
  bool consistent() const { return conflicts_.empty(); }
  const std::vector<std::string>& conflicts() const { return conflicts_; }

  /// Strongest derivable relation between a conditional and a conditional or
  /// value. Requires close().
  Relation query(const Conditional& a, const Operand& b) const;
  std::optional<Value> value_of(const Conditional& c) const;

  /// Every conditional of the universe with a derived value, in universe order.
  std::vector<DerivedValue> derived_values() const;
  /// Every derived order fact between distinct conditionals.
  std::vector<DerivedOrder> derived_order() const;
  const std::vector<PendingCase>& pending_cases() const { return pending_; }
  std::size_t universe_size() const { return nodes_.size(); }

 private:
  struct Key {
    logic::TruthTable conj;      // hypothesis & evidence
    logic::TruthTable evidence;
    friend auto operator<=>(const Key&, const Key&) = default;
  };
  struct Node {
    Key key;
    Conditional display;
  };
  struct Triple {
    std::size_t whole, first, second;  // whole = h(first, second)
  };
  struct Mix {
    std::size_t given, given_not, given_top;
  };

  Key key_of(const Conditional& c) const;
  std::optional<std::size_t> find_node(const Key& k) const;
  std::size_t add_node(const Key& k, Conditional display);
  std::size_t value_node(const Value& v);
  std::optional<std::size_t> find_value(const Value& v) const;
  void grow_matrices();
  std::optional<std::size_t> value_index_of(std::size_t node) const;
  bool link_equal(std::size_t a, std::size_t b);
  void build_universe();
  void conflict(std::string what);
  Relation relation_between(std::size_t a, std::size_t b) const;
  /// Trivial value of a conditional fixed by its key alone (one or zero).
  std::optional<Value> trivial_value(const Key& k) const;

  std::shared_ptr<const ValueAlgebra> algebra_;
  KbOptions options_;
  std::vector<Fact> facts_;
  std::vector<Conditional> mentions_;

  bool closed_ = false;
  std::vector<std::string> atoms_;
  std::vector<Node> nodes_;
  std::map<Key, std::size_t> index_;
  std::vector<std::optional<std::size_t>> negation_;
  std::vector<Triple> triples_;
  std::vector<Mix> mixes_;
  std::vector<Value> values_;
  std::vector<std::optional<std::size_t>> value_negation_;
  std::vector<std::vector<Relation>> value_relation_;
  BitMatrix le_;
  BitMatrix lt_;
  std::vector<PendingCase> pending_;
  std::vector<std::string> conflicts_;
};

/// Closes a copy of `kb`.
BeliefKB close(BeliefKB kb);

}  // namespace palogic::belief

#endif  // PALOGIC_BELIEF_HPP_
