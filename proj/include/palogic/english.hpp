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

// The symbolic algebra generated by LIKELY and UNLIKELY = i(LIKELY) under the
// product h and the negation i, with residual symbols s(p,q) for quotients
// that have no solution yet.
//
// Terms are immutable trees. normalize() maps a term to its canonical form:
// products flattened, factors sorted by the syntactic order, unit factors
// dropped, a zero factor collapsing the product, double negation removed,
// UNLIKELY expanded to i(LIKELY), and i(0) = 1, i(1) = 0. The same rules are
// exposed one step at a time (redexes()/apply()) so that confluence can be
// tested independently of the normalizer.
//
// The order is exactly what can be derived from the base facts
// 0 < UNLIKELY < LIKELY < 1 with the rules
//   R2/R6  products: x <= y when y's factors inject into x's factors with
//          each image below its preimage (extra factors of x only lower it);
//   R3     a <= b implies i(b) <= i(a), strictness preserved;
//   R4     reflexivity and transitivity;
//   R5     0 <= t <= 1.
// Strictness only travels through transitivity and R3, never through
// products. Incomparable means "not derivable".

#ifndef PALOGIC_ENGLISH_HPP_
#define PALOGIC_ENGLISH_HPP_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "palogic/bit_matrix.hpp"
#include "palogic/relation.hpp"

namespace palogic::english {

class Term {
 public:
  enum class Kind : std::uint8_t { Zero, One, Likely, Unlikely, Neg, Residual, Product };

  static Term zero() { return Term(Kind::Zero, {}); }
  static Term one() { return Term(Kind::One, {}); }
  static Term likely() { return Term(Kind::Likely, {}); }
  /// Raw UNLIKELY; normalizes to i(LIKELY).
  static Term unlikely() { return Term(Kind::Unlikely, {}); }
  static Term neg(Term t) { return Term(Kind::Neg, {std::move(t)}); }
  /// Raw product of any arity; see normalize().
  static Term product(std::vector<Term> factors) { return Term(Kind::Product, std::move(factors)); }
  static Term residual(Term p, Term q) { return Term(Kind::Residual, {std::move(p), std::move(q)}); }

  Kind kind() const { return kind_; }
  const std::vector<Term>& args() const { return *args_; }

  /// Atoms have depth 0; every constructor adds one.
  std::size_t depth() const;

  /// The fixed syntactic total order used to sort factors.
  friend std::strong_ordering operator<=>(const Term& a, const Term& b);
  friend bool operator==(const Term& a, const Term& b) { return (a <=> b) == 0; }

 private:
  Term(Kind kind, std::vector<Term> args);

  Kind kind_;
  std::shared_ptr<const std::vector<Term>> args_;
};

Term normalize(const Term& t);
bool is_normal(const Term& t);

/// Printed form: LIKELY, UNLIKELY (also for i(LIKELY)), 0, 1, i(t), a*b, s(p,q).
std::string to_string(const Term& t);
/// Parses the printed form; whitespace-insensitive. Returns a raw term.
Term parse_term(std::string_view text);

enum class Rule : std::uint8_t {
  DoubleNegation,   // i(i(t)) -> t
  NegateConstant,   // i(0) -> 1, i(1) -> 0
  ExpandUnlikely,   // UNLIKELY -> i(LIKELY)
  Flatten,          // a*(b*c) -> a*b*c
  DropOne,          // a*1 -> a
  AbsorbZero,       // a*0 -> 0
  CollapseProduct,  // a product of fewer than two factors
  SwapFactors,      // adjacent factors out of order
};

/// One applicable rewrite: the rule, the path of argument indices to the
/// node, and the factor index for product rules.
struct Redex {
  Rule rule;
  std::vector<std::size_t> path;
  std::size_t index = 0;
};

std::vector<Redex> redexes(const Term& t);
Term apply(const Term& t, const Redex& redex);

struct ResidualResult {
  Term term;
  /// False when an existing solution r of p = q*r was returned instead.
  bool fresh;
};

/// P(E) together with its order fact base. Comparison extends the term
/// universe, so every member function takes an internal lock; mutations are
/// serialized and reads see a consistent closure.
class EnglishAlgebra {
 public:
  static constexpr std::size_t kDefaultDepthBound = 4;

  explicit EnglishAlgebra(std::size_t depth_bound = kDefaultDepthBound);

  EnglishAlgebra(const EnglishAlgebra&) = delete;
  EnglishAlgebra& operator=(const EnglishAlgebra&) = delete;

  /// normalize() followed by cancelling q*s(p,q) to p for registered residuals.
  Term reduce(const Term& t) const;
  Term h(const Term& a, const Term& b) const;
  Term i(const Term& a) const;

  Relation compare(const Term& a, const Term& b);

  /// Residual symbol for p <= q. Throws Error when p <= q is not derivable.
  /// If some r in the current universe already solves p = q*r, returns it
  /// with fresh = false.
  ResidualResult residual(const Term& p, const Term& q);

  /// Adds a term (and what it induces) to the universe.
  void mention(const Term& t);

  /// Current universe in insertion order.
  std::vector<Term> universe();
  /// First pair of the universe with no derivable relation, if any.
  std::optional<std::pair<Term, Term>> first_incomparable_pair();

  /// False if the closure ever derived t < t.
  bool consistent();

  std::size_t depth_bound() const { return depth_bound_; }

 private:
  struct ResidualDef {
    Term p, q, s;
  };

  Term reduce_locked(const Term& t) const;
  void mention_locked(const Term& t);
  void ensure_closed();
  std::size_t index_of(const Term& t) const;
  Relation relation_locked(std::size_t a, std::size_t b) const;

  std::size_t depth_bound_;
  mutable std::mutex mu_;
  std::vector<Term> mentioned_;
  std::vector<ResidualDef> residuals_;

  // Closure over universe_, rebuilt when dirty_.
  bool dirty_ = true;
  bool consistent_ = true;
  std::vector<Term> universe_;
  std::map<Term, std::size_t> index_;
  BitMatrix le_;
  BitMatrix lt_;
};

}  // namespace palogic::english

#endif  // PALOGIC_ENGLISH_HPP_
