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

// Probability-algebra interface (P, <=, h, i, 0, 1) and the catalogue of
// checkable laws L1..L12.
//
// Finite carriers are checked exhaustively with check_law(); carriers that can
// only be sampled (the real interval) go through check_law_sampled().

#ifndef PALOGIC_LAWS_HPP_
#define PALOGIC_LAWS_HPP_

#include <array>
#include <concepts>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "palogic/error.hpp"
#include "palogic/relation.hpp"

namespace palogic {

/// One element of a finite carrier, identified by its rank in enumeration order.
struct Element {
  std::uint32_t rank = 0;
  friend constexpr auto operator<=>(Element, Element) = default;
};

enum class Law : std::uint8_t { L1 = 1, L2, L3, L4, L5, L6, L7, L8, L9, L10, L11, L12 };

inline constexpr std::array<Law, 12> kAllLaws = {
    Law::L1, Law::L2, Law::L3, Law::L4, Law::L5,  Law::L6,
    Law::L7, Law::L8, Law::L9, Law::L10, Law::L11, Law::L12};

std::string_view law_id(Law law);
std::string_view law_description(Law law);
/// Parses "L1".."L12"; throws ParseError otherwise.
Law parse_law_id(std::string_view id);

/// A named, ordered collection of laws.
class LawSet {
 public:
  LawSet() = default;
  LawSet(std::string name, std::vector<Law> laws);

  /// L1..L10, the laws the census is calibrated against.
  static LawSet default_set();
  /// L1..L12.
  static LawSet full_set();
  /// Resolves a built-in name: "default", "full", or "no-L6", "no-L6-L9", ...
  /// (the default set with the listed laws removed).
  static std::optional<LawSet> builtin(std::string_view name);

  const std::string& name() const { return name_; }
  const std::vector<Law>& laws() const { return laws_; }
  bool contains(Law law) const;
  LawSet without(Law law) const;

  friend bool operator==(const LawSet&, const LawSet&) = default;

 private:
  std::string name_;
  std::vector<Law> laws_;
};

/// Law-set file: one identifier per line, '#' starts a comment. A comment of
/// the form "# name: <name>" names the set.
LawSet parse_law_set(std::string_view text, std::string_view fallback_name = "custom");
std::string format_law_set(const LawSet& laws);
LawSet load_law_set_file(const std::string& path);
/// Built-in name or file path.
LawSet resolve_law_set(std::string_view name_or_path);

/// Witnessing tuple for a failed law.
template <class E>
struct Counterexample {
  Law law;
  std::vector<E> witness;
  std::string detail;
};

using LawResult = std::optional<Counterexample<Element>>;

template <class A>
concept FiniteAlgebra = requires(const A& a, Element p) {
  { a.size() } -> std::convertible_to<std::size_t>;
  { a.le(p, p) } -> std::same_as<Tri>;
  { a.h(p, p) } -> std::same_as<Element>;
  { a.i(p) } -> std::same_as<Element>;
  { a.zero() } -> std::same_as<Element>;
  { a.one() } -> std::same_as<Element>;
};

template <class A>
concept SampledAlgebra = requires(const A& a, double p, std::mt19937_64& rng) {
  { a.sample(rng) } -> std::same_as<double>;
  { a.h(p, p) } -> std::same_as<double>;
  { a.i(p) } -> std::same_as<double>;
  { a.zero() } -> std::same_as<double>;
  { a.one() } -> std::same_as<double>;
};

namespace detail {

template <class Fn>
LawResult for_pairs(std::size_t n, Fn&& fn) {
  for (std::uint32_t a = 0; a < n; ++a)
    for (std::uint32_t b = 0; b < n; ++b)
      if (auto r = fn(Element{a}, Element{b})) return r;
  return std::nullopt;
}

template <class Fn>
LawResult for_triples(std::size_t n, Fn&& fn) {
  for (std::uint32_t a = 0; a < n; ++a)
    for (std::uint32_t b = 0; b < n; ++b)
      for (std::uint32_t c = 0; c < n; ++c)
        if (auto r = fn(Element{a}, Element{b}, Element{c})) return r;
  return std::nullopt;
}

inline LawResult fail(Law law, std::vector<Element> w, std::string detail) {
  return Counterexample<Element>{law, std::move(w), std::move(detail)};
}

}  // namespace detail

/// Exhaustively checks one law. On failure returns the first witnessing tuple
/// in lexicographic rank order.
template <FiniteAlgebra A>
LawResult check_law(const A& alg, Law law) {
  using detail::fail;
  const std::size_t n = alg.size();
  const Element zero = alg.zero();
  const Element one = alg.one();
  auto le = [&](Element p, Element q) { return alg.le(p, q) == Tri::True; };

  switch (law) {
    case Law::L1: {
      for (std::uint32_t a = 0; a < n; ++a) {
        const Element p{a};
        if (!le(p, p)) return fail(law, {p}, "not reflexive");
      }
      if (auto r = detail::for_pairs(n, [&](Element p, Element q) -> LawResult {
            if (p != q && le(p, q) && le(q, p)) return fail(law, {p, q}, "not antisymmetric");
            return std::nullopt;
          }))
        return r;
      if (auto r = detail::for_triples(n, [&](Element p, Element q, Element s) -> LawResult {
            if (le(p, q) && le(q, s) && !le(p, s)) return fail(law, {p, q, s}, "not transitive");
            return std::nullopt;
          }))
        return r;
      for (std::uint32_t a = 0; a < n; ++a) {
        const Element p{a};
        if (!le(zero, p) || !le(p, one)) return fail(law, {p}, "outside [zero, one]");
      }
      return std::nullopt;
    }
    case Law::L2:
      return detail::for_triples(n, [&](Element p, Element q, Element r) -> LawResult {
        if (!le(p, q)) return std::nullopt;
        if (!le(alg.h(p, r), alg.h(q, r)))
          return fail(law, {p, q, r}, "h(p,r) > h(q,r) although p <= q");
        if (!le(alg.h(r, p), alg.h(r, q)))
          return fail(law, {p, q, r}, "h(r,p) > h(r,q) although p <= q");
        return std::nullopt;
      });
    case Law::L3:
      return detail::for_pairs(n, [&](Element p, Element q) -> LawResult {
        if (le(p, q) && !le(alg.i(q), alg.i(p)))
          return fail(law, {p, q}, "i(q) > i(p) although p <= q");
        return std::nullopt;
      });
    case Law::L4:
      for (std::uint32_t a = 0; a < n; ++a) {
        const Element p{a};
        if (alg.h(p, one) != p || alg.h(one, p) != p) return fail(law, {p}, "one is not a unit");
      }
      return std::nullopt;
    case Law::L5:
      for (std::uint32_t a = 0; a < n; ++a) {
        const Element p{a};
        if (alg.h(p, zero) != zero || alg.h(zero, p) != zero)
          return fail(law, {p}, "zero is not absorbing");
      }
      return std::nullopt;
    case Law::L6:
      return detail::for_pairs(n, [&](Element p, Element q) -> LawResult {
        if (alg.h(p, q) == zero && p != zero && q != zero)
          return fail(law, {p, q}, "nontrivial zero h(p,q) = 0");
        return std::nullopt;
      });
    case Law::L7:
      for (std::uint32_t a = 0; a < n; ++a) {
        const Element p{a};
        if (alg.i(alg.i(p)) != p) return fail(law, {p}, "i(i(p)) != p");
      }
      return std::nullopt;
    case Law::L8:
      if (alg.i(zero) != one) return fail(law, {zero}, "i(zero) != one");
      if (alg.i(one) != zero) return fail(law, {one}, "i(one) != zero");
      return std::nullopt;
    case Law::L9:
      return detail::for_triples(n, [&](Element p, Element q, Element r) -> LawResult {
        if (alg.h(alg.h(p, q), r) != alg.h(p, alg.h(q, r)))
          return fail(law, {p, q, r}, "h not associative");
        return std::nullopt;
      });
    case Law::L10:
      return detail::for_pairs(n, [&](Element p, Element q) -> LawResult {
        if (alg.h(p, q) != alg.h(q, p)) return fail(law, {p, q}, "h not commutative");
        return std::nullopt;
      });
    case Law::L11:
      return detail::for_pairs(n, [&](Element p, Element q) -> LawResult {
        const Element r = alg.h(p, q);
        if (!le(r, p) || !le(r, q)) return fail(law, {p, q}, "h(p,q) exceeds a factor");
        return std::nullopt;
      });
    case Law::L12:
      return detail::for_pairs(n, [&](Element p, Element q) -> LawResult {
        if (alg.le(p, q) == Tri::Unknown) return fail(law, {p, q}, "incomparable pair");
        return std::nullopt;
      });
  }
  return std::nullopt;
}

/// Checks each law of `laws` in order; returns every failure.
template <FiniteAlgebra A>
std::vector<Counterexample<Element>> check_laws(const A& alg, const LawSet& laws) {
  std::vector<Counterexample<Element>> out;
  for (Law law : laws.laws())
    if (auto r = check_law(alg, law)) out.push_back(std::move(*r));
  return out;
}

/// Evaluates `law` on `trials` sampled tuples. Equalities are |x - y| <= tolerance
/// and x <= y is x <= y + tolerance. Deterministic in `seed`.
template <SampledAlgebra A>
std::optional<Counterexample<double>> check_law_sampled(const A& alg, Law law,
                                                        std::size_t trials,
                                                        double tolerance,
                                                        std::uint64_t seed) {
  if (!(tolerance >= 0.0)) throw Error("check_law_sampled: tolerance must be >= 0");
  std::mt19937_64 rng(seed);
  auto eq = [&](double x, double y) { return x - y <= tolerance && y - x <= tolerance; };
  auto le = [&](double x, double y) { return x <= y + tolerance; };
  auto fail = [&](std::vector<double> w, std::string d) {
    return std::optional<Counterexample<double>>(
        Counterexample<double>{law, std::move(w), std::move(d)});
  };
  const double zero = alg.zero();
  const double one = alg.one();

  for (std::size_t t = 0; t < trials; ++t) {
    double p = alg.sample(rng);
    double q = alg.sample(rng);
    double r = alg.sample(rng);
    switch (law) {
      case Law::L1:
        if (!le(p, p)) return fail({p}, "not reflexive");
        if (le(p, q) && le(q, p) && !eq(p, q)) return fail({p, q}, "not antisymmetric");
        if (le(p, q) && le(q, r) && !le(p, r)) return fail({p, q, r}, "not transitive");
        if (!le(zero, p) || !le(p, one)) return fail({p}, "outside [zero, one]");
        break;
      case Law::L2:
        if (q < p) std::swap(p, q);
        if (!le(alg.h(p, r), alg.h(q, r)) || !le(alg.h(r, p), alg.h(r, q)))
          return fail({p, q, r}, "h not monotone");
        break;
      case Law::L3:
        if (q < p) std::swap(p, q);
        if (!le(alg.i(q), alg.i(p))) return fail({p, q}, "i not antitone");
        break;
      case Law::L4:
        if (!eq(alg.h(p, one), p) || !eq(alg.h(one, p), p)) return fail({p}, "one is not a unit");
        break;
      case Law::L5:
        if (!eq(alg.h(p, zero), zero) || !eq(alg.h(zero, p), zero))
          return fail({p}, "zero is not absorbing");
        break;
      case Law::L6:
        if (eq(alg.h(p, q), zero) && !eq(p, zero) && !eq(q, zero))
          return fail({p, q}, "nontrivial zero h(p,q) = 0");
        break;
      case Law::L7:
        if (!eq(alg.i(alg.i(p)), p)) return fail({p}, "i(i(p)) != p");
        break;
      case Law::L8:
        if (!eq(alg.i(zero), one) || !eq(alg.i(one), zero)) return fail({}, "i does not swap bounds");
        break;
      case Law::L9:
        if (!eq(alg.h(alg.h(p, q), r), alg.h(p, alg.h(q, r))))
          return fail({p, q, r}, "h not associative");
        break;
      case Law::L10:
        if (!eq(alg.h(p, q), alg.h(q, p))) return fail({p, q}, "h not commutative");
        break;
      case Law::L11: {
        const double v = alg.h(p, q);
        if (!le(v, p) || !le(v, q)) return fail({p, q}, "h(p,q) exceeds a factor");
        break;
      }
      case Law::L12:
        if (!le(p, q) && !le(q, p)) return fail({p, q}, "incomparable pair");
        break;
    }
  }
  return std::nullopt;
}

}  // namespace palogic

#endif  // PALOGIC_LAWS_HPP_
