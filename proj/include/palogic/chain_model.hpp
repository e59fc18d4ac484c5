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

#ifndef PALOGIC_CHAIN_MODEL_HPP_
#define PALOGIC_CHAIN_MODEL_HPP_

#include <compare>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "palogic/laws.hpp"

namespace palogic {

/// A finite totally ordered candidate algebra. Elements are ranks
/// 0 = zero < 1 < ... < n-1 = one; h and i are stored as tables of ranks.
class ChainModel {
 public:
  /// Throws Error if the tables have the wrong shape or hold ranks >= n.
  ChainModel(std::size_t n, std::vector<Element> h_table, std::vector<Element> i_table);

  /// Model whose negation is the rank reversal i(k) = n-1-k.
  static ChainModel with_reversal(std::size_t n, std::vector<Element> h_table);

  std::size_t size() const { return n_; }
  Tri le(Element p, Element q) const { return to_tri(p.rank <= q.rank); }
  Element h(Element p, Element q) const { return h_[p.rank * n_ + q.rank]; }
  Element i(Element p) const { return i_[p.rank]; }
  Element zero() const { return Element{0}; }
  Element one() const { return Element{static_cast<std::uint32_t>(n_ - 1)}; }

  /// Row-major n*n table.
  const std::vector<Element>& h_table() const { return h_; }
  const std::vector<Element>& i_table() const { return i_; }

  /// Sort order used for census output: size, then h rows, then i.
  friend auto operator<=>(const ChainModel&, const ChainModel&) = default;

 private:
  std::size_t n_;
  std::vector<Element> h_;
  std::vector<Element> i_;
};

static_assert(FiniteAlgebra<ChainModel>);

/// Rank reversal table for an n-chain.
std::vector<Element> reversal_table(std::size_t n);

/// Text format: "n=<size>", "i=<ranks>", then n rows of comma-separated ranks.
std::string format_chain_model(const ChainModel& model);
ChainModel parse_chain_model(std::string_view text);
ChainModel load_chain_model(const std::string& path);
void save_chain_model(const ChainModel& model, const std::string& path);

/// Every failed law of `laws`, in law-set order. Empty means the model passes.
std::vector<Counterexample<Element>> is_model(const ChainModel& model, const LawSet& laws);

/// A chain admits only the identity as an order isomorphism, so the canonical
/// representative of a model is the model itself.
ChainModel canonical_form(const ChainModel& model);

/// Brute-force isomorphism test over every bijection of the carriers that
/// preserves <=, h and i. Independent of canonical_form.
bool isomorphic(const ChainModel& a, const ChainModel& b);

}  // namespace palogic

#endif  // PALOGIC_CHAIN_MODEL_HPP_
