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

// Explicit belief functions realizing the richness axioms: three sequential
// conditionals (a, b, c), an independent pair (a, b), and a marginal with a
// smaller conjunction (a, b <= a).
//
// A witness is a lexicographic joint: an ordered list of distributions over
// the complete conjunctions of the atoms. f(P|Q) is read off the first layer
// that gives Q positive mass, and is one when no layer does (Q absurd). With a
// single strictly positive layer this is ordinary conditioning; the later
// layers only settle conditionals on evidence the first layer rules out.
// Over the two-element algebra every layer is a point mass, which makes it a
// ranking of worlds.

#ifndef PALOGIC_WITNESS_HPP_
#define PALOGIC_WITNESS_HPP_

#include <optional>
#include <string>
#include <vector>

#include "palogic/belief.hpp"
#include "palogic/sentence.hpp"

namespace palogic::belief {

struct Witness {
  int axiom = 0;
  std::vector<double> targets;
  /// Atoms A, B (and C for the sequential case); cell r gives atom k the
  /// value of bit k of r.
  std::vector<std::string> atoms;
  std::vector<std::vector<double>> layers;

  /// f(hypothesis|evidence) under the witness.
  double conditional(const logic::Sentence& hypothesis, const logic::Sentence& evidence) const;
  /// The conditionals the axiom constrains, in target order.
  std::vector<Conditional> target_conditionals() const;
};

/// Returns nullopt when no construction exists for the algebra (anything but
/// the real interval and the two-element chain with 0/1 targets). Throws
/// Error on a bad axiom number, targets outside [0,1] or, for the marginal
/// case, b > a.
std::optional<Witness> richness_witness(int axiom, const std::vector<double>& targets,
                                        const ValueAlgebra& algebra);

struct WitnessCheck {
  bool ok = false;
  /// Facts handed to close(): complements of the targets read from the
  /// witness, so the targets themselves must be re-derived.
  std::vector<Fact> facts;
  std::vector<std::optional<Value>> derived;
  std::string detail;
};

/// Builds a knowledge base from the witness and checks that close() derives
/// every target value, exactly in the algebra's equality.
WitnessCheck verify_witness(const Witness& w, std::shared_ptr<const ValueAlgebra> algebra);

}  // namespace palogic::belief

#endif  // PALOGIC_WITNESS_HPP_
