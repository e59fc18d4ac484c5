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

// The executable form of the embedding theorem: a totally ordered,
// archimedean algebra is the one that embeds into the real interval with
// ordinary multiplication.
//
// For finite chains the embedding is searched in log space. With
// x_p = -log v(p) for the inner elements (neither zero nor one), h becomes
// addition and the order reverses:
//   x_{h(p,q)} = x_p + x_q,   x_p > x_q for p < q,   x_p > 0.
// The system is homogeneous, so its strict inequalities can be replaced by
// ">= 1" without changing feasibility. It is decided exactly by linear::solve.

#ifndef PALOGIC_TARPIT_HPP_
#define PALOGIC_TARPIT_HPP_

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "palogic/builtin.hpp"
#include "palogic/chain_model.hpp"
#include "palogic/english.hpp"
#include "palogic/linear.hpp"

namespace palogic {

struct ArchimedeanResult {
  bool archimedean = true;
  /// First (p, q), p != one and q != zero, with p^n never below q.
  std::optional<std::pair<Element, Element>> witness;
};

/// Iterates p, p^2, ... until it drops below q or repeats.
ArchimedeanResult is_archimedean(const ChainModel& model);

/// Equivalent test for models of the default laws: no idempotent besides
/// zero and one.
bool is_archimedean_by_idempotents(const ChainModel& model);

struct TotalityResult {
  bool total = true;
  std::optional<std::pair<std::string, std::string>> witness;
};

TotalityResult is_totally_ordered(const ChainModel& model);
TotalityResult is_totally_ordered(const RealInterval& model);
/// Over the currently derivable fact base.
TotalityResult is_totally_ordered(english::EnglishAlgebra& algebra);

enum class Verdict { Embedded, RefutedNotTotal, RefutedNonArchimedean, Infeasible };

std::string to_string(Verdict v);

struct EmbeddingResult {
  Verdict verdict = Verdict::Infeasible;
  std::optional<std::pair<Element, Element>> archimedean_witness;
  /// Whether the log-space system has a solution, decided even when the
  /// verdict comes from an earlier gate.
  bool lp_feasible = false;
  /// -log v(rank) for every rank; nullopt for zero (v = 0). When the system
  /// is infeasible only the fixed entries (zero, one) are set.
  std::vector<std::optional<linear::Rational>> log_value;
  std::vector<linear::Constraint> constraints;
  /// Input constraints combined into the contradiction, if infeasible.
  std::vector<std::string> contradiction;
  /// Whether some rescaling t * x of the solution also gives v(i(p)) = 1 - v(p),
  /// to 1e-9; nullopt without a solution.
  std::optional<bool> i_compatible;
  double i_scale = 1.0;
  std::vector<std::string> notes;
};

EmbeddingResult embed(const ChainModel& model);

/// v(a) < v(b) through the stored log values, exactly.
bool value_less(const EmbeddingResult& e, Element a, Element b);

/// Re-checks a successful embedding in rational arithmetic: strict order
/// preservation and x_{h(p,q)} = x_p + x_q for every pair of nonzero
/// elements. Returns a description of the first failure, or nullopt.
std::optional<std::string> verify_embedding(const ChainModel& model, const EmbeddingResult& e);

}  // namespace palogic

#endif  // PALOGIC_TARPIT_HPP_
