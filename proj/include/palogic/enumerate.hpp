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

// Enumeration of every model of a law set on the n-chain, one representative
// per isomorphism class.
//
// The negation is fixed to the rank reversal: on a chain, an antitone
// involution (L3 + L7) is an order-reversing bijection, and the n-chain has
// exactly one. Only h tables are searched.

#ifndef PALOGIC_ENUMERATE_HPP_
#define PALOGIC_ENUMERATE_HPP_

#include <array>
#include <cstddef>
#include <string>
#include <vector>

#include "palogic/chain_model.hpp"
#include "palogic/laws.hpp"

namespace palogic {

struct EnumerationOptions {
  std::size_t max_size = 8;
  /// Worker threads; 0 and 1 both mean single-threaded.
  unsigned jobs = 1;
};

struct CensusResult {
  std::size_t n = 0;
  std::string law_set;
  std::size_t count = 0;
  /// Canonical models in ascending ChainModel order.
  std::vector<ChainModel> models;
};

/// Throws Error unless 2 <= n <= options.max_size.
CensusResult enumerate_models(std::size_t n, const LawSet& laws,
                              const EnumerationOptions& options = {});

/// Reference counts of non-isomorphic totally ordered models, n = 2..7.
inline constexpr std::size_t kReferenceCensusMin = 2;
inline constexpr std::array<std::size_t, 6> kReferenceCensus = {1, 1, 2, 3, 7, 16};

struct CensusRow {
  std::size_t n;
  std::size_t expected;
  std::size_t actual;
};

struct CensusReport {
  std::string law_set;
  std::vector<CensusRow> rows;
  bool matches() const;
};

/// Runs enumerate_models for n = 2..7 and pairs each count with the reference one.
CensusReport census(const LawSet& laws, const EnumerationOptions& options = {});

/// Law-set variants compared when the default set does not reproduce the
/// reference counts.
std::vector<LawSet> calibration_variants();

struct CalibrationReport {
  std::vector<CensusReport> variants;
};

CalibrationReport calibrate(const std::vector<LawSet>& variants,
                            const EnumerationOptions& options = {});

}  // namespace palogic

#endif  // PALOGIC_ENUMERATE_HPP_
