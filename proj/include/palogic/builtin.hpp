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

#ifndef PALOGIC_BUILTIN_HPP_
#define PALOGIC_BUILTIN_HPP_

#include <cstdint>
#include <random>

#include "palogic/chain_model.hpp"
#include "palogic/laws.hpp"

namespace palogic {

/// {0, 1} with 0*0 = 0*1 = 1*0 = 0, 1*1 = 1, i(0) = 1, i(1) = 0.
ChainModel two_element_model();

/// The closed real interval [0, 1] with the ordinary product and i(p) = 1 - p.
class RealInterval {
 public:
  static constexpr double kDefaultTolerance = 1e-12;

  explicit RealInterval(double tolerance = kDefaultTolerance);

  double tolerance() const { return tolerance_; }

  double h(double p, double q) const { return p * q; }
  double i(double p) const { return 1.0 - p; }
  double zero() const { return 0.0; }
  double one() const { return 1.0; }
  Tri le(double p, double q) const { return to_tri(p <= q + tolerance_); }
  bool equal(double p, double q) const { return p - q <= tolerance_ && q - p <= tolerance_; }

  /// Draws from the grid k / 2^53, k in [0, 2^53], with an extra 1/16 chance
  /// each of hitting zero or one exactly. 1 - p is exact on that grid, so
  /// i(i(p)) == p holds bit-for-bit for sampled values.
  double sample(std::mt19937_64& rng) const;

 private:
  double tolerance_;
};

static_assert(SampledAlgebra<RealInterval>);

}  // namespace palogic

#endif  // PALOGIC_BUILTIN_HPP_
