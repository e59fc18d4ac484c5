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

#include "palogic/builtin.hpp"

#include <cmath>

namespace palogic {

ChainModel two_element_model() {
  return ChainModel(2, {Element{0}, Element{0}, Element{0}, Element{1}}, {Element{1}, Element{0}});
}

RealInterval::RealInterval(double tolerance) : tolerance_(tolerance) {
  if (!(tolerance >= 0.0)) throw Error("RealInterval: tolerance must be >= 0");
}

double RealInterval::sample(std::mt19937_64& rng) const {
  const std::uint64_t r = rng();
  switch (r & 15u) {
    case 0: return 0.0;
    case 1: return 1.0;
    default: break;
  }
  // 2^53 + 1 grid points.
  const std::uint64_t k = rng() % ((std::uint64_t{1} << 53) + 1);
  return std::ldexp(static_cast<double>(k), -53);
}

}  // namespace palogic
