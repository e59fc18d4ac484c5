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

#ifndef PALOGIC_RELATION_HPP_
#define PALOGIC_RELATION_HPP_

#include <string_view>

namespace palogic {

/// Answer of a partial-order comparison. Unknown means "incomparable".
enum class Tri { False, True, Unknown };

inline constexpr Tri to_tri(bool b) { return b ? Tri::True : Tri::False; }

/// Strongest derivable relation between two values.
enum class Relation { LT, LE, EQ, GE, GT, Incomparable };

inline constexpr std::string_view to_string(Relation r) {
  switch (r) {
    case Relation::LT: return "LT";
    case Relation::LE: return "LE";
    case Relation::EQ: return "EQ";
    case Relation::GE: return "GE";
    case Relation::GT: return "GT";
    case Relation::Incomparable: return "INCOMPARABLE";
  }
  return "?";
}

inline constexpr Relation converse(Relation r) {
  switch (r) {
    case Relation::LT: return Relation::GT;
    case Relation::LE: return Relation::GE;
    case Relation::GE: return Relation::LE;
    case Relation::GT: return Relation::LT;
    default: return r;
  }
}

/// True when `r` entails a <= b.
inline constexpr bool entails_le(Relation r) {
  return r == Relation::LT || r == Relation::LE || r == Relation::EQ;
}

/// True when `r` entails a >= b.
inline constexpr bool entails_ge(Relation r) { return entails_le(converse(r)); }

}  // namespace palogic

#endif  // PALOGIC_RELATION_HPP_
