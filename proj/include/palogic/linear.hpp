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

// Exact linear feasibility over the rationals: Gaussian elimination of the
// equalities, then Fourier-Motzkin projection of the inequalities, one
// variable at a time. Feasible systems yield a rational point by
// back-substitution; infeasible ones yield the combination of input
// constraints that produced 0 >= c with c > 0 (or 0 = c with c != 0).
//
// Meant for the small systems of the embedding check; projection is
// doubly exponential in the worst case.

#ifndef PALOGIC_LINEAR_HPP_
#define PALOGIC_LINEAR_HPP_

#include <cstddef>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace palogic::linear {

using Rational = boost::multiprecision::cpp_rational;

struct Constraint {
  enum class Kind { Ge, Eq };

  std::vector<Rational> coeffs;  // sum coeffs[j] * x_j
  Kind kind = Kind::Ge;
  Rational rhs;
  std::string label;
};

struct Solution {
  bool feasible = false;
  std::vector<Rational> point;
  /// Indices of the input constraints combined into the contradiction.
  std::vector<std::size_t> contradiction;
};

Solution solve(std::size_t num_vars, const std::vector<Constraint>& constraints);

bool satisfies(const std::vector<Rational>& x, const Constraint& c);

/// "n" or "n/d".
std::string format_rational(const Rational& r);
/// e.g. "x0 - 2*x3 >= 1".
std::string format_constraint(const Constraint& c, const std::vector<std::string>& names = {});

}  // namespace palogic::linear

#endif  // PALOGIC_LINEAR_HPP_
