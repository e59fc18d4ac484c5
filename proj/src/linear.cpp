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

#include "palogic/linear.hpp"

#include <algorithm>
#include <optional>
#include <set>

#include "palogic/error.hpp"

namespace palogic::linear {
namespace {

struct Row {
  std::vector<Rational> a;
  Rational b;
  std::vector<std::size_t> origin;  // sorted
};

std::vector<std::size_t> merge(const std::vector<std::size_t>& x, const std::vector<std::size_t>& y) {
  std::vector<std::size_t> out;
  std::set_union(x.begin(), x.end(), y.begin(), y.end(), std::back_inserter(out));
  return out;
}

bool all_zero(const std::vector<Rational>& a) {
  return std::all_of(a.begin(), a.end(), [](const Rational& r) { return r == 0; });
}

// Substitution x_var = (b - sum_{j != var} a_j x_j) / a_var from an equality.
struct Pivot {
  std::size_t var;
  Row row;
};

void substitute(Row& r, const Pivot& p) {
  const Rational f = r.a[p.var] / p.row.a[p.var];
  if (f == 0) return;
  for (std::size_t j = 0; j < r.a.size(); ++j) r.a[j] -= f * p.row.a[j];
  r.b -= f * p.row.b;
  r.a[p.var] = 0;
  r.origin = merge(r.origin, p.row.origin);
}

}  // namespace

bool satisfies(const std::vector<Rational>& x, const Constraint& c) {
  Rational lhs = 0;
  for (std::size_t j = 0; j < c.coeffs.size(); ++j) lhs += c.coeffs[j] * x[j];
  return c.kind == Constraint::Kind::Eq ? lhs == c.rhs : lhs >= c.rhs;
}

Solution solve(std::size_t num_vars, const std::vector<Constraint>& constraints) {
  std::vector<Row> eqs, ges;
  for (std::size_t k = 0; k < constraints.size(); ++k) {
    const auto& c = constraints[k];
    if (c.coeffs.size() != num_vars) throw Error("constraint width does not match the variable count");
    Row r{c.coeffs, c.rhs, {k}};
    (c.kind == Constraint::Kind::Eq ? eqs : ges).push_back(std::move(r));
  }

  Solution out;
  auto contradiction = [&](const Row& r) {
    out.feasible = false;
    out.contradiction = r.origin;
    return out;
  };

  std::vector<Pivot> pivots;
  for (std::size_t e = 0; e < eqs.size(); ++e) {
    Row& r = eqs[e];
    for (const auto& p : pivots) substitute(r, p);
    std::optional<std::size_t> var;
    for (std::size_t j = 0; j < num_vars && !var; ++j)
      if (r.a[j] != 0) var = j;
    if (!var) {
      if (r.b != 0) return contradiction(r);
      continue;
    }
    Pivot p{*var, r};
    for (auto& q : pivots) substitute(q.row, p);
    pivots.push_back(std::move(p));
  }
  std::vector<bool> pivoted(num_vars, false);
  for (const auto& p : pivots) pivoted[p.var] = true;
  for (auto& r : ges)
    for (const auto& p : pivots) substitute(r, p);

  // Projection; levels[k] is the system in which variable order[k] is
  // eliminated, needed again for back-substitution.
  std::vector<std::size_t> order;
  for (std::size_t j = 0; j < num_vars; ++j)
    if (!pivoted[j]) order.push_back(j);
  std::vector<std::vector<Row>> levels;
  std::vector<Row> current = std::move(ges);
  for (std::size_t var : order) {
    levels.push_back(current);
    std::vector<Row> pos, neg, next;
    for (auto& r : current) {
      if (r.a[var] > 0) pos.push_back(r);
      else if (r.a[var] < 0) neg.push_back(r);
      else next.push_back(r);
    }
    for (const auto& p : pos)
      for (const auto& n : neg) {
        const Rational fp = -n.a[var], fn = p.a[var];
        Row r;
        r.a.resize(num_vars);
        for (std::size_t j = 0; j < num_vars; ++j) r.a[j] = fp * p.a[j] + fn * n.a[j];
        r.a[var] = 0;
        r.b = fp * p.b + fn * n.b;
        r.origin = merge(p.origin, n.origin);
        next.push_back(std::move(r));
      }
    // Drop exact duplicates so that repeated projection stays small.
    std::sort(next.begin(), next.end(), [](const Row& x, const Row& y) {
      if (x.a != y.a) return x.a < y.a;
      if (x.b != y.b) return x.b < y.b;
      return x.origin < y.origin;
    });
    next.erase(std::unique(next.begin(), next.end(), [](const Row& x, const Row& y) { return x.a == y.a && x.b == y.b; }),
               next.end());
    current = std::move(next);
  }
  for (const auto& r : current)
    if (all_zero(r.a) && r.b > 0) return contradiction(r);

  std::vector<Rational> x(num_vars, Rational(0));
  for (std::size_t k = order.size(); k-- > 0;) {
    const std::size_t var = order[k];
    std::optional<Rational> lo, hi;
    for (const auto& r : levels[k]) {
      if (r.a[var] == 0) continue;
      Rational rest = r.b;
      for (std::size_t j = 0; j < num_vars; ++j)
        if (j != var) rest -= r.a[j] * x[j];
      const Rational bound = rest / r.a[var];
      if (r.a[var] > 0) {
        if (!lo || bound > *lo) lo = bound;
      } else if (!hi || bound < *hi) {
        hi = bound;
      }
    }
    if (lo && hi) x[var] = *lo == *hi ? *lo : (*lo + *hi) / 2;
    else if (lo) x[var] = *lo;
    else if (hi) x[var] = *hi;
  }
  for (auto it = pivots.rbegin(); it != pivots.rend(); ++it) {
    Rational rest = it->row.b;
    for (std::size_t j = 0; j < num_vars; ++j)
      if (j != it->var) rest -= it->row.a[j] * x[j];
    x[it->var] = rest / it->row.a[it->var];
  }
  out.feasible = true;
  out.point = std::move(x);
  return out;
}

std::string format_rational(const Rational& r) {
  const auto num = boost::multiprecision::numerator(r);
  const auto den = boost::multiprecision::denominator(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

std::string format_constraint(const Constraint& c, const std::vector<std::string>& names) {
  std::string out;
  for (std::size_t j = 0; j < c.coeffs.size(); ++j) {
    const Rational& a = c.coeffs[j];
    if (a == 0) continue;
    const std::string name = j < names.size() ? names[j] : "x" + std::to_string(j);
    const Rational mag = a < 0 ? Rational(-a) : a;
    if (out.empty()) out += a < 0 ? "-" : "";
    else out += a < 0 ? " - " : " + ";
    if (mag != 1) out += format_rational(mag) + "*";
    out += name;
  }
  if (out.empty()) out = "0";
  out += c.kind == Constraint::Kind::Eq ? " = " : " >= ";
  out += format_rational(c.rhs);
  return out;
}

}  // namespace palogic::linear
