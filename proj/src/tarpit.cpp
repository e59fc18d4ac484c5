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

#include "palogic/tarpit.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace palogic {

using linear::Constraint;
using linear::Rational;

ArchimedeanResult is_archimedean(const ChainModel& model) {
  const std::size_t n = model.size();
  ArchimedeanResult out;
  for (std::uint32_t p = 0; p + 1 < n; ++p) {
    for (std::uint32_t q = 1; q < n; ++q) {
      std::set<std::uint32_t> seen;
      Element x{p};
      bool below = false;
      while (seen.insert(x.rank).second) {
        if (x.rank < q) {
          below = true;
          break;
        }
        x = model.h(x, Element{p});
      }
      if (!below) {
        out.archimedean = false;
        out.witness = {Element{p}, Element{q}};
        return out;
      }
    }
  }
  return out;
}

bool is_archimedean_by_idempotents(const ChainModel& model) {
  for (std::uint32_t p = 1; p + 1 < model.size(); ++p)
    if (model.h(Element{p}, Element{p}) == Element{p}) return false;
  return true;
}

TotalityResult is_totally_ordered(const ChainModel& model) {
  TotalityResult out;
  for (std::uint32_t p = 0; p < model.size(); ++p)
    for (std::uint32_t q = p + 1; q < model.size(); ++q)
      if (model.le(Element{p}, Element{q}) != Tri::True && model.le(Element{q}, Element{p}) != Tri::True) {
        out.total = false;
        out.witness = {std::to_string(p), std::to_string(q)};
        return out;
      }
  return out;
}

TotalityResult is_totally_ordered(const RealInterval&) { return {}; }

TotalityResult is_totally_ordered(english::EnglishAlgebra& algebra) {
  TotalityResult out;
  if (auto pair = algebra.first_incomparable_pair()) {
    out.total = false;
    out.witness = {english::to_string(pair->first), english::to_string(pair->second)};
  }
  return out;
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Embedded: return "embedded";
    case Verdict::RefutedNotTotal: return "refuted-not-total";
    case Verdict::RefutedNonArchimedean: return "refuted-non-archimedean";
    case Verdict::Infeasible: return "infeasible";
  }
  return "?";
}

namespace {

// The rescaling t with exp(-t a) + exp(-t b) = 1; the left side falls from 2
// to 0 as t grows.
double negation_scale(double a, double b) {
  double lo = 0, hi = 1;
  auto g = [&](double t) { return std::exp(-t * a) + std::exp(-t * b) - 1; };
  while (g(hi) > 0) hi *= 2;
  for (int k = 0; k < 200; ++k) {
    const double mid = (lo + hi) / 2;
    (g(mid) > 0 ? lo : hi) = mid;
  }
  return (lo + hi) / 2;
}

}  // namespace

EmbeddingResult embed(const ChainModel& model) {
  EmbeddingResult out;
  const std::size_t n = model.size();
  const std::uint32_t top = static_cast<std::uint32_t>(n - 1);

  // Variables are the inner ranks 1..n-2.
  const std::size_t vars = n - 2;
  std::vector<std::string> names;
  for (std::size_t r = 1; r + 1 < n; ++r) names.push_back("x" + std::to_string(r));
  auto coeff = [&](std::vector<Rational>& a, std::uint32_t rank, int c) {
    if (rank != 0 && rank != top) a[rank - 1] += c;
  };
  bool zero_divisor = false;
  for (std::uint32_t p = 1; p < n; ++p)
    for (std::uint32_t q = p; q < n; ++q) {
      const Element r = model.h(Element{p}, Element{q});
      if (r == model.zero()) {
        zero_divisor = true;
        continue;
      }
      Constraint c{std::vector<Rational>(vars), Constraint::Kind::Eq, 0, ""};
      coeff(c.coeffs, r.rank, 1);
      coeff(c.coeffs, p, -1);
      coeff(c.coeffs, q, -1);
      if (std::all_of(c.coeffs.begin(), c.coeffs.end(), [](const Rational& x) { return x == 0; })) continue;
      c.label = "h(" + std::to_string(p) + "," + std::to_string(q) + ")=" + std::to_string(r.rank);
      out.constraints.push_back(std::move(c));
    }
  for (std::size_t r = 1; r + 1 < n; ++r) {
    Constraint c{std::vector<Rational>(vars), Constraint::Kind::Ge, 1, ""};
    c.coeffs[r - 1] = 1;
    if (r + 2 < n) {
      c.coeffs[r] = -1;
      c.label = std::to_string(r) + "<" + std::to_string(r + 1);
    } else {
      c.label = std::to_string(r) + "<one";
    }
    out.constraints.push_back(std::move(c));
  }
  if (zero_divisor) out.notes.push_back("a product of nonzero elements is zero; log space has no image for it");

  const auto sol = linear::solve(vars, out.constraints);
  out.lp_feasible = sol.feasible && !zero_divisor;
  out.log_value.assign(n, std::nullopt);
  out.log_value[top] = Rational(0);
  if (sol.feasible) {
    for (std::size_t r = 1; r + 1 < n; ++r) out.log_value[r] = sol.point[r - 1];
  } else {
    for (std::size_t k : sol.contradiction)
      out.contradiction.push_back(out.constraints[k].label + ": " +
                                  linear::format_constraint(out.constraints[k], names));
  }

  const auto total = is_totally_ordered(model);
  const auto arch = is_archimedean(model);
  out.archimedean_witness = arch.witness;
  if (!total.total) out.verdict = Verdict::RefutedNotTotal;
  else if (!arch.archimedean) out.verdict = Verdict::RefutedNonArchimedean;
  else if (out.lp_feasible) out.verdict = Verdict::Embedded;
  else out.verdict = Verdict::Infeasible;
  if (out.verdict == Verdict::Infeasible)
    out.notes.push_back("total and archimedean, yet no strictly order-preserving multiplicative embedding exists");

  if (out.lp_feasible) {
    std::vector<double> x(n, 0.0);
    for (std::size_t r = 1; r + 1 < n; ++r) x[r] = out.log_value[r]->convert_to<double>();
    if (n <= 2) {
      out.i_compatible = true;
    } else {
      const std::uint32_t p = 1, ip = model.i(Element{p}).rank;
      bool ok = ip != 0 && ip != top;
      if (ok) {
        out.i_scale = negation_scale(x[p], x[ip]);
        for (std::uint32_t k = 1; k < top && ok; ++k) {
          const std::uint32_t ik = model.i(Element{k}).rank;
          const double vk = std::exp(-out.i_scale * x[k]);
          const double vik = ik == 0 ? 0.0 : ik == top ? 1.0 : std::exp(-out.i_scale * x[ik]);
          ok = std::fabs(vik - (1 - vk)) <= 1e-9;
        }
      }
      out.i_compatible = ok;
    }
  }
  return out;
}

bool value_less(const EmbeddingResult& e, Element a, Element b) {
  const auto& xa = e.log_value.at(a.rank);
  const auto& xb = e.log_value.at(b.rank);
  if (!xb) return false;  // nothing is below zero
  if (!xa) return true;
  return *xa > *xb;
}

std::optional<std::string> verify_embedding(const ChainModel& model, const EmbeddingResult& e) {
  const std::size_t n = model.size();
  if (e.log_value.size() != n) return "value table has the wrong size";
  if (e.log_value[0]) return "zero must map to 0";
  if (!e.log_value[n - 1] || *e.log_value[n - 1] != 0) return "one must map to 1";
  for (std::uint32_t r = 1; r + 1 < n; ++r)
    if (!e.log_value[r] || *e.log_value[r] <= 0) return "inner element " + std::to_string(r) + " not in (0,1)";
  for (std::uint32_t p = 0; p < n; ++p)
    for (std::uint32_t q = 0; q < n; ++q) {
      if ((p < q) != value_less(e, Element{p}, Element{q}))
        return "order not preserved at (" + std::to_string(p) + "," + std::to_string(q) + ")";
      if (p == 0 || q == 0) continue;
      const Element r = model.h(Element{p}, Element{q});
      if (r == model.zero()) return "zero product of " + std::to_string(p) + " and " + std::to_string(q);
      if (*e.log_value[r.rank] != *e.log_value[p] + *e.log_value[q])
        return "h(" + std::to_string(p) + "," + std::to_string(q) + ") is not multiplicative";
    }
  return std::nullopt;
}

}  // namespace palogic
