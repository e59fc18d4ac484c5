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

#include "palogic/witness.hpp"

#include <algorithm>

#include "palogic/error.hpp"

namespace palogic::belief {
namespace {

using logic::Sentence;

bool bit(std::size_t r, int k) { return (r >> k) & 1u; }

// Replaces a degenerate branch probability by 1/2 so that every branch of
// a later layer carries mass.
double open(double x) { return x > 0.0 && x < 1.0 ? x : 0.5; }

std::vector<double> sequential(double a, double b, double c) {
  std::vector<double> cell(8);
  for (std::size_t r = 0; r < 8; ++r) {
    const bool A = bit(r, 0), B = bit(r, 1), C = bit(r, 2);
    const double pa = A ? a : 1 - a;
    const double pb = A ? (B ? b : 1 - b) : 0.5;
    const double pc = A && B ? (C ? c : 1 - c) : 0.5;
    cell[r] = pa * pb * pc;
  }
  return cell;
}

std::vector<double> independent(double a, double b) {
  std::vector<double> cell(4);
  for (std::size_t r = 0; r < 4; ++r) cell[r] = (bit(r, 0) ? a : 1 - a) * (bit(r, 1) ? b : 1 - b);
  return cell;
}

std::vector<double> marginal(double a, double b) {
  // cells: ~A~B, A~B, ~AB, AB
  return {(1 - a) / 2, a - b, (1 - a) / 2, b};
}

// Later layers matter only while some cell is still unreached.
std::vector<std::vector<double>> prune(std::vector<std::vector<double>> layers) {
  std::vector<std::vector<double>> out;
  for (auto& l : layers) {
    if (!out.empty() && out.back() == l) continue;
    out.push_back(std::move(l));
    if (std::all_of(out.back().begin(), out.back().end(), [](double x) { return x > 0; })) break;
  }
  return out;
}

// Point masses on the listed worlds first, then every other world in index order.
std::vector<std::vector<double>> ranking(std::size_t cells, const std::vector<std::size_t>& first) {
  std::vector<std::size_t> order;
  for (std::size_t w : first)
    if (std::find(order.begin(), order.end(), w) == order.end()) order.push_back(w);
  for (std::size_t w = 0; w < cells; ++w)
    if (std::find(order.begin(), order.end(), w) == order.end()) order.push_back(w);
  std::vector<std::vector<double>> layers;
  for (std::size_t w : order) {
    std::vector<double> l(cells, 0.0);
    l[w] = 1.0;
    layers.push_back(std::move(l));
  }
  return layers;
}

std::size_t world(std::initializer_list<bool> values) {
  std::size_t r = 0, k = 0;
  for (bool v : values) r |= std::size_t{v} << k++;
  return r;
}

}  // namespace

double Witness::conditional(const Sentence& hypothesis, const Sentence& evidence) const {
  const auto e = logic::truth_table(evidence, atoms);
  const auto he = logic::truth_table(hypothesis, atoms) & e;
  for (const auto& layer : layers) {
    double me = 0, mhe = 0;
    for (std::size_t r = 0; r < layer.size(); ++r) {
      if (e.get(r)) me += layer[r];
      if (he.get(r)) mhe += layer[r];
    }
    if (me > 0) return mhe / me;
  }
  return 1.0;
}

std::vector<Conditional> Witness::target_conditionals() const {
  const Sentence A = Sentence::atom("A"), B = Sentence::atom("B"), T = Sentence::top();
  switch (axiom) {
    case 10: return {{A, T}, {B, A}, {Sentence::atom("C"), A & B}};
    case 11: return {{A, B}, {A, ~B}, {B, A}, {B, ~A}};
    default: return {{A, T}, {A & B, T}};
  }
}

std::optional<Witness> richness_witness(int axiom, const std::vector<double>& targets,
                                        const ValueAlgebra& algebra) {
  const std::size_t arity = axiom == 10 ? 3 : axiom == 11 || axiom == 12 ? 2 : 0;
  if (arity == 0) throw Error("richness witnesses exist for axioms 10, 11 and 12 only");
  if (targets.size() != arity)
    throw Error("axiom " + std::to_string(axiom) + " takes " + std::to_string(arity) + " targets");
  for (double t : targets)
    if (!(t >= 0.0 && t <= 1.0)) throw Error("targets must lie in [0,1]");
  if (axiom == 12 && targets[1] > targets[0]) throw Error("axiom 12 needs b <= a");

  Witness w;
  w.axiom = axiom;
  w.targets = targets;
  w.atoms = arity == 3 ? std::vector<std::string>{"A", "B", "C"} : std::vector<std::string>{"A", "B"};
  const double a = targets[0], b = targets[1], c = arity == 3 ? targets[2] : 0.0;

  // Two-valued chains are the only others that map 0 and 1 but not 1/2.
  const bool boolean = algebra.name() != "english" && algebra.from_real(0.0) && !algebra.from_real(0.5);
  if (algebra.name() == "real") {
    if (axiom == 10)
      w.layers = prune({sequential(a, b, c), sequential(open(a), b, c), sequential(open(a), open(b), c),
                        sequential(open(a), open(b), open(c))});
    else if (axiom == 11)
      w.layers = prune({independent(a, b), independent(open(a), b), independent(a, open(b)),
                        independent(open(a), open(b))});
    else
      w.layers = prune({marginal(a, b), independent(open(a), open(a > 0 ? b / a : 0.5))});
    return w;
  }
  if (!boolean) return std::nullopt;
  for (double t : targets)
    if (t != 0.0 && t != 1.0) throw Error("targets for the two-element algebra must be 0 or 1");
  const bool A = a == 1.0, B = b == 1.0, C = c == 1.0;
  if (axiom == 10)
    w.layers = ranking(8, {world({A, B, C}), world({true, B, C}), world({true, true, C})});
  else if (axiom == 11)
    w.layers = ranking(4, {world({A, B}), world({A, !B}), world({!A, B}), world({!A, !B})});
  else
    w.layers = ranking(4, {world({A, B})});
  return w;
}

WitnessCheck verify_witness(const Witness& w, std::shared_ptr<const ValueAlgebra> algebra) {
  WitnessCheck out;
  const Sentence A = Sentence::atom("A"), B = Sentence::atom("B"), C = Sentence::atom("C");
  const Sentence T = Sentence::top();
  auto value = [&](double x) -> Value {
    auto v = algebra->from_real(x);
    if (!v) throw Error("witness value " + std::to_string(x) + " is not in the algebra");
    return *v;
  };
  auto fact = [&](Conditional c) {
    out.facts.push_back({c, FactRelation::Eq, value(w.conditional(c.hypothesis, c.evidence))});
  };

  // What close() must reach: the targets, plus one consequence of them.
  std::vector<Conditional> goals = w.target_conditionals();
  std::vector<double> expected = w.targets;
  if (w.axiom == 11) expected = {w.targets[0], w.targets[0], w.targets[1], w.targets[1]};
  if (w.axiom == 10) {
    fact({~A, T});
    fact({~B, A});
    fact({~C, A & B});
    goals.push_back({A & B & C, T});
  } else if (w.axiom == 11) {
    fact({~A, B});
    fact({~A, ~B});
    fact({~B, A});
    fact({~B, ~A});
    goals.push_back({A, T});
  } else {
    fact({~A, T});
    fact({B, A});
  }
  for (std::size_t k = expected.size(); k < goals.size(); ++k)
    expected.push_back(w.conditional(goals[k].hypothesis, goals[k].evidence));

  BeliefKB kb(algebra);
  for (const auto& f : out.facts) kb.add(f);
  for (const auto& g : goals) kb.mention(g);
  kb.close();
  out.ok = kb.consistent();
  if (!out.ok) out.detail = "knowledge base from the witness is inconsistent";
  for (std::size_t k = 0; k < goals.size(); ++k) {
    out.derived.push_back(kb.value_of(goals[k]));
    const Value target = value(expected[k]);
    const auto& got = out.derived.back();
    if (!got || algebra->compare(*got, target) != Relation::EQ) {
      if (out.ok)
        out.detail = to_string(goals[k]) + ": expected " + algebra->format(target) + ", derived " +
                     (got ? algebra->format(*got) : std::string("nothing"));
      out.ok = false;
    }
  }
  return out;
}

}  // namespace palogic::belief
