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

#include "palogic/belief.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <utility>

#include "palogic/builtin.hpp"
#include "palogic/error.hpp"

namespace palogic::belief {
namespace {

std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

class ChainAlgebra final : public ValueAlgebra {
 public:
  ChainAlgebra(ChainModel model, std::string name) : model_(std::move(model)), name_(std::move(name)) {
    no_zd_ = true;
    const std::size_t n = model_.size();
    for (std::uint32_t p = 1; p < n; ++p)
      for (std::uint32_t q = 1; q < n; ++q)
        if (model_.h(Element{p}, Element{q}) == model_.zero()) no_zd_ = false;
  }

  std::string name() const override { return name_; }

  Value parse(std::string_view text) const override {
    text = trim(text);
    std::uint32_t r = 0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), r);
    if (ec != std::errc() || ptr != text.data() + text.size() || text.empty() || r >= model_.size())
      throw ParseError("expected a rank below " + std::to_string(model_.size()) + ", got '" +
                       std::string(text) + "'");
    return Element{r};
  }
  std::string format(const Value& v) const override { return std::to_string(std::get<Element>(v).rank); }
  Value zero() const override { return model_.zero(); }
  Value one() const override { return model_.one(); }
  Value h(const Value& a, const Value& b) const override {
    return model_.h(std::get<Element>(a), std::get<Element>(b));
  }
  Value i(const Value& a) const override { return model_.i(std::get<Element>(a)); }
  Relation compare(const Value& a, const Value& b) const override {
    const auto x = std::get<Element>(a).rank, y = std::get<Element>(b).rank;
    return x < y ? Relation::LT : x > y ? Relation::GT : Relation::EQ;
  }
  bool no_zero_divisors() const override { return no_zd_; }
  std::optional<Value> from_real(double x) const override {
    if (model_.size() != 2) return std::nullopt;
    if (x == 0.0) return model_.zero();
    if (x == 1.0) return model_.one();
    return std::nullopt;
  }

 private:
  ChainModel model_;
  std::string name_;
  bool no_zd_;
};

class RealAlgebra final : public ValueAlgebra {
 public:
  explicit RealAlgebra(double tol) : tol_(tol) {
    if (!(tol >= 0)) throw Error("tolerance must be non-negative");
  }

  std::string name() const override { return "real"; }
  Value parse(std::string_view text) const override {
    text = trim(text);
    double x = 0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), x);
    if (ec != std::errc() || ptr != text.data() + text.size() || text.empty())
      throw ParseError("expected a decimal, got '" + std::string(text) + "'");
    if (!(x >= 0.0 && x <= 1.0)) throw ParseError("value outside [0,1]: " + std::string(text));
    return x;
  }
  std::string format(const Value& v) const override {
    char buf[64];
    const auto r = std::to_chars(buf, buf + sizeof buf, std::get<double>(v));
    return std::string(buf, r.ptr);
  }
  Value zero() const override { return 0.0; }
  Value one() const override { return 1.0; }
  Value h(const Value& a, const Value& b) const override { return std::get<double>(a) * std::get<double>(b); }
  Value i(const Value& a) const override { return 1.0 - std::get<double>(a); }
  Relation compare(const Value& a, const Value& b) const override {
    const double x = std::get<double>(a), y = std::get<double>(b);
    if (std::fabs(x - y) <= tol_) return Relation::EQ;
    return x < y ? Relation::LT : Relation::GT;
  }
  bool no_zero_divisors() const override { return true; }
  std::optional<Value> from_real(double x) const override { return x; }

 private:
  double tol_;
};

class EnglishValues final : public ValueAlgebra {
 public:
  explicit EnglishValues(std::shared_ptr<english::EnglishAlgebra> alg) : alg_(std::move(alg)) {}

  std::string name() const override { return "english"; }
  Value parse(std::string_view text) const override {
    try {
      return alg_->reduce(english::parse_term(text));
    } catch (const ParseError&) {
      throw;
    } catch (const Error& e) {
      throw ParseError(e.what());
    }
  }
  std::string format(const Value& v) const override { return english::to_string(std::get<english::Term>(v)); }
  Value zero() const override { return english::Term::zero(); }
  Value one() const override { return english::Term::one(); }
  Value h(const Value& a, const Value& b) const override {
    return alg_->h(std::get<english::Term>(a), std::get<english::Term>(b));
  }
  Value i(const Value& a) const override { return alg_->i(std::get<english::Term>(a)); }
  Relation compare(const Value& a, const Value& b) const override {
    return alg_->compare(std::get<english::Term>(a), std::get<english::Term>(b));
  }
  // A product of nonzero terms never normalizes to 0.
  bool no_zero_divisors() const override { return true; }
  std::optional<Value> from_real(double x) const override {
    if (x == 0.0) return english::Term::zero();
    if (x == 1.0) return english::Term::one();
    return std::nullopt;
  }

 private:
  std::shared_ptr<english::EnglishAlgebra> alg_;
};

// Position just past the parenthesis matching the one at `open`, or npos.
std::size_t match_paren(std::string_view s, std::size_t open) {
  int depth = 0;
  for (std::size_t k = open; k < s.size(); ++k) {
    if (s[k] == '(') ++depth;
    if (s[k] == ')' && --depth == 0) return k + 1;
  }
  return std::string_view::npos;
}

std::string hypothesis_text(const logic::Sentence& s) {
  std::string t = logic::to_string(s);
  return s.kind() == logic::Sentence::Kind::Or ? "(" + t + ")" : t;
}

}  // namespace

std::shared_ptr<ValueAlgebra> make_chain_algebra(ChainModel model, std::string name) {
  return std::make_shared<ChainAlgebra>(std::move(model), std::move(name));
}

std::shared_ptr<ValueAlgebra> make_real_algebra(double tolerance) {
  return std::make_shared<RealAlgebra>(tolerance);
}

std::shared_ptr<ValueAlgebra> make_english_algebra(std::shared_ptr<english::EnglishAlgebra> algebra) {
  if (!algebra) algebra = std::make_shared<english::EnglishAlgebra>();
  return std::make_shared<EnglishValues>(std::move(algebra));
}

std::shared_ptr<ValueAlgebra> make_algebra(std::string_view spec) {
  if (spec == "two") return make_chain_algebra(two_element_model(), "two");
  if (spec == "real") return make_real_algebra();
  if (spec == "english") return make_english_algebra();
  if (spec.starts_with("model:")) {
    const std::string path(spec.substr(6));
    return make_chain_algebra(load_chain_model(path), std::string(spec));
  }
  throw Error("unknown algebra '" + std::string(spec) + "' (expected two, real, english or model:FILE)");
}

std::string to_string(const Conditional& c) {
  return "P(" + hypothesis_text(c.hypothesis) + "|" + logic::to_string(c.evidence) + ")";
}

Conditional parse_conditional(std::string_view text) {
  const std::string_view t = trim(text);
  if (t.size() < 3 || t[0] != 'P' || trim(t.substr(1)).empty()) throw ParseError("expected P(...)");
  const std::size_t open = t.find('(');
  if (open == std::string_view::npos || !trim(t.substr(1, open - 1)).empty())
    throw ParseError("expected P(...), got '" + std::string(t) + "'");
  const std::size_t end = match_paren(t, open);
  if (end == std::string_view::npos || end != t.size())
    throw ParseError("unbalanced parentheses in '" + std::string(t) + "'");
  const std::string_view inner = t.substr(open + 1, end - open - 2);
  int depth = 0;
  std::size_t bar = std::string_view::npos;
  for (std::size_t k = 0; k < inner.size() && bar == std::string_view::npos; ++k) {
    if (inner[k] == '(') ++depth;
    else if (inner[k] == ')') --depth;
    else if (inner[k] == '|' && depth == 0) bar = k;
  }
  if (bar == std::string_view::npos) return {logic::parse_sentence(inner), logic::Sentence::top()};
  return {logic::parse_sentence(inner.substr(0, bar)), logic::parse_sentence(inner.substr(bar + 1))};
}

Operand parse_operand(std::string_view text, const ValueAlgebra& algebra) {
  const std::string_view t = trim(text);
  if (!t.empty() && t[0] == 'P') {
    const auto rest = trim(t.substr(1));
    if (!rest.empty() && rest[0] == '(') return parse_conditional(t);
  }
  return algebra.parse(t);
}

std::vector<Fact> parse_kb(std::string_view text, const ValueAlgebra& algebra) {
  std::vector<Fact> out;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    std::string_view line = text.substr(pos, nl - pos);
    pos = nl + 1;
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    try {
      const std::size_t open = line.find('(');
      if (open == std::string_view::npos) throw ParseError("expected P(...) at start of fact");
      const std::size_t end = match_paren(line, open);
      if (end == std::string_view::npos) throw ParseError("unbalanced parentheses");
      Conditional left = parse_conditional(line.substr(0, end));
      std::string_view rest = trim(line.substr(end));
      std::string op;
      for (const char* cand : {"<=", ">=", "=", "<", ">"}) {
        if (rest.starts_with(cand)) {
          op = cand;
          break;
        }
      }
      if (op.empty()) throw ParseError("expected one of = <= < >= > after the conditional");
      Operand right = parse_operand(rest.substr(op.size()), algebra);
      static const std::pair<const char*, FactRelation> kinds[] = {
          {"=", FactRelation::Eq}, {"<=", FactRelation::Le}, {"<", FactRelation::Lt},
          {">=", FactRelation::Ge}, {">", FactRelation::Gt}};
      FactRelation rel = FactRelation::Eq;
      for (const auto& [name, r] : kinds)
        if (op == name) rel = r;
      out.push_back({std::move(left), rel, std::move(right)});
    } catch (const ParseError& e) {
      if (e.line() != 0) throw;
      throw ParseError(e.what(), line_no);
    } catch (const Error& e) {
      throw ParseError(e.what(), line_no);
    }
  }
  return out;
}

std::string format_fact(const Fact& fact, const ValueAlgebra& algebra) {
  static const char* const ops[] = {"=", "<=", "<", ">=", ">"};
  std::string right = std::holds_alternative<Conditional>(fact.right)
                          ? to_string(std::get<Conditional>(fact.right))
                          : algebra.format(std::get<Value>(fact.right));
  return to_string(fact.left) + " " + ops[static_cast<int>(fact.relation)] + " " + right;
}

// ---------------------------------------------------------------------------

BeliefKB::BeliefKB(std::shared_ptr<const ValueAlgebra> algebra, KbOptions options)
    : algebra_(std::move(algebra)), options_(options) {
  if (!algebra_) throw Error("belief KB needs an algebra");
}

void BeliefKB::add(Fact fact) {
  facts_.push_back(std::move(fact));
  closed_ = false;
}

void BeliefKB::mention(Conditional c) {
  mentions_.push_back(std::move(c));
  closed_ = false;
}

BeliefKB::Key BeliefKB::key_of(const Conditional& c) const {
  const auto e = logic::truth_table(c.evidence, atoms_, options_.atom_cap);
  const auto h = logic::truth_table(c.hypothesis, atoms_, options_.atom_cap);
  return {h & e, e};
}

std::optional<std::size_t> BeliefKB::find_node(const Key& k) const {
  const auto it = index_.find(k);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t BeliefKB::add_node(const Key& k, Conditional display) {
  if (auto f = find_node(k)) return *f;
  nodes_.push_back({k, std::move(display)});
  index_.emplace(k, nodes_.size() - 1);
  return nodes_.size() - 1;
}

std::optional<std::size_t> BeliefKB::find_value(const Value& v) const {
  for (std::size_t k = 0; k < values_.size(); ++k)
    if (algebra_->compare(values_[k], v) == Relation::EQ) return k;
  return std::nullopt;
}

void BeliefKB::grow_matrices() {
  const std::size_t n = nodes_.size() + values_.size();
  if (le_.size() != n) {
    le_.resize(n);
    lt_.resize(n);
  }
}

// Returns the value index; order edges against every earlier value come
// straight from the algebra.
std::size_t BeliefKB::value_node(const Value& v) {
  if (auto f = find_value(v)) return *f;
  const std::size_t idx = values_.size();
  values_.push_back(v);
  value_negation_.push_back(std::nullopt);
  grow_matrices();
  const std::size_t c = nodes_.size();
  std::vector<Relation> row(idx + 1, Relation::EQ);
  for (std::size_t w = 0; w < idx; ++w) {
    const Relation r = algebra_->compare(v, values_[w]);
    row[w] = r;
    value_relation_[w].push_back(converse(r));
    if (entails_le(r)) le_.set(c + idx, c + w);
    if (entails_ge(r)) le_.set(c + w, c + idx);
    if (r == Relation::LT) lt_.set(c + idx, c + w);
    if (r == Relation::GT) lt_.set(c + w, c + idx);
  }
  value_relation_.push_back(std::move(row));
  return idx;
}

std::optional<std::size_t> BeliefKB::value_index_of(std::size_t node) const {
  const std::size_t c = nodes_.size();
  for (std::size_t v = 0; v < values_.size(); ++v)
    if (le_.test(node, c + v) && le_.test(c + v, node)) return v;
  return std::nullopt;
}

bool BeliefKB::link_equal(std::size_t a, std::size_t b) {
  bool changed = le_.set(a, b);
  changed |= le_.set(b, a);
  return changed;
}

void BeliefKB::conflict(std::string what) {
  if (std::find(conflicts_.begin(), conflicts_.end(), what) == conflicts_.end())
    conflicts_.push_back(std::move(what));
}

void BeliefKB::build_universe() {
  nodes_.clear();
  index_.clear();
  auto add = [&](const Conditional& c) { add_node(key_of(c), c); };
  for (const auto& f : facts_) {
    add(f.left);
    if (const auto* rc = std::get_if<Conditional>(&f.right)) add(*rc);
  }
  for (const auto& m : mentions_) add(m);

  const std::size_t cap = options_.max_universe;
  auto full = [&] { return nodes_.size() >= cap; };
  auto negation_close = [&] {
    for (std::size_t k = 0; k < nodes_.size() && !full(); ++k) {
      const Key key = nodes_[k].key;
      if (key.evidence.none()) continue;
      add_node({key.evidence & ~key.conj, key.evidence},
               {~nodes_[k].display.hypothesis, nodes_[k].display.evidence});
    }
  };
  // A sentence whose truth table is exactly the conjunction of a node.
  auto conj_sentence = [&](std::size_t k) {
    const auto& d = nodes_[k].display;
    if (logic::truth_table(d.hypothesis, atoms_, options_.atom_cap) == nodes_[k].key.conj) return d.hypothesis;
    return d.hypothesis & d.evidence;
  };
  negation_close();

  for (std::size_t round = 0; round < options_.combination_depth && !full(); ++round) {
    const std::size_t n0 = nodes_.size();
    std::map<logic::TruthTable, std::vector<std::size_t>> by_evidence;
    for (std::size_t k = 0; k < n0; ++k) by_evidence[nodes_[k].key.evidence].push_back(k);

    // compose: (x|y) and (y|e) give (x|e)
    for (std::size_t b = 0; b < n0 && !full(); ++b) {
      const Key kb = nodes_[b].key;
      if (kb.conj == kb.evidence || kb.conj.none()) continue;
      const auto it = by_evidence.find(kb.conj);
      if (it == by_evidence.end()) continue;
      for (std::size_t a : it->second) {
        if (full()) break;
        const Key ka = nodes_[a].key;
        if (ka.conj == ka.evidence) continue;
        const logic::Sentence ha = nodes_[a].display.hypothesis;
        const logic::Sentence eb = nodes_[b].display.evidence;
        logic::Sentence hyp = ha;
        if (!(logic::truth_table(ha & eb, atoms_, options_.atom_cap) == ka.conj))
          hyp = ha & nodes_[a].display.evidence;
        add_node({ka.conj, kb.evidence}, {hyp, eb});
      }
    }
    // quotient: (x|e) and (y|e) with x < y give (x|y)
    for (const auto& [ev, members] : by_evidence) {
      for (std::size_t a : members) {
        for (std::size_t b : members) {
          if (full()) break;
          const Key ka = nodes_[a].key;
          const Key kb = nodes_[b].key;
          if (a == b || ka.conj == kb.conj || kb.conj.none() || kb.conj == ev) continue;
          if (!ka.conj.subset_of(kb.conj)) continue;
          add_node({ka.conj, kb.conj}, {nodes_[a].display.hypothesis, conj_sentence(b)});
        }
      }
    }
    // mixing: (P|R) brings (P|~R) and (P|TRUE)
    for (std::size_t k = 0; k < n0 && !full(); ++k) {
      const Key key = nodes_[k].key;
      if (key.evidence.none() || (~key.evidence).none()) continue;
      const logic::Sentence p = nodes_[k].display.hypothesis;
      const logic::Sentence r = nodes_[k].display.evidence;
      add(Conditional{p, ~r});
      if (!full()) add(Conditional{p, logic::Sentence::top()});
    }
    negation_close();
    if (nodes_.size() == n0) break;
  }
}

void BeliefKB::close() {
  if (closed_) return;
  // Reset derived state; the closure is recomputed from the facts.
  conflicts_.clear();
  pending_.clear();
  values_.clear();
  value_negation_.clear();
  value_relation_.clear();
  triples_.clear();
  mixes_.clear();

  std::vector<logic::Sentence> sentences;
  auto collect = [&](const Conditional& c) {
    sentences.push_back(c.hypothesis);
    sentences.push_back(c.evidence);
  };
  for (const auto& f : facts_) {
    collect(f.left);
    if (const auto* rc = std::get_if<Conditional>(&f.right)) collect(*rc);
  }
  for (const auto& m : mentions_) collect(m);
  atoms_ = logic::atoms(sentences);
  if (atoms_.size() > options_.atom_cap)
    throw Error("knowledge base mentions " + std::to_string(atoms_.size()) + " atoms; cap is " +
                std::to_string(options_.atom_cap));

  build_universe();
  const std::size_t c = nodes_.size();
  le_ = BitMatrix(c);
  lt_ = BitMatrix(c);
  const std::size_t zero_idx = value_node(algebra_->zero());
  const std::size_t one_idx = value_node(algebra_->one());
  const std::size_t zero_node = c + zero_idx;
  const std::size_t one_node = c + one_idx;

  negation_.assign(c, std::nullopt);
  for (std::size_t k = 0; k < c; ++k) {
    const Key& key = nodes_[k].key;
    if (key.evidence.none()) continue;
    negation_[k] = find_node({key.evidence & ~key.conj, key.evidence});
  }

  std::map<logic::TruthTable, std::vector<std::size_t>> by_conj, by_evidence;
  for (std::size_t k = 0; k < c; ++k) {
    by_conj[nodes_[k].key.conj].push_back(k);
    by_evidence[nodes_[k].key.evidence].push_back(k);
  }
  // Chain triples (x|e) = h((x|y), (y|e)) with x <= y <= e, y strictly between.
  for (std::size_t t = 0; t < c; ++t) {
    const Key& kt = nodes_[t].key;
    if (kt.evidence.none()) continue;
    for (std::size_t a : by_conj[kt.conj]) {
      const Key& ka = nodes_[a].key;
      if (ka.evidence == kt.evidence || ka.evidence == kt.conj) continue;
      if (!ka.evidence.subset_of(kt.evidence)) continue;
      if (auto b = find_node({ka.evidence, kt.evidence})) triples_.push_back({t, a, *b});
    }
  }
  for (std::size_t k = 0; k < c; ++k) {
    const Key& key = nodes_[k].key;
    if (key.evidence.none() || (~key.evidence).none()) continue;
    const auto& d = nodes_[k].display;
    auto g = find_node(key_of({d.hypothesis, ~d.evidence}));
    auto top = find_node(key_of({d.hypothesis, logic::Sentence::top()}));
    if (g && top) mixes_.push_back({k, *g, *top});
  }

  // Static facts.
  for (std::size_t k = 0; k < c; ++k) {
    le_.set(zero_node, k);
    le_.set(k, one_node);
    const Key& key = nodes_[k].key;
    if (key.evidence.none() || key.conj == key.evidence) link_equal(k, one_node);
  }
  for (const auto& tr : triples_) {
    le_.set(tr.whole, tr.first);
    le_.set(tr.whole, tr.second);
  }
  for (const auto& [ev, members] : by_evidence) {
    if (ev.none()) continue;
    for (std::size_t a : members)
      for (std::size_t b : members)
        if (a != b && nodes_[a].key.conj.subset_of(nodes_[b].key.conj)) le_.set(a, b);
  }
  for (const auto& [x, members] : by_conj) {
    for (std::size_t a : members)
      for (std::size_t b : members)
        if (a != b && nodes_[b].key.evidence.subset_of(nodes_[a].key.evidence)) le_.set(a, b);
  }
  for (const auto& f : facts_) {
    const std::size_t l = *find_node(key_of(f.left));
    std::size_t r;
    if (const auto* rc = std::get_if<Conditional>(&f.right)) r = *find_node(key_of(*rc));
    else r = c + value_node(std::get<Value>(f.right));
    switch (f.relation) {
      case FactRelation::Eq: link_equal(l, r); break;
      case FactRelation::Le: le_.set(l, r); break;
      case FactRelation::Lt: lt_.set(l, r); break;
      case FactRelation::Ge: le_.set(r, l); break;
      case FactRelation::Gt: lt_.set(r, l); break;
    }
  }

  const bool split = algebra_->no_zero_divisors();
  std::size_t round = 0;
  for (;; ++round) {
    if (round >= options_.max_rounds) throw Error("belief closure did not reach a fixpoint");
    bool changed = close_order(le_, lt_);

    std::vector<std::optional<std::size_t>> val(c);
    for (std::size_t k = 0; k < c; ++k) val[k] = value_index_of(k);

    // R-NEG, values and order. Every value node has a negation node too.
    const std::size_t values_before = values_.size();
    for (std::size_t v = 0; v < values_before; ++v)
      if (!value_negation_[v]) value_negation_[v] = value_node(algebra_->i(values_[v]));
    for (std::size_t k = 0; k < c; ++k)
      if (negation_[k] && val[k]) {
        const std::size_t u = value_node(algebra_->i(values_[*val[k]]));
        changed |= link_equal(*negation_[k], c + u);
      }
    auto neg_of = [&](std::size_t n) -> std::optional<std::size_t> {
      if (n < c) return negation_[n];
      const auto& nv = value_negation_[n - c];
      if (!nv) return std::nullopt;
      return c + *nv;
    };
    const std::size_t total = c + values_.size();
    for (std::size_t a = 0; a < total; ++a) {
      const auto na = neg_of(a);
      if (!na) continue;
      for (std::size_t b = 0; b < total; ++b) {
        if (a == b || !le_.test(a, b)) continue;
        const auto nb = neg_of(b);
        if (!nb) continue;
        changed |= le_.set(*nb, *na);
        if (lt_.test(a, b)) changed |= lt_.set(*nb, *na);
      }
    }

    // R-CHAIN values and the zero split.
    for (const auto& tr : triples_) {
      if (val[tr.first] && val[tr.second]) {
        const std::size_t u = value_node(algebra_->h(values_[*val[tr.first]], values_[*val[tr.second]]));
        changed |= link_equal(tr.whole, c + u);
      }
      if (!split || !le_.test(tr.whole, zero_node)) continue;
      const bool first_zero = le_.test(tr.first, zero_node);
      const bool second_zero = le_.test(tr.second, zero_node);
      if (first_zero || second_zero) continue;
      if (lt_.test(zero_node, tr.first)) changed |= le_.set(tr.second, zero_node);
      else if (lt_.test(zero_node, tr.second)) changed |= le_.set(tr.first, zero_node);
    }

    // R-MIX.
    for (const auto& m : mixes_) {
      if (le_.test(m.given, m.given_not)) {
        changed |= le_.set(m.given, m.given_top);
        changed |= le_.set(m.given_top, m.given_not);
      }
      if (le_.test(m.given_not, m.given)) {
        changed |= le_.set(m.given_not, m.given_top);
        changed |= le_.set(m.given_top, m.given);
      }
    }
    if (!changed) break;
  }

  if (split) {
    for (const auto& tr : triples_) {
      if (!le_.test(tr.whole, zero_node)) continue;
      const bool open = !le_.test(tr.first, zero_node) && !le_.test(tr.second, zero_node);
      pending_.push_back({nodes_[tr.whole].display, nodes_[tr.first].display, nodes_[tr.second].display, open});
    }
  }

  const std::size_t total = c + values_.size();
  for (std::size_t k = 0; k < total; ++k)
    if (lt_.test(k, k)) {
      conflict(k < c ? "strict cycle through " + to_string(nodes_[k].display)
                     : "strict cycle through value " + algebra_->format(values_[k - c]));
    }
  for (std::size_t v = 0; v < values_.size(); ++v)
    for (std::size_t w = 0; w < values_.size(); ++w) {
      if (v == w) continue;
      const Relation r = value_relation_[v][w];
      if (le_.test(c + v, c + w) && !entails_le(r))
        conflict("derived " + algebra_->format(values_[v]) + " <= " + algebra_->format(values_[w]) +
                 " contradicts the algebra");
      else if (lt_.test(c + v, c + w) && r != Relation::LT)
        conflict("derived " + algebra_->format(values_[v]) + " < " + algebra_->format(values_[w]) +
                 " contradicts the algebra");
    }
  closed_ = true;
}

std::optional<Value> BeliefKB::trivial_value(const Key& k) const {
  if (k.evidence.none() || k.conj == k.evidence) return algebra_->one();
  if (k.conj.none()) return algebra_->zero();
  return std::nullopt;
}

Relation BeliefKB::relation_between(std::size_t a, std::size_t b) const {
  const bool ab = le_.test(a, b), ba = le_.test(b, a);
  if (ab && ba) return Relation::EQ;
  if (lt_.test(a, b)) return Relation::LT;
  if (lt_.test(b, a)) return Relation::GT;
  if (ab) return Relation::LE;
  if (ba) return Relation::GE;
  return Relation::Incomparable;
}

namespace {

// Combines "a <= x" style bounds: what a bound of a over a value says about
// a versus another value.
struct Bounds {
  bool le = false, lt = false, ge = false, gt = false;

  Relation relation() const {
    if (le && ge) return Relation::EQ;
    if (lt) return Relation::LT;
    if (gt) return Relation::GT;
    if (le) return Relation::LE;
    if (ge) return Relation::GE;
    return Relation::Incomparable;
  }
};

}  // namespace

Relation BeliefKB::query(const Conditional& a, const Operand& b) const {
  if (!closed_) throw Error("query needs a closed knowledge base");
  const std::size_t c = nodes_.size();

  // Resolve an operand to a node of the closure where possible.
  auto resolve_cond = [&](const Conditional& q) -> std::variant<std::size_t, Value, std::monostate> {
    for (const auto& s : {q.hypothesis, q.evidence})
      for (const auto& name : logic::atoms(s))
        if (!std::binary_search(atoms_.begin(), atoms_.end(), name)) {
          // An atom the KB never mentions: only trivial conditionals are known.
          std::vector<std::string> extended = atoms_;
          for (const auto& x : logic::atoms(std::vector<logic::Sentence>{q.hypothesis, q.evidence}))
            extended.push_back(x);
          std::sort(extended.begin(), extended.end());
          extended.erase(std::unique(extended.begin(), extended.end()), extended.end());
          const auto e = logic::truth_table(q.evidence, extended, options_.atom_cap);
          const auto h = logic::truth_table(q.hypothesis, extended, options_.atom_cap) & e;
          if (auto t = trivial_value({h, e})) return *t;
          return std::monostate{};
        }
    const Key k = key_of(q);
    if (auto n = find_node(k)) return *n;
    if (auto t = trivial_value(k)) return *t;
    return std::monostate{};
  };
  auto resolve = [&](const Operand& o) -> std::variant<std::size_t, Value, std::monostate> {
    if (const auto* q = std::get_if<Conditional>(&o)) return resolve_cond(*q);
    const Value& v = std::get<Value>(o);
    if (auto f = find_value(v)) return c + *f;
    return v;
  };

  auto ra = resolve_cond(a);
  auto rb = resolve(b);

  auto node_vs_value = [&](std::size_t n, const Value& w) {
    Bounds out;
    for (std::size_t v = 0; v < values_.size(); ++v) {
      const Relation r = algebra_->compare(values_[v], w);
      if (le_.test(n, c + v) && entails_le(r)) {
        out.le = true;
        if (lt_.test(n, c + v) || r == Relation::LT) out.lt = true;
      }
      if (le_.test(c + v, n) && entails_ge(r)) {
        out.ge = true;
        if (lt_.test(c + v, n) || r == Relation::GT) out.gt = true;
      }
    }
    return out.relation();
  };
  // A conditional with nothing known lies between zero and one.
  auto free_vs = [&](const std::variant<std::size_t, Value, std::monostate>& other) {
    Bounds out;
    if (const auto* n = std::get_if<std::size_t>(&other)) {
      out.ge = le_.test(*n, c + 0);  // other <= zero
      out.le = le_.test(c + 1, *n);   // other >= one
    } else if (const auto* w = std::get_if<Value>(&other)) {
      out.ge = algebra_->compare(*w, algebra_->zero()) == Relation::EQ;
      out.le = algebra_->compare(*w, algebra_->one()) == Relation::EQ;
    }
    return out.relation();
  };

  if (std::holds_alternative<std::monostate>(ra)) return free_vs(rb);
  if (std::holds_alternative<std::monostate>(rb)) return converse(free_vs(ra));
  if (const auto* va = std::get_if<Value>(&ra)) {
    if (const auto* vb = std::get_if<Value>(&rb)) return algebra_->compare(*va, *vb);
    if (auto f = find_value(*va)) return relation_between(c + *f, std::get<std::size_t>(rb));
    return converse(node_vs_value(std::get<std::size_t>(rb), *va));
  }
  const std::size_t na = std::get<std::size_t>(ra);
  if (const auto* vb = std::get_if<Value>(&rb)) return node_vs_value(na, *vb);
  return relation_between(na, std::get<std::size_t>(rb));
}

std::optional<Value> BeliefKB::value_of(const Conditional& q) const {
  if (!closed_) throw Error("value_of needs a closed knowledge base");
  for (const auto& name : logic::atoms(std::vector<logic::Sentence>{q.hypothesis, q.evidence}))
    if (!std::binary_search(atoms_.begin(), atoms_.end(), name)) {
      if (query(q, algebra_->one()) == Relation::EQ) return algebra_->one();
      if (query(q, algebra_->zero()) == Relation::EQ) return algebra_->zero();
      return std::nullopt;
    }
  const Key k = key_of(q);
  if (auto n = find_node(k)) {
    if (auto v = value_index_of(*n)) return values_[*v];
    return std::nullopt;
  }
  return trivial_value(k);
}

std::vector<DerivedValue> BeliefKB::derived_values() const {
  std::vector<DerivedValue> out;
  for (std::size_t k = 0; k < nodes_.size(); ++k)
    if (auto v = value_index_of(k)) out.push_back({nodes_[k].display, values_[*v]});
  return out;
}

std::vector<DerivedOrder> BeliefKB::derived_order() const {
  std::vector<DerivedOrder> out;
  for (std::size_t a = 0; a < nodes_.size(); ++a)
    for (std::size_t b = 0; b < nodes_.size(); ++b)
      if (a != b && le_.test(a, b)) out.push_back({nodes_[a].display, nodes_[b].display, lt_.test(a, b)});
  return out;
}

BeliefKB close(BeliefKB kb) {
  kb.close();
  return kb;
}

}  // namespace palogic::belief
