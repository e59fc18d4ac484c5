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

#include "palogic/english.hpp"

#include <algorithm>
#include <cctype>
#include <functional>

#include "palogic/error.hpp"

namespace palogic::english {

Term::Term(Kind kind, std::vector<Term> args)
    : kind_(kind), args_(std::make_shared<const std::vector<Term>>(std::move(args))) {}

std::size_t Term::depth() const {
  std::size_t d = 0;
  for (const Term& a : args()) d = std::max(d, a.depth() + 1);
  if (kind_ == Kind::Product && args().empty()) return 1;
  return d;
}

std::strong_ordering operator<=>(const Term& a, const Term& b) {
  if (a.args_ == b.args_ && a.kind_ == b.kind_) return std::strong_ordering::equal;
  if (auto c = a.kind_ <=> b.kind_; c != 0) return c;
  return std::lexicographical_compare_three_way(a.args().begin(), a.args().end(),
                                                b.args().begin(), b.args().end());
}

// ---------------------------------------------------------------------------
// Normal form

Term normalize(const Term& t) {
  using K = Term::Kind;
  switch (t.kind()) {
    case K::Zero:
    case K::One:
    case K::Likely:
      return t;
    case K::Unlikely:
      return Term::neg(Term::likely());
    case K::Neg: {
      Term a = normalize(t.args()[0]);
      if (a.kind() == K::Neg) return a.args()[0];
      if (a.kind() == K::Zero) return Term::one();
      if (a.kind() == K::One) return Term::zero();
      return Term::neg(std::move(a));
    }
    case K::Residual:
      return Term::residual(normalize(t.args()[0]), normalize(t.args()[1]));
    case K::Product: {
      std::vector<Term> factors;
      for (const Term& f : t.args()) {
        Term g = normalize(f);
        if (g.kind() == K::Zero) return g;
        if (g.kind() == K::One) continue;
        if (g.kind() == K::Product) {
          factors.insert(factors.end(), g.args().begin(), g.args().end());
        } else {
          factors.push_back(std::move(g));
        }
      }
      if (factors.empty()) return Term::one();
      if (factors.size() == 1) return factors.front();
      std::sort(factors.begin(), factors.end());
      return Term::product(std::move(factors));
    }
  }
  return t;
}

bool is_normal(const Term& t) { return redexes(t).empty(); }

// ---------------------------------------------------------------------------
// Single-step rewriting

namespace {

void collect_redexes(const Term& t, std::vector<std::size_t>& path, std::vector<Redex>& out) {
  using K = Term::Kind;
  switch (t.kind()) {
    case K::Unlikely:
      out.push_back({Rule::ExpandUnlikely, path, 0});
      break;
    case K::Neg: {
      const K inner = t.args()[0].kind();
      if (inner == K::Neg) out.push_back({Rule::DoubleNegation, path, 0});
      if (inner == K::Zero || inner == K::One) out.push_back({Rule::NegateConstant, path, 0});
      break;
    }
    case K::Product: {
      const auto& fs = t.args();
      if (fs.size() < 2) out.push_back({Rule::CollapseProduct, path, 0});
      for (std::size_t k = 0; k < fs.size(); ++k) {
        if (fs[k].kind() == K::Product) out.push_back({Rule::Flatten, path, k});
        if (fs[k].kind() == K::One) out.push_back({Rule::DropOne, path, k});
        if (fs[k].kind() == K::Zero) out.push_back({Rule::AbsorbZero, path, k});
        if (k + 1 < fs.size() && fs[k + 1] < fs[k]) out.push_back({Rule::SwapFactors, path, k});
      }
      break;
    }
    default:
      break;
  }
  for (std::size_t k = 0; k < t.args().size(); ++k) {
    path.push_back(k);
    collect_redexes(t.args()[k], path, out);
    path.pop_back();
  }
}

Term rebuild(const Term& t, std::vector<Term> args) {
  using K = Term::Kind;
  switch (t.kind()) {
    case K::Neg: return Term::neg(std::move(args[0]));
    case K::Residual: return Term::residual(std::move(args[0]), std::move(args[1]));
    case K::Product: return Term::product(std::move(args));
    default: return t;
  }
}

Term rewrite_here(const Term& t, const Redex& r) {
  using K = Term::Kind;
  const auto& fs = t.args();
  switch (r.rule) {
    case Rule::ExpandUnlikely:
      return Term::neg(Term::likely());
    case Rule::DoubleNegation:
      return fs[0].args()[0];
    case Rule::NegateConstant:
      return fs[0].kind() == K::Zero ? Term::one() : Term::zero();
    case Rule::CollapseProduct:
      return fs.empty() ? Term::one() : fs[0];
    case Rule::Flatten: {
      std::vector<Term> out(fs.begin(), fs.begin() + static_cast<std::ptrdiff_t>(r.index));
      out.insert(out.end(), fs[r.index].args().begin(), fs[r.index].args().end());
      out.insert(out.end(), fs.begin() + static_cast<std::ptrdiff_t>(r.index) + 1, fs.end());
      return Term::product(std::move(out));
    }
    case Rule::DropOne: {
      std::vector<Term> out = fs;
      out.erase(out.begin() + static_cast<std::ptrdiff_t>(r.index));
      return Term::product(std::move(out));
    }
    case Rule::AbsorbZero:
      return Term::zero();
    case Rule::SwapFactors: {
      std::vector<Term> out = fs;
      std::swap(out[r.index], out[r.index + 1]);
      return Term::product(std::move(out));
    }
  }
  return t;
}

Term apply_at(const Term& t, const Redex& r, std::size_t depth) {
  if (depth == r.path.size()) return rewrite_here(t, r);
  std::vector<Term> args = t.args();
  args[r.path[depth]] = apply_at(args[r.path[depth]], r, depth + 1);
  return rebuild(t, std::move(args));
}

}  // namespace

std::vector<Redex> redexes(const Term& t) {
  std::vector<Redex> out;
  std::vector<std::size_t> path;
  collect_redexes(t, path, out);
  return out;
}

Term apply(const Term& t, const Redex& redex) { return apply_at(t, redex, 0); }

// ---------------------------------------------------------------------------
// Printing and parsing

namespace {

void print(const Term& t, std::string& out) {
  using K = Term::Kind;
  switch (t.kind()) {
    case K::Zero: out += '0'; return;
    case K::One: out += '1'; return;
    case K::Likely: out += "LIKELY"; return;
    case K::Unlikely: out += "UNLIKELY"; return;
    case K::Neg:
      if (t.args()[0].kind() == K::Likely) {
        out += "UNLIKELY";
        return;
      }
      out += "i(";
      print(t.args()[0], out);
      out += ')';
      return;
    case K::Residual:
      out += "s(";
      print(t.args()[0], out);
      out += ',';
      print(t.args()[1], out);
      out += ')';
      return;
    case K::Product:
      if (t.args().empty()) {
        out += '1';
        return;
      }
      if (t.args().size() == 1) {
        out += '(';
        print(t.args()[0], out);
        out += ')';
        return;
      }
      for (std::size_t k = 0; k < t.args().size(); ++k) {
        if (k) out += '*';
        const Term& f = t.args()[k];
        if (f.kind() == K::Product) {
          out += '(';
          print(f, out);
          out += ')';
        } else {
          print(f, out);
        }
      }
      return;
  }
}

class TermParser {
 public:
  explicit TermParser(std::string_view s) : s_(s) {}

  Term parse() {
    Term t = expr();
    skip();
    if (pos_ != s_.size()) error("unexpected trailing input");
    return t;
  }

 private:
  [[noreturn]] void error(const std::string& what) const {
    throw ParseError("term: " + what + " at column " + std::to_string(pos_ + 1));
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!eat(c)) error(std::string("expected '") + c + "'");
  }
  bool keyword(std::string_view kw) {
    skip();
    if (s_.substr(pos_, kw.size()) != kw) return false;
    const std::size_t end = pos_ + kw.size();
    if (end < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[end])) || s_[end] == '_'))
      return false;
    pos_ = end;
    return true;
  }

  Term expr() {
    std::vector<Term> fs{factor()};
    while (eat('*')) fs.push_back(factor());
    if (fs.size() == 1) return fs.front();
    return Term::product(std::move(fs));
  }

  Term factor() {
    skip();
    if (keyword("LIKELY")) return Term::likely();
    if (keyword("UNLIKELY")) return Term::unlikely();
    if (eat('0')) return Term::zero();
    if (eat('1')) return Term::one();
    if (eat('(')) {
      Term t = expr();
      expect(')');
      return t;
    }
    if (keyword("i")) {
      expect('(');
      Term t = expr();
      expect(')');
      return Term::neg(std::move(t));
    }
    if (keyword("s")) {
      expect('(');
      Term p = expr();
      expect(',');
      Term q = expr();
      expect(')');
      return Term::residual(std::move(p), std::move(q));
    }
    error("expected a term");
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

std::string to_string(const Term& t) {
  std::string out;
  print(t, out);
  return out;
}

Term parse_term(std::string_view text) { return TermParser(text).parse(); }

// ---------------------------------------------------------------------------
// EnglishAlgebra

namespace {

/// Factor multiset of a normalized term: products contribute their factors,
/// one contributes nothing, anything else is a single factor.
std::vector<Term> factors_of(const Term& t) {
  if (t.kind() == Term::Kind::Product) return t.args();
  if (t.kind() == Term::Kind::One) return {};
  return {t};
}

/// Removes `sub` from the sorted multiset `from`; false if not contained.
bool remove_submultiset(std::vector<Term>& from, const std::vector<Term>& sub) {
  std::vector<Term> rest;
  std::size_t j = 0;
  for (std::size_t k = 0; k < from.size(); ++k) {
    if (j < sub.size() && from[k] == sub[j]) {
      ++j;
    } else {
      rest.push_back(from[k]);
    }
  }
  if (j != sub.size()) return false;
  from = std::move(rest);
  return true;
}

}  // namespace

EnglishAlgebra::EnglishAlgebra(std::size_t depth_bound) : depth_bound_(depth_bound) {}

Term EnglishAlgebra::reduce(const Term& t) const {
  std::lock_guard lock(mu_);
  return reduce_locked(t);
}

Term EnglishAlgebra::reduce_locked(const Term& t) const {
  using K = Term::Kind;
  Term cur = normalize(t);
  // Reduce arguments first.
  if (cur.kind() == K::Neg) {
    cur = normalize(Term::neg(reduce_locked(cur.args()[0])));
  } else if (cur.kind() == K::Residual) {
    cur = Term::residual(reduce_locked(cur.args()[0]), reduce_locked(cur.args()[1]));
  } else if (cur.kind() == K::Product) {
    std::vector<Term> fs;
    for (const Term& f : cur.args()) fs.push_back(reduce_locked(f));
    cur = normalize(Term::product(std::move(fs)));
  }
  // Cancel q * s(p,q) -> p. Each step removes one residual symbol and only
  // introduces residuals registered earlier, so this terminates.
  bool changed = true;
  while (changed) {
    changed = false;
    std::vector<Term> fs = factors_of(cur);
    for (const ResidualDef& def : residuals_) {
      std::vector<Term> work = fs;
      if (!remove_submultiset(work, {def.s})) continue;
      if (!remove_submultiset(work, factors_of(def.q))) continue;
      const std::vector<Term> pf = factors_of(def.p);
      work.insert(work.end(), pf.begin(), pf.end());
      cur = normalize(Term::product(std::move(work)));
      changed = true;
      break;
    }
  }
  return cur;
}

Term EnglishAlgebra::h(const Term& a, const Term& b) const { return reduce(Term::product({a, b})); }

Term EnglishAlgebra::i(const Term& a) const { return reduce(Term::neg(a)); }

void EnglishAlgebra::mention(const Term& t) {
  std::lock_guard lock(mu_);
  mention_locked(t);
}

void EnglishAlgebra::mention_locked(const Term& t) {
  const Term r = reduce_locked(t);
  if (std::find(mentioned_.begin(), mentioned_.end(), r) != mentioned_.end()) return;
  mentioned_.push_back(r);
  dirty_ = true;
}

std::size_t EnglishAlgebra::index_of(const Term& t) const { return index_.at(t); }

void EnglishAlgebra::ensure_closed() {
  if (!dirty_) return;
  dirty_ = false;
  universe_.clear();
  index_.clear();

  auto add = [&](const Term& t) {
    if (index_.emplace(t, universe_.size()).second) {
      universe_.push_back(t);
      return true;
    }
    return false;
  };
  const Term zero = Term::zero(), one = Term::one(), likely = Term::likely();
  const Term unlikely = Term::neg(likely);

  // Base universe: constants, mentioned terms, their subterms, residual
  // definitions, closed under i.
  std::function<void(const Term&)> add_with_subterms = [&](const Term& t) {
    add(t);
    for (const Term& a : t.args()) add_with_subterms(reduce_locked(a));
  };
  for (const Term& t : {zero, one, likely, unlikely}) add(t);
  for (const Term& t : mentioned_) add_with_subterms(t);
  for (const ResidualDef& d : residuals_) {
    add_with_subterms(d.p);
    add_with_subterms(d.q);
    add(d.s);
  }
  for (std::size_t k = 0; k < universe_.size(); ++k) add(reduce_locked(Term::neg(universe_[k])));

  // One product-depth of combinations.
  const std::size_t base = universe_.size();
  for (std::size_t a = 0; a < base; ++a)
    for (std::size_t b = a; b < base; ++b) {
      Term p = reduce_locked(Term::product({universe_[a], universe_[b]}));
      if (p.depth() > depth_bound_) continue;
      add(p);
      Term np = reduce_locked(Term::neg(p));
      if (np.depth() <= depth_bound_) add(np);
    }

  const std::size_t n = universe_.size();
  le_ = BitMatrix(n);
  lt_ = BitMatrix(n);
  const std::size_t iz = index_.at(zero), io = index_.at(one);
  const std::size_t il = index_.at(likely), iu = index_.at(unlikely);
  // R1 and R5.
  lt_.set(iz, iu);
  lt_.set(iu, il);
  lt_.set(il, io);
  for (std::size_t k = 0; k < n; ++k) {
    le_.set(iz, k);
    le_.set(k, io);
  }
  // Residual definitions: p = q * s <= s.
  for (const ResidualDef& d : residuals_) le_.set(index_.at(d.p), index_.at(d.s));

  std::vector<std::optional<std::size_t>> neg(n);
  for (std::size_t k = 0; k < n; ++k) {
    auto it = index_.find(reduce_locked(Term::neg(universe_[k])));
    if (it != index_.end()) neg[k] = it->second;
  }
  std::vector<std::vector<std::size_t>> fidx(n);
  std::vector<bool> skip(n, false);
  for (std::size_t k = 0; k < n; ++k) {
    for (const Term& f : factors_of(universe_[k])) {
      auto it = index_.find(f);
      if (it == index_.end()) {
        skip[k] = true;  // a factor outside the universe; R2 cannot see it
        break;
      }
      fidx[k].push_back(it->second);
    }
  }

  // Kuhn matching: can every factor of y be assigned a distinct factor of x
  // lying below it?
  auto factors_dominated = [&](std::size_t x, std::size_t y) {
    const auto& xs = fidx[x];
    const auto& ys = fidx[y];
    if (ys.size() > xs.size()) return false;
    std::vector<int> owner(xs.size(), -1);
    std::function<bool(std::size_t, std::vector<bool>&)> augment =
        [&](std::size_t j, std::vector<bool>& seen) {
          for (std::size_t k = 0; k < xs.size(); ++k) {
            if (seen[k] || !le_.test(xs[k], ys[j])) continue;
            seen[k] = true;
            if (owner[k] < 0 || augment(static_cast<std::size_t>(owner[k]), seen)) {
              owner[k] = static_cast<int>(j);
              return true;
            }
          }
          return false;
        };
    for (std::size_t j = 0; j < ys.size(); ++j) {
      std::vector<bool> seen(xs.size(), false);
      if (!augment(j, seen)) return false;
    }
    return true;
  };

  bool changed = true;
  while (changed) {
    changed = close_order(le_, lt_);
    // R2/R6
    for (std::size_t x = 0; x < n; ++x) {
      if (skip[x]) continue;
      for (std::size_t y = 0; y < n; ++y) {
        if (x == y || skip[y] || le_.test(x, y)) continue;
        if (fidx[x].size() < 2 && fidx[y].size() < 2) continue;  // atoms: nothing new
        if (factors_dominated(x, y)) changed |= le_.set(x, y);
      }
    }
    // R3
    for (std::size_t a = 0; a < n; ++a) {
      if (!neg[a]) continue;
      for (std::size_t b = 0; b < n; ++b) {
        if (!neg[b]) continue;
        if (le_.test(a, b)) changed |= le_.set(*neg[b], *neg[a]);
        if (lt_.test(a, b)) changed |= lt_.set(*neg[b], *neg[a]);
      }
    }
  }
  consistent_ = true;
  for (std::size_t k = 0; k < n; ++k)
    if (lt_.test(k, k)) consistent_ = false;
}

Relation EnglishAlgebra::relation_locked(std::size_t a, std::size_t b) const {
  if (a == b) return Relation::EQ;
  const bool ab = le_.test(a, b), ba = le_.test(b, a);
  if (ab && ba) return Relation::EQ;
  if (lt_.test(a, b)) return Relation::LT;
  if (lt_.test(b, a)) return Relation::GT;
  if (ab) return Relation::LE;
  if (ba) return Relation::GE;
  return Relation::Incomparable;
}

Relation EnglishAlgebra::compare(const Term& a, const Term& b) {
  std::lock_guard lock(mu_);
  const Term ra = reduce_locked(a), rb = reduce_locked(b);
  if (ra == rb) return Relation::EQ;
  mention_locked(ra);
  mention_locked(rb);
  ensure_closed();
  return relation_locked(index_of(ra), index_of(rb));
}

ResidualResult EnglishAlgebra::residual(const Term& p, const Term& q) {
  std::lock_guard lock(mu_);
  const Term rp = reduce_locked(p), rq = reduce_locked(q);
  mention_locked(rp);
  mention_locked(rq);
  ensure_closed();
  if (rp != rq && !entails_le(relation_locked(index_of(rp), index_of(rq))))
    throw Error("residual: " + to_string(rp) + " <= " + to_string(rq) + " is not derivable");
  for (const Term& r : universe_)
    if (reduce_locked(Term::product({rq, r})) == rp) return {r, false};
  Term s = Term::residual(rp, rq);
  residuals_.push_back({rp, rq, s});
  mention_locked(s);
  dirty_ = true;
  return {s, true};
}

std::vector<Term> EnglishAlgebra::universe() {
  std::lock_guard lock(mu_);
  ensure_closed();
  return universe_;
}

std::optional<std::pair<Term, Term>> EnglishAlgebra::first_incomparable_pair() {
  std::lock_guard lock(mu_);
  ensure_closed();
  for (std::size_t a = 0; a < universe_.size(); ++a)
    for (std::size_t b = a + 1; b < universe_.size(); ++b)
      if (relation_locked(a, b) == Relation::Incomparable)
        return std::make_pair(universe_[a], universe_[b]);
  return std::nullopt;
}

bool EnglishAlgebra::consistent() {
  std::lock_guard lock(mu_);
  ensure_closed();
  return consistent_;
}

}  // namespace palogic::english
