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

#include "palogic/enumerate.hpp"

#include <algorithm>
#include <atomic>
#include <optional>
#include <thread>
#include <utility>

namespace palogic {

namespace {

constexpr int kUnset = -1;

// Depth-first search over h tables. Cells with p <= q are filled by decreasing
// p (then decreasing q) and mirrored when L10 is in force, so that identity
// rows and larger rows are known when a cell is chosen.
class TableSearch {
 public:
  TableSearch(std::size_t n, const LawSet& laws) : n_(n), laws_(laws), table_(n * n, kUnset) {
    monotone_ = laws.contains(Law::L2);
    bounded_ = laws.contains(Law::L11);
    no_zero_divisors_ = laws.contains(Law::L6);
    associative_ = laws.contains(Law::L9);
    commutative_ = laws.contains(Law::L10);
    const int top = static_cast<int>(n - 1);
    if (laws.contains(Law::L5))
      for (int k = 0; k <= top; ++k) set(0, k, 0), set(k, 0, 0);
    if (laws.contains(Law::L4))
      for (int k = 0; k <= top; ++k) set(top, k, k), set(k, top, k);
    for (int p = top; p >= 0; --p)
      for (int q = top; q >= 0; --q) {
        if (commutative_ && q < p) continue;
        if (at(p, q) == kUnset) cells_.emplace_back(p, q);
      }
  }

  /// Candidate values for the first undetermined cell.
  std::vector<int> first_candidates() {
    if (cells_.empty()) return {};
    return candidates(0);
  }

  /// Explores the subtree where the first cell holds `first` (or everything
  /// when there are no cells).
  void run(std::vector<ChainModel>& out, std::optional<int> first = std::nullopt) {
    if (cells_.empty()) {
      leaf(out);
      return;
    }
    if (first) {
      assign(0, *first);
      if (consistent(0)) descend(1, out);
      unassign(0);
    } else {
      descend(0, out);
    }
  }

 private:
  int at(int p, int q) const { return table_[static_cast<std::size_t>(p) * n_ + q]; }
  void set(int p, int q, int v) { table_[static_cast<std::size_t>(p) * n_ + q] = v; }

  void assign(std::size_t idx, int v) {
    const auto [p, q] = cells_[idx];
    set(p, q, v);
    if (commutative_) set(q, p, v);
  }
  void unassign(std::size_t idx) { assign(idx, kUnset); }

  std::vector<int> candidates(std::size_t idx) const {
    const auto [p, q] = cells_[idx];
    int lo = 0;
    int hi = static_cast<int>(n_ - 1);
    if (no_zero_divisors_ && p != 0 && q != 0) lo = 1;
    if (bounded_) hi = std::min({hi, p, q});
    if (monotone_) {
      auto tighten = [&](int a, int b) {
        const int n = static_cast<int>(n_);
        if (a > 0 && at(a - 1, b) != kUnset) lo = std::max(lo, at(a - 1, b));
        if (b > 0 && at(a, b - 1) != kUnset) lo = std::max(lo, at(a, b - 1));
        if (a + 1 < n && at(a + 1, b) != kUnset) hi = std::min(hi, at(a + 1, b));
        if (b + 1 < n && at(a, b + 1) != kUnset) hi = std::min(hi, at(a, b + 1));
      };
      tighten(p, q);
      if (commutative_) tighten(q, p);
    }
    std::vector<int> out;
    for (int v = lo; v <= hi; ++v) out.push_back(v);
    return out;
  }

  bool consistent(std::size_t) const {
    if (!associative_) return true;
    const int n = static_cast<int>(n_);
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        const int ab = at(a, b);
        if (ab == kUnset) continue;
        for (int c = 0; c < n; ++c) {
          const int bc = at(b, c);
          if (bc == kUnset) continue;
          const int left = at(ab, c);
          const int right = at(a, bc);
          if (left != kUnset && right != kUnset && left != right) return false;
        }
      }
    return true;
  }

  void descend(std::size_t idx, std::vector<ChainModel>& out) {
    if (idx == cells_.size()) {
      leaf(out);
      return;
    }
    for (int v : candidates(idx)) {
      assign(idx, v);
      if (consistent(idx)) descend(idx + 1, out);
    }
    unassign(idx);
  }

  void leaf(std::vector<ChainModel>& out) const {
    std::vector<Element> h(n_ * n_);
    for (std::size_t k = 0; k < h.size(); ++k) h[k] = Element{static_cast<std::uint32_t>(table_[k])};
    ChainModel model = ChainModel::with_reversal(n_, std::move(h));
    if (is_model(model, laws_).empty()) out.push_back(canonical_form(model));
  }

  std::size_t n_;
  const LawSet& laws_;
  std::vector<int> table_;
  std::vector<std::pair<int, int>> cells_;
  bool monotone_ = false;
  bool bounded_ = false;
  bool no_zero_divisors_ = false;
  bool associative_ = false;
  bool commutative_ = false;
};

}  // namespace

CensusResult enumerate_models(std::size_t n, const LawSet& laws,
                              const EnumerationOptions& options) {
  if (n < 2 || n > options.max_size)
    throw Error("enumerate_models: size " + std::to_string(n) + " outside [2, " +
                std::to_string(options.max_size) + "]");

  std::vector<ChainModel> models;
  TableSearch root(n, laws);
  const std::vector<int> first = root.first_candidates();
  const unsigned jobs = std::max(1u, options.jobs);

  if (jobs == 1 || first.size() < 2) {
    root.run(models);
  } else {
    // Partition on the value of the first undetermined cell.
    std::vector<std::vector<ChainModel>> parts(first.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
      TableSearch search(n, laws);
      for (std::size_t k = next++; k < first.size(); k = next++) search.run(parts[k], first[k]);
    };
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < std::min<std::size_t>(jobs, first.size()); ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
    for (auto& part : parts)
      for (auto& m : part) models.push_back(std::move(m));
  }

  std::sort(models.begin(), models.end());
  models.erase(std::unique(models.begin(), models.end()), models.end());

  CensusResult result;
  result.n = n;
  result.law_set = laws.name();
  result.count = models.size();
  result.models = std::move(models);
  return result;
}

bool CensusReport::matches() const {
  return std::all_of(rows.begin(), rows.end(),
                     [](const CensusRow& r) { return r.expected == r.actual; });
}

CensusReport census(const LawSet& laws, const EnumerationOptions& options) {
  CensusReport report;
  report.law_set = laws.name();
  for (std::size_t k = 0; k < kReferenceCensus.size(); ++k) {
    const std::size_t n = kReferenceCensusMin + k;
    report.rows.push_back({n, kReferenceCensus[k], enumerate_models(n, laws, options).count});
  }
  return report;
}

std::vector<LawSet> calibration_variants() {
  return {LawSet::default_set(), *LawSet::builtin("no-L6"), *LawSet::builtin("no-L9"),
          *LawSet::builtin("no-L10"), *LawSet::builtin("no-L6-L10")};
}

CalibrationReport calibrate(const std::vector<LawSet>& variants,
                            const EnumerationOptions& options) {
  CalibrationReport report;
  for (const LawSet& laws : variants) report.variants.push_back(census(laws, options));
  return report;
}

}  // namespace palogic
