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

#ifndef PALOGIC_BIT_MATRIX_HPP_
#define PALOGIC_BIT_MATRIX_HPP_

#include <cstddef>
#include <cstdint>
#include <vector>

namespace palogic {

/// Square boolean matrix with word-packed rows, used for order closures.
class BitMatrix {
 public:
  explicit BitMatrix(std::size_t n = 0) { resize(n); }

  std::size_t size() const { return n_; }

  /// Grows (or shrinks) to n x n, keeping the overlapping entries.
  void resize(std::size_t n) {
    const std::size_t words = (n + 63) / 64;
    rows_.resize(n);
    for (auto& r : rows_) r.resize(words, 0);
    n_ = n;
    words_ = words;
  }

  bool test(std::size_t i, std::size_t j) const { return (rows_[i][j >> 6] >> (j & 63)) & 1u; }

  /// Sets (i, j); returns true if it was clear.
  bool set(std::size_t i, std::size_t j) {
    std::uint64_t& w = rows_[i][j >> 6];
    const std::uint64_t bit = std::uint64_t{1} << (j & 63);
    if (w & bit) return false;
    w |= bit;
    return true;
  }

  /// rows_[dst] |= rows_[src]; returns true if anything changed.
  bool or_row(std::size_t dst, std::size_t src) {
    bool changed = false;
    auto& d = rows_[dst];
    const auto& s = rows_[src];
    for (std::size_t k = 0; k < words_; ++k) {
      const std::uint64_t v = d[k] | s[k];
      changed |= v != d[k];
      d[k] = v;
    }
    return changed;
  }

  /// rows_[dst] |= other.rows_[src].
  bool or_row_from(std::size_t dst, const BitMatrix& other, std::size_t src) {
    bool changed = false;
    auto& d = rows_[dst];
    const auto& s = other.rows_[src];
    for (std::size_t k = 0; k < words_; ++k) {
      const std::uint64_t v = d[k] | s[k];
      changed |= v != d[k];
      d[k] = v;
    }
    return changed;
  }

  /// Reflexive-transitive closure in place (Warshall).
  bool close_reflexive_transitive() {
    bool changed = false;
    for (std::size_t i = 0; i < n_; ++i) changed |= set(i, i);
    for (std::size_t k = 0; k < n_; ++k)
      for (std::size_t i = 0; i < n_; ++i)
        if (i != k && test(i, k)) changed |= or_row(i, k);
    return changed;
  }

  friend bool operator==(const BitMatrix&, const BitMatrix&) = default;

 private:
  std::size_t n_ = 0;
  std::size_t words_ = 0;
  std::vector<std::vector<std::uint64_t>> rows_;
};

/// Closes a (<=, <) pair: `le` becomes its reflexive-transitive closure
/// (with `lt` folded in) and `lt` becomes le* . lt . le*, i.e. every chain
/// that contains a strict step. Returns true if either matrix changed.
inline bool close_order(BitMatrix& le, BitMatrix& lt) {
  const std::size_t n = le.size();
  bool changed = false;
  for (std::size_t i = 0; i < n; ++i) changed |= le.or_row_from(i, lt, i);
  changed |= le.close_reflexive_transitive();
  // right[a] = OR over strict edges a < b of le*[b]
  BitMatrix right(n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (lt.test(a, b)) right.or_row_from(a, le, b);
  BitMatrix closed(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t a = 0; a < n; ++a)
      if (le.test(i, a)) closed.or_row_from(i, right, a);
  if (!(closed == lt)) {
    // closed contains lt because le* is reflexive.
    changed = true;
    lt = std::move(closed);
  }
  return changed;
}

}  // namespace palogic

#endif  // PALOGIC_BIT_MATRIX_HPP_
