#pragma once

// Test-side oracles. These stay deliberately independent of the library's
// computation paths: comparability comes from a Warshall closure of single
// length-raising transposition steps over an explicitly materialized S_n,
// and the pattern checks below are literal inequality chains, one function
// per pattern, with no shared evaluator.

#include <algorithm>
#include <cstdint>
#include <vector>

#include "hess/hessenberg.hpp"
#include "hess/perm.hpp"

namespace oracle {

// All words of S_n in lexicographic order, materialized independently.
inline std::vector<std::vector<int>> all_words(int n) {
  std::vector<int> word(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) word[static_cast<size_t>(i)] = i + 1;
  std::vector<std::vector<int>> out;
  do {
    out.push_back(word);
  } while (std::next_permutation(word.begin(), word.end()));
  return out;
}

inline int inversions(const std::vector<int>& w) {
  int c = 0;
  for (size_t i = 0; i < w.size(); ++i)
    for (size_t j = i + 1; j < w.size(); ++j)
      if (w[i] > w[j]) ++c;
  return c;
}

// Bruhat comparability matrix via transitive closure of every length-raising
// transposition step. Row u is a bitset over word indices.
class BruhatClosure {
 public:
  explicit BruhatClosure(int n) : words_(all_words(n)) {
    const size_t count = words_.size();
    words_per_row_ = (count + 63) / 64;
    rows_.assign(count * words_per_row_, 0);
    for (size_t u = 0; u < count; ++u) {
      set(u, u);
      const int lu = inversions(words_[u]);
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
          std::vector<int> v = words_[u];
          std::swap(v[static_cast<size_t>(i)], v[static_cast<size_t>(j)]);
          if (inversions(v) > lu) set(u, index_of(v));
        }
    }
    // Warshall over the boolean matrix, rows as bitsets.
    for (size_t mid = 0; mid < count; ++mid)
      for (size_t u = 0; u < count; ++u)
        if (test(u, mid))
          for (size_t k = 0; k < words_per_row_; ++k)
            rows_[u * words_per_row_ + k] |= rows_[mid * words_per_row_ + k];
  }

  size_t index_of(const std::vector<int>& w) const {
    return static_cast<size_t>(
        std::lower_bound(words_.begin(), words_.end(), w) - words_.begin());
  }
  const std::vector<std::vector<int>>& words() const { return words_; }

  bool leq(const std::vector<int>& u, const std::vector<int>& v) const {
    return test(index_of(u), index_of(v));
  }
  bool leq(const hess::Permutation& u, const hess::Permutation& v) const {
    return leq(u.word(), v.word());
  }

 private:
  void set(size_t u, size_t v) { rows_[u * words_per_row_ + v / 64] |= std::uint64_t(1) << (v % 64); }
  bool test(size_t u, size_t v) const {
    return (rows_[u * words_per_row_ + v / 64] >> (v % 64)) & 1;
  }

  std::vector<std::vector<int>> words_;
  size_t words_per_row_ = 0;
  std::vector<std::uint64_t> rows_;
};

// Classical containment by scanning every index tuple and comparing the
// standardization directly.
inline bool contains_classical(const std::vector<int>& w, const std::vector<int>& p) {
  const int n = static_cast<int>(w.size()), k = static_cast<int>(p.size());
  if (k > n) return false;
  std::vector<int> pick(static_cast<size_t>(k));
  // iterate combinations via odometer
  for (int t = 0; t < k; ++t) pick[static_cast<size_t>(t)] = t;
  for (;;) {
    bool match = true;
    for (int a = 0; a < k && match; ++a)
      for (int b = a + 1; b < k && match; ++b)
        if ((w[static_cast<size_t>(pick[static_cast<size_t>(a)])] <
             w[static_cast<size_t>(pick[static_cast<size_t>(b)])]) !=
            (p[static_cast<size_t>(a)] < p[static_cast<size_t>(b)]))
          match = false;
    if (match) return true;
    int t = k - 1;
    while (t >= 0 && pick[static_cast<size_t>(t)] == n - k + t) --t;
    if (t < 0) return false;
    ++pick[static_cast<size_t>(t)];
    for (int s = t + 1; s < k; ++s)
      pick[static_cast<size_t>(s)] = pick[static_cast<size_t>(s - 1)] + 1;
  }
}

// ---------------------------------------------------------------------------
// Hand transcriptions of the eleven associated patterns, one literal function
// each. w and h are 1-based.
// ---------------------------------------------------------------------------

using hess::HessenbergFunction;
using hess::Permutation;

inline bool has_2143h(const Permutation& w, const HessenbergFunction& h) {
  const int n = w.size();
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      for (int k = j + 1; k <= n; ++k)
        for (int l = k + 1; l <= n; ++l)
          if (l <= h(i) && w(j) < w(i) && w(i) < w(l) && w(l) < w(k)) return true;
  return false;
}

inline bool has_1324h(const Permutation& w, const HessenbergFunction& h) {
  const int n = w.size();
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      for (int k = j + 1; k <= n; ++k)
        for (int l = k + 1; l <= n; ++l)
          if (l <= h(j) && k <= h(i) && w(i) < w(k) && w(k) < w(j) && w(j) < w(l)) return true;
  return false;
}

inline bool has_1243h(const Permutation& w, const HessenbergFunction& h) {
  const int n = w.size();
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      for (int k = j + 1; k <= n; ++k)
        for (int l = k + 1; l <= n; ++l)
          if (l <= h(j) && j <= h(i) && h(i) < l && w(i) < w(j) && w(j) < w(l) && w(l) < w(k))
            return true;
  return false;
}

inline bool has_2134h(const Permutation& w, const HessenbergFunction& h) {
  const int n = w.size();
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      for (int k = j + 1; k <= n; ++k)
        for (int l = k + 1; l <= n; ++l)
          if (l <= h(k) && k <= h(i) && h(i) < l && w(j) < w(i) && w(i) < w(k) && w(k) < w(l))
            return true;
  return false;
}

inline bool has_1423h(const Permutation& w, const HessenbergFunction& h) {
  const int n = w.size();
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      for (int k = j + 1; k <= n; ++k)
        for (int l = k + 1; l <= n; ++l)
          if (l <= h(j) && k <= h(i) && h(i) < l && w(i) < w(k) && w(k) < w(l) && w(l) < w(j))
            return true;
  return false;
}

inline bool has_2314h(const Permutation& w, const HessenbergFunction& h) {
  const int n = w.size();
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      for (int k = j + 1; k <= n; ++k)
        for (int l = k + 1; l <= n; ++l)
          if (l <= h(j) && k <= h(i) && h(i) < l && w(k) < w(i) && w(i) < w(j) && w(j) < w(l))
            return true;
  return false;
}

inline bool has_2413h(const Permutation& w, const HessenbergFunction& h) {
  const int n = w.size();
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      for (int k = j + 1; k <= n; ++k)
        for (int l = k + 1; l <= n; ++l)
          if (j <= h(i) && h(i) < k && k <= h(j) && h(j) < l && l <= h(k) && w(k) < w(i) &&
              w(i) < w(l) && w(l) < w(j))
            return true;
  return false;
}

inline bool has_25314h(const Permutation& w, const HessenbergFunction& h) {
  const int n = w.size();
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      for (int k = j + 1; k <= n; ++k)
        for (int l = k + 1; l <= n; ++l)
          for (int m = l + 1; m <= n; ++m)
            if (k <= h(i) && h(i) < l && l <= h(j) && h(j) < m && m <= h(k) && w(l) < w(i) &&
                w(i) < w(k) && w(k) < w(m) && w(m) < w(j))
              return true;
  return false;
}

inline bool has_24315h(const Permutation& w, const HessenbergFunction& h) {
  const int n = w.size();
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      for (int k = j + 1; k <= n; ++k)
        for (int l = k + 1; l <= n; ++l)
          for (int m = l + 1; m <= n; ++m)
            if (k <= h(i) && h(i) < l && l <= h(j) && h(j) < m && m <= h(k) && w(l) < w(i) &&
                w(i) < w(k) && w(k) < w(j) && w(j) < w(m))
              return true;
  return false;
}

inline bool has_14325h(const Permutation& w, const HessenbergFunction& h) {
  const int n = w.size();
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      for (int k = j + 1; k <= n; ++k)
        for (int l = k + 1; l <= n; ++l)
          for (int m = l + 1; m <= n; ++m)
            if (k <= h(i) && h(i) < l && l <= h(j) && h(j) < m && m <= h(k) && w(i) < w(l) &&
                w(l) < w(k) && w(k) < w(j) && w(j) < w(m))
              return true;
  return false;
}

inline bool has_15324h(const Permutation& w, const HessenbergFunction& h) {
  const int n = w.size();
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      for (int k = j + 1; k <= n; ++k)
        for (int l = k + 1; l <= n; ++l)
          for (int m = l + 1; m <= n; ++m)
            if (k <= h(i) && h(i) < l && l <= h(j) && h(j) < m && m <= h(k) && w(i) < w(l) &&
                w(l) < w(k) && w(k) < w(m) && w(m) < w(j))
              return true;
  return false;
}

using HandChecker = bool (*)(const Permutation&, const HessenbergFunction&);

inline HandChecker hand_checker(std::string_view name) {
  if (name == "2143h") return has_2143h;
  if (name == "1324h") return has_1324h;
  if (name == "1243h") return has_1243h;
  if (name == "2134h") return has_2134h;
  if (name == "1423h") return has_1423h;
  if (name == "2314h") return has_2314h;
  if (name == "2413h") return has_2413h;
  if (name == "25314h") return has_25314h;
  if (name == "24315h") return has_24315h;
  if (name == "14325h") return has_14325h;
  return has_15324h;
}

}  // namespace oracle
