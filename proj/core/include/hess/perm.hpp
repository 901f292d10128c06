#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace hess {

/// Transposition (i,j) of positions, 1-based, i < j. Applying it on the right
/// of a permutation exchanges the entries at positions i and j.
struct Transposition {
  int i = 0;
  int j = 0;

  Transposition(int i_, int j_);

  auto operator<=>(const Transposition&) const = default;
  std::string str() const;
};

/// A permutation of [n] in one-line notation. Positions and values are both
/// 1-based throughout the public interface; storage is 0-based internally.
/// Immutable value type: every operation returns a fresh permutation.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<int> one_line);

  static Permutation identity(int n);
  /// The longest element w0 = n (n-1) ... 1.
  static Permutation longest(int n);

  /// Parses "2134" (digits, n <= 9) or "10,2,3,..." (comma-separated, any n).
  static Permutation parse(std::string_view text);

  int size() const { return static_cast<int>(word_.size()); }
  /// w(i) for 1 <= i <= n.
  int operator()(int i) const;
  /// w^{-1}(value), i.e. the position holding `value`.
  int position_of(int value) const;
  const std::vector<int>& word() const { return word_; }

  /// One-line string: "2134" for n <= 9, comma-separated otherwise.
  std::string str() const;

  auto operator<=>(const Permutation&) const = default;

 private:
  std::vector<int> word_;
};

/// w * (i,j): swaps the values at positions t.i and t.j.
Permutation apply_transposition(const Permutation& w, Transposition t);

Permutation inverse(const Permutation& w);

/// Functional composition: (a*b)(i) = a(b(i)). Sizes must agree.
Permutation compose(const Permutation& a, const Permutation& b);

/// Number of inversion pairs i < j with w(i) > w(j).
int length(const Permutation& w);

/// {w(1), ..., w(k)} sorted increasingly.
std::vector<int> prefix_set(const Permutation& w, int k);

/// {i in [n-1] : w(i) > w(i+1)}.
std::vector<int> descent_set(const Permutation& w);

/// Classical (h-free) pattern containment. Returns the lexicographically
/// smallest strictly increasing index tuple whose image is order-isomorphic
/// to p, or nullopt when w avoids p.
std::optional<std::vector<int>> contains_classical_pattern(const Permutation& w,
                                                           const Permutation& p);

/// Lehmer-code rank: position of w in the lexicographic order of S_n words,
/// starting at 0 for the identity. Requires n <= 20.
std::uint64_t lehmer_rank(const Permutation& w);
Permutation lehmer_unrank(int n, std::uint64_t rank);

std::uint64_t factorial(int n);

}  // namespace hess
