#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hess/perm.hpp"

namespace hess {

/// Hessenberg function h: [n] -> [n], nondecreasing with h(i) >= i.
/// The forced value h(n) = n follows from the two constraints.
class HessenbergFunction {
 public:
  HessenbergFunction() = default;
  explicit HessenbergFunction(std::vector<int> values);

  static HessenbergFunction full(int n);           // (n, n, ..., n)
  static HessenbergFunction minimal(int n);        // (1, 2, ..., n)
  static HessenbergFunction permutohedral(int n);  // (2, 3, ..., n, n)

  /// Parses "3,3,4,4" or "(3,3,4,4)".
  static HessenbergFunction parse(std::string_view text);

  int size() const { return static_cast<int>(values_.size()); }
  int operator()(int i) const;
  const std::vector<int>& values() const { return values_; }

  /// Serialized form "(3,3,4,4)".
  std::string str() const;

  auto operator<=>(const HessenbergFunction&) const = default;

 private:
  std::vector<int> values_;
};

/// All Hessenberg functions on [n] in lexicographic order of their value
/// lists; the count is the n-th Catalan number.
std::vector<HessenbergFunction> enumerate_hessenberg(int n);

std::uint64_t catalan(int n);

/// d_h = sum_i (h(i) - i).
int dimension_dh(const HessenbergFunction& h);

/// ell_h(w) = #{ i < j : w(i) > w(j), j <= h(i) }.
int ell_h(const Permutation& w, const HessenbergFunction& h);

/// Generator test: w^{-1}(w(i)+1) <= h(i) for every i with w(i) <= n-1.
bool is_generator(const Permutation& w, const HessenbergFunction& h);

/// All generators for h, ascending in Lehmer rank.
std::vector<Permutation> generators(const HessenbergFunction& h);

/// The unique generator wt with wt(i) < wt(j) iff w(i) < w(j) for all i < j
/// with j <= h(i). Found by filtering the full generator list; zero or
/// multiple candidates raise std::logic_error (fatal diagnostic).
Permutation corresponding_generator(const Permutation& w, const HessenbergFunction& h);

struct IncomparabilityGraph {
  int n = 0;
  std::vector<std::pair<int, int>> edges;  // {i,j} with i < j <= h(i), lex order

  std::string dot() const;
};

IncomparabilityGraph incomparability_graph(const HessenbergFunction& h);

}  // namespace hess
