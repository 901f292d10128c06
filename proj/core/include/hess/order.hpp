#pragma once

#include <optional>
#include <span>
#include <vector>

#include "hess/hessenberg.hpp"
#include "hess/perm.hpp"

namespace hess {

/// Bruhat comparison u <= v via the sorted-prefix criterion, checked only at
/// the non-descent positions of v.
bool bruhat_leq(const Permutation& u, const Permutation& v);

/// Same comparison checked at every prefix length; kept as a second route for
/// cross-validation.
bool bruhat_leq_all_prefixes(const Permutation& u, const Permutation& v);

/// Comparison for permutations that agree off the given positions: u <= v iff
/// the sorted initial segments of u and v restricted to those positions are
/// dominated elementwise, for every initial segment.
bool bruhat_compare_positions(const Permutation& u, const Permutation& v,
                              std::span<const int> positions);

/// u <=_h v: v is reachable from u by length-increasing transpositions (i,j)
/// with j <= h(i).
bool h_bruhat_leq(const Permutation& u, const Permutation& v, const HessenbergFunction& h);

/// Interval in the Bruhat or h-Bruhat order. Members are stored as a sorted
/// list of Lehmer ranks for deterministic iteration and O(log) membership.
class BruhatInterval {
 public:
  BruhatInterval() = default;
  BruhatInterval(Permutation lo, Permutation hi, std::vector<std::uint64_t> sorted_ranks);

  const Permutation& lo() const { return lo_; }
  const Permutation& hi() const { return hi_; }
  const std::vector<std::uint64_t>& ranks() const { return ranks_; }
  std::size_t size() const { return ranks_.size(); }
  bool contains(const Permutation& u) const;
  std::vector<Permutation> members() const;

 private:
  Permutation lo_;
  Permutation hi_;
  std::vector<std::uint64_t> ranks_;
};

/// [lo, hi] = {u : lo <= u <= hi}; empty member set when lo and hi are not
/// comparable.
BruhatInterval bruhat_interval(const Permutation& lo, const Permutation& hi);

/// [lo, hi]_h, computed as the intersection of the forward-reachable set from
/// lo and the backward-reachable set from hi.
BruhatInterval h_interval(const Permutation& lo, const Permutation& hi,
                          const HessenbergFunction& h);

/// A saturated chain from u to v: each step one (h-admissible) transposition
/// raising length by exactly 1. Greedy search with backtracking; nullopt when
/// no chain exists.
std::optional<std::vector<Permutation>> saturated_chain(const Permutation& u,
                                                        const Permutation& v,
                                                        const HessenbergFunction* h);

/// Chain-property check: true iff a saturated chain from u to v exists.
/// Incomparable inputs are an argument error. The chain theorems predict this
/// always returns true; false is a verification failure, not an error.
bool check_chain_property(const Permutation& u, const Permutation& v,
                          const std::optional<HessenbergFunction>& h = std::nullopt);

}  // namespace hess
