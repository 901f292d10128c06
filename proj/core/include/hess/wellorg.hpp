#pragma once

#include <string>
#include <vector>

#include "hess/hessenberg.hpp"
#include "hess/perm.hpp"

namespace hess {

/// First kind: the marked values are exactly 1..r+1. Second kind: the marked
/// values occupy the final positions in increasing order. The two can
/// coincide (r = 0 always does), hence the four-way flag.
enum class WellOrgKind { first, second, both, neither };

std::string_view kind_name(WellOrgKind k);

struct WellOrgProfile {
  /// Y(w) = { w(i) : i >= w^{-1}(1), w(i) <= w(n) }, increasing.
  std::vector<int> y_values;
  bool well_organized = false;
  WellOrgKind kind = WellOrgKind::neither;
  /// Chain w = wbar_0 < wbar_1 < ... < wbar_r where wbar_m swaps the values 1
  /// and y_m; only populated when well_organized.
  std::vector<Permutation> wbar_chain;

  int r() const { return static_cast<int>(y_values.size()) - 1; }
  const Permutation& wbar() const { return wbar_chain.back(); }
};

WellOrgProfile profile(const Permutation& w, const HessenbergFunction& h);

/// For a generator w: positions of consecutive marked values satisfy
/// w^{-1}(y_i) <= h(w^{-1}(y_{i-1})). Predicted to always hold; false is a
/// verification failure.
bool check_lemma_y(const Permutation& w, const HessenbergFunction& h);

/// For a well-organized generator w, verifies the three wbar properties:
/// (1) wbar is a generator; (2) [wbar, w0] = { u in [w, w0] : u(n) = 1 };
/// (3) the (i,n) members of E_{w,h}(wbar) are exactly the positions of the
///     marked values y_s (s < r) with h = n there.
bool check_prop_wbar(const Permutation& w, const HessenbergFunction& h);

enum class CheckOutcome { pass, fail, skipped };

/// For a well-organized generator w and 1 <= m <= r, checks that the edge
/// injection along wbar_{m-1} -> wbar_m is a bijection fixing everything
/// except (p, b) -> (p, a) for p left of w^{-1}(1). The statement is
/// conditional; when its hypothesis fails the check reports skipped.
CheckOutcome check_prop_organized(const Permutation& w, const HessenbergFunction& h, int m);

/// JSON rendering of a profile for the report pipeline.
std::string profile_json(const Permutation& w, const HessenbergFunction& h,
                         const WellOrgProfile& p);

}  // namespace hess
