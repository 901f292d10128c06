#include "hess/wellorg.hpp"

#include <algorithm>
#include <stdexcept>

#include "hess/gkm.hpp"
#include "hess/order.hpp"
#include "json.hpp"

namespace hess {

namespace {

[[noreturn]] void bad_arg(const std::string& msg) { throw std::invalid_argument(msg); }

}  // namespace

std::string_view kind_name(WellOrgKind k) {
  switch (k) {
    case WellOrgKind::first: return "first";
    case WellOrgKind::second: return "second";
    case WellOrgKind::both: return "both";
    case WellOrgKind::neither: return "neither";
  }
  return "neither";
}

WellOrgProfile profile(const Permutation& w, const HessenbergFunction& h) {
  if (w.size() != h.size()) bad_arg("permutation and Hessenberg function sizes differ");
  const int n = w.size();
  WellOrgProfile p;

  const int pos1 = w.position_of(1);
  for (int i = pos1; i <= n; ++i)
    if (w(i) <= w(n)) p.y_values.push_back(w(i));
  std::sort(p.y_values.begin(), p.y_values.end());
  const int r = p.r();

  p.well_organized = true;
  for (int s = 0; s < r; ++s)
    if (w.position_of(p.y_values[static_cast<size_t>(s)]) >
        w.position_of(p.y_values[static_cast<size_t>(s + 1)])) {
      p.well_organized = false;
      break;
    }

  bool first = true, second = true;
  for (int s = 0; s <= r; ++s) {
    if (p.y_values[static_cast<size_t>(s)] != s + 1) first = false;
    if (w(n - s) != p.y_values[static_cast<size_t>(r - s)]) second = false;
  }
  p.kind = first && second ? WellOrgKind::both
           : first         ? WellOrgKind::first
           : second        ? WellOrgKind::second
                           : WellOrgKind::neither;

  if (p.well_organized) {
    p.wbar_chain.push_back(w);
    for (int m = 1; m <= r; ++m) {
      const Permutation& prev = p.wbar_chain.back();
      const int a = prev.position_of(1);
      const int b = prev.position_of(p.y_values[static_cast<size_t>(m)]);
      Permutation next = apply_transposition(prev, Transposition(a, b));
      if (length(next) <= length(prev))
        throw std::logic_error("wbar chain failed to raise length at w=" + w.str());
      p.wbar_chain.push_back(std::move(next));
    }
  }
  return p;
}

bool check_lemma_y(const Permutation& w, const HessenbergFunction& h) {
  if (!is_generator(w, h)) bad_arg("check_lemma_y requires a generator");
  const WellOrgProfile p = profile(w, h);
  for (int i = 1; i <= p.r(); ++i)
    if (w.position_of(p.y_values[static_cast<size_t>(i)]) >
        h(w.position_of(p.y_values[static_cast<size_t>(i - 1)])))
      return false;
  return true;
}

bool check_prop_wbar(const Permutation& w, const HessenbergFunction& h) {
  if (!is_generator(w, h)) bad_arg("check_prop_wbar requires a generator");
  const WellOrgProfile p = profile(w, h);
  if (!p.well_organized) bad_arg("check_prop_wbar requires a well-organized permutation");
  const int n = w.size();
  const Permutation& wbar = p.wbar();
  const Permutation w0 = Permutation::longest(n);

  // (1) wbar is a generator.
  if (!is_generator(wbar, h)) return false;

  // (2) [wbar, w0] = { u in [w, w0] : u(n) = 1 }.
  std::vector<std::uint64_t> filtered;
  for (const Permutation& u : bruhat_interval(w, w0).members())
    if (u(n) == 1) filtered.push_back(lehmer_rank(u));
  if (filtered != bruhat_interval(wbar, w0).ranks()) return false;

  // (3) (i,n) edges at wbar match the marked positions with h(.) = n.
  std::vector<int> lhs;
  for (const Transposition& t : edge_set(wbar, w, h).transpositions)
    if (t.j == n) lhs.push_back(t.i);
  std::vector<int> rhs;
  for (int s = 0; s < p.r(); ++s) {
    const int pos = w.position_of(p.y_values[static_cast<size_t>(s)]);
    if (h(pos) == n) rhs.push_back(pos);
  }
  std::sort(rhs.begin(), rhs.end());
  return lhs == rhs;
}

CheckOutcome check_prop_organized(const Permutation& w, const HessenbergFunction& h, int m) {
  if (!is_generator(w, h)) bad_arg("check_prop_organized requires a generator");
  const WellOrgProfile p = profile(w, h);
  if (!p.well_organized) bad_arg("check_prop_organized requires a well-organized permutation");
  if (m < 1 || m > p.r()) bad_arg("chain index out of range");

  const Permutation& prev = p.wbar_chain[static_cast<size_t>(m - 1)];
  const Permutation& cur = p.wbar_chain[static_cast<size_t>(m)];
  const int a = prev.position_of(1);
  const int b = prev.position_of(p.y_values[static_cast<size_t>(m)]);
  const int pos1 = w.position_of(1);

  const EdgeSet e_prev = edge_set(prev, w, h);
  const EdgeSet e_cur = edge_set(cur, w, h);

  // Hypothesis: h(p) >= b for every (p, a) edge of wbar_m with p < w^{-1}(1).
  for (const Transposition& t : e_cur.transpositions)
    if (t.j == a && t.i < pos1 && h(t.i) < b) return CheckOutcome::skipped;

  const PhiMap map = phi(prev, cur, w, h);

  // Injective into E(cur) and surjective onto it.
  std::vector<Transposition> image;
  for (const auto& [src, dst] : map) {
    if (!std::binary_search(e_cur.transpositions.begin(), e_cur.transpositions.end(), dst))
      return CheckOutcome::fail;
    image.push_back(dst);
  }
  std::sort(image.begin(), image.end());
  if (std::adjacent_find(image.begin(), image.end()) != image.end()) return CheckOutcome::fail;
  if (image != e_cur.transpositions) return CheckOutcome::fail;

  // Identity except (p,b) -> (p,a) left of the 1.
  for (const auto& [src, dst] : map) {
    if (src == dst) continue;
    if (!(src.i < pos1 && src.j == b && dst.i == src.i && dst.j == a)) return CheckOutcome::fail;
  }

  // First kind: the edge sets agree and the map is the identity.
  if (p.kind == WellOrgKind::first || p.kind == WellOrgKind::both) {
    if (e_prev.transpositions != e_cur.transpositions) return CheckOutcome::fail;
    for (const auto& [src, dst] : map)
      if (src != dst) return CheckOutcome::fail;
  }
  return CheckOutcome::pass;
}

std::string profile_json(const Permutation& w, const HessenbergFunction& h,
                         const WellOrgProfile& p) {
  nlohmann::ordered_json j;
  j["perm"] = w.str();
  j["hess"] = h.str();
  j["y_values"] = p.y_values;
  j["well_organized"] = p.well_organized;
  j["kind"] = std::string(kind_name(p.kind));
  std::vector<std::string> chain;
  for (const Permutation& u : p.wbar_chain) chain.push_back(u.str());
  j["wbar_chain"] = chain;
  return j.dump(2);
}

}  // namespace hess
