#include "hess/order.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

namespace hess {

namespace {

[[noreturn]] void bad_arg(const std::string& msg) { throw std::invalid_argument(msg); }

void require_same_size(const Permutation& u, const Permutation& v) {
  if (u.size() != v.size()) bad_arg("permutation sizes differ");
}

// Sorted-prefix dominance u[k]^ <= v[k]^, with a caller-chosen set of prefix
// lengths to test. Prefixes grow incrementally.
bool prefix_dominated(const Permutation& u, const Permutation& v,
                      const std::vector<char>& test_at) {
  const int n = u.size();
  std::vector<int> su, sv;
  su.reserve(static_cast<size_t>(n));
  sv.reserve(static_cast<size_t>(n));
  for (int k = 1; k <= n; ++k) {
    su.insert(std::upper_bound(su.begin(), su.end(), u(k)), u(k));
    sv.insert(std::upper_bound(sv.begin(), sv.end(), v(k)), v(k));
    if (!test_at[static_cast<size_t>(k)]) continue;
    for (int t = 0; t < k; ++t)
      if (su[static_cast<size_t>(t)] > sv[static_cast<size_t>(t)]) return false;
  }
  return true;
}

}  // namespace

bool bruhat_leq(const Permutation& u, const Permutation& v) {
  require_same_size(u, v);
  const int n = u.size();
  if (n <= 1) return true;
  std::vector<char> test_at(static_cast<size_t>(n) + 1, 0);
  for (int k = 1; k <= n - 1; ++k)
    test_at[static_cast<size_t>(k)] = (v(k) < v(k + 1));  // k not a descent of v
  return prefix_dominated(u, v, test_at);
}

bool bruhat_leq_all_prefixes(const Permutation& u, const Permutation& v) {
  require_same_size(u, v);
  const int n = u.size();
  if (n <= 1) return true;
  std::vector<char> test_at(static_cast<size_t>(n) + 1, 1);
  test_at[0] = 0;
  return prefix_dominated(u, v, test_at);
}

bool bruhat_compare_positions(const Permutation& u, const Permutation& v,
                              std::span<const int> positions) {
  require_same_size(u, v);
  const int n = u.size();
  std::vector<int> sorted(positions.begin(), positions.end());
  std::sort(sorted.begin(), sorted.end());
  std::vector<char> listed(static_cast<size_t>(n) + 1, 0);
  for (int p : sorted) {
    if (p < 1 || p > n) bad_arg("position out of range");
    listed[static_cast<size_t>(p)] = 1;
  }
  for (int i = 1; i <= n; ++i)
    if (!listed[static_cast<size_t>(i)] && u(i) != v(i))
      bad_arg("permutations differ off the listed positions");

  std::vector<int> su, sv;
  for (int p : sorted) {
    su.insert(std::upper_bound(su.begin(), su.end(), u(p)), u(p));
    sv.insert(std::upper_bound(sv.begin(), sv.end(), v(p)), v(p));
    for (size_t t = 0; t < su.size(); ++t)
      if (su[t] > sv[t]) return false;
  }
  return true;
}

namespace {

// Forward BFS over h-admissible length-increasing steps, pruned to elements
// Bruhat-below the target.
bool h_reachable(const Permutation& u, const Permutation& v, const HessenbergFunction& h) {
  if (u == v) return true;
  if (length(u) >= length(v)) return false;
  if (!bruhat_leq(u, v)) return false;
  const int n = u.size();
  std::unordered_set<std::uint64_t> seen{lehmer_rank(u)};
  std::deque<Permutation> queue{u};
  while (!queue.empty()) {
    Permutation x = std::move(queue.front());
    queue.pop_front();
    const int lx = length(x);
    for (int i = 1; i <= n; ++i) {
      for (int j = i + 1; j <= h(i); ++j) {
        if (x(i) > x(j)) continue;  // length must increase
        Permutation y = apply_transposition(x, Transposition(i, j));
        if (y == v) return true;
        const int ly = length(y);
        if (ly >= length(v)) continue;
        if (ly <= lx) continue;
        if (!bruhat_leq(y, v)) continue;
        if (seen.insert(lehmer_rank(y)).second) queue.push_back(std::move(y));
      }
    }
  }
  return false;
}

// All permutations h-reachable from `start`, going up (raise=true) or down.
std::unordered_set<std::uint64_t> h_reach_set(const Permutation& start,
                                              const HessenbergFunction& h, bool raise) {
  const int n = start.size();
  std::unordered_set<std::uint64_t> seen{lehmer_rank(start)};
  std::deque<Permutation> queue{start};
  while (!queue.empty()) {
    Permutation x = std::move(queue.front());
    queue.pop_front();
    for (int i = 1; i <= n; ++i) {
      for (int j = i + 1; j <= h(i); ++j) {
        if (raise ? (x(i) > x(j)) : (x(i) < x(j))) continue;
        Permutation y = apply_transposition(x, Transposition(i, j));
        if (seen.insert(lehmer_rank(y)).second) queue.push_back(std::move(y));
      }
    }
  }
  return seen;
}

}  // namespace

bool h_bruhat_leq(const Permutation& u, const Permutation& v, const HessenbergFunction& h) {
  require_same_size(u, v);
  if (u.size() != h.size()) bad_arg("permutation and Hessenberg function sizes differ");
  return h_reachable(u, v, h);
}

BruhatInterval::BruhatInterval(Permutation lo, Permutation hi,
                               std::vector<std::uint64_t> sorted_ranks)
    : lo_(std::move(lo)), hi_(std::move(hi)), ranks_(std::move(sorted_ranks)) {}

bool BruhatInterval::contains(const Permutation& u) const {
  return std::binary_search(ranks_.begin(), ranks_.end(), lehmer_rank(u));
}

std::vector<Permutation> BruhatInterval::members() const {
  std::vector<Permutation> out;
  out.reserve(ranks_.size());
  for (std::uint64_t r : ranks_) out.push_back(lehmer_unrank(lo_.size(), r));
  return out;
}

BruhatInterval bruhat_interval(const Permutation& lo, const Permutation& hi) {
  require_same_size(lo, hi);
  std::vector<std::uint64_t> ranks;
  if (bruhat_leq(lo, hi)) {
    const int n = lo.size();
    std::vector<int> word = Permutation::identity(n).word();
    std::uint64_t r = 0;
    do {
      Permutation u{std::vector<int>(word)};
      if (bruhat_leq(lo, u) && bruhat_leq(u, hi)) ranks.push_back(r);
      ++r;
    } while (std::next_permutation(word.begin(), word.end()));
  }
  return BruhatInterval(lo, hi, std::move(ranks));
}

BruhatInterval h_interval(const Permutation& lo, const Permutation& hi,
                          const HessenbergFunction& h) {
  require_same_size(lo, hi);
  if (lo.size() != h.size()) bad_arg("permutation and Hessenberg function sizes differ");
  std::vector<std::uint64_t> ranks;
  auto up = h_reach_set(lo, h, true);
  auto down = h_reach_set(hi, h, false);
  for (std::uint64_t r : up)
    if (down.count(r)) ranks.push_back(r);
  std::sort(ranks.begin(), ranks.end());
  return BruhatInterval(lo, hi, std::move(ranks));
}

namespace {

bool chain_dfs(const Permutation& x, const Permutation& v, const HessenbergFunction* h,
               const std::unordered_set<std::uint64_t>* below_v,
               std::unordered_set<std::uint64_t>& dead, std::vector<Permutation>& chain) {
  if (x == v) return true;
  const int n = x.size();
  const int lx = length(x);
  for (int i = 1; i <= n; ++i) {
    const int jmax = h ? (*h)(i) : n;
    for (int j = i + 1; j <= jmax; ++j) {
      if (x(i) > x(j)) continue;
      Permutation y = apply_transposition(x, Transposition(i, j));
      if (length(y) != lx + 1) continue;
      const std::uint64_t ry = lehmer_rank(y);
      if (dead.count(ry)) continue;
      if (h ? !below_v->count(ry) : !bruhat_leq(y, v)) continue;
      chain.push_back(y);
      if (chain_dfs(chain.back(), v, h, below_v, dead, chain)) return true;
      chain.pop_back();
      dead.insert(ry);
    }
  }
  return false;
}

}  // namespace

std::optional<std::vector<Permutation>> saturated_chain(const Permutation& u,
                                                        const Permutation& v,
                                                        const HessenbergFunction* h) {
  require_same_size(u, v);
  std::vector<Permutation> chain{u};
  if (u == v) return chain;
  std::unordered_set<std::uint64_t> dead;
  std::unordered_set<std::uint64_t> below_v;
  if (h) below_v = h_reach_set(v, *h, false);
  if (chain_dfs(u, v, h, h ? &below_v : nullptr, dead, chain)) return chain;
  return std::nullopt;
}

bool check_chain_property(const Permutation& u, const Permutation& v,
                          const std::optional<HessenbergFunction>& h) {
  require_same_size(u, v);
  if (u == v) return true;  // empty chain
  const bool comparable = h ? h_bruhat_leq(u, v, *h) : bruhat_leq(u, v);
  if (!comparable) bad_arg("chain check requires comparable inputs");
  return saturated_chain(u, v, h ? &*h : nullptr).has_value();
}

}  // namespace hess
