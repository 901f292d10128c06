#include "hess/tables.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <unordered_map>

namespace hess {

std::size_t RankBitset::count() const {
  std::size_t c = 0;
  for (std::uint64_t w : bits) c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

std::vector<Rank> RankBitset::to_ranks() const {
  std::vector<Rank> out;
  for (std::size_t k = 0; k < bits.size(); ++k) {
    std::uint64_t w = bits[k];
    while (w) {
      const int b = std::countr_zero(w);
      out.push_back(static_cast<Rank>(k * 64 + static_cast<std::size_t>(b)));
      w &= w - 1;
    }
  }
  return out;
}

SnTable::SnTable(int n) : n_(n) {
  if (n < 1 || n > 8) throw std::invalid_argument("SnTable supports 1 <= n <= 8");
  size_ = static_cast<Rank>(factorial(n));
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) pairs_.emplace_back(i, j);

  words_.resize(static_cast<size_t>(size_) * static_cast<size_t>(n_));
  lengths_.resize(size_);
  std::vector<std::int8_t> w(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) w[static_cast<size_t>(i)] = static_cast<std::int8_t>(i + 1);
  Rank r = 0;
  do {
    std::copy(w.begin(), w.end(), words_.begin() + static_cast<size_t>(r) * static_cast<size_t>(n_));
    int inv = 0;
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b)
        if (w[static_cast<size_t>(a)] > w[static_cast<size_t>(b)]) ++inv;
    lengths_[r] = static_cast<std::int16_t>(inv);
    ++r;
  } while (std::next_permutation(w.begin(), w.end()));

  apply_.resize(static_cast<size_t>(size_) * pairs_.size());
  std::vector<std::int8_t> tmp(static_cast<size_t>(n));
  for (Rank u = 0; u < size_; ++u) {
    auto uw = word(u);
    for (size_t p = 0; p < pairs_.size(); ++p) {
      std::copy(uw.begin(), uw.end(), tmp.begin());
      std::swap(tmp[static_cast<size_t>(pairs_[p].i - 1)], tmp[static_cast<size_t>(pairs_[p].j - 1)]);
      apply_[static_cast<size_t>(u) * pairs_.size() + p] = rank_of_word(tmp);
    }
  }

  by_length_desc_.resize(size_);
  for (Rank u = 0; u < size_; ++u) by_length_desc_[u] = u;
  std::stable_sort(by_length_desc_.begin(), by_length_desc_.end(),
                   [this](Rank a, Rank b) { return lengths_[a] > lengths_[b]; });
}

int SnTable::pair_id(int i, int j) const {
  // pairs are emitted in lex order: (1,2),(1,3),...,(1,n),(2,3),...
  int id = 0;
  for (int a = 1; a < i; ++a) id += n_ - a;
  return id + (j - i - 1);
}

Permutation SnTable::permutation(Rank u) const {
  auto w = word(u);
  return Permutation(std::vector<int>(w.begin(), w.end()));
}

Rank SnTable::rank_of(const Permutation& w) const {
  if (w.size() != n_) throw std::invalid_argument("size mismatch");
  std::vector<std::int8_t> tmp(w.word().begin(), w.word().end());
  return rank_of_word(tmp);
}

Rank SnTable::rank_of_word(std::span<const std::int8_t> word) const {
  std::uint64_t rank = 0;
  for (int i = 0; i < n_; ++i) {
    int smaller_after = 0;
    for (int j = i + 1; j < n_; ++j)
      if (word[static_cast<size_t>(j)] < word[static_cast<size_t>(i)]) ++smaller_after;
    rank += static_cast<std::uint64_t>(smaller_after) * factorial(n_ - i - 1);
  }
  return static_cast<Rank>(rank);
}

BruhatUpsets::BruhatUpsets(const SnTable& sn) {
  rows_.assign(sn.size(), RankBitset(sn.size()));
  // Walk ranks by decreasing length; each row is the union of the rows of the
  // length-increasing transposition neighbors, plus the element itself.
  for (Rank u : sn.by_length_desc()) {
    rows_[u].set(u);
    for (int p = 0; p < sn.pair_count(); ++p) {
      const Rank v = sn.apply(u, p);
      if (sn.length(v) > sn.length(u)) rows_[u].or_with(rows_[v]);
    }
  }
}

HessContext::HessContext(const SnTable& sn, HessenbergFunction h)
    : sn_(&sn), h_(std::move(h)) {
  if (h_.size() != sn.n()) throw std::invalid_argument("Hessenberg size mismatch");
  adm_index_.assign(static_cast<size_t>(sn.pair_count()), -1);
  for (int p = 0; p < sn.pair_count(); ++p) {
    const Transposition t = sn.pair_at(p);
    if (t.j <= h_(t.i)) {
      adm_index_[static_cast<size_t>(p)] = static_cast<int>(admissible_.size());
      admissible_.push_back(p);
    }
  }
  if (admissible_.size() > 32)
    throw std::invalid_argument("HessContext supports at most 32 admissible pairs");

  gen_flag_.assign(sn.size(), 0);
  std::unordered_map<std::uint32_t, Rank> by_mask;
  by_mask.reserve(sn.size());
  std::vector<int> pos(static_cast<size_t>(sn.n()) + 1);
  for (Rank w = 0; w < sn.size(); ++w) {
    auto word = sn.word(w);
    for (int i = 1; i <= sn.n(); ++i) pos[static_cast<size_t>(word[static_cast<size_t>(i - 1)])] = i;
    bool gen = true;
    for (int i = 1; i <= sn.n() && gen; ++i) {
      const int v = word[static_cast<size_t>(i - 1)];
      if (v <= sn.n() - 1 && pos[static_cast<size_t>(v + 1)] > h_(i)) gen = false;
    }
    if (gen) {
      gen_flag_[w] = 1;
      generators_.push_back(w);
      auto [it, inserted] = by_mask.emplace(order_mask(w), w);
      if (!inserted)
        throw std::logic_error("two generators share one order mask for h=" + h_.str());
    }
  }

  wtilde_.resize(sn.size());
  for (Rank w = 0; w < sn.size(); ++w) {
    auto it = by_mask.find(order_mask(w));
    if (it == by_mask.end())
      throw std::logic_error("no generator matches the order mask of w=" +
                             sn.permutation(w).str() + " for h=" + h_.str());
    wtilde_[w] = it->second;
  }
}

std::uint32_t HessContext::order_mask(Rank w) const {
  std::uint32_t mask = 0;
  for (size_t a = 0; a < admissible_.size(); ++a) {
    const Transposition t = sn_->pair_at(admissible_[a]);
    if (sn_->value_at(w, t.i) < sn_->value_at(w, t.j)) mask |= std::uint32_t(1) << a;
  }
  return mask;
}

RankBitset HessContext::reach(Rank from, bool raise) const {
  RankBitset seen(sn_->size());
  seen.set(from);
  std::vector<Rank> stack{from};
  while (!stack.empty()) {
    const Rank x = stack.back();
    stack.pop_back();
    for (int pid : admissible_) {
      const Rank y = sn_->apply(x, pid);
      if (raise ? (sn_->length(y) <= sn_->length(x)) : (sn_->length(y) >= sn_->length(x)))
        continue;
      if (!seen.test(y)) {
        seen.set(y);
        stack.push_back(y);
      }
    }
  }
  return seen;
}

const std::vector<RankBitset>& HessContext::up_closure() {
  if (!up_closure_.empty()) return up_closure_;
  up_closure_.assign(sn_->size(), RankBitset(sn_->size()));
  for (Rank u : sn_->by_length_desc()) {
    up_closure_[u].set(u);
    for (int pid : admissible_) {
      const Rank v = sn_->apply(u, pid);
      if (sn_->length(v) > sn_->length(u)) up_closure_[u].or_with(up_closure_[v]);
    }
  }
  return up_closure_;
}

std::uint32_t HessContext::edge_mask(const BruhatUpsets& up, Rank w, Rank u) const {
  std::uint32_t mask = 0;
  const RankBitset& wrow = up.row(w);
  for (size_t a = 0; a < admissible_.size(); ++a)
    if (wrow.test(sn_->apply(u, admissible_[a]))) mask |= std::uint32_t(1) << a;
  return mask;
}

int HessContext::degree_in(const RankBitset& vertices, Rank u) const {
  int deg = 0;
  for (int pid : admissible_)
    if (vertices.test(sn_->apply(u, pid))) ++deg;
  return deg;
}

}  // namespace hess
