#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "hess/hessenberg.hpp"
#include "hess/perm.hpp"

namespace hess {

using Rank = std::uint32_t;

/// Fixed-width bitset over permutation ranks, used for vertex sets, upsets
/// and reachability rows.
struct RankBitset {
  std::vector<std::uint64_t> bits;

  explicit RankBitset(std::size_t universe = 0) : bits((universe + 63) / 64, 0) {}
  bool test(Rank r) const { return (bits[r >> 6] >> (r & 63)) & 1; }
  void set(Rank r) { bits[r >> 6] |= std::uint64_t(1) << (r & 63); }
  void or_with(const RankBitset& o) {
    for (std::size_t k = 0; k < bits.size(); ++k) bits[k] |= o.bits[k];
  }
  std::size_t count() const;
  /// Ascending list of set ranks.
  std::vector<Rank> to_ranks() const;
};

/// All of S_n indexed by Lehmer rank, with O(1) right multiplication by any
/// transposition. Intended for the sweep sizes (n <= 8).
class SnTable {
 public:
  explicit SnTable(int n);

  int n() const { return n_; }
  Rank size() const { return size_; }
  int pair_count() const { return static_cast<int>(pairs_.size()); }
  Transposition pair_at(int pid) const { return pairs_[static_cast<size_t>(pid)]; }
  int pair_id(int i, int j) const;  // (i,j) with i < j

  /// Rank of u * (i,j).
  Rank apply(Rank u, int pid) const {
    return apply_[static_cast<size_t>(u) * static_cast<size_t>(pairs_.size()) +
                  static_cast<size_t>(pid)];
  }
  int length(Rank u) const { return lengths_[u]; }
  /// One-line word, values 1..n.
  std::span<const std::int8_t> word(Rank u) const {
    return {words_.data() + static_cast<size_t>(u) * static_cast<size_t>(n_),
            static_cast<size_t>(n_)};
  }
  int value_at(Rank u, int pos) const {  // 1-based position
    return words_[static_cast<size_t>(u) * static_cast<size_t>(n_) + static_cast<size_t>(pos - 1)];
  }
  Permutation permutation(Rank u) const;
  Rank rank_of(const Permutation& w) const;
  Rank rank_of_word(std::span<const std::int8_t> word) const;

  Rank identity_rank() const { return 0; }
  Rank w0_rank() const { return size_ - 1; }

  /// Ranks ordered by decreasing length (ties in rank order); handy for
  /// closure DPs that walk the order top-down.
  const std::vector<Rank>& by_length_desc() const { return by_length_desc_; }

 private:
  int n_;
  Rank size_;
  std::vector<Transposition> pairs_;
  std::vector<std::int8_t> words_;
  std::vector<std::int16_t> lengths_;
  std::vector<Rank> apply_;
  std::vector<Rank> by_length_desc_;
};

/// Dense Bruhat upsets: row w holds {u : u >= w}, built by closing the
/// length-increasing transposition relation from the top of the order down.
class BruhatUpsets {
 public:
  explicit BruhatUpsets(const SnTable& sn);

  bool leq(Rank lo, Rank hi) const { return row(lo).test(hi); }
  const RankBitset& row(Rank w) const { return rows_[w]; }

 private:
  std::vector<RankBitset> rows_;
};

/// Per-(h, n) sweep cache: admissible transpositions, generator list, the
/// order-mask lookup giving corresponding generators, and h-Bruhat
/// reachability. Built once by a single writer, then shared read-only.
class HessContext {
 public:
  HessContext(const SnTable& sn, HessenbergFunction h);

  const SnTable& sn() const { return *sn_; }
  const HessenbergFunction& h() const { return h_; }

  /// Admissible pair ids (i < j <= h(i)) in lex order; size d_h.
  const std::vector<int>& admissible() const { return admissible_; }
  /// Index of pid within admissible(), or -1.
  int admissible_index(int pid) const { return adm_index_[static_cast<size_t>(pid)]; }

  const std::vector<Rank>& generator_ranks() const { return generators_; }
  bool is_generator(Rank w) const { return gen_flag_[w]; }

  /// Bit a set when w(i) < w(j) for the a-th admissible pair (i,j).
  std::uint32_t order_mask(Rank w) const;

  /// Corresponding generator via the order-mask lookup; throws
  /// std::logic_error when zero or multiple generators share the mask.
  Rank corresponding_generator(Rank w) const { return wtilde_[w]; }

  /// {u : from <=_h u} (raise) or {u : u <=_h from} (lower), by BFS.
  RankBitset reach(Rank from, bool raise) const;

  /// Full h-Bruhat upset matrix (row u = {v : u <=_h v}); built lazily on
  /// first call, single-threaded.
  const std::vector<RankBitset>& up_closure();
  bool h_leq_via(const std::vector<RankBitset>& closure, Rank u, Rank v) const {
    return closure[u].test(v);
  }

  /// E_{w,h}(u) for generator base w, as a bitmask over admissible indices.
  std::uint32_t edge_mask(const BruhatUpsets& up, Rank w, Rank u) const;

  /// Degree of u inside the vertex set given as a bitset.
  int degree_in(const RankBitset& vertices, Rank u) const;

 private:
  const SnTable* sn_;
  HessenbergFunction h_;
  std::vector<int> admissible_;
  std::vector<int> adm_index_;
  std::vector<char> gen_flag_;
  std::vector<Rank> generators_;
  std::vector<Rank> wtilde_;
  std::vector<RankBitset> up_closure_;
};

}  // namespace hess
