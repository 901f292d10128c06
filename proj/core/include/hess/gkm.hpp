#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "hess/hessenberg.hpp"
#include "hess/order.hpp"
#include "hess/perm.hpp"

namespace hess {

/// The GKM graph on S_n for h: neighbors of u are u(i,j) for i < j <= h(i).
/// The graph is regular of degree d_h, so adjacency stays implicit.
struct GkmGraph {
  HessenbergFunction h;

  int n() const { return h.size(); }
  int degree() const { return dimension_dh(h); }
};

/// All h-admissible transposition neighbors of u, in lex order of (i,j).
std::vector<std::pair<Transposition, Permutation>> gamma_h_neighbors(
    const Permutation& u, const HessenbergFunction& h);

/// Torus fixed points of the Hessenberg Schubert variety for (w, h): the
/// Bruhat interval [w, w0] when w is a generator, and its left translate
/// w wt^{-1} [wt, w0] otherwise. Sorted by Lehmer rank.
std::vector<Permutation> fixed_points(const Permutation& w, const HessenbergFunction& h);

/// Subgraph of the GKM graph induced by fixed_points(w, h). Vertices are a
/// sorted rank array; adjacency is streamed from the admissible pairs.
class InducedSubgraph {
 public:
  InducedSubgraph() = default;
  InducedSubgraph(Permutation base, HessenbergFunction h, std::vector<std::uint64_t> sorted_ranks);

  const Permutation& base() const { return base_; }
  const HessenbergFunction& h() const { return h_; }
  int n() const { return base_.size(); }
  std::size_t size() const { return ranks_.size(); }
  const std::vector<std::uint64_t>& ranks() const { return ranks_; }
  bool contains(const Permutation& u) const;
  std::vector<Permutation> vertices() const;

  int degree(const Permutation& u) const;
  /// Degrees parallel to the rank-ordered vertex list.
  std::vector<int> degrees() const;
  /// Undirected edges as rank pairs (a < b), sorted.
  std::vector<std::pair<std::uint64_t, std::uint64_t>> edges() const;

 private:
  Permutation base_;
  HessenbergFunction h_;
  std::vector<std::uint64_t> ranks_;
};

InducedSubgraph induced_subgraph(const Permutation& w, const HessenbergFunction& h);

struct RegularityResult {
  bool regular = false;
  int min_degree = 0;
  int max_degree = 0;
};

/// All degrees equal? Errors on an empty graph.
RegularityResult is_regular(const InducedSubgraph& g);

/// E_{w,h}(u): transpositions (i,j) with i < j <= h(i) and u(i,j) >= w.
/// Requires a generator base w and u >= w.
struct EdgeSet {
  Permutation at;
  std::vector<Transposition> transpositions;  // lex order
};

EdgeSet edge_set(const Permutation& u, const Permutation& w, const HessenbergFunction& h);

/// The edge injection from E_{w,h}(u) into E_{w,h}(v) along v = u(a,b):
///   (i,j) -> (b,j)  when i = a, j > b and (b,j) is not in E_{w,h}(u),
///   (i,j) -> (i,a)  when i < a, j = b and (i,a) is not in E_{w,h}(u),
///   (i,j) -> (i,j)  otherwise.
/// Returned as source/target pairs sorted by source.
using PhiMap = std::vector<std::pair<Transposition, Transposition>>;

PhiMap phi(const Permutation& u, const Permutation& v, const Permutation& w,
           const HessenbergFunction& h);

/// Verifies that u -> w wt^{-1} u is a graph isomorphism from the subgraph of
/// the corresponding generator onto the subgraph of w: bijective on vertices
/// and edge-preserving in both directions. False means verification failure.
bool isomorphism_check(const Permutation& w, const HessenbergFunction& h);

/// DOT rendering. Base vertex and w0 carry peripheries=2; vertices whose
/// degree exceeds the minimum are filled black; with show_excluded the
/// non-member permutations appear grayed out. Vertex and edge order follow
/// Lehmer ranks, so output is diff-stable.
std::string to_dot(const InducedSubgraph& g, bool show_excluded = false);

}  // namespace hess
