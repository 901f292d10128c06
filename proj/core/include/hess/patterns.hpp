#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hess/hessenberg.hpp"
#include "hess/perm.hpp"

namespace hess {

/// The eleven associated patterns: a classical value order plus index
/// constraints that reference h at the witness positions.
enum class Pattern : int {
  p2143h,
  p1324h,
  p1243h,
  p2134h,
  p1423h,
  p2314h,
  p2413h,
  p25314h,
  p24315h,
  p14325h,
  p15324h,
};

/// Named pattern sets: the seven-pattern set used for generators and the
/// ten-pattern set used for arbitrary permutations.
enum class PatternSet { generator7, general10 };

std::string_view pattern_name(Pattern p);                       // "2143h", ...
std::optional<Pattern> pattern_from_name(std::string_view s);   // inverse
std::span<const Pattern> all_patterns();                        // the eleven, fixed order
std::span<const Pattern> pattern_set(PatternSet s);

struct PatternWitness {
  Pattern pattern;
  std::vector<int> indices;  // strictly increasing, length 4 or 5, 1-based

  /// "(i,j,k,l)" or "(i,j,k,l,m)".
  std::string str() const;
};

/// Lexicographically smallest witness of p in (w, h), or nullopt. Brute force
/// over index tuples; the naive form doubles as its own oracle.
std::optional<PatternWitness> find_pattern(const Permutation& w, const HessenbergFunction& h,
                                           Pattern p);

struct AvoidanceResult {
  bool avoids = true;
  std::optional<PatternWitness> witness;  // first containment in set order
};

AvoidanceResult avoids_all(const Permutation& w, const HessenbergFunction& h, PatternSet s);

}  // namespace hess
