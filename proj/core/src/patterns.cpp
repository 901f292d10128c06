#include "hess/patterns.hpp"

#include <array>
#include <stdexcept>

namespace hess {

namespace {

// Index constraints of a pattern clause, evaluated on a candidate tuple
// t[0] < t[1] < ... (1-based positions in w):
//   PosLeH:  t[lhs] <= h(t[rhs])
//   HLtPos:  h(t[lhs]) <  t[rhs]
struct Constraint {
  enum Kind { PosLeH, HLtPos } kind;
  int lhs;
  int rhs;
};

struct PatternDef {
  std::string_view name;
  int len;
  std::array<int, 5> order;  // classical value order; order[a] < order[b] iff values must be
  std::array<Constraint, 5> cons;
  int ncons;
};

constexpr std::array<PatternDef, 11> kTable{{
    // 4-patterns: positions named i < j < k < l map to tuple slots 0..3.
    {"2143h", 4, {2, 1, 4, 3, 0}, {{{Constraint::PosLeH, 3, 0}}}, 1},
    {"1324h", 4, {1, 3, 2, 4, 0}, {{{Constraint::PosLeH, 3, 1}, {Constraint::PosLeH, 2, 0}}}, 2},
    {"1243h",
     4,
     {1, 2, 4, 3, 0},
     {{{Constraint::PosLeH, 3, 1}, {Constraint::PosLeH, 1, 0}, {Constraint::HLtPos, 0, 3}}},
     3},
    {"2134h",
     4,
     {2, 1, 3, 4, 0},
     {{{Constraint::PosLeH, 3, 2}, {Constraint::PosLeH, 2, 0}, {Constraint::HLtPos, 0, 3}}},
     3},
    {"1423h",
     4,
     {1, 4, 2, 3, 0},
     {{{Constraint::PosLeH, 3, 1}, {Constraint::PosLeH, 2, 0}, {Constraint::HLtPos, 0, 3}}},
     3},
    {"2314h",
     4,
     {2, 3, 1, 4, 0},
     {{{Constraint::PosLeH, 3, 1}, {Constraint::PosLeH, 2, 0}, {Constraint::HLtPos, 0, 3}}},
     3},
    {"2413h",
     4,
     {2, 4, 1, 3, 0},
     {{{Constraint::PosLeH, 1, 0},
       {Constraint::HLtPos, 0, 2},
       {Constraint::PosLeH, 2, 1},
       {Constraint::HLtPos, 1, 3},
       {Constraint::PosLeH, 3, 2}}},
     5},
    // 5-patterns: positions i < j < k <= h(i) < l <= h(j) < m <= h(k).
    {"25314h",
     5,
     {2, 5, 3, 1, 4},
     {{{Constraint::PosLeH, 2, 0},
       {Constraint::HLtPos, 0, 3},
       {Constraint::PosLeH, 3, 1},
       {Constraint::HLtPos, 1, 4},
       {Constraint::PosLeH, 4, 2}}},
     5},
    {"24315h",
     5,
     {2, 4, 3, 1, 5},
     {{{Constraint::PosLeH, 2, 0},
       {Constraint::HLtPos, 0, 3},
       {Constraint::PosLeH, 3, 1},
       {Constraint::HLtPos, 1, 4},
       {Constraint::PosLeH, 4, 2}}},
     5},
    {"14325h",
     5,
     {1, 4, 3, 2, 5},
     {{{Constraint::PosLeH, 2, 0},
       {Constraint::HLtPos, 0, 3},
       {Constraint::PosLeH, 3, 1},
       {Constraint::HLtPos, 1, 4},
       {Constraint::PosLeH, 4, 2}}},
     5},
    {"15324h",
     5,
     {1, 5, 3, 2, 4},
     {{{Constraint::PosLeH, 2, 0},
       {Constraint::HLtPos, 0, 3},
       {Constraint::PosLeH, 3, 1},
       {Constraint::HLtPos, 1, 4},
       {Constraint::PosLeH, 4, 2}}},
     5},
}};

constexpr std::array<Pattern, 11> kAll{
    Pattern::p2143h,  Pattern::p1324h,  Pattern::p1243h,  Pattern::p2134h,
    Pattern::p1423h,  Pattern::p2314h,  Pattern::p2413h,  Pattern::p25314h,
    Pattern::p24315h, Pattern::p14325h, Pattern::p15324h,
};

constexpr std::array<Pattern, 7> kGenerator7{
    Pattern::p2143h, Pattern::p1324h, Pattern::p1243h, Pattern::p2134h,
    Pattern::p1423h, Pattern::p2314h, Pattern::p2413h,
};

constexpr std::array<Pattern, 10> kGeneral10{
    Pattern::p2143h,  Pattern::p1324h,  Pattern::p1243h,  Pattern::p2134h,  Pattern::p1423h,
    Pattern::p2314h,  Pattern::p25314h, Pattern::p24315h, Pattern::p14325h, Pattern::p15324h,
};

const PatternDef& def_of(Pattern p) { return kTable[static_cast<size_t>(p)]; }

bool constraints_hold(const PatternDef& d, const HessenbergFunction& h, const int* t) {
  for (int c = 0; c < d.ncons; ++c) {
    const Constraint& k = d.cons[static_cast<size_t>(c)];
    if (k.kind == Constraint::PosLeH) {
      if (t[k.lhs] > h(t[k.rhs])) return false;
    } else {
      if (h(t[k.lhs]) >= t[k.rhs]) return false;
    }
  }
  return true;
}

bool values_match(const PatternDef& d, const Permutation& w, const int* t) {
  for (int a = 0; a < d.len; ++a)
    for (int b = a + 1; b < d.len; ++b)
      if ((w(t[a]) < w(t[b])) != (d.order[static_cast<size_t>(a)] < d.order[static_cast<size_t>(b)]))
        return false;
  return true;
}

}  // namespace

std::string_view pattern_name(Pattern p) { return def_of(p).name; }

std::optional<Pattern> pattern_from_name(std::string_view s) {
  for (Pattern p : kAll)
    if (pattern_name(p) == s) return p;
  return std::nullopt;
}

std::span<const Pattern> all_patterns() { return kAll; }

std::span<const Pattern> pattern_set(PatternSet s) {
  if (s == PatternSet::generator7) return kGenerator7;
  return kGeneral10;
}

std::string PatternWitness::str() const {
  std::string s = "(";
  for (size_t k = 0; k < indices.size(); ++k) {
    if (k) s += ',';
    s += std::to_string(indices[k]);
  }
  s += ')';
  return s;
}

std::optional<PatternWitness> find_pattern(const Permutation& w, const HessenbergFunction& h,
                                           Pattern p) {
  if (w.size() != h.size())
    throw std::invalid_argument("permutation and Hessenberg function sizes differ");
  const PatternDef& d = def_of(p);
  const int n = w.size();
  if (d.len > n) return std::nullopt;

  int t[5];
  if (d.len == 4) {
    for (t[0] = 1; t[0] <= n - 3; ++t[0])
      for (t[1] = t[0] + 1; t[1] <= n - 2; ++t[1])
        for (t[2] = t[1] + 1; t[2] <= n - 1; ++t[2])
          for (t[3] = t[2] + 1; t[3] <= n; ++t[3])
            if (constraints_hold(d, h, t) && values_match(d, w, t))
              return PatternWitness{p, {t[0], t[1], t[2], t[3]}};
  } else {
    for (t[0] = 1; t[0] <= n - 4; ++t[0])
      for (t[1] = t[0] + 1; t[1] <= n - 3; ++t[1])
        for (t[2] = t[1] + 1; t[2] <= n - 2; ++t[2])
          for (t[3] = t[2] + 1; t[3] <= n - 1; ++t[3])
            for (t[4] = t[3] + 1; t[4] <= n; ++t[4])
              if (constraints_hold(d, h, t) && values_match(d, w, t))
                return PatternWitness{p, {t[0], t[1], t[2], t[3], t[4]}};
  }
  return std::nullopt;
}

AvoidanceResult avoids_all(const Permutation& w, const HessenbergFunction& h, PatternSet s) {
  for (Pattern p : pattern_set(s)) {
    if (auto witness = find_pattern(w, h, p)) return {false, std::move(witness)};
  }
  return {true, std::nullopt};
}

}  // namespace hess
