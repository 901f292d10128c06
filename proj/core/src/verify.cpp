#include "hess/verify.hpp"

#include <array>
#include <atomic>
#include <bit>
#include <chrono>
#include <climits>
#include <cstdio>
#include <mutex>
#include <random>
#include <stdexcept>
#include <thread>
#include <unordered_map>

#include "hess/order.hpp"
#include "hess/patterns.hpp"
#include "hess/tables.hpp"
#include "json.hpp"

namespace hess {

namespace {

constexpr int kMaxSweepN = 7;  // resource guard; larger sizes flag the report incomplete

template <typename F>
void for_ranks(const RankBitset& bs, F&& f) {
  for (std::size_t k = 0; k < bs.bits.size(); ++k) {
    std::uint64_t w = bs.bits[k];
    while (w) {
      f(static_cast<Rank>(k * 64 + static_cast<std::size_t>(std::countr_zero(w))));
      w &= w - 1;
    }
  }
}

// Shared per-size state, built by a single writer before the h-partitioned
// workers start; read-only afterwards.
struct SizeCtx {
  const SnTable& sn;
  const BruhatUpsets& up;
  const std::vector<Permutation>& perms;
  const RankBitset& last1;  // { u : u(n) = 1 }
};

struct HCtx {
  const SizeCtx& s;
  HessContext hc;

  const HessenbergFunction& h() const { return hc.h(); }
};

struct Acc {
  std::uint64_t pairs = 0;
  std::uint64_t fail_count = 0;
  std::uint64_t skips = 0;
  std::size_t cap = 1000;
  std::vector<VerifyFailure> failures;

  void fail(const SizeCtx& s, Rank w, const HessenbergFunction& h, std::string detail) {
    ++fail_count;
    if (failures.size() < cap)
      failures.push_back({s.perms[w].str(), h.str(), std::move(detail)});
  }
};

// Engine-side profile of the marked values of w (the values <= w(n) sitting
// at or right of the position of 1).
struct EProfile {
  std::vector<int> ys;
  std::vector<int> pos;  // pos[v] = position of value v, 1-based
  bool wo = false;
  bool first = false;
  bool second = false;
  std::vector<Rank> chain;  // populated when wo

  int r() const { return static_cast<int>(ys.size()) - 1; }
};

EProfile eprofile(const SnTable& sn, Rank w) {
  const int n = sn.n();
  EProfile p;
  auto word = sn.word(w);
  p.pos.assign(static_cast<size_t>(n) + 1, 0);
  for (int i = 1; i <= n; ++i) p.pos[static_cast<size_t>(word[static_cast<size_t>(i - 1)])] = i;
  const int wn = word[static_cast<size_t>(n - 1)];
  const int pos1 = p.pos[1];
  for (int v = 1; v <= wn; ++v)
    if (p.pos[static_cast<size_t>(v)] >= pos1) p.ys.push_back(v);

  const int r = p.r();
  p.wo = true;
  for (int s = 0; s < r; ++s)
    if (p.pos[static_cast<size_t>(p.ys[static_cast<size_t>(s)])] >
        p.pos[static_cast<size_t>(p.ys[static_cast<size_t>(s + 1)])]) {
      p.wo = false;
      break;
    }
  p.first = p.second = true;
  for (int s = 0; s <= r; ++s) {
    if (p.ys[static_cast<size_t>(s)] != s + 1) p.first = false;
    if (word[static_cast<size_t>(n - 1 - s)] != p.ys[static_cast<size_t>(r - s)]) p.second = false;
  }

  if (p.wo) {
    p.chain.push_back(w);
    Rank cur = w;
    for (int m = 1; m <= r; ++m) {
      auto cw = sn.word(cur);
      int a = 0, b = 0;
      for (int i = 1; i <= n; ++i) {
        if (cw[static_cast<size_t>(i - 1)] == 1) a = i;
        if (cw[static_cast<size_t>(i - 1)] == p.ys[static_cast<size_t>(m)]) b = i;
      }
      cur = sn.apply(cur, sn.pair_id(a, b));
      p.chain.push_back(cur);
    }
  }
  return p;
}

// The edge-map rule on admissible-index masks; -1 when the image is not an
// admissible pair (a well-definedness failure).
int phi_target(const HessContext& hc, std::uint32_t mask_u, int a, int b, int src_adm) {
  const SnTable& sn = hc.sn();
  Transposition t = sn.pair_at(hc.admissible()[static_cast<size_t>(src_adm)]);
  int ti = t.i, tj = t.j;
  auto in_u = [&](int x, int y) {
    const int idx = hc.admissible_index(sn.pair_id(x, y));
    return idx >= 0 && ((mask_u >> idx) & 1u);
  };
  if (ti == a && tj > b && !in_u(b, tj))
    ti = b;
  else if (ti < a && tj == b && !in_u(ti, a))
    tj = a;
  return hc.admissible_index(sn.pair_id(ti, tj));
}

struct RegInfo {
  bool regular = true;
  int min_deg = 0;
  int max_deg = 0;
  std::size_t vertices = 0;
};

RegInfo degrees_over(const HCtx& c, const RankBitset& V) {
  RegInfo r;
  int mind = INT_MAX, maxd = -1;
  for_ranks(V, [&](Rank u) {
    const int d = c.hc.degree_in(V, u);
    mind = std::min(mind, d);
    maxd = std::max(maxd, d);
    ++r.vertices;
  });
  r.min_deg = mind == INT_MAX ? 0 : mind;
  r.max_deg = maxd < 0 ? 0 : maxd;
  r.regular = r.min_deg == r.max_deg;
  return r;
}

// Vertex set of the induced subgraph for base w: the Bruhat upset of w when w
// generates, otherwise its left translate under w wt^{-1}.
RankBitset mapped_vertices(const HCtx& c, Rank w, Rank wt) {
  const SnTable& sn = c.s.sn;
  const int n = sn.n();
  std::vector<int> sig(static_cast<size_t>(n) + 1);
  auto ww = sn.word(w);
  auto tw = sn.word(wt);
  for (int i = 0; i < n; ++i)
    sig[static_cast<size_t>(tw[static_cast<size_t>(i)])] = ww[static_cast<size_t>(i)];
  RankBitset out(sn.size());
  std::vector<std::int8_t> tmp(static_cast<size_t>(n));
  for_ranks(c.s.up.row(wt), [&](Rank u) {
    auto uw = sn.word(u);
    for (int i = 0; i < n; ++i)
      tmp[static_cast<size_t>(i)] =
          static_cast<std::int8_t>(sig[static_cast<size_t>(uw[static_cast<size_t>(i)])]);
    out.set(sn.rank_of_word(tmp));
  });
  return out;
}

RegInfo regularity_of(const HCtx& c, Rank w) {
  const Rank wt = c.hc.corresponding_generator(w);
  if (wt == w) return degrees_over(c, c.s.up.row(w));
  const RankBitset V = mapped_vertices(c, w, wt);
  return degrees_over(c, V);
}

bool contains(const HCtx& c, Rank w, Pattern p) {
  return find_pattern(c.s.perms[w], c.h(), p).has_value();
}

// ---------------------------------------------------------------------------
// Per-h checkers
// ---------------------------------------------------------------------------

void chk_interval(HCtx& c, Acc& a) {
  const Rank w0 = c.s.sn.w0_rank();
  const RankBitset down0 = c.hc.reach(w0, false);
  for (Rank w : c.hc.generator_ranks()) {
    ++a.pairs;
    RankBitset fwd = c.hc.reach(w, true);
    for (std::size_t k = 0; k < fwd.bits.size(); ++k) fwd.bits[k] &= down0.bits[k];
    if (fwd.bits != c.s.up.row(w).bits)
      a.fail(c.s, w, c.h(),
             "h-interval has " + std::to_string(fwd.count()) + " members, Bruhat interval has " +
                 std::to_string(c.s.up.row(w).count()));
  }
}

void chk_hchain(HCtx& c, Acc& a) {
  const SnTable& sn = c.s.sn;
  const auto& closure = c.hc.up_closure();
  RankBitset sat(sn.size());
  for (Rank v = 0; v < sn.size(); ++v) {
    std::fill(sat.bits.begin(), sat.bits.end(), 0);
    sat.set(v);
    const int lv = sn.length(v);
    // Reach v by steps raising length exactly one, decided top-down.
    for (Rank x : sn.by_length_desc()) {
      if (sn.length(x) >= lv) continue;
      for (int pid : c.hc.admissible()) {
        const Rank y = sn.apply(x, pid);
        if (sn.length(y) == sn.length(x) + 1 && sat.test(y)) {
          sat.set(x);
          break;
        }
      }
    }
    for (Rank u = 0; u < sn.size(); ++u) {
      if (u == v || !closure[u].test(v)) continue;
      ++a.pairs;
      if (!sat.test(u))
        a.fail(c.s, u, c.h(), "no saturated chain up to " + c.s.perms[v].str());
    }
  }
}

void chk_increasing(HCtx& c, Acc& a) {
  const SnTable& sn = c.s.sn;
  const auto& closure = c.hc.up_closure();
  std::vector<std::int16_t> deg(sn.size(), -1);
  for (Rank w : c.hc.generator_ranks()) {
    const RankBitset& V = c.s.up.row(w);
    for_ranks(V, [&](Rank u) { deg[u] = static_cast<std::int16_t>(c.hc.degree_in(V, u)); });
    for_ranks(V, [&](Rank u) {
      for (std::size_t k = 0; k < V.bits.size(); ++k) {
        std::uint64_t bitsw = closure[u].bits[k] & V.bits[k];
        while (bitsw) {
          const Rank v =
              static_cast<Rank>(k * 64 + static_cast<std::size_t>(std::countr_zero(bitsw)));
          bitsw &= bitsw - 1;
          if (v == u) continue;
          ++a.pairs;
          if (deg[u] > deg[v])
            a.fail(c.s, w, c.h(),
                   "deg(" + c.s.perms[u].str() + ")=" + std::to_string(deg[u]) + " > deg(" +
                       c.s.perms[v].str() + ")=" + std::to_string(deg[v]));
        }
      }
    });
  }
}

void chk_irregular(HCtx& c, Acc& a) {
  for (Rank w : c.hc.generator_ranks()) {
    ++a.pairs;
    const auto res = avoids_all(c.s.perms[w], c.h(), PatternSet::generator7);
    if (res.avoids) continue;
    const RegInfo reg = regularity_of(c, w);
    if (reg.regular)
      a.fail(c.s, w, c.h(),
             "contains " + std::string(pattern_name(res.witness->pattern)) + res.witness->str() +
                 " but the subgraph is regular");
  }
}

void chk_regular(HCtx& c, Acc& a) {
  for (Rank w : c.hc.generator_ranks()) {
    ++a.pairs;
    if (!avoids_all(c.s.perms[w], c.h(), PatternSet::generator7).avoids) continue;
    const RegInfo reg = regularity_of(c, w);
    if (!reg.regular)
      a.fail(c.s, w, c.h(),
             "avoids the seven patterns but degrees span [" + std::to_string(reg.min_deg) + "," +
                 std::to_string(reg.max_deg) + "]");
  }
}

void chk_main(HCtx& c, Acc& a) {
  const SnTable& sn = c.s.sn;
  for (Rank w = 0; w < sn.size(); ++w) {
    ++a.pairs;
    const RegInfo reg = regularity_of(c, w);
    const auto res = avoids_all(c.s.perms[w], c.h(), PatternSet::general10);
    if (reg.regular != res.avoids) {
      std::string detail = reg.regular ? "regular but contains " : "irregular yet avoids all; ";
      if (!res.avoids)
        detail += std::string(pattern_name(res.witness->pattern)) + res.witness->str();
      detail += " (degrees " + std::to_string(reg.min_deg) + ".." + std::to_string(reg.max_deg) + ")";
      a.fail(c.s, w, c.h(), detail);
    }
  }
}

void chk_r412(HCtx& c, Acc& a) {
  for (Rank w : c.hc.generator_ranks()) {
    ++a.pairs;
    const bool avoids_b = avoids_all(c.s.perms[w], c.h(), PatternSet::generator7).avoids;
    bool avoids_alt = true;
    for (Pattern p : {Pattern::p2143h, Pattern::p1324h, Pattern::p1243h, Pattern::p2134h,
                      Pattern::p1423h, Pattern::p2314h, Pattern::p25314h})
      if (contains(c, w, p)) {
        avoids_alt = false;
        break;
      }
    if (avoids_b != avoids_alt)
      a.fail(c.s, w, c.h(),
             std::string("seven-set avoidance ") + (avoids_b ? "holds" : "fails") +
                 " but the 25314h variant disagrees");
  }
}

void chk_injection(HCtx& c, Acc& a) {
  const SnTable& sn = c.s.sn;
  const auto& adm = c.hc.admissible();
  for (Rank w : c.hc.generator_ranks()) {
    const RankBitset& V = c.s.up.row(w);
    for_ranks(V, [&](Rank u) {
      const std::uint32_t mu = c.hc.edge_mask(c.s.up, w, u);
      for (std::size_t ai = 0; ai < adm.size(); ++ai) {
        if (!((mu >> ai) & 1u)) continue;
        const Rank v = sn.apply(u, adm[ai]);
        if (sn.length(v) <= sn.length(u)) continue;
        ++a.pairs;
        const Transposition ab = sn.pair_at(adm[ai]);
        const std::uint32_t mv = c.hc.edge_mask(c.s.up, w, v);
        std::uint32_t seen = 0;
        for (std::size_t src = 0; src < adm.size(); ++src) {
          if (!((mu >> src) & 1u)) continue;
          const int tgt = phi_target(c.hc, mu, ab.i, ab.j, static_cast<int>(src));
          if (tgt < 0 || !((mv >> tgt) & 1u)) {
            a.fail(c.s, w, c.h(),
                   "edge " + c.s.perms[u].str() + "->" + c.s.perms[v].str() + ": image of " +
                       sn.pair_at(adm[src]).str() + " escapes the target edge set");
            break;
          }
          if ((seen >> tgt) & 1u) {
            a.fail(c.s, w, c.h(),
                   "edge " + c.s.perms[u].str() + "->" + c.s.perms[v].str() + ": not injective at " +
                       sn.pair_at(adm[static_cast<size_t>(tgt)]).str());
            break;
          }
          seen |= std::uint32_t(1) << tgt;
        }
      }
    });
  }
}

void chk_y(HCtx& c, Acc& a) {
  for (Rank w : c.hc.generator_ranks()) {
    ++a.pairs;
    const EProfile p = eprofile(c.s.sn, w);
    for (int i = 1; i <= p.r(); ++i) {
      const int pos_i = p.pos[static_cast<size_t>(p.ys[static_cast<size_t>(i)])];
      const int pos_prev = p.pos[static_cast<size_t>(p.ys[static_cast<size_t>(i - 1)])];
      if (pos_i > c.h()(pos_prev)) {
        a.fail(c.s, w, c.h(),
               "position of marked value " + std::to_string(p.ys[static_cast<size_t>(i)]) +
                   " exceeds h at the previous marked position");
        break;
      }
    }
  }
}

void chk_1324(HCtx& c, Acc& a) {
  for (Rank w : c.hc.generator_ranks()) {
    ++a.pairs;
    if (contains(c, w, Pattern::p1324h)) continue;
    if (!eprofile(c.s.sn, w).wo)
      a.fail(c.s, w, c.h(), "avoids 1324h but is not well-organized");
  }
}

void chk_firstsecond(HCtx& c, Acc& a) {
  const int n = c.s.sn.n();
  for (Rank w : c.hc.generator_ranks()) {
    const EProfile p = eprofile(c.s.sn, w);
    if (!p.wo) continue;
    ++a.pairs;
    const int pos1 = p.pos[1];
    const bool av2134 = !contains(c, w, Pattern::p2134h);
    if (c.h()(pos1) < n && av2134) {
      if (!p.first) {
        a.fail(c.s, w, c.h(), "expected first kind");
        continue;
      }
      if (!contains(c, w, Pattern::p1243h) && !contains(c, w, Pattern::p1423h)) {
        const int wn = c.s.sn.value_at(w, n);
        for (int i = 1; i <= n; ++i) {
          const int v = c.s.sn.value_at(w, i);
          if (c.h()(i) == n && !(v <= wn && p.pos[static_cast<size_t>(v)] >= pos1)) {
            a.fail(c.s, w, c.h(),
                   "h(" + std::to_string(i) + ")=n but w(i)=" + std::to_string(v) +
                       " is not a marked value");
            break;
          }
        }
      }
    } else if (c.h()(pos1) == n && av2134 && !contains(c, w, Pattern::p2143h)) {
      if (!p.first && !p.second) a.fail(c.s, w, c.h(), "expected first or second kind");
    }
  }
}

void chk_2413(HCtx& c, Acc& a) {
  for (Rank w : c.hc.generator_ranks()) {
    if (contains(c, w, Pattern::p1243h) || contains(c, w, Pattern::p2134h) ||
        contains(c, w, Pattern::p1423h))
      continue;
    ++a.pairs;
    const bool has4 = contains(c, w, Pattern::p2413h);
    const bool has5 = contains(c, w, Pattern::p25314h);
    if (has4 != has5)
      a.fail(c.s, w, c.h(),
             std::string("2413h ") + (has4 ? "present" : "absent") + " but 25314h " +
                 (has5 ? "present" : "absent"));
  }
}

constexpr std::array<Pattern, 6> kSix{Pattern::p2143h, Pattern::p1324h, Pattern::p1243h,
                                      Pattern::p2134h, Pattern::p1423h, Pattern::p2314h};

void chk_allpatterns1(HCtx& c, Acc& a) {
  const SnTable& sn = c.s.sn;
  std::vector<std::uint8_t> mask6(sn.size(), 0);
  for (Rank r = 0; r < sn.size(); ++r)
    for (std::size_t p = 0; p < kSix.size(); ++p)
      if (contains(c, r, kSix[p])) mask6[r] |= static_cast<std::uint8_t>(1u << p);
  for (Rank w = 0; w < sn.size(); ++w) {
    ++a.pairs;
    const Rank wt = c.hc.corresponding_generator(w);
    if (mask6[w] != mask6[wt]) {
      const std::uint8_t diff = mask6[w] ^ mask6[wt];
      const int p = std::countr_zero(static_cast<unsigned>(diff));
      a.fail(c.s, w, c.h(),
             std::string(pattern_name(kSix[static_cast<size_t>(p)])) +
                 " containment differs from the corresponding generator " + c.s.perms[wt].str());
    }
  }
}

void chk_allpatterns2(HCtx& c, Acc& a) {
  const SnTable& sn = c.s.sn;
  std::vector<std::uint8_t> flags(sn.size(), 0);  // bit0: any 5-pattern, bit1: 25314h
  for (Rank r = 0; r < sn.size(); ++r) {
    for (Pattern p :
         {Pattern::p25314h, Pattern::p24315h, Pattern::p14325h, Pattern::p15324h})
      if (contains(c, r, p)) {
        flags[r] |= 1;
        break;
      }
    if (contains(c, r, Pattern::p25314h)) flags[r] |= 2;
  }
  for (Rank w = 0; w < sn.size(); ++w) {
    if (contains(c, w, Pattern::p1324h)) continue;
    ++a.pairs;
    const Rank wt = c.hc.corresponding_generator(w);
    const bool any5 = flags[w] & 1;
    const bool gen25314 = flags[wt] & 2;
    if (any5 != gen25314)
      a.fail(c.s, w, c.h(),
             std::string("five-pattern containment ") + (any5 ? "present" : "absent") +
                 " but 25314h in " + c.s.perms[wt].str() + (gen25314 ? " present" : " absent"));
  }
}

void chk_wbar(HCtx& c, Acc& a) {
  const SnTable& sn = c.s.sn;
  const int n = sn.n();
  for (Rank w : c.hc.generator_ranks()) {
    const EProfile p = eprofile(sn, w);
    if (!p.wo) continue;
    ++a.pairs;
    const Rank wbar = p.chain.back();
    if (!c.hc.is_generator(wbar)) {
      a.fail(c.s, w, c.h(), "wbar " + c.s.perms[wbar].str() + " is not a generator");
      continue;
    }
    bool slice_ok = true;
    const RankBitset& rw = c.s.up.row(w);
    const RankBitset& rb = c.s.up.row(wbar);
    for (std::size_t k = 0; k < rw.bits.size(); ++k)
      if (rb.bits[k] != (rw.bits[k] & c.s.last1.bits[k])) {
        slice_ok = false;
        break;
      }
    if (!slice_ok) {
      a.fail(c.s, w, c.h(),
             "[wbar, w0] differs from the u(n)=1 slice of [w, w0] (wbar " +
                 c.s.perms[wbar].str() + ")");
      continue;
    }
    std::vector<int> lhs;
    for (int pid : c.hc.admissible()) {
      const Transposition t = sn.pair_at(pid);
      if (t.j == n && rw.test(sn.apply(wbar, pid))) lhs.push_back(t.i);
    }
    std::vector<int> rhs;
    for (int s = 0; s < p.r(); ++s) {
      const int pos = p.pos[static_cast<size_t>(p.ys[static_cast<size_t>(s)])];
      if (c.h()(pos) == n) rhs.push_back(pos);
    }
    if (lhs != rhs)
      a.fail(c.s, w, c.h(), "(i,n) edges at wbar do not match the marked positions with h=n");
  }
}

void chk_organized(HCtx& c, Acc& a) {
  const SnTable& sn = c.s.sn;
  const auto& adm = c.hc.admissible();
  for (Rank w : c.hc.generator_ranks()) {
    const EProfile p = eprofile(sn, w);
    if (!p.wo || p.r() < 1) continue;
    const int pos1 = p.pos[1];
    for (int m = 1; m <= p.r(); ++m) {
      const Rank prev = p.chain[static_cast<size_t>(m - 1)];
      const Rank cur = p.chain[static_cast<size_t>(m)];
      auto pw = sn.word(prev);
      int apos = 0, bpos = 0;
      for (int i = 1; i <= sn.n(); ++i) {
        if (pw[static_cast<size_t>(i - 1)] == 1) apos = i;
        if (pw[static_cast<size_t>(i - 1)] == p.ys[static_cast<size_t>(m)]) bpos = i;
      }
      const std::uint32_t m_prev = c.hc.edge_mask(c.s.up, w, prev);
      const std::uint32_t m_cur = c.hc.edge_mask(c.s.up, w, cur);

      bool hyp = true;
      for (std::size_t ai = 0; ai < adm.size() && hyp; ++ai) {
        if (!((m_cur >> ai) & 1u)) continue;
        const Transposition t = sn.pair_at(adm[ai]);
        if (t.j == apos && t.i < pos1 && c.h()(t.i) < bpos) hyp = false;
      }
      if (!hyp) {
        ++a.skips;
        continue;
      }
      ++a.pairs;

      std::uint32_t seen = 0;
      bool ok = true;
      bool identity = true;
      std::string why;
      for (std::size_t src = 0; src < adm.size() && ok; ++src) {
        if (!((m_prev >> src) & 1u)) continue;
        const int tgt = phi_target(c.hc, m_prev, apos, bpos, static_cast<int>(src));
        if (tgt < 0 || !((m_cur >> tgt) & 1u)) {
          ok = false;
          why = "image escapes the target edge set";
          break;
        }
        if ((seen >> tgt) & 1u) {
          ok = false;
          why = "not injective";
          break;
        }
        seen |= std::uint32_t(1) << tgt;
        if (tgt != static_cast<int>(src)) {
          identity = false;
          const Transposition ts = sn.pair_at(adm[src]);
          const Transposition tt = sn.pair_at(adm[static_cast<size_t>(tgt)]);
          if (!(ts.i < pos1 && ts.j == bpos && tt.i == ts.i && tt.j == apos)) {
            ok = false;
            why = "moved pair " + ts.str() + "->" + tt.str() + " has the wrong shape";
          }
        }
      }
      if (ok && seen != m_cur) {
        ok = false;
        why = "not surjective";
      }
      if (ok && p.first && (m_prev != m_cur || !identity)) {
        ok = false;
        why = "first kind but the map is not the identity";
      }
      if (!ok)
        a.fail(c.s, w, c.h(), "chain step " + std::to_string(m) + ": " + why);
    }
  }
}

void chk_sizeE(HCtx& c, Acc& a) {
  const SnTable& sn = c.s.sn;
  const int n = sn.n();
  for (Rank w : c.hc.generator_ranks()) {
    if (contains(c, w, Pattern::p2143h) || contains(c, w, Pattern::p1324h) ||
        contains(c, w, Pattern::p2134h))
      continue;
    ++a.pairs;
    const EProfile p = eprofile(sn, w);
    if (!p.wo) {
      a.fail(c.s, w, c.h(), "expected well-organized under the three-pattern avoidance");
      continue;
    }
    if (!contains(c, w, Pattern::p2314h)) {
      const auto cnt_w = std::popcount(c.hc.edge_mask(c.s.up, w, w));
      const auto cnt_b = std::popcount(c.hc.edge_mask(c.s.up, w, p.chain.back()));
      if (cnt_w != cnt_b)
        a.fail(c.s, w, c.h(),
               "|E(w)|=" + std::to_string(cnt_w) + " but |E(wbar)|=" + std::to_string(cnt_b));
    }
    if (!contains(c, w, Pattern::p1243h) && !contains(c, w, Pattern::p1423h)) {
      int kcount = 0;
      for (int s = 0; s <= p.r(); ++s)
        if (c.h()(p.pos[static_cast<size_t>(p.ys[static_cast<size_t>(s)])]) == n) ++kcount;
      std::vector<int> lhs;
      const Rank w0 = sn.w0_rank();
      for (int pid : c.hc.admissible()) {
        const Transposition t = sn.pair_at(pid);
        if (t.j == n && c.s.up.row(w).test(sn.apply(w0, pid))) lhs.push_back(t.i);
      }
      std::vector<int> rhs;
      for (int i = n - kcount + 1; i < n; ++i) rhs.push_back(i);
      if (lhs != rhs)
        a.fail(c.s, w, c.h(),
               "(i,n) edges at w0 do not form the predicted suffix (k=" +
                   std::to_string(kcount) + ")");
    }
  }
}

void chk_chainw(HCtx& c, Acc& a) {
  for (Rank w : c.hc.generator_ranks()) {
    if (!avoids_all(c.s.perms[w], c.h(), PatternSet::generator7).avoids) continue;
    ++a.pairs;
    const EProfile p = eprofile(c.s.sn, w);
    if (!p.wo) {
      a.fail(c.s, w, c.h(), "expected well-organized under seven-pattern avoidance");
      continue;
    }
    const auto res = avoids_all(c.s.perms[p.chain.back()], c.h(), PatternSet::generator7);
    if (!res.avoids)
      a.fail(c.s, w, c.h(),
             "wbar " + c.s.perms[p.chain.back()].str() + " contains " +
                 std::string(pattern_name(res.witness->pattern)) + res.witness->str());
  }
}

void chk_iso(HCtx& c, Acc& a) {
  const SnTable& sn = c.s.sn;
  for (Rank w = 0; w < sn.size(); ++w) {
    ++a.pairs;
    const Rank wt = c.hc.corresponding_generator(w);
    if (wt == w) continue;  // identity map
    const int n = sn.n();
    std::vector<int> sig(static_cast<size_t>(n) + 1);
    auto ww = sn.word(w);
    auto tw = sn.word(wt);
    for (int i = 0; i < n; ++i)
      sig[static_cast<size_t>(tw[static_cast<size_t>(i)])] = ww[static_cast<size_t>(i)];

    const RankBitset& dom = c.s.up.row(wt);
    RankBitset mapped(sn.size());
    std::vector<std::pair<Rank, Rank>> map_pairs;
    std::vector<std::int8_t> tmp(static_cast<size_t>(n));
    for_ranks(dom, [&](Rank u) {
      auto uw = sn.word(u);
      for (int i = 0; i < n; ++i)
        tmp[static_cast<size_t>(i)] =
            static_cast<std::int8_t>(sig[static_cast<size_t>(uw[static_cast<size_t>(i)])]);
      const Rank mu = sn.rank_of_word(tmp);
      mapped.set(mu);
      map_pairs.emplace_back(u, mu);
    });
    if (mapped.count() != dom.count()) {
      a.fail(c.s, w, c.h(), "translation is not injective on the fixed-point set");
      continue;
    }
    bool ok = true;
    for (auto [u, mu] : map_pairs) {
      for (int pid : c.hc.admissible()) {
        const bool src = dom.test(sn.apply(u, pid));
        const bool dst = mapped.test(sn.apply(mu, pid));
        if (src != dst) {
          a.fail(c.s, w, c.h(),
                 "edge mismatch at " + c.s.perms[u].str() + " under " + sn.pair_at(pid).str());
          ok = false;
          break;
        }
      }
      if (!ok) break;
    }
  }
}

void chk_iso_card(HCtx& c, Acc& a) {
  const SnTable& sn = c.s.sn;
  for (Rank w = 0; w < sn.size(); ++w) {
    ++a.pairs;
    const Rank wt = c.hc.corresponding_generator(w);
    if (wt == w) continue;
    const RankBitset mapped = mapped_vertices(c, w, wt);
    if (mapped.count() != c.s.up.row(wt).count())
      a.fail(c.s, w, c.h(),
             "fixed-point sets have sizes " + std::to_string(mapped.count()) + " and " +
                 std::to_string(c.s.up.row(wt).count()));
  }
}

void chk_classical(HCtx& c, Acc& a) {
  const int n = c.s.sn.n();
  if (c.h() != HessenbergFunction::full(n)) return;
  const Permutation p2143 = Permutation::parse("2143");
  const Permutation p1324 = Permutation::parse("1324");
  for (Rank w = 0; w < c.s.sn.size(); ++w) {
    ++a.pairs;
    const RegInfo reg = regularity_of(c, w);
    const bool avoids = !contains_classical_pattern(c.s.perms[w], p2143) &&
                        !contains_classical_pattern(c.s.perms[w], p1324);
    if (reg.regular != avoids)
      a.fail(c.s, w, c.h(),
             std::string(reg.regular ? "regular" : "irregular") + " but classical avoidance is " +
                 (avoids ? "true" : "false"));
  }
}

void chk_permutohedral(HCtx& c, Acc& a) {
  const int n = c.s.sn.n();
  if (c.h() != HessenbergFunction::permutohedral(n)) return;
  for (Rank w = 0; w < c.s.sn.size(); ++w) {
    ++a.pairs;
    const RegInfo reg = regularity_of(c, w);
    if (!reg.regular)
      a.fail(c.s, w, c.h(),
             "degrees span [" + std::to_string(reg.min_deg) + "," + std::to_string(reg.max_deg) +
                 "] on the permutohedral function");
  }
}

// ---------------------------------------------------------------------------
// Per-size checker (no h in the statement)
// ---------------------------------------------------------------------------

void chk_odescent(const SizeCtx& s, const VerifyOptions& opt, Acc& a) {
  const Rank count = s.sn.size();
  auto check_pair = [&](Rank u, Rank v) {
    ++a.pairs;
    const bool fast = bruhat_leq(s.perms[u], s.perms[v]);
    const bool full = bruhat_leq_all_prefixes(s.perms[u], s.perms[v]);
    if (fast != full) {
      ++a.fail_count;
      if (a.failures.size() < a.cap)
        a.failures.push_back({s.perms[u].str(), "-",
                              "prefix criteria disagree against " + s.perms[v].str()});
    }
  };
  if (count <= 24) {
    for (Rank u = 0; u < count; ++u)
      for (Rank v = 0; v < count; ++v) check_pair(u, v);
    return;
  }
  std::mt19937_64 rng(opt.seed ^ (0x9e3779b97f4a7c15ULL * static_cast<std::uint64_t>(s.sn.n())));
  std::uniform_int_distribution<Rank> pick(0, count - 1);
  for (int k = 0; k < 20000; ++k) check_pair(pick(rng), pick(rng));
}

// ---------------------------------------------------------------------------
// Catalog and the sweep runner
// ---------------------------------------------------------------------------

using PerHChecker = void (*)(HCtx&, Acc&);
using PerSizeChecker = void (*)(const SizeCtx&, const VerifyOptions&, Acc&);

struct CheckerDef {
  const char* id;
  const char* summary;
  PerHChecker per_h = nullptr;
  PerSizeChecker per_size = nullptr;
  const char* skip_reason = "";
  const char* note = "";
};

constexpr CheckerDef kCheckers[] = {
    {"T-interval", "for every generator w, the h-order interval [w,w0]_h equals the Bruhat interval [w,w0]; unit: generator (w,h) pairs", chk_interval},
    {"T-hchain", "every h-comparable pair is joined by a saturated chain of single admissible steps; unit: comparable (u,v) pairs per h; the full h case is the plain Bruhat chain property", chk_hchain},
    {"T-increasing", "vertex degrees are monotone along the h-order inside each generator subgraph; unit: comparable vertex pairs", chk_increasing},
    {"T-irregular", "a generator containing one of the seven patterns has an irregular subgraph; unit: generator (w,h) pairs", chk_irregular},
    {"T-regular", "a generator avoiding the seven patterns has a regular subgraph; unit: generator (w,h) pairs", chk_regular},
    {"T-main", "the subgraph is regular exactly when the ten-pattern set is avoided, for every permutation; unit: all (w,h) pairs", chk_main},
    {"L-injection", "the edge map along each ascending edge lands injectively in the target edge set; unit: ascending edges", chk_injection},
    {"L-y", "marked-value positions of a generator respect h step by step; unit: generator (w,h) pairs", chk_y},
    {"L-1324", "a generator avoiding 1324h is well-organized; unit: generator (w,h) pairs", chk_1324},
    {"L-firstsecond", "well-organized generators avoiding the stated patterns are of first or second kind; unit: well-organized generator (w,h) pairs", chk_firstsecond},
    {"L-2413", "2413h and 25314h containment agree for generators avoiding 1243h, 2134h, 1423h; unit: qualifying generator (w,h) pairs", chk_2413},
    {"L-allpatterns-1", "each of the six 4-patterns transfers between w and its corresponding generator; unit: all (w,h) pairs", chk_allpatterns1},
    {"L-allpatterns-2", "under 1324h avoidance, containing one of the four 5-patterns matches 25314h in the corresponding generator; unit: qualifying (w,h) pairs", chk_allpatterns2},
    {"P-wbar", "wbar generates, its interval is the u(n)=1 slice, and its (i,n) edges sit at the marked positions with h=n; unit: well-organized generator (w,h) pairs", chk_wbar},
    {"P-organized", "edge maps along the wbar chain are bijections of the stated shape; unit: (w,h,chain-step) triples; conditional hypothesis failures are skipped", chk_organized, nullptr, "conditional hypothesis h(p) >= b failed"},
    {"P-sizeE", "|E(w)|=|E(wbar)| and the (i,n) edges at w0 form the predicted suffix, under the stated avoidances; unit: qualifying generator (w,h) pairs", chk_sizeE},
    {"P-chainw", "seven-pattern avoidance is inherited by wbar; unit: qualifying generator (w,h) pairs", chk_chainw},
    {"P-iso", "left translation by w wt^{-1} is a graph isomorphism onto the subgraph of w; unit: all (w,h) pairs", chk_iso},
    {"P-iso-card", "the fixed-point sets of w and its corresponding generator have the same cardinality; unit: all (w,h) pairs", chk_iso_card},
    {"R-412", "for generators, avoiding the seven-set equals avoiding the six-set plus 25314h; unit: generator (w,h) pairs", chk_r412},
    {"T-classical", "at full h, regularity equals classical avoidance of 2143 and 1324; unit: permutations at the full function", chk_classical},
    {"T-permutohedral", "at h=(2,3,...,n,n), every subgraph is regular; unit: permutations at the permutohedral function", chk_permutohedral},
    {"O-descent", "prefix dominance tested at all cuts vs only non-descent cuts gives identical comparisons (randomized; exhaustive for n <= 4)", nullptr, chk_odescent},
};

const CheckerDef* find_checker(std::string_view id) {
  for (const CheckerDef& d : kCheckers)
    if (id == d.id) return &d;
  return nullptr;
}

void merge(VerificationReport& r, Acc&& a, std::size_t cap) {
  r.pairs_checked += a.pairs;
  r.failure_count += a.fail_count;
  r.skips += a.skips;
  for (VerifyFailure& f : a.failures) {
    if (r.failures.size() >= cap) break;
    r.failures.push_back(std::move(f));
  }
}

void run_size(const CheckerDef& def, int k, const VerifyOptions& opt, VerificationReport& report) {
  const SnTable sn(k);
  const BruhatUpsets up(sn);
  std::vector<Permutation> perms;
  perms.reserve(sn.size());
  for (Rank r = 0; r < sn.size(); ++r) perms.push_back(sn.permutation(r));
  RankBitset last1(sn.size());
  for (Rank r = 0; r < sn.size(); ++r)
    if (sn.value_at(r, k) == 1) last1.set(r);
  const SizeCtx sctx{sn, up, perms, last1};

  if (def.per_size) {
    Acc acc;
    acc.cap = opt.failure_cap;
    def.per_size(sctx, opt, acc);
    merge(report, std::move(acc), opt.failure_cap);
    return;
  }

  const std::vector<HessenbergFunction> hs = enumerate_hessenberg(k);
  std::vector<Acc> accs(hs.size());
  for (Acc& a : accs) a.cap = opt.failure_cap;

  const int jobs = std::max(1, opt.jobs);
  if (jobs == 1 || hs.size() == 1) {
    for (std::size_t i = 0; i < hs.size(); ++i) {
      HCtx ctx{sctx, HessContext(sn, hs[i])};
      def.per_h(ctx, accs[i]);
    }
  } else {
    std::atomic<std::size_t> next{0};
    std::exception_ptr first_error;
    std::mutex error_mutex;
    auto worker = [&] {
      try {
        for (;;) {
          const std::size_t i = next.fetch_add(1);
          if (i >= hs.size()) break;
          HCtx ctx{sctx, HessContext(sn, hs[i])};
          def.per_h(ctx, accs[i]);
        }
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!first_error) first_error = std::current_exception();
        next.store(hs.size());
      }
    };
    std::vector<std::thread> pool;
    const std::size_t nthreads = std::min<std::size_t>(static_cast<std::size_t>(jobs), hs.size());
    for (std::size_t t = 0; t < nthreads; ++t) pool.emplace_back(worker);
    for (std::thread& t : pool) t.join();
    if (first_error) std::rethrow_exception(first_error);
  }
  // Merge in h order so the report is deterministic regardless of scheduling.
  for (Acc& a : accs) merge(report, std::move(a), opt.failure_cap);
}

}  // namespace

std::vector<std::pair<std::string, std::string>> theorem_catalog() {
  std::vector<std::pair<std::string, std::string>> out;
  for (const CheckerDef& d : kCheckers) out.emplace_back(d.id, d.summary);
  return out;
}

bool is_theorem_id(std::string_view id) { return find_checker(id) != nullptr; }

VerificationReport verify_theorem(std::string_view id, int n, const VerifyOptions& opt) {
  const CheckerDef* def = find_checker(id);
  if (!def) throw std::invalid_argument("unknown theorem id '" + std::string(id) + "'");
  if (n < 1) throw std::invalid_argument("size must be at least 1");

  VerificationReport report;
  report.theorem_id = def->id;
  report.summary = def->summary;
  report.skip_reason = def->skip_reason;
  report.note = def->note;
  report.n_min = 1;
  report.n_max = n;

  const auto t0 = std::chrono::steady_clock::now();
  const int cap = std::min(n, kMaxSweepN);
  for (int k = 1; k <= cap; ++k) run_size(*def, k, opt, report);
  if (n > kMaxSweepN) {
    report.complete = false;
    if (!report.note.empty()) report.note += "; ";
    report.note += "sizes above " + std::to_string(kMaxSweepN) + " were not swept (resource guard)";
  }
  report.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return report;
}

// ---------------------------------------------------------------------------
// Counterexample predicates
// ---------------------------------------------------------------------------

namespace {

struct PredicateDef {
  const char* id;
  const char* summary;
  bool asserted;
};

constexpr PredicateDef kPredicates[] = {
    {"regular-iff-avoids-general10",
     "searches for a permutation whose subgraph regularity disagrees with ten-pattern avoidance",
     true},
    {"unique-corresponding-generator",
     "searches for a permutation with zero or several generators sharing its admissible order mask",
     true},
    {"degree-monotone-nongenerator",
     "searches non-generator bases for an h-comparable vertex pair with decreasing degree "
     "(exploratory; the monotonicity statement is proved only for generators)",
     false},
};

const PredicateDef* find_predicate(std::string_view id) {
  for (const PredicateDef& d : kPredicates)
    if (id == d.id) return &d;
  return nullptr;
}

void pred_unique_generator(int k, PredicateResult& out) {
  const SnTable sn(k);
  const std::vector<HessenbergFunction> hs = enumerate_hessenberg(k);
  for (const HessenbergFunction& h : hs) {
    std::vector<int> adm;
    for (int p = 0; p < sn.pair_count(); ++p) {
      const Transposition t = sn.pair_at(p);
      if (t.j <= h(t.i)) adm.push_back(p);
    }
    auto mask_of = [&](Rank w) {
      std::uint32_t m = 0;
      for (std::size_t a = 0; a < adm.size(); ++a) {
        const Transposition t = sn.pair_at(adm[a]);
        if (sn.value_at(w, t.i) < sn.value_at(w, t.j)) m |= std::uint32_t(1) << a;
      }
      return m;
    };
    std::unordered_map<std::uint32_t, Rank> gens;
    for (Rank w = 0; w < sn.size(); ++w) {
      if (!is_generator(sn.permutation(w), h)) continue;
      auto [it, inserted] = gens.emplace(mask_of(w), w);
      if (!inserted) {
        out.counterexample = {sn.permutation(w).str(), h.str(),
                              "shares its order mask with generator " +
                                  sn.permutation(it->second).str()};
        return;
      }
    }
    for (Rank w = 0; w < sn.size(); ++w) {
      ++out.pairs_checked;
      if (!gens.count(mask_of(w))) {
        out.counterexample = {sn.permutation(w).str(), h.str(),
                              "no generator matches its order mask"};
        return;
      }
    }
  }
}

void pred_degree_monotone_nongen(int k, PredicateResult& out) {
  const SnTable sn(k);
  const BruhatUpsets up(sn);
  std::vector<Permutation> perms;
  for (Rank r = 0; r < sn.size(); ++r) perms.push_back(sn.permutation(r));
  RankBitset last1(sn.size());
  const SizeCtx sctx{sn, up, perms, last1};
  for (const HessenbergFunction& h : enumerate_hessenberg(k)) {
    HCtx ctx{sctx, HessContext(sn, h)};
    const auto& closure = ctx.hc.up_closure();
    for (Rank w = 0; w < sn.size(); ++w) {
      const Rank wt = ctx.hc.corresponding_generator(w);
      if (wt == w) continue;  // generators are covered by the proved statement
      ++out.pairs_checked;
      const RankBitset V = mapped_vertices(ctx, w, wt);
      std::vector<std::int16_t> deg(sn.size(), -1);
      for_ranks(V, [&](Rank u) { deg[u] = static_cast<std::int16_t>(ctx.hc.degree_in(V, u)); });
      bool found = false;
      for_ranks(V, [&](Rank u) {
        if (found) return;
        for (std::size_t kw = 0; kw < V.bits.size() && !found; ++kw) {
          std::uint64_t bitsw = closure[u].bits[kw] & V.bits[kw];
          while (bitsw) {
            const Rank v = static_cast<Rank>(kw * 64 +
                                             static_cast<std::size_t>(std::countr_zero(bitsw)));
            bitsw &= bitsw - 1;
            if (v != u && deg[u] > deg[v]) {
              out.counterexample = {perms[w].str(), h.str(),
                                    "deg(" + perms[u].str() + ")=" + std::to_string(deg[u]) +
                                        " > deg(" + perms[v].str() + ")=" +
                                        std::to_string(deg[v]) + " along the h-order"};
              found = true;
              break;
            }
          }
        }
      });
      if (found) return;
    }
  }
}

}  // namespace

std::vector<std::pair<std::string, std::string>> predicate_catalog() {
  std::vector<std::pair<std::string, std::string>> out;
  for (const PredicateDef& d : kPredicates) out.emplace_back(d.id, d.summary);
  return out;
}

bool is_predicate_id(std::string_view id) { return find_predicate(id) != nullptr; }

PredicateResult find_counterexample(std::string_view predicate_id, int n,
                                    const VerifyOptions& opt) {
  const PredicateDef* def = find_predicate(predicate_id);
  if (!def) throw std::invalid_argument("unknown predicate id '" + std::string(predicate_id) + "'");
  if (n < 1) throw std::invalid_argument("size must be at least 1");

  PredicateResult out;
  out.predicate_id = def->id;
  out.summary = def->summary;
  out.asserted = def->asserted;
  out.n_min = 1;
  out.n_max = n;
  const auto t0 = std::chrono::steady_clock::now();
  const int cap = std::min(n, kMaxSweepN);
  if (n > kMaxSweepN) out.complete = false;

  if (predicate_id == "regular-iff-avoids-general10") {
    const VerificationReport r = verify_theorem("T-main", cap, opt);
    out.pairs_checked = r.pairs_checked;
    if (!r.failures.empty())
      out.counterexample = {r.failures[0].w, r.failures[0].h, r.failures[0].detail};
  } else if (predicate_id == "unique-corresponding-generator") {
    for (int k = 1; k <= cap && !out.counterexample; ++k) pred_unique_generator(k, out);
  } else {
    for (int k = 1; k <= cap && !out.counterexample; ++k) pred_degree_monotone_nongen(k, out);
  }
  out.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return out;
}

// ---------------------------------------------------------------------------
// Scan table
// ---------------------------------------------------------------------------

std::vector<ScanRow> scan_pairs(int n) {
  if (n < 1 || n > kMaxSweepN)
    throw std::invalid_argument("scan supports sizes 1.." + std::to_string(kMaxSweepN));
  const SnTable sn(n);
  const BruhatUpsets up(sn);
  std::vector<Permutation> perms;
  for (Rank r = 0; r < sn.size(); ++r) perms.push_back(sn.permutation(r));
  RankBitset last1(sn.size());
  for (Rank r = 0; r < sn.size(); ++r)
    if (sn.value_at(r, n) == 1) last1.set(r);
  const SizeCtx sctx{sn, up, perms, last1};

  std::vector<ScanRow> rows;
  for (const HessenbergFunction& h : enumerate_hessenberg(n)) {
    HCtx ctx{sctx, HessContext(sn, h)};
    for (Rank w = 0; w < sn.size(); ++w) {
      ScanRow row;
      row.w = perms[w].str();
      row.h = h.str();
      row.generator = ctx.hc.is_generator(w);
      const RegInfo reg = regularity_of(ctx, w);
      row.regular = reg.regular;
      row.min_deg = reg.min_deg;
      row.max_deg = reg.max_deg;
      const auto res_b = avoids_all(perms[w], h, PatternSet::generator7);
      const auto res_c = avoids_all(perms[w], h, PatternSet::general10);
      row.avoids_b = res_b.avoids;
      row.avoids_c = res_c.avoids;
      const auto& witness = !res_c.avoids ? res_c.witness : res_b.witness;
      if (witness)
        row.first_witness = std::string(pattern_name(witness->pattern)) + ":" + witness->str();
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

// ---------------------------------------------------------------------------
// Rendering
// ---------------------------------------------------------------------------

namespace {

nlohmann::ordered_json report_to_json(const VerificationReport& r, bool timings) {
  nlohmann::ordered_json j;
  j["theorem_id"] = r.theorem_id;
  j["summary"] = r.summary;
  j["status"] = r.pass() ? "PASS" : "FAIL";
  j["n_min"] = r.n_min;
  j["n_max"] = r.n_max;
  j["pairs_checked"] = r.pairs_checked;
  j["failure_count"] = r.failure_count;
  auto fails = nlohmann::ordered_json::array();
  for (const VerifyFailure& f : r.failures)
    fails.push_back({{"w", f.w}, {"h", f.h}, {"detail", f.detail}});
  j["failures"] = fails;
  j["skips"] = r.skips;
  j["skip_reason"] = r.skip_reason;
  j["complete"] = r.complete;
  j["note"] = r.note;
  if (timings) j["wall_seconds"] = r.wall_seconds;
  return j;
}

}  // namespace

std::string report_json(const VerificationReport& r, bool timings) {
  return report_to_json(r, timings).dump(2);
}

std::string report_text(const VerificationReport& r, bool timings) {
  std::string s = (r.pass() ? "PASS  " : "FAIL  ") + r.theorem_id;
  s += "  n=1.." + std::to_string(r.n_max);
  s += "  checked=" + std::to_string(r.pairs_checked);
  if (r.skips) s += "  skips=" + std::to_string(r.skips);
  if (r.failure_count) s += "  failures=" + std::to_string(r.failure_count);
  if (!r.complete) s += "  INCOMPLETE";
  if (timings) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "  %.3fs", r.wall_seconds);
    s += buf;
  }
  s += "\n";
  for (const VerifyFailure& f : r.failures)
    s += "  counterexample: w=" + f.w + " h=" + f.h + "  " + f.detail + "\n";
  return s;
}

std::string predicate_json(const PredicateResult& r, bool timings) {
  nlohmann::ordered_json j;
  j["predicate_id"] = r.predicate_id;
  j["summary"] = r.summary;
  j["asserted"] = r.asserted;
  j["status"] = r.pass() ? "PASS" : "FAIL";
  j["n_min"] = r.n_min;
  j["n_max"] = r.n_max;
  j["pairs_checked"] = r.pairs_checked;
  if (r.counterexample) {
    j["counterexample"] = {{"w", r.counterexample->w},
                           {"h", r.counterexample->h},
                           {"detail", r.counterexample->detail}};
  } else {
    j["counterexample"] = nullptr;
  }
  j["complete"] = r.complete;
  if (timings) j["wall_seconds"] = r.wall_seconds;
  return j.dump(2);
}

std::string predicate_text(const PredicateResult& r, bool timings) {
  std::string s = r.predicate_id;
  s += r.counterexample ? "  counterexample found" : "  no counterexample";
  s += "  n=1.." + std::to_string(r.n_max);
  s += "  checked=" + std::to_string(r.pairs_checked);
  if (!r.asserted) s += "  (exploratory)";
  if (!r.complete) s += "  INCOMPLETE";
  if (timings) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "  %.3fs", r.wall_seconds);
    s += buf;
  }
  s += "\n";
  if (r.counterexample)
    s += "  w=" + r.counterexample->w + " h=" + r.counterexample->h + "  " +
         r.counterexample->detail + "\n";
  return s;
}

}  // namespace hess
