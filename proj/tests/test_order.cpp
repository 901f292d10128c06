#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>
#include <stdexcept>

#include "hess/order.hpp"
#include "oracle.hpp"

using namespace hess;

TEST_CASE("bruhat_leq basics") {
  CHECK(bruhat_leq(Permutation::parse("2134"), Permutation::parse("2341")));
  CHECK(!bruhat_leq(Permutation::parse("2143"), Permutation::parse("1324")));
  CHECK(!bruhat_leq(Permutation::parse("1324"), Permutation::parse("2143")));
  for (const auto& word : oracle::all_words(4)) {
    const Permutation w{std::vector<int>(word)};
    CHECK(bruhat_leq(Permutation::identity(4), w));
    CHECK(bruhat_leq(w, Permutation::longest(4)));
  }
  CHECK_THROWS_AS(bruhat_leq(Permutation::parse("123"), Permutation::parse("1234")),
                  std::invalid_argument);
}

TEST_CASE("tableau criterion matches the closure oracle, S_4 exhaustive") {
  const oracle::BruhatClosure closure(4);
  const auto& words = closure.words();
  for (const auto& u : words)
    for (const auto& v : words) {
      const Permutation pu{std::vector<int>(u)}, pv{std::vector<int>(v)};
      CHECK(bruhat_leq(pu, pv) == closure.leq(u, v));
    }
}

TEST_CASE("non-descent cuts agree with all cuts, exhaustive S_4 and sampled S_6") {
  for (const auto& u : oracle::all_words(4))
    for (const auto& v : oracle::all_words(4)) {
      const Permutation pu{std::vector<int>(u)}, pv{std::vector<int>(v)};
      CHECK(bruhat_leq(pu, pv) == bruhat_leq_all_prefixes(pu, pv));
    }
  std::mt19937_64 rng(20240817);
  std::uniform_int_distribution<std::uint64_t> pick(0, factorial(6) - 1);
  for (int k = 0; k < 20000; ++k) {
    const Permutation u = lehmer_unrank(6, pick(rng));
    const Permutation v = lehmer_unrank(6, pick(rng));
    CHECK(bruhat_leq(u, v) == bruhat_leq_all_prefixes(u, v));
  }
}

TEST_CASE("comparison restricted to disagreeing positions") {
  const Permutation u = Permutation::parse("2134");
  const Permutation v = Permutation::parse("3124");  // u(1,3)
  const int pos[] = {1, 3};
  CHECK(bruhat_compare_positions(u, v, pos));
  CHECK(!bruhat_compare_positions(v, u, pos));
  CHECK_THROWS_AS(bruhat_compare_positions(u, Permutation::parse("2143"), pos),
                  std::invalid_argument);

  // agreeing pairs in S_5: scramble a chosen position set and cross-check
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 2000; ++trial) {
    const Permutation base = lehmer_unrank(5, rng() % factorial(5));
    std::vector<int> positions;
    for (int i = 1; i <= 5; ++i)
      if (rng() % 2) positions.push_back(i);
    if (positions.size() < 2) continue;
    std::vector<int> word = base.word();
    std::vector<int> vals;
    for (int p : positions) vals.push_back(word[static_cast<size_t>(p - 1)]);
    std::shuffle(vals.begin(), vals.end(), rng);
    for (size_t t = 0; t < positions.size(); ++t)
      word[static_cast<size_t>(positions[t] - 1)] = vals[t];
    const Permutation other{std::move(word)};
    CHECK(bruhat_compare_positions(base, other, positions) == bruhat_leq(base, other));
  }
}

TEST_CASE("h-order is a refinement-sensitive suborder") {
  CHECK(bruhat_leq(Permutation::parse("54132"), Permutation::parse("54231")));
  CHECK(!h_bruhat_leq(Permutation::parse("54132"), Permutation::parse("54231"),
                      HessenbergFunction::parse("4,4,4,5,5")));
  CHECK(!h_bruhat_leq(Permutation::parse("54231"), Permutation::parse("54321"),
                      HessenbergFunction::parse("2,3,3,5,5")));

  const auto full = HessenbergFunction::full(4);
  for (const auto& u : oracle::all_words(4))
    for (const auto& v : oracle::all_words(4)) {
      const Permutation pu{std::vector<int>(u)}, pv{std::vector<int>(v)};
      CHECK(h_bruhat_leq(pu, pv, full) == bruhat_leq(pu, pv));
    }
}

TEST_CASE("h-order implies Bruhat order and is antisymmetric, S_4 all h") {
  for (const auto& h : enumerate_hessenberg(4)) {
    for (const auto& u : oracle::all_words(4))
      for (const auto& v : oracle::all_words(4)) {
        const Permutation pu{std::vector<int>(u)}, pv{std::vector<int>(v)};
        const bool uv = h_bruhat_leq(pu, pv, h);
        if (uv) CHECK(bruhat_leq(pu, pv));
        if (uv && h_bruhat_leq(pv, pu, h)) CHECK(pu == pv);
      }
  }
}

TEST_CASE("bruhat_interval") {
  const auto ivl = bruhat_interval(Permutation::parse("2134"), Permutation::longest(4));
  CHECK(ivl.size() == 18);
  for (const Permutation& u : ivl.members()) CHECK(u(1) >= 2);
  CHECK(ivl.contains(Permutation::parse("2134")));
  CHECK(!ivl.contains(Permutation::parse("1234")));

  const Permutation w = Permutation::parse("3142");
  CHECK(bruhat_interval(w, w).size() == 1);
  CHECK(bruhat_interval(Permutation::identity(4), Permutation::longest(4)).size() == 24);
  // incomparable endpoints give the empty member set
  CHECK(bruhat_interval(Permutation::parse("2143"), Permutation::parse("1324")).size() == 0);
}

TEST_CASE("h_interval") {
  const auto h = HessenbergFunction::parse("3,3,4,4");
  const Permutation w = Permutation::parse("2134");
  const auto hi = h_interval(w, Permutation::longest(4), h);
  const auto bi = bruhat_interval(w, Permutation::longest(4));
  CHECK(hi.ranks() == bi.ranks());

  CHECK(h_interval(w, w, h).size() == 1);
  const auto full = HessenbergFunction::full(4);
  for (const auto& u : oracle::all_words(4)) {
    const Permutation pu{std::vector<int>(u)};
    CHECK(h_interval(pu, Permutation::longest(4), full).ranks() ==
          bruhat_interval(pu, Permutation::longest(4)).ranks());
  }
}

TEST_CASE("chain property") {
  const Permutation u = Permutation::parse("2134");
  CHECK(check_chain_property(u, u));
  CHECK(check_chain_property(u, Permutation::longest(4)));
  CHECK_THROWS_AS(
      check_chain_property(Permutation::parse("2143"), Permutation::parse("1324")),
      std::invalid_argument);

  // h-version, exhaustive over S_4 and every Hessenberg function
  for (const auto& h : enumerate_hessenberg(4)) {
    for (const auto& uw : oracle::all_words(4))
      for (const auto& vw : oracle::all_words(4)) {
        const Permutation pu{std::vector<int>(uw)}, pv{std::vector<int>(vw)};
        if (!h_bruhat_leq(pu, pv, h)) continue;
        CHECK(check_chain_property(pu, pv, h));
      }
  }
}

TEST_CASE("saturated chains raise length by one at every step") {
  const auto h = HessenbergFunction::parse("3,3,4,4");
  const auto chain = saturated_chain(Permutation::parse("2134"), Permutation::longest(4), &h);
  REQUIRE(chain.has_value());
  CHECK(chain->front() == Permutation::parse("2134"));
  CHECK(chain->back() == Permutation::longest(4));
  for (size_t k = 1; k < chain->size(); ++k) {
    CHECK(length((*chain)[k]) == length((*chain)[k - 1]) + 1);
    // each step is one admissible transposition
    int diff = 0;
    for (int i = 1; i <= 4; ++i)
      if ((*chain)[k](i) != (*chain)[k - 1](i)) ++diff;
    CHECK(diff == 2);
  }
}
