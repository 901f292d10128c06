#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <stdexcept>

#include "hess/patterns.hpp"
#include "hess/verify.hpp"
#include "oracle.hpp"

using namespace hess;

TEST_CASE("names round-trip") {
  CHECK(all_patterns().size() == 11);
  CHECK(pattern_set(PatternSet::generator7).size() == 7);
  CHECK(pattern_set(PatternSet::general10).size() == 10);
  for (Pattern p : all_patterns()) CHECK(pattern_from_name(pattern_name(p)) == p);
  CHECK(!pattern_from_name("1234h").has_value());
  // the ten-pattern set swaps 2413h for the four 5-patterns
  bool has2413 = false;
  for (Pattern p : pattern_set(PatternSet::general10))
    if (p == Pattern::p2413h) has2413 = true;
  CHECK(!has2413);
}

TEST_CASE("worked witnesses") {
  const auto h = HessenbergFunction::parse("3,3,4,4");
  const auto hit = find_pattern(Permutation::parse("2134"), h, Pattern::p2134h);
  REQUIRE(hit.has_value());
  CHECK(hit->indices == std::vector<int>{1, 2, 3, 4});
  CHECK(hit->str() == "(1,2,3,4)");

  CHECK(!find_pattern(Permutation::parse("2143"), h, Pattern::p2143h));
  const auto full_hit =
      find_pattern(Permutation::parse("2143"), HessenbergFunction::full(4), Pattern::p2143h);
  REQUIRE(full_hit.has_value());
  CHECK(full_hit->indices == std::vector<int>{1, 2, 3, 4});
}

TEST_CASE("avoids_all") {
  const auto h = HessenbergFunction::parse("3,3,4,4");
  const auto res = avoids_all(Permutation::parse("2134"), h, PatternSet::generator7);
  CHECK(!res.avoids);
  REQUIRE(res.witness.has_value());
  CHECK(res.witness->pattern == Pattern::p2134h);

  for (const auto& hf : enumerate_hessenberg(5)) {
    CHECK(avoids_all(Permutation::longest(5), hf, PatternSet::generator7).avoids);
    CHECK(avoids_all(Permutation::longest(5), hf, PatternSet::general10).avoids);
  }
}

TEST_CASE("the permutohedral function admits no pattern at all, n <= 5") {
  for (int n = 1; n <= 5; ++n) {
    const auto h = HessenbergFunction::permutohedral(n);
    for (const auto& word : oracle::all_words(n))
      CHECK(avoids_all(Permutation{std::vector<int>(word)}, h, PatternSet::general10).avoids);
  }
}

TEST_CASE("at full h only 2143h and 1324h can appear, and they reduce to classical containment") {
  const auto h = HessenbergFunction::full(5);
  const std::vector<int> c2143{2, 1, 4, 3}, c1324{1, 3, 2, 4};
  for (const auto& word : oracle::all_words(5)) {
    const Permutation w{std::vector<int>(word)};
    for (Pattern p : all_patterns()) {
      if (p == Pattern::p2143h || p == Pattern::p1324h) continue;
      CHECK(!find_pattern(w, h, p).has_value());
    }
    CHECK(find_pattern(w, h, Pattern::p2143h).has_value() ==
          oracle::contains_classical(word, c2143));
    CHECK(find_pattern(w, h, Pattern::p1324h).has_value() ==
          oracle::contains_classical(word, c1324));
    CHECK(avoids_all(w, h, PatternSet::general10).avoids ==
          (!oracle::contains_classical(word, c2143) && !oracle::contains_classical(word, c1324)));
  }
}

TEST_CASE("table evaluator matches the hand transcriptions, exhaustive n = 4 all h") {
  for (const auto& h : enumerate_hessenberg(4))
    for (const auto& word : oracle::all_words(4)) {
      const Permutation w{std::vector<int>(word)};
      for (Pattern p : all_patterns())
        CHECK(find_pattern(w, h, p).has_value() == oracle::hand_checker(pattern_name(p))(w, h));
    }
}

TEST_CASE("witness is the lexicographically smallest tuple") {
  // 21435 contains 2143h at (1,2,3,4) and (1,2,3,5) under the full function.
  const auto h = HessenbergFunction::full(5);
  const auto hit = find_pattern(Permutation::parse("21435"), h, Pattern::p2143h);
  REQUIRE(hit.has_value());
  CHECK(hit->indices == std::vector<int>{1, 2, 3, 4});
}

TEST_CASE("size mismatch is an argument error") {
  CHECK_THROWS_AS(
      find_pattern(Permutation::parse("123"), HessenbergFunction::full(4), Pattern::p2143h),
      std::invalid_argument);
}

TEST_CASE("seven-set avoidance equals the 25314h variant for generators, n <= 6") {
  const auto r = hess::verify_theorem("R-412", 6);
  CHECK(r.pass());
}

TEST_CASE("five-pattern example") {
  // 25314 itself under the complete chain of constraints: h = (3,4,5,5,5)
  // gives k=3 <= h(1)=3 < l=4 <= h(2)=4 < m=5 <= h(3)=5.
  const auto h = HessenbergFunction::parse("3,4,5,5,5");
  const auto hit = find_pattern(Permutation::parse("25314"), h, Pattern::p25314h);
  REQUIRE(hit.has_value());
  CHECK(hit->indices == std::vector<int>{1, 2, 3, 4, 5});
  // but not when h(1) is too small for the third position
  CHECK(!find_pattern(Permutation::parse("25314"), HessenbergFunction::parse("2,4,5,5,5"),
                      Pattern::p25314h));
}
