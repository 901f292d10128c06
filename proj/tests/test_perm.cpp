#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <stdexcept>

#include "hess/perm.hpp"
#include "oracle.hpp"

using namespace hess;

TEST_CASE("apply_transposition swaps values at positions") {
  CHECK(apply_transposition(Permutation::parse("1234"), Transposition(2, 4)).str() == "1432");
  CHECK(apply_transposition(Permutation::parse("2134"), Transposition(3, 4)).str() == "2143");
  CHECK_THROWS_AS(apply_transposition(Permutation::parse("123"), Transposition(2, 4)),
                  std::invalid_argument);
  CHECK_THROWS_AS(Transposition(3, 3), std::invalid_argument);
}

TEST_CASE("applying the same transposition twice is the identity, S_4 exhaustive") {
  for (const auto& word : oracle::all_words(4)) {
    const Permutation w{std::vector<int>(word)};
    for (int i = 1; i <= 4; ++i)
      for (int j = i + 1; j <= 4; ++j) {
        const Transposition t(i, j);
        CHECK(apply_transposition(apply_transposition(w, t), t) == w);
      }
  }
}

TEST_CASE("inverse") {
  CHECK(inverse(Permutation::parse("2314")).str() == "3124");
  CHECK(inverse(Permutation::identity(5)) == Permutation::identity(5));
  CHECK(inverse(Permutation::longest(5)) == Permutation::longest(5));
  for (const auto& word : oracle::all_words(4)) {
    const Permutation w{std::vector<int>(word)};
    CHECK(inverse(inverse(w)) == w);
  }
}

TEST_CASE("length counts inversions") {
  CHECK(length(Permutation::parse("2143")) == 2);
  CHECK(length(Permutation::parse("234651")) == 6);
  for (int n = 1; n <= 6; ++n) CHECK(length(Permutation::longest(n)) == n * (n - 1) / 2);
}

TEST_CASE("length is invariant under inversion, S_6 exhaustive") {
  for (const auto& word : oracle::all_words(6)) {
    const Permutation w{std::vector<int>(word)};
    CHECK(length(w) == length(inverse(w)));
  }
}

TEST_CASE("a transposition changes length by an odd amount, S_4 exhaustive") {
  for (const auto& word : oracle::all_words(4)) {
    const Permutation w{std::vector<int>(word)};
    for (int i = 1; i <= 4; ++i)
      for (int j = i + 1; j <= 4; ++j) {
        const int d = length(apply_transposition(w, Transposition(i, j))) - length(w);
        CHECK((d % 2 + 2) % 2 == 1);
      }
  }
}

TEST_CASE("prefix_set") {
  CHECK(prefix_set(Permutation::parse("2134"), 2) == std::vector<int>{1, 2});
  CHECK(prefix_set(Permutation::parse("2134"), 1) == std::vector<int>{2});
  CHECK(prefix_set(Permutation::parse("234651"), 4) == std::vector<int>{2, 3, 4, 6});
  CHECK_THROWS_AS(prefix_set(Permutation::parse("2134"), 5), std::invalid_argument);
  for (const auto& word : oracle::all_words(4)) {
    const Permutation w{std::vector<int>(word)};
    CHECK(prefix_set(w, 4) == std::vector<int>{1, 2, 3, 4});
  }
}

TEST_CASE("descent_set") {
  CHECK(descent_set(Permutation::identity(5)).empty());
  CHECK(descent_set(Permutation::parse("2143")) == std::vector<int>{1, 3});
  CHECK(descent_set(Permutation::longest(4)) == std::vector<int>{1, 2, 3});
}

TEST_CASE("classical pattern containment") {
  const auto hit = contains_classical_pattern(Permutation::parse("2143"), Permutation::parse("2143"));
  REQUIRE(hit.has_value());
  CHECK(*hit == std::vector<int>{1, 2, 3, 4});
  CHECK(contains_classical_pattern(Permutation::parse("4651273"), Permutation::parse("1324"))
            .has_value());
  CHECK(!contains_classical_pattern(Permutation::parse("1234"), Permutation::parse("21")));
}

TEST_CASE("classical containment matches the brute-force scan, S_5 x S_3") {
  const auto patterns = oracle::all_words(3);
  for (const auto& word : oracle::all_words(5)) {
    const Permutation w{std::vector<int>(word)};
    for (const auto& pword : patterns) {
      const Permutation p{std::vector<int>(pword)};
      CHECK(contains_classical_pattern(w, p).has_value() ==
            oracle::contains_classical(word, pword));
    }
  }
}

TEST_CASE("witness is the lexicographically smallest index tuple") {
  // 3142 contains 21 at (1,2),(1,4),(3,4); the reported witness must be (1,2).
  const auto hit = contains_classical_pattern(Permutation::parse("3142"), Permutation::parse("21"));
  REQUIRE(hit.has_value());
  CHECK(*hit == std::vector<int>{1, 2});
}

TEST_CASE("lehmer rank and unrank") {
  CHECK(lehmer_rank(Permutation::identity(5)) == 0);
  CHECK(lehmer_rank(Permutation::longest(5)) == factorial(5) - 1);
  for (std::uint64_t r = 0; r < factorial(5); ++r)
    CHECK(lehmer_rank(lehmer_unrank(5, r)) == r);
  // rank order is lexicographic order of the words
  CHECK(lehmer_unrank(4, 1).str() == "1243");
}

TEST_CASE("parsing and formatting") {
  CHECK(Permutation::parse("2134").word() == std::vector<int>{2, 1, 3, 4});
  CHECK(Permutation::parse("10,2,3,4,5,6,7,8,9,1").size() == 10);
  CHECK(Permutation::parse("10,2,3,4,5,6,7,8,9,1").str() == "10,2,3,4,5,6,7,8,9,1");
  CHECK_THROWS_AS(Permutation::parse("1224"), std::invalid_argument);
  CHECK_THROWS_AS(Permutation::parse("12a4"), std::invalid_argument);
  CHECK_THROWS_AS(Permutation::parse(""), std::invalid_argument);
  CHECK_THROWS_AS(Permutation::parse("1,2,x"), std::invalid_argument);
  CHECK_THROWS_AS(Permutation::parse("135"), std::invalid_argument);  // not a bijection on [3]
}
