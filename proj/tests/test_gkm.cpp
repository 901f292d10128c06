#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <map>
#include <stdexcept>

#include "hess/gkm.hpp"
#include "oracle.hpp"

using namespace hess;

namespace {

std::vector<Transposition> tlist(std::initializer_list<std::pair<int, int>> pairs) {
  std::vector<Transposition> out;
  for (auto [i, j] : pairs) out.emplace_back(i, j);
  return out;
}

}  // namespace

TEST_CASE("gamma_h_neighbors") {
  CHECK(gamma_h_neighbors(Permutation::parse("1234"), HessenbergFunction::minimal(4)).empty());

  const auto full3 = gamma_h_neighbors(Permutation::identity(3), HessenbergFunction::full(3));
  REQUIRE(full3.size() == 3);
  CHECK(full3[0].second.str() == "213");
  CHECK(full3[1].second.str() == "321");
  CHECK(full3[2].second.str() == "132");

  const auto restricted =
      gamma_h_neighbors(Permutation::identity(3), HessenbergFunction::parse("2,3,3"));
  REQUIRE(restricted.size() == 2);
  CHECK(restricted[0].second.str() == "213");
  CHECK(restricted[1].second.str() == "132");
}

TEST_CASE("the ambient graph is d_h-regular, S_4 all h") {
  for (const auto& h : enumerate_hessenberg(4))
    for (const auto& word : oracle::all_words(4)) {
      const Permutation w{std::vector<int>(word)};
      CHECK(gamma_h_neighbors(w, h).size() == static_cast<size_t>(dimension_dh(h)));
    }
}

TEST_CASE("fixed points of a generator form the upper Bruhat interval") {
  const auto h = HessenbergFunction::parse("3,3,4,4");
  const auto fp = fixed_points(Permutation::parse("2134"), h);
  CHECK(fp.size() == 18);
  for (const Permutation& u : fp) CHECK(bruhat_leq(Permutation::parse("2134"), u));
}

TEST_CASE("fixed points of a non-generator need not form an interval") {
  const auto h = HessenbergFunction::parse("3,3,4,4");
  const auto fp = fixed_points(Permutation::parse("1324"), h);
  bool has_w0 = false, has_1432 = false;
  for (const Permutation& u : fp) {
    if (u == Permutation::longest(4)) has_w0 = true;
    if (u == Permutation::parse("1432")) has_1432 = true;
  }
  CHECK(has_w0);
  CHECK(!has_1432);
  CHECK(bruhat_leq(Permutation::parse("1324"), Permutation::parse("1432")));
}

TEST_CASE("fixed-point sets of w and its corresponding generator have equal size, n = 5") {
  for (const auto& h : enumerate_hessenberg(5))
    for (std::uint64_t r = 0; r < factorial(5); ++r) {
      const Permutation w = lehmer_unrank(5, r);
      CHECK(fixed_points(w, h).size() == fixed_points(corresponding_generator(w, h), h).size());
    }
}

TEST_CASE("degenerate bases") {
  const auto h = HessenbergFunction::parse("3,3,4,4");
  const auto top = induced_subgraph(Permutation::longest(4), h);
  CHECK(top.size() == 1);
  CHECK(top.edges().empty());
  CHECK(is_regular(top).regular);

  const auto full = induced_subgraph(Permutation::identity(3), HessenbergFunction::full(3));
  CHECK(full.size() == 6);
  const auto reg = is_regular(full);
  CHECK(reg.regular);
  CHECK(reg.min_degree == 3);
}

TEST_CASE("irregular example with degree classes") {
  const auto g = induced_subgraph(Permutation::parse("2134"), HessenbergFunction::parse("3,3,4,4"));
  REQUIRE(g.size() == 18);
  const auto reg = is_regular(g);
  CHECK(!reg.regular);
  CHECK(reg.min_degree == 3);
  CHECK(reg.max_degree == 4);
  std::map<int, int> hist;
  const auto verts = g.vertices();
  const auto degs = g.degrees();
  std::vector<std::string> deg4;
  for (size_t k = 0; k < verts.size(); ++k) {
    ++hist[degs[k]];
    if (degs[k] == 4) deg4.push_back(verts[k].str());
  }
  CHECK(hist[3] == 12);
  CHECK(hist[4] == 6);
  CHECK(deg4 == std::vector<std::string>{"2341", "2431", "3241", "3421", "4231", "4321"});
}

TEST_CASE("is_regular rejects the empty graph") {
  const InducedSubgraph empty(Permutation::parse("1234"), HessenbergFunction::full(4), {});
  CHECK_THROWS_AS(is_regular(empty), std::invalid_argument);
}

TEST_CASE("edge sets at specific vertices") {
  const auto h = HessenbergFunction::parse("3,3,4,4");
  const Permutation w = Permutation::parse("2134");
  CHECK(edge_set(Permutation::parse("2314"), w, h).transpositions ==
        tlist({{1, 2}, {2, 3}, {3, 4}}));
  CHECK(edge_set(Permutation::parse("2341"), w, h).transpositions ==
        tlist({{1, 2}, {1, 3}, {2, 3}, {3, 4}}));
  CHECK(edge_set(w, w, h).transpositions == tlist({{1, 3}, {2, 3}, {3, 4}}));
  CHECK(edge_set(w, w, h).transpositions.size() ==
        static_cast<size_t>(dimension_dh(h) - ell_h(w, h)));

  CHECK_THROWS_AS(edge_set(Permutation::parse("1234"), w, h), std::invalid_argument);
  CHECK_THROWS_AS(edge_set(w, Permutation::parse("1324"), h), std::invalid_argument);
}

TEST_CASE("base degree of a generator equals d_h minus ell_h, n = 5") {
  for (const auto& h : enumerate_hessenberg(5))
    for (const Permutation& w : generators(h))
      CHECK(edge_set(w, w, h).transpositions.size() ==
            static_cast<size_t>(dimension_dh(h) - ell_h(w, h)));
}

TEST_CASE("phi on the worked examples") {
  const auto h = HessenbergFunction::parse("3,3,4,4");
  const Permutation w = Permutation::parse("2134");

  const PhiMap m1 = phi(Permutation::parse("3124"), Permutation::parse("3214"), w, h);
  REQUIRE(m1.size() == 3);
  std::map<std::string, std::string> as_map;
  for (const auto& [s, d] : m1) as_map[s.str()] = d.str();
  CHECK(as_map["(1,3)"] == "(1,2)");
  CHECK(as_map["(2,3)"] == "(2,3)");
  CHECK(as_map["(3,4)"] == "(3,4)");

  const PhiMap m2 = phi(Permutation::parse("2314"), Permutation::parse("2341"), w, h);
  for (const auto& [s, d] : m2) CHECK(s == d);

  CHECK_THROWS_AS(phi(Permutation::parse("3214"), Permutation::parse("3124"), w, h),
                  std::invalid_argument);  // length decreases
  CHECK_THROWS_AS(phi(Permutation::parse("2314"), Permutation::parse("2314"), w, h),
                  std::invalid_argument);  // u = v
}

TEST_CASE("phi is well-defined and injective for every edge, S_4 all h") {
  for (const auto& h : enumerate_hessenberg(4)) {
    for (const Permutation& w : generators(h)) {
      for (const Permutation& u : fixed_points(w, h)) {
        for (const Transposition& t : edge_set(u, w, h).transpositions) {
          const Permutation v = apply_transposition(u, t);
          if (length(v) <= length(u)) continue;
          const EdgeSet ev = edge_set(v, w, h);
          std::vector<Transposition> image;
          for (const auto& [src, dst] : phi(u, v, w, h)) {
            CHECK(std::binary_search(ev.transpositions.begin(), ev.transpositions.end(), dst));
            image.push_back(dst);
          }
          std::sort(image.begin(), image.end());
          CHECK(std::adjacent_find(image.begin(), image.end()) == image.end());
        }
      }
    }
  }
}

TEST_CASE("phi composed along a saturated chain injects E(w) into E(w0), S_4 all h") {
  for (const auto& h : enumerate_hessenberg(4)) {
    const Permutation w0 = Permutation::longest(4);
    for (const Permutation& w : generators(h)) {
      const auto chain = saturated_chain(w, w0, &h);
      REQUIRE(chain.has_value());
      // follow each starting transposition through the chain of maps
      std::vector<Transposition> image = edge_set(w, w, h).transpositions;
      for (size_t step = 1; step < chain->size(); ++step) {
        const PhiMap m = phi((*chain)[step - 1], (*chain)[step], w, h);
        for (Transposition& t : image) {
          for (const auto& [src, dst] : m)
            if (src == t) {
              t = dst;
              break;
            }
        }
      }
      const EdgeSet top = edge_set(w0, w, h);
      std::vector<Transposition> sorted_image = image;
      std::sort(sorted_image.begin(), sorted_image.end());
      CHECK(std::adjacent_find(sorted_image.begin(), sorted_image.end()) == sorted_image.end());
      for (const Transposition& t : sorted_image)
        CHECK(std::binary_search(top.transpositions.begin(), top.transpositions.end(), t));
    }
  }
}

TEST_CASE("translation isomorphism") {
  const auto h = HessenbergFunction::parse("3,3,4,4");
  CHECK(isomorphism_check(Permutation::parse("1324"), h));
  CHECK(corresponding_generator(Permutation::parse("1324"), h).str() == "1423");
  for (const auto& hf : enumerate_hessenberg(4))
    for (const auto& word : oracle::all_words(4))
      CHECK(isomorphism_check(Permutation{std::vector<int>(word)}, hf));
}

TEST_CASE("dot export is deterministic and carries the marks") {
  const auto g = induced_subgraph(Permutation::parse("2134"), HessenbergFunction::parse("3,3,4,4"));
  const std::string dot = to_dot(g);
  CHECK(dot == to_dot(g));
  CHECK(dot.find("\"2134\" [degree=3, peripheries=2]") != std::string::npos);
  CHECK(dot.find("\"4321\" [degree=4, style=filled, fillcolor=black, fontcolor=white, peripheries=2]") !=
        std::string::npos);
  CHECK(dot.find("excluded") == std::string::npos);

  const std::string with_excluded = to_dot(g, true);
  CHECK(with_excluded.find("\"1234\" [style=dashed, color=gray, excluded=true]") !=
        std::string::npos);
  size_t excluded_count = 0;
  for (size_t pos = 0; (pos = with_excluded.find("excluded=true", pos)) != std::string::npos; ++pos)
    ++excluded_count;
  CHECK(excluded_count == 6);
}
