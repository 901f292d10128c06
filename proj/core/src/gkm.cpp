#include "hess/gkm.hpp"

#include <algorithm>
#include <stdexcept>

namespace hess {

namespace {

[[noreturn]] void bad_arg(const std::string& msg) { throw std::invalid_argument(msg); }

void require_same_size(const Permutation& w, const HessenbergFunction& h) {
  if (w.size() != h.size()) bad_arg("permutation and Hessenberg function sizes differ");
}

}  // namespace

std::vector<std::pair<Transposition, Permutation>> gamma_h_neighbors(
    const Permutation& u, const HessenbergFunction& h) {
  require_same_size(u, h);
  std::vector<std::pair<Transposition, Permutation>> out;
  for (int i = 1; i <= u.size(); ++i)
    for (int j = i + 1; j <= h(i); ++j) {
      Transposition t(i, j);
      out.emplace_back(t, apply_transposition(u, t));
    }
  return out;
}

std::vector<Permutation> fixed_points(const Permutation& w, const HessenbergFunction& h) {
  require_same_size(w, h);
  const Permutation w0 = Permutation::longest(w.size());
  if (is_generator(w, h)) return bruhat_interval(w, w0).members();

  const Permutation wt = corresponding_generator(w, h);
  const Permutation sigma = compose(w, inverse(wt));
  std::vector<std::uint64_t> ranks;
  for (const Permutation& u : bruhat_interval(wt, w0).members())
    ranks.push_back(lehmer_rank(compose(sigma, u)));
  std::sort(ranks.begin(), ranks.end());
  std::vector<Permutation> out;
  out.reserve(ranks.size());
  for (std::uint64_t r : ranks) out.push_back(lehmer_unrank(w.size(), r));
  return out;
}

InducedSubgraph::InducedSubgraph(Permutation base, HessenbergFunction h,
                                 std::vector<std::uint64_t> sorted_ranks)
    : base_(std::move(base)), h_(std::move(h)), ranks_(std::move(sorted_ranks)) {}

bool InducedSubgraph::contains(const Permutation& u) const {
  return std::binary_search(ranks_.begin(), ranks_.end(), lehmer_rank(u));
}

std::vector<Permutation> InducedSubgraph::vertices() const {
  std::vector<Permutation> out;
  out.reserve(ranks_.size());
  for (std::uint64_t r : ranks_) out.push_back(lehmer_unrank(n(), r));
  return out;
}

int InducedSubgraph::degree(const Permutation& u) const {
  if (!contains(u)) bad_arg("vertex not in subgraph");
  int deg = 0;
  for (int i = 1; i <= n(); ++i)
    for (int j = i + 1; j <= h_(i); ++j)
      if (std::binary_search(ranks_.begin(), ranks_.end(),
                             lehmer_rank(apply_transposition(u, Transposition(i, j)))))
        ++deg;
  return deg;
}

std::vector<int> InducedSubgraph::degrees() const {
  std::vector<int> out;
  out.reserve(ranks_.size());
  for (std::uint64_t r : ranks_) out.push_back(degree(lehmer_unrank(n(), r)));
  return out;
}

std::vector<std::pair<std::uint64_t, std::uint64_t>> InducedSubgraph::edges() const {
  std::vector<std::pair<std::uint64_t, std::uint64_t>> out;
  for (std::uint64_t r : ranks_) {
    const Permutation u = lehmer_unrank(n(), r);
    for (int i = 1; i <= n(); ++i)
      for (int j = i + 1; j <= h_(i); ++j) {
        const std::uint64_t s = lehmer_rank(apply_transposition(u, Transposition(i, j)));
        if (s > r && std::binary_search(ranks_.begin(), ranks_.end(), s)) out.emplace_back(r, s);
      }
  }
  std::sort(out.begin(), out.end());
  return out;
}

InducedSubgraph induced_subgraph(const Permutation& w, const HessenbergFunction& h) {
  std::vector<std::uint64_t> ranks;
  for (const Permutation& u : fixed_points(w, h)) ranks.push_back(lehmer_rank(u));
  return InducedSubgraph(w, h, std::move(ranks));
}

RegularityResult is_regular(const InducedSubgraph& g) {
  if (g.size() == 0) bad_arg("regularity of an empty graph is undefined");
  RegularityResult r;
  const std::vector<int> degs = g.degrees();
  r.min_degree = *std::min_element(degs.begin(), degs.end());
  r.max_degree = *std::max_element(degs.begin(), degs.end());
  r.regular = (r.min_degree == r.max_degree);
  return r;
}

EdgeSet edge_set(const Permutation& u, const Permutation& w, const HessenbergFunction& h) {
  require_same_size(w, h);
  require_same_size(u, h);
  if (!is_generator(w, h)) bad_arg("edge_set requires a generator base");
  if (!bruhat_leq(w, u)) bad_arg("u is not a fixed point of (w, h)");
  EdgeSet e;
  e.at = u;
  for (int i = 1; i <= u.size(); ++i)
    for (int j = i + 1; j <= h(i); ++j) {
      Transposition t(i, j);
      if (bruhat_leq(w, apply_transposition(u, t))) e.transpositions.push_back(t);
    }
  return e;
}

PhiMap phi(const Permutation& u, const Permutation& v, const Permutation& w,
           const HessenbergFunction& h) {
  require_same_size(u, h);
  require_same_size(v, h);
  if (!is_generator(w, h)) bad_arg("phi requires a generator base");
  if (!bruhat_leq(w, u) || !bruhat_leq(w, v)) bad_arg("u, v must be fixed points of (w, h)");

  int a = 0, b = 0;
  for (int i = 1; i <= u.size(); ++i)
    if (u(i) != v(i)) {
      if (a == 0)
        a = i;
      else if (b == 0)
        b = i;
      else
        bad_arg("v is not u times a single transposition");
    }
  if (b == 0) bad_arg("u and v must differ");
  if (v(a) != u(b) || v(b) != u(a)) bad_arg("v is not u times a single transposition");
  if (b > h(a)) bad_arg("(a,b) is not h-admissible");
  if (length(u) >= length(v)) bad_arg("phi requires length(u) < length(v)");

  const EdgeSet eu = edge_set(u, w, h);
  auto in_eu = [&eu](int i, int j) {
    return std::binary_search(eu.transpositions.begin(), eu.transpositions.end(),
                              Transposition(i, j));
  };
  if (!in_eu(a, b)) bad_arg("(a,b) is not in the edge set of u");

  PhiMap out;
  for (const Transposition& t : eu.transpositions) {
    Transposition image = t;
    if (t.i == a && t.j > b && !in_eu(b, t.j))
      image = Transposition(b, t.j);
    else if (t.i < a && t.j == b && !in_eu(t.i, a))
      image = Transposition(t.i, a);
    out.emplace_back(t, image);
  }
  return out;
}

bool isomorphism_check(const Permutation& w, const HessenbergFunction& h) {
  require_same_size(w, h);
  const Permutation wt = corresponding_generator(w, h);
  const Permutation sigma = compose(w, inverse(wt));
  const std::vector<Permutation> dom = fixed_points(wt, h);
  const InducedSubgraph target = induced_subgraph(w, h);

  // Bijectivity onto the vertex set of the target graph.
  std::vector<std::uint64_t> mapped;
  for (const Permutation& u : dom) mapped.push_back(lehmer_rank(compose(sigma, u)));
  std::sort(mapped.begin(), mapped.end());
  if (mapped != target.ranks()) return false;

  // Edge preservation in both directions: {u, u(i,j)} is an edge of the
  // source iff the translated pair is an edge of the target.
  std::vector<std::uint64_t> dom_ranks;
  for (const Permutation& u : dom) dom_ranks.push_back(lehmer_rank(u));
  std::sort(dom_ranks.begin(), dom_ranks.end());
  for (const Permutation& u : dom) {
    const Permutation su = compose(sigma, u);
    for (int i = 1; i <= w.size(); ++i)
      for (int j = i + 1; j <= h(i); ++j) {
        Transposition t(i, j);
        const bool src = std::binary_search(dom_ranks.begin(), dom_ranks.end(),
                                            lehmer_rank(apply_transposition(u, t)));
        const bool dst = target.contains(apply_transposition(su, t));
        if (src != dst) return false;
      }
  }
  return true;
}

std::string to_dot(const InducedSubgraph& g, bool show_excluded) {
  const std::vector<Permutation> verts = g.vertices();
  const std::vector<int> degs = g.degrees();
  int min_deg = 0, max_deg = 0;
  if (!verts.empty()) {
    min_deg = *std::min_element(degs.begin(), degs.end());
    max_deg = *std::max_element(degs.begin(), degs.end());
  }
  const std::uint64_t base_rank = lehmer_rank(g.base());
  const std::uint64_t w0_rank = factorial(g.n()) - 1;

  std::string s = "graph hessenberg_schubert {\n";
  s += "  graph [base=\"" + g.base().str() + "\", hess=\"" + g.h().str() +
       "\", regular=" + ((min_deg == max_deg) ? "true" : "false") +
       ", min_degree=" + std::to_string(min_deg) +
       ", max_degree=" + std::to_string(max_deg) + "];\n";
  s += "  node [shape=circle];\n";
  for (std::size_t k = 0; k < verts.size(); ++k) {
    s += "  \"" + verts[k].str() + "\" [degree=" + std::to_string(degs[k]);
    if (degs[k] > min_deg) s += ", style=filled, fillcolor=black, fontcolor=white";
    const std::uint64_t r = g.ranks()[k];
    if (r == base_rank || r == w0_rank) s += ", peripheries=2";
    s += "];\n";
  }
  if (show_excluded) {
    for (std::uint64_t r = 0; r < factorial(g.n()); ++r) {
      if (std::binary_search(g.ranks().begin(), g.ranks().end(), r)) continue;
      s += "  \"" + lehmer_unrank(g.n(), r).str() + "\" [style=dashed, color=gray, excluded=true];\n";
    }
  }
  for (auto [ra, rb] : g.edges())
    s += "  \"" + lehmer_unrank(g.n(), ra).str() + "\" -- \"" + lehmer_unrank(g.n(), rb).str() +
         "\";\n";
  s += "}\n";
  return s;
}

}  // namespace hess
