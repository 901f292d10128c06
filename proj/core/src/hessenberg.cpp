#include "hess/hessenberg.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>

namespace hess {

namespace {

[[noreturn]] void bad_arg(const std::string& msg) { throw std::invalid_argument(msg); }

void require_same_size(const Permutation& w, const HessenbergFunction& h) {
  if (w.size() != h.size()) bad_arg("permutation and Hessenberg function sizes differ");
}

}  // namespace

HessenbergFunction::HessenbergFunction(std::vector<int> values) : values_(std::move(values)) {
  const int n = size();
  for (int i = 1; i <= n; ++i) {
    const int v = values_[static_cast<size_t>(i - 1)];
    if (v < i || v > n) bad_arg("Hessenberg function needs i <= h(i) <= n");
    if (i > 1 && v < values_[static_cast<size_t>(i - 2)])
      bad_arg("Hessenberg function must be nondecreasing");
  }
}

HessenbergFunction HessenbergFunction::full(int n) {
  return HessenbergFunction(std::vector<int>(static_cast<size_t>(n), n));
}

HessenbergFunction HessenbergFunction::minimal(int n) {
  std::vector<int> v(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) v[static_cast<size_t>(i)] = i + 1;
  return HessenbergFunction(std::move(v));
}

HessenbergFunction HessenbergFunction::permutohedral(int n) {
  std::vector<int> v(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) v[static_cast<size_t>(i)] = std::min(i + 2, n);
  return HessenbergFunction(std::move(v));
}

HessenbergFunction HessenbergFunction::parse(std::string_view text) {
  if (text.size() >= 2 && text.front() == '(' && text.back() == ')')
    text = text.substr(1, text.size() - 2);
  if (text.empty()) bad_arg("empty Hessenberg function string");
  std::vector<int> v;
  size_t pos = 0;
  while (pos <= text.size()) {
    size_t next = text.find(',', pos);
    std::string_view tok = text.substr(pos, next == std::string_view::npos ? next : next - pos);
    int x = 0;
    auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), x);
    if (ec != std::errc() || p != tok.data() + tok.size())
      bad_arg("malformed Hessenberg entry '" + std::string(tok) + "'");
    v.push_back(x);
    if (next == std::string_view::npos) break;
    pos = next + 1;
  }
  return HessenbergFunction(std::move(v));
}

int HessenbergFunction::operator()(int i) const {
  if (i < 1 || i > size()) bad_arg("Hessenberg index out of range");
  return values_[static_cast<size_t>(i - 1)];
}

std::string HessenbergFunction::str() const {
  std::string s = "(";
  for (size_t k = 0; k < values_.size(); ++k) {
    if (k) s += ',';
    s += std::to_string(values_[k]);
  }
  s += ')';
  return s;
}

namespace {

void extend(std::vector<int>& prefix, int n, std::vector<HessenbergFunction>& out) {
  const int i = static_cast<int>(prefix.size()) + 1;
  if (i > n) {
    out.emplace_back(prefix);
    return;
  }
  const int lo = std::max(i, prefix.empty() ? 1 : prefix.back());
  for (int v = lo; v <= n; ++v) {
    prefix.push_back(v);
    extend(prefix, n, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<HessenbergFunction> enumerate_hessenberg(int n) {
  if (n < 1) bad_arg("enumerate_hessenberg requires n >= 1");
  std::vector<HessenbergFunction> out;
  std::vector<int> prefix;
  extend(prefix, n, out);
  return out;
}

std::uint64_t catalan(int n) {
  // C_n = binom(2n, n) / (n + 1), exact for the desk-scale range used here.
  std::uint64_t c = 1;
  for (int i = 0; i < n; ++i) c = c * static_cast<std::uint64_t>(2 * n - i) / static_cast<std::uint64_t>(i + 1);
  return c / static_cast<std::uint64_t>(n + 1);
}

int dimension_dh(const HessenbergFunction& h) {
  int d = 0;
  for (int i = 1; i <= h.size(); ++i) d += h(i) - i;
  return d;
}

int ell_h(const Permutation& w, const HessenbergFunction& h) {
  require_same_size(w, h);
  int c = 0;
  for (int i = 1; i <= w.size(); ++i)
    for (int j = i + 1; j <= h(i); ++j)
      if (w(i) > w(j)) ++c;
  return c;
}

bool is_generator(const Permutation& w, const HessenbergFunction& h) {
  require_same_size(w, h);
  const int n = w.size();
  const Permutation winv = inverse(w);
  for (int i = 1; i <= n; ++i)
    if (w(i) <= n - 1 && winv(w(i) + 1) > h(i)) return false;
  return true;
}

std::vector<Permutation> generators(const HessenbergFunction& h) {
  const int n = h.size();
  std::vector<Permutation> out;
  Permutation w = Permutation::identity(n);
  std::vector<int> word = w.word();
  do {
    Permutation u{std::vector<int>(word)};
    if (is_generator(u, h)) out.push_back(std::move(u));
  } while (std::next_permutation(word.begin(), word.end()));
  return out;
}

Permutation corresponding_generator(const Permutation& w, const HessenbergFunction& h) {
  require_same_size(w, h);
  const int n = w.size();
  std::vector<Permutation> hits;
  for (const Permutation& g : generators(h)) {
    bool agrees = true;
    for (int i = 1; i <= n && agrees; ++i)
      for (int j = i + 1; j <= h(i); ++j)
        if ((g(i) < g(j)) != (w(i) < w(j))) {
          agrees = false;
          break;
        }
    if (agrees) hits.push_back(g);
  }
  if (hits.size() != 1)
    throw std::logic_error("corresponding generator not unique for w=" + w.str() +
                           " h=" + h.str() + " (found " + std::to_string(hits.size()) + ")");
  return hits.front();
}

IncomparabilityGraph incomparability_graph(const HessenbergFunction& h) {
  IncomparabilityGraph g;
  g.n = h.size();
  for (int i = 1; i <= g.n; ++i)
    for (int j = i + 1; j <= h(i); ++j) g.edges.emplace_back(i, j);
  return g;
}

std::string IncomparabilityGraph::dot() const {
  std::string s = "graph incomparability {\n";
  for (int i = 1; i <= n; ++i) s += "  " + std::to_string(i) + ";\n";
  for (auto [i, j] : edges)
    s += "  " + std::to_string(i) + " -- " + std::to_string(j) + ";\n";
  s += "}\n";
  return s;
}

}  // namespace hess
