#include "hess/perm.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>

namespace hess {

namespace {

[[noreturn]] void bad_arg(const std::string& msg) { throw std::invalid_argument(msg); }

}  // namespace

Transposition::Transposition(int i_, int j_) : i(i_), j(j_) {
  if (i < 1 || j <= i) bad_arg("Transposition requires 1 <= i < j");
}

std::string Transposition::str() const {
  return "(" + std::to_string(i) + "," + std::to_string(j) + ")";
}

Permutation::Permutation(std::vector<int> one_line) : word_(std::move(one_line)) {
  const int n = size();
  std::vector<char> seen(static_cast<size_t>(n) + 1, 0);
  for (int v : word_) {
    if (v < 1 || v > n || seen[static_cast<size_t>(v)])
      bad_arg("permutation word is not a bijection on [n]");
    seen[static_cast<size_t>(v)] = 1;
  }
}

Permutation Permutation::identity(int n) {
  if (n < 0) bad_arg("negative size");
  std::vector<int> w(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) w[static_cast<size_t>(i)] = i + 1;
  return Permutation(std::move(w));
}

Permutation Permutation::longest(int n) {
  if (n < 0) bad_arg("negative size");
  std::vector<int> w(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) w[static_cast<size_t>(i)] = n - i;
  return Permutation(std::move(w));
}

Permutation Permutation::parse(std::string_view text) {
  if (text.empty()) bad_arg("empty permutation string");
  std::vector<int> w;
  if (text.find(',') != std::string_view::npos) {
    size_t pos = 0;
    while (pos <= text.size()) {
      size_t next = text.find(',', pos);
      std::string_view tok = text.substr(pos, next == std::string_view::npos ? next : next - pos);
      int v = 0;
      auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
      if (ec != std::errc() || p != tok.data() + tok.size())
        bad_arg("malformed permutation entry '" + std::string(tok) + "'");
      w.push_back(v);
      if (next == std::string_view::npos) break;
      pos = next + 1;
    }
  } else {
    if (text.size() > 9)
      bad_arg("one-line digit form only supports n <= 9; use comma-separated values");
    for (char c : text) {
      if (c < '1' || c > '9') bad_arg("malformed permutation string");
      w.push_back(c - '0');
    }
  }
  return Permutation(std::move(w));
}

int Permutation::operator()(int i) const {
  if (i < 1 || i > size()) bad_arg("position out of range");
  return word_[static_cast<size_t>(i - 1)];
}

int Permutation::position_of(int value) const {
  for (int i = 1; i <= size(); ++i)
    if (word_[static_cast<size_t>(i - 1)] == value) return i;
  bad_arg("value out of range");
}

std::string Permutation::str() const {
  std::string s;
  if (size() <= 9) {
    for (int v : word_) s += static_cast<char>('0' + v);
  } else {
    for (size_t k = 0; k < word_.size(); ++k) {
      if (k) s += ',';
      s += std::to_string(word_[k]);
    }
  }
  return s;
}

Permutation apply_transposition(const Permutation& w, Transposition t) {
  if (t.j > w.size()) bad_arg("transposition position out of range");
  std::vector<int> v = w.word();
  std::swap(v[static_cast<size_t>(t.i - 1)], v[static_cast<size_t>(t.j - 1)]);
  return Permutation(std::move(v));
}

Permutation inverse(const Permutation& w) {
  const int n = w.size();
  std::vector<int> v(static_cast<size_t>(n));
  for (int i = 1; i <= n; ++i) v[static_cast<size_t>(w(i) - 1)] = i;
  return Permutation(std::move(v));
}

Permutation compose(const Permutation& a, const Permutation& b) {
  if (a.size() != b.size()) bad_arg("size mismatch in composition");
  const int n = a.size();
  std::vector<int> v(static_cast<size_t>(n));
  for (int i = 1; i <= n; ++i) v[static_cast<size_t>(i - 1)] = a(b(i));
  return Permutation(std::move(v));
}

int length(const Permutation& w) {
  const auto& v = w.word();
  int inv = 0;
  for (size_t i = 0; i < v.size(); ++i)
    for (size_t j = i + 1; j < v.size(); ++j)
      if (v[i] > v[j]) ++inv;
  return inv;
}

std::vector<int> prefix_set(const Permutation& w, int k) {
  if (k < 1 || k > w.size()) bad_arg("prefix length out of range");
  std::vector<int> s(w.word().begin(), w.word().begin() + k);
  std::sort(s.begin(), s.end());
  return s;
}

std::vector<int> descent_set(const Permutation& w) {
  std::vector<int> d;
  for (int i = 1; i < w.size(); ++i)
    if (w(i) > w(i + 1)) d.push_back(i);
  return d;
}

namespace {

bool order_isomorphic(const std::vector<int>& vals, const Permutation& p) {
  const int k = p.size();
  for (int a = 0; a < k; ++a)
    for (int b = a + 1; b < k; ++b)
      if ((vals[static_cast<size_t>(a)] < vals[static_cast<size_t>(b)]) !=
          (p(a + 1) < p(b + 1)))
        return false;
  return true;
}

bool next_combination(std::vector<int>& idx, int n) {
  const int k = static_cast<int>(idx.size());
  for (int t = k - 1; t >= 0; --t) {
    if (idx[static_cast<size_t>(t)] < n - (k - t) + 1) {
      ++idx[static_cast<size_t>(t)];
      for (int s = t + 1; s < k; ++s)
        idx[static_cast<size_t>(s)] = idx[static_cast<size_t>(s - 1)] + 1;
      return true;
    }
  }
  return false;
}

}  // namespace

std::optional<std::vector<int>> contains_classical_pattern(const Permutation& w,
                                                           const Permutation& p) {
  const int n = w.size(), k = p.size();
  if (k > n || k == 0) return std::nullopt;
  std::vector<int> idx(static_cast<size_t>(k));
  for (int t = 0; t < k; ++t) idx[static_cast<size_t>(t)] = t + 1;
  std::vector<int> vals(static_cast<size_t>(k));
  do {
    for (int t = 0; t < k; ++t) vals[static_cast<size_t>(t)] = w(idx[static_cast<size_t>(t)]);
    if (order_isomorphic(vals, p)) return idx;
  } while (next_combination(idx, n));
  return std::nullopt;
}

std::uint64_t factorial(int n) {
  std::uint64_t f = 1;
  for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
  return f;
}

std::uint64_t lehmer_rank(const Permutation& w) {
  const int n = w.size();
  if (n > 20) throw std::invalid_argument("lehmer_rank supports n <= 20");
  std::uint64_t rank = 0;
  for (int i = 1; i <= n; ++i) {
    int smaller_after = 0;
    for (int j = i + 1; j <= n; ++j)
      if (w(j) < w(i)) ++smaller_after;
    rank += static_cast<std::uint64_t>(smaller_after) * factorial(n - i);
  }
  return rank;
}

Permutation lehmer_unrank(int n, std::uint64_t rank) {
  if (n > 20) throw std::invalid_argument("lehmer_unrank supports n <= 20");
  std::vector<int> avail;
  for (int v = 1; v <= n; ++v) avail.push_back(v);
  std::vector<int> w;
  for (int i = n; i >= 1; --i) {
    const std::uint64_t f = factorial(i - 1);
    const auto d = static_cast<size_t>(rank / f);
    if (d >= avail.size()) throw std::invalid_argument("rank out of range");
    rank %= f;
    w.push_back(avail[d]);
    avail.erase(avail.begin() + static_cast<std::ptrdiff_t>(d));
  }
  return Permutation(std::move(w));
}

}  // namespace hess
