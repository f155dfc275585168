#include "smoothperm/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace smoothperm {

namespace {

void require_bijection(const std::vector<int>& window) {
  if (window.empty()) throw std::invalid_argument("permutation must have degree >= 1");
  const int n = static_cast<int>(window.size());
  std::vector<bool> seen(window.size() + 1, false);
  for (int v : window) {
    if (v < 1 || v > n)
      throw std::invalid_argument("value " + std::to_string(v) + " out of range [1," +
                                  std::to_string(n) + "]");
    if (seen[static_cast<std::size_t>(v)])
      throw std::invalid_argument("value " + std::to_string(v) + " repeated");
    seen[static_cast<std::size_t>(v)] = true;
  }
}

void require_same_degree(const Permutation& u, const Permutation& v) {
  if (u.degree() != v.degree())
    throw std::invalid_argument("degree mismatch: " + std::to_string(u.degree()) + " vs " +
                                std::to_string(v.degree()));
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

int parse_int(std::string_view s) {
  s = trim(s);
  int value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size())
    throw std::invalid_argument("not an integer: '" + std::string(s) + "'");
  return value;
}

// Order-isomorphism of w restricted to `positions` (0-based) with p.
bool matches_at(const Permutation& w, const std::vector<int>& positions, const Permutation& p) {
  const auto k = positions.size();
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = a + 1; b < k; ++b) {
      const bool wl = w(positions[a] + 1) < w(positions[b] + 1);
      const bool pl = p(static_cast<int>(a) + 1) < p(static_cast<int>(b) + 1);
      if (wl != pl) return false;
    }
  return true;
}

bool search_pattern(const Permutation& w, const Permutation& p, std::vector<int>& positions,
                    int next) {
  if (static_cast<int>(positions.size()) == p.degree()) return matches_at(w, positions, p);
  const int remaining = p.degree() - static_cast<int>(positions.size());
  for (int pos = next; pos + remaining <= w.degree(); ++pos) {
    positions.push_back(pos);
    if (search_pattern(w, p, positions, pos + 1)) return true;
    positions.pop_back();
  }
  return false;
}

}  // namespace

Permutation::Permutation(int n) {
  if (n < 1) throw std::invalid_argument("permutation must have degree >= 1");
  window_.resize(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) window_[static_cast<std::size_t>(i)] = i + 1;
}

Permutation::Permutation(std::vector<int> window) : window_(std::move(window)) {
  require_bijection(window_);
}

bool Permutation::is_identity() const {
  for (int i = 1; i <= degree(); ++i)
    if ((*this)(i) != i) return false;
  return true;
}

Transposition::Transposition(int i_, int j_) : i(i_), j(j_) {
  if (i < 1 || j <= i)
    throw std::invalid_argument("transposition needs 1 <= i < j, got (" + std::to_string(i) +
                                "," + std::to_string(j) + ")");
}

Permutation parse_permutation(std::string_view text, int max_degree) {
  text = trim(text);
  if (text.empty()) throw std::invalid_argument("empty permutation");
  std::vector<int> window;
  if (text.find(',') == std::string_view::npos) {
    for (char c : text) {
      if (!std::isdigit(static_cast<unsigned char>(c)))
        throw std::invalid_argument("unexpected character '" + std::string(1, c) + "'");
      window.push_back(c - '0');
    }
  } else {
    std::size_t start = 0;
    while (true) {
      const auto comma = text.find(',', start);
      window.push_back(parse_int(text.substr(start, comma - start)));
      if (comma == std::string_view::npos) break;
      start = comma + 1;
    }
  }
  if (static_cast<int>(window.size()) > max_degree)
    throw std::invalid_argument("degree " + std::to_string(window.size()) +
                                " exceeds the configured maximum " + std::to_string(max_degree));
  return Permutation(std::move(window));
}

std::string format(const Permutation& w) {
  if (w.degree() > 9) return format_comma(w);
  std::string out;
  for (int v : w.window()) out.push_back(static_cast<char>('0' + v));
  return out;
}

std::string format_comma(const Permutation& w) {
  std::string out;
  for (int v : w.window()) {
    if (!out.empty()) out.push_back(',');
    out += std::to_string(v);
  }
  return out;
}

std::string format(const Transposition& t) {
  return "T(" + std::to_string(t.i) + "," + std::to_string(t.j) + ")";
}

Transposition parse_transposition(std::string_view text) {
  text = trim(text);
  if (text.size() < 6 || text.front() != 'T' || text[1] != '(' || text.back() != ')')
    throw std::invalid_argument("expected T(i,j), got '" + std::string(text) + "'");
  const auto body = text.substr(2, text.size() - 3);
  const auto comma = body.find(',');
  if (comma == std::string_view::npos)
    throw std::invalid_argument("expected T(i,j), got '" + std::string(text) + "'");
  return Transposition(parse_int(body.substr(0, comma)), parse_int(body.substr(comma + 1)));
}

std::ostream& operator<<(std::ostream& os, const Permutation& w) { return os << format(w); }
std::ostream& operator<<(std::ostream& os, const Transposition& t) { return os << format(t); }

Permutation compose(const Permutation& u, const Permutation& v) {
  require_same_degree(u, v);
  std::vector<int> out(static_cast<std::size_t>(u.degree()));
  for (int x = 1; x <= u.degree(); ++x) out[static_cast<std::size_t>(x - 1)] = u(v(x));
  return Permutation(std::move(out));
}

Permutation operator*(const Permutation& u, const Permutation& v) { return compose(u, v); }

Permutation inverse(const Permutation& w) {
  std::vector<int> out(static_cast<std::size_t>(w.degree()));
  for (int x = 1; x <= w.degree(); ++x) out[static_cast<std::size_t>(w(x) - 1)] = x;
  return Permutation(std::move(out));
}

Permutation as_permutation(const Transposition& t, int n) {
  return right_multiply(Permutation(n), t);
}

Permutation right_multiply(const Permutation& w, const Transposition& t) {
  if (t.j > w.degree()) throw std::invalid_argument("transposition outside degree");
  std::vector<int> out(w.window().begin(), w.window().end());
  std::swap(out[static_cast<std::size_t>(t.i - 1)], out[static_cast<std::size_t>(t.j - 1)]);
  return Permutation(std::move(out));
}

Permutation left_multiply(const Transposition& t, const Permutation& w) {
  if (t.j > w.degree()) throw std::invalid_argument("transposition outside degree");
  std::vector<int> out(w.window().begin(), w.window().end());
  for (int& v : out) {
    if (v == t.i)
      v = t.j;
    else if (v == t.j)
      v = t.i;
  }
  return Permutation(std::move(out));
}

Permutation product(std::span<const Transposition> ts, int n) {
  Permutation w(n);
  for (const auto& t : ts) w = right_multiply(w, t);
  return w;
}

int length(const Permutation& w) {
  int inv = 0;
  for (int a = 1; a <= w.degree(); ++a)
    for (int b = a + 1; b <= w.degree(); ++b)
      if (w(a) > w(b)) ++inv;
  return inv;
}

std::vector<int> mu(const Permutation& w) {
  std::vector<int> values;
  values.reserve(static_cast<std::size_t>(w.degree()));
  int best = 0;
  for (int v : w.window()) {
    best = std::max(best, v);
    values.push_back(best);
  }
  return values;
}

bool contains_pattern(const Permutation& w, const Permutation& p) {
  return find_pattern(w, p).has_value();
}

std::optional<std::vector<int>> find_pattern(const Permutation& w, const Permutation& p) {
  if (p.degree() > w.degree()) return std::nullopt;
  std::vector<int> positions;
  if (!search_pattern(w, p, positions, 0)) return std::nullopt;
  for (int& pos : positions) ++pos;
  return positions;
}

bool contains_3412(const Permutation& w) {
  // a<b<c<d with w(c) < w(d) < w(a) < w(b).  For a fixed middle pair (b,c)
  // the best choice of a is the largest w(a) below w(b).
  const int n = w.degree();
  for (int b = 2; b <= n - 2; ++b) {
    for (int c = b + 1; c <= n - 1; ++c) {
      if (w(b) < w(c)) continue;
      int best_a = 0;
      for (int a = 1; a < b; ++a)
        if (w(a) < w(b)) best_a = std::max(best_a, w(a));
      if (best_a <= w(c)) continue;
      for (int d = c + 1; d <= n; ++d)
        if (w(c) < w(d) && w(d) < best_a) return true;
    }
  }
  return false;
}

bool contains_4231(const Permutation& w) {
  // a<b<c<d with w(d) < w(b) < w(c) < w(a).
  const int n = w.degree();
  std::vector<int> prefix_max(static_cast<std::size_t>(n + 2), 0);
  std::vector<int> suffix_min(static_cast<std::size_t>(n + 2), std::numeric_limits<int>::max());
  for (int x = 1; x <= n; ++x)
    prefix_max[static_cast<std::size_t>(x)] = std::max(prefix_max[static_cast<std::size_t>(x - 1)], w(x));
  for (int x = n; x >= 1; --x)
    suffix_min[static_cast<std::size_t>(x)] = std::min(suffix_min[static_cast<std::size_t>(x + 1)], w(x));
  for (int b = 2; b <= n - 2; ++b)
    for (int c = b + 1; c <= n - 1; ++c)
      if (w(b) < w(c) && prefix_max[static_cast<std::size_t>(b - 1)] > w(c) &&
          suffix_min[static_cast<std::size_t>(c + 1)] < w(b))
        return true;
  return false;
}

std::size_t factorial(int n) {
  std::size_t f = 1;
  for (int k = 2; k <= n; ++k) f *= static_cast<std::size_t>(k);
  return f;
}

Permutation unrank_lex(int n, std::size_t rank) {
  if (rank >= factorial(n)) throw std::out_of_range("rank exceeds n!");
  std::vector<int> pool(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) pool[static_cast<std::size_t>(i)] = i + 1;
  std::vector<int> window;
  window.reserve(static_cast<std::size_t>(n));
  for (int k = n; k >= 1; --k) {
    const std::size_t block = factorial(k - 1);
    const std::size_t digit = rank / block;
    rank %= block;
    window.push_back(pool[digit]);
    pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(digit));
  }
  return Permutation(std::move(window));
}

std::vector<Permutation> all_permutations(int n) {
  std::vector<Permutation> out;
  out.reserve(factorial(n));
  for_each_permutation(n, [&](const Permutation& w) { out.push_back(w); });
  return out;
}

}  // namespace smoothperm
