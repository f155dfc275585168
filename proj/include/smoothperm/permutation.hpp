#pragma once

// Permutations of [1,n] in one-line notation.
//
// Composition convention: (u*v)(x) = u(v(x)).  With this convention, right
// multiplication by a transposition T(a,b) swaps the entries at positions a
// and b of the window, while left multiplication swaps the values a and b.
// Every Bruhat-order statement in this library depends on that choice.

#include <array>
#include <compare>
#include <cstddef>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace smoothperm {

inline constexpr int kDefaultMaxDegree = 12;

class Permutation {
public:
  /// Identity of degree n.
  explicit Permutation(int n = 1);

  /// Takes ownership of a 1-based window; throws std::invalid_argument unless
  /// it is a bijection on [1, window.size()].
  explicit Permutation(std::vector<int> window);

  static Permutation identity(int n) { return Permutation(n); }

  int degree() const { return static_cast<int>(window_.size()); }

  /// w(i) for 1 <= i <= n.
  int operator()(int i) const { return window_[static_cast<std::size_t>(i - 1)]; }

  std::span<const int> window() const { return window_; }

  bool is_identity() const;

  auto operator<=>(const Permutation&) const = default;
  bool operator==(const Permutation&) const = default;

private:
  std::vector<int> window_;
};

/// The reflection swapping i and j, with 1 <= i < j.
struct Transposition {
  int i = 1;
  int j = 2;

  Transposition() = default;
  Transposition(int i_, int j_);

  bool moves(int x) const { return x == i || x == j; }
  bool commutes_with(const Transposition& other) const {
    return other.i != i && other.i != j && other.j != i && other.j != j;
  }

  auto operator<=>(const Transposition&) const = default;
  bool operator==(const Transposition&) const = default;
};

// --- text forms -----------------------------------------------------------

/// Accepts a digit string ("35142", only for n <= 9) or comma-separated
/// integers ("3,5,1,4,2").  Whitespace around entries is ignored.
Permutation parse_permutation(std::string_view text, int max_degree = kDefaultMaxDegree);

/// Compact digit string when n <= 9, comma-separated otherwise.
std::string format(const Permutation& w);
std::string format_comma(const Permutation& w);

/// "T(i,j)"
std::string format(const Transposition& t);
Transposition parse_transposition(std::string_view text);

std::ostream& operator<<(std::ostream& os, const Permutation& w);
std::ostream& operator<<(std::ostream& os, const Transposition& t);

// --- arithmetic -----------------------------------------------------------

/// (u*v)(x) = u(v(x)); throws std::invalid_argument on degree mismatch.
Permutation compose(const Permutation& u, const Permutation& v);
Permutation operator*(const Permutation& u, const Permutation& v);

Permutation inverse(const Permutation& w);

/// T(i,j) realized in S_n.
Permutation as_permutation(const Transposition& t, int n);

/// w * T(i,j): swaps positions i and j of the window.
Permutation right_multiply(const Permutation& w, const Transposition& t);
/// T(i,j) * w: swaps values i and j.
Permutation left_multiply(const Transposition& t, const Permutation& w);

/// Product of the sequence from left to right, starting at the identity.
Permutation product(std::span<const Transposition> ts, int n);

/// Number of inversions.
int length(const Permutation& w);

/// Running maxima: values[i-1] = max(w(1), ..., w(i)).
std::vector<int> mu(const Permutation& w);

// --- patterns -------------------------------------------------------------

/// True iff some subsequence of w is order-isomorphic to p.
bool contains_pattern(const Permutation& w, const Permutation& p);

/// Lexicographically first occurrence of p in w, as 1-based positions.
std::optional<std::vector<int>> find_pattern(const Permutation& w, const Permutation& p);

/// Specialized scans for the two smoothness obstructions.
bool contains_3412(const Permutation& w);
bool contains_4231(const Permutation& w);

// --- enumeration ----------------------------------------------------------

std::size_t factorial(int n);

/// The permutation of lexicographic rank `rank` (0-based) in S_n.
Permutation unrank_lex(int n, std::size_t rank);

/// Calls f(w) for every w in S_n, in lexicographic order of windows.
template <class F>
void for_each_permutation(int n, F&& f);

std::vector<Permutation> all_permutations(int n);

}  // namespace smoothperm

#include "smoothperm/detail/permutation_inl.hpp"
