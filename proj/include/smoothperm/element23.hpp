#pragma once

// Members of C^{2,3}: reflections T(i,j) together with the 3-cycles
// R(i,j,k) = T(i,j) T(j,k) and L(i,j,k) = T(j,k) T(i,j), i < j < k.

#include <compare>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "smoothperm/permutation.hpp"

namespace smoothperm {

enum class Element23Kind { Reflection = 0, RCycle = 1, LCycle = 2 };

struct Element23 {
  Element23Kind kind = Element23Kind::Reflection;
  int i = 1;
  int j = 2;
  int k = 0;  // unused (0) for reflections

  static Element23 reflection(int i, int j);
  static Element23 reflection(const Transposition& t) { return reflection(t.i, t.j); }
  static Element23 r_cycle(int i, int j, int k);
  static Element23 l_cycle(int i, int j, int k);

  bool is_reflection() const { return kind == Element23Kind::Reflection; }
  Transposition as_transposition() const;

  /// Largest index involved.
  int max_index() const { return is_reflection() ? j : k; }

  auto operator<=>(const Element23&) const = default;
  bool operator==(const Element23&) const = default;
};

/// Group element realized in S_n.
Permutation realize(const Element23& c, int n);

/// Inverse element: reflections are involutions and R(i,j,k)^{-1} = L(i,j,k).
Element23 inverse(const Element23& c);

/// All of C^{2,3} in S_n, sorted.
std::vector<Element23> all_element23(int n);

/// "T(i,j)", "R(i,j,k)", "L(i,j,k)"
std::string format(const Element23& c);
Element23 parse_element23(std::string_view text);
std::ostream& operator<<(std::ostream& os, const Element23& c);

}  // namespace smoothperm
