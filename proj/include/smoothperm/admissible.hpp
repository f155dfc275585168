#pragma once

// Smoothness criteria, the sets C(w) and C_T(w), admissibility, wedges and
// the wedge restriction A -> A°.

#include <optional>
#include <set>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "smoothperm/element23.hpp"
#include "smoothperm/permutation.hpp"

namespace smoothperm {

/// A subset of C^{2,3} in S_n.
class AdmissibleSet {
public:
  explicit AdmissibleSet(int degree = 1);
  AdmissibleSet(int degree, std::vector<Element23> members);

  int degree() const { return degree_; }
  const std::set<Element23>& members() const { return members_; }
  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }

  void insert(const Element23& c);
  bool contains(const Element23& c) const { return members_.contains(c); }
  bool has_reflection(int i, int j) const;
  bool has_r(int i, int j, int k) const;
  bool has_l(int i, int j, int k) const;

  /// Sorted reflection part A_T.
  std::vector<Transposition> reflections() const;

  bool operator==(const AdmissibleSet&) const = default;

private:
  int degree_;
  std::set<Element23> members_;
};

/// Avoids 3412 and 4231.
bool is_smooth_pattern(const Permutation& w);

/// length(w) == |C_T(w)|.
bool is_smooth_length(const Permutation& w);

/// Reflections below w, sorted.
std::vector<Transposition> c_t(const Permutation& w);

/// All of C^{2,3} below w.
AdmissibleSet c23(const Permutation& w);

/// Member-wise inverse; maps C(w) to C(w^{-1}).
AdmissibleSet inverse(const AdmissibleSet& a);

enum class AdmissibilityAxiom {
  None = 0,
  DownwardClosed = 1,  // (a)
  RLImpliesT = 2,      // (b) R(i,j,l), L(i,k,l) in A => T(i,l) in A
  TTImpliesCycle = 3,  // (c) T(i,j), T(j,k) in A => R(i,j,k) or L(i,j,k) in A
};

struct AdmissibilityCheck {
  bool admissible = true;
  AdmissibilityAxiom violated = AdmissibilityAxiom::None;
  /// For (a): {member, missing element below it}; (b): {R, L, missing T};
  /// (c): {T(i,j), T(j,k)}.
  std::vector<Element23> witness;

  explicit operator bool() const { return admissible; }
};

AdmissibilityCheck check_admissible(const AdmissibleSet& a);
bool is_admissible(const AdmissibleSet& a);

struct Wedge {
  int i = 1;
  int j = 2;
  auto operator<=>(const Wedge&) const = default;
  bool operator==(const Wedge&) const = default;
};

/// T(i,j) in A, T(i-1,i) not in A, R(i,j,j+1) not in A; conditions on
/// indices outside [1,n] hold vacuously.  Sorted lexicographically.
std::vector<Wedge> find_wedges(const AdmissibleSet& a);

/// w([i-1]) = [i-1] and w(i) >= j = w^{-1}(i).
bool wedge_criterion(const Permutation& w, int i, int j);

/// A minus {T(i,r) : r > i} and {R(i,r,l), L(i,r,l) : l > r > i}.
/// Throws std::invalid_argument if `wedge` is not a wedge of A.
AdmissibleSet restrict(const AdmissibleSet& a, const Wedge& wedge);

nlohmann::json to_json(const AdmissibleSet& a);
std::string format(const Wedge& w);

}  // namespace smoothperm
