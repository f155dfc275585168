#pragma once

// Type D_n: roots, signed permutations, the Weyl group with its Bruhat order,
// and the type D analogs of C(w), admissibility and compatible orders.
//
// Conventions:
//   R   = {e_j + e_i : j > i} u {e_j - e_i : i != j} u {-e_j - e_i : j > i}
//   Pi  = {e_{i+1} - e_i : 1 <= i <= n-1} u {e_2 + e_1}
//   R+  = {e_j - e_i : j > i} u {e_j + e_i : j > i}
// Group elements are signed permutations acting on indices, composed as
// (u*v)(x) = u(v(x)), with w(-x) = -w(x).

#include <cstddef>
#include <compare>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <boost/dynamic_bitset.hpp>
#include <nlohmann/json_fwd.hpp>

#include "smoothperm/order_search.hpp"
#include "smoothperm/permutation.hpp"

namespace smoothperm::type_d {

inline constexpr int kDefaultMaxRank = 5;

struct RootD {
  enum class Kind { Difference = 0, Sum = 1, NegSum = 2 };

  Kind kind = Kind::Difference;
  int j = 2;  // Difference: e_j - e_i (i != j); Sum/NegSum: j > i
  int i = 1;

  static RootD difference(int j, int i);  // e_j - e_i
  static RootD sum(int j, int i);         // e_j + e_i
  static RootD neg_sum(int j, int i);     // -e_j - e_i

  bool is_positive() const { return kind == Kind::Sum || (kind == Kind::Difference && j > i); }
  int max_index() const { return j > i ? j : i; }

  std::vector<int> coordinates(int n) const;
  static std::optional<RootD> from_coordinates(std::span<const int> c);

  auto operator<=>(const RootD&) const = default;
  bool operator==(const RootD&) const = default;
};

RootD operator-(const RootD& a);
/// a + b when it is a root.
std::optional<RootD> root_sum(const RootD& a, const RootD& b);

/// "e3-e1", "e2+e1", "-e3-e1"
std::string format(const RootD& a);
RootD parse_root(std::string_view text);

struct RootSystem {
  int rank = 0;
  std::vector<RootD> roots;
  std::vector<RootD> simple;
  std::vector<RootD> positive;
};

/// Throws std::invalid_argument for rank < 2.
RootSystem root_system(int n);

/// Pairs (a, b) of positive roots with b - a simple.
std::vector<std::pair<RootD, RootD>> root_poset_covers(int n);

/// f(e_j - e_i) = e_j - e_{j-1}; f(e_j + e_i) = e_2 + e_1 if (j,i) = (2,1),
/// else e_j - e_{j-1}.  Throws std::invalid_argument for non-positive roots.
RootD f_map(const RootD& a);

/// How simple roots are compared.  Both keys rank e_j - e_{j-1} by j and give
/// e_2 + e_1 the index 2; the two index-2 roots are never compared.
enum class SimpleRootOrder { ByIndex, ReversedIndex };

std::string format(SimpleRootOrder order);

/// Which pairs may supply the two hypotheses of the sum condition: any two
/// decompositions a + b = a' + b' = c (as written), or one decomposition
/// used for both products.
enum class SumConditionReading { AnyDecompositions, SameDecomposition };

std::string format(SumConditionReading reading);

/// a < b for simple roots a, b under `order`.  Throws std::logic_error for a
/// tie between distinct simple roots.
bool simple_precedes(const RootD& a, const RootD& b, SimpleRootOrder order);

class SignedPermutation {
public:
  explicit SignedPermutation(int n = 2);
  /// Throws std::invalid_argument unless |window| is a bijection on [1,n] with
  /// an even number of negative entries.
  explicit SignedPermutation(std::vector<int> window);

  static SignedPermutation from_permutation(const Permutation& w);

  int rank() const { return static_cast<int>(window_.size()); }
  /// w(x) for 1 <= |x| <= n.
  int operator()(int x) const {
    return x > 0 ? window_[static_cast<std::size_t>(x - 1)] : -window_[static_cast<std::size_t>(-x - 1)];
  }
  std::span<const int> window() const { return window_; }
  bool is_identity() const;

  auto operator<=>(const SignedPermutation&) const = default;
  bool operator==(const SignedPermutation&) const = default;

private:
  std::vector<int> window_;
};

SignedPermutation compose(const SignedPermutation& u, const SignedPermutation& v);
SignedPermutation operator*(const SignedPermutation& u, const SignedPermutation& v);
SignedPermutation inverse(const SignedPermutation& w);

/// t_a: e_j - e_i swaps i and j; e_j + e_i sends i -> -j and j -> -i.
SignedPermutation reflection(const RootD& a, int n);

/// "-2,-1,3,4"
std::string format(const SignedPermutation& w);
SignedPermutation parse_signed_permutation(std::string_view text);

/// W(D_n) with lengths and Bruhat order.
class WeylGroupD {
public:
  explicit WeylGroupD(int rank, int max_rank = kDefaultMaxRank);

  int rank() const { return rank_; }
  const RootSystem& roots() const { return roots_; }
  std::size_t size() const { return elements_.size(); }

  /// Elements are indexed in order of (length, window).
  const SignedPermutation& element(std::size_t idx) const { return elements_[idx]; }
  std::size_t index_of(const SignedPermutation& w) const;
  int length(std::size_t idx) const { return lengths_[idx]; }
  std::size_t identity_index() const { return 0; }
  std::size_t longest_index() const { return elements_.size() - 1; }

  /// x * y as indices.
  std::size_t multiply(std::size_t x, std::size_t y) const;
  std::size_t reflection_index(const RootD& positive_root) const;
  std::size_t simple_index(std::size_t s) const { return simple_indices_[s]; }

  /// Elements y covering x, and those covered by y.
  const std::vector<std::size_t>& covers_up(std::size_t x) const { return up_[x]; }
  const std::vector<std::size_t>& covers_down(std::size_t y) const { return down_[y]; }
  const boost::dynamic_bitset<>& lower_interval(std::size_t y) const { return below_[y]; }
  bool leq(std::size_t x, std::size_t y) const { return below_[y].test(x); }

  /// Simple-reflection word of minimal length, as positions into roots().simple.
  std::vector<std::size_t> reduced_word(std::size_t idx) const;

  /// Coefficients of sum over [e,w] of q^length.
  std::vector<std::size_t> rank_generating_function(std::size_t idx) const;

private:
  int rank_;
  RootSystem roots_;
  std::vector<SignedPermutation> elements_;
  std::map<SignedPermutation, std::size_t> index_;
  std::vector<int> lengths_;
  std::vector<std::size_t> simple_indices_;
  std::vector<std::size_t> reflection_indices_;  // parallel to roots_.positive
  std::vector<std::vector<std::size_t>> up_;
  std::vector<std::vector<std::size_t>> down_;
  std::vector<boost::dynamic_bitset<>> below_;
  std::vector<std::ptrdiff_t> word_parent_;
  std::vector<std::size_t> word_letter_;
};

/// A member of C^{2,3}: t_a, or t_a t_b with a, b, a+b positive.
struct ElementD {
  bool is_reflection = true;
  RootD alpha;
  RootD beta;  // equals alpha for reflections

  static ElementD reflection(const RootD& a) { return {true, a, a}; }
  static ElementD product(const RootD& a, const RootD& b) { return {false, a, b}; }

  auto operator<=>(const ElementD&) const = default;
  bool operator==(const ElementD&) const = default;
};

/// "t(e3-e1)" or "t(e2-e1)t(e3-e2)"
std::string format(const ElementD& c);

/// Every member of C^{2,3} for the group's rank, sorted.
std::vector<ElementD> all_element23_d(const WeylGroupD& g);
std::size_t realize(const WeylGroupD& g, const ElementD& c);

class AdmissibleSetD {
public:
  explicit AdmissibleSetD(int rank = 2) : rank_(rank) {}
  AdmissibleSetD(int rank, std::vector<ElementD> members);

  int rank() const { return rank_; }
  const std::set<ElementD>& members() const { return members_; }
  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }
  void insert(const ElementD& c);
  bool contains(const ElementD& c) const { return members_.contains(c); }
  bool has_reflection(const RootD& a) const { return contains(ElementD::reflection(a)); }
  bool has_product(const RootD& a, const RootD& b) const { return contains(ElementD::product(a, b)); }
  /// Positive roots of the reflections in the set, sorted.
  std::vector<RootD> reflections() const;

  bool operator==(const AdmissibleSetD&) const = default;

private:
  int rank_;
  std::set<ElementD> members_;
};

/// Members of C^{2,3} below w.
AdmissibleSetD c23_d(const WeylGroupD& g, std::size_t w);

struct AdmissibilityCheckD {
  bool admissible = true;
  int violated = 0;             // 0 none, 1 downward closure, 2 sum condition, 3 pair condition
  std::vector<RootD> witness;   // roots involved
  std::vector<ElementD> elements;
  explicit operator bool() const { return admissible; }
};

AdmissibilityCheckD check_admissible_d(
    const WeylGroupD& g, const AdmissibleSetD& a, SimpleRootOrder order = SimpleRootOrder::ByIndex,
    SumConditionReading reading = SumConditionReading::AnyDecompositions);
bool is_admissible_d(const WeylGroupD& g, const AdmissibleSetD& a,
                     SimpleRootOrder order = SimpleRootOrder::ByIndex,
                     SumConditionReading reading = SumConditionReading::AnyDecompositions);

/// Both compatibility conditions for every pair a, b of reflections in A with
/// a + b positive.  Throws std::invalid_argument unless `order` lists exactly
/// the reflection part of A.
bool is_compatible_d(std::span<const RootD> order, const AdmissibleSetD& a);

/// Constraint engine instance; items index a.reflections().
OrderSearch make_order_search_d(const AdmissibleSetD& a);

/// Product of t_a over the order, left to right, as a group index.
std::size_t order_product(const WeylGroupD& g, std::span<const RootD> order);

/// Palindromic rank generating function of [e,w].
bool is_smooth_d(const WeylGroupD& g, std::size_t w);

struct ElementVerdict {
  std::size_t index = 0;
  std::string window;
  int length = 0;
  std::size_t members = 0;
  std::size_t reflections = 0;
  bool admissible = false;
  std::size_t orders = 0;
  std::size_t wrong_products = 0;
  bool ok() const { return admissible && orders > 0 && wrong_products == 0; }
};

struct ConjectureReport {
  int rank = 0;
  SimpleRootOrder order = SimpleRootOrder::ByIndex;
  SumConditionReading reading = SumConditionReading::AnyDecompositions;
  std::size_t group_size = 0;
  std::size_t smooth = 0;
  std::size_t not_admissible = 0;
  std::size_t without_order = 0;
  std::size_t with_wrong_product = 0;
  std::size_t orders_checked = 0;
  std::vector<ElementVerdict> verdicts;  // one per smooth element, by index
  std::vector<std::size_t> counterexamples;

  bool pass() const { return counterexamples.empty(); }
};

/// For every smooth w: C(w) admissible, a compatible order exists, and every
/// compatible order multiplies to w.
ConjectureReport verify_conjecture_d(
    const WeylGroupD& g, SimpleRootOrder order = SimpleRootOrder::ByIndex, unsigned workers = 1,
    SumConditionReading reading = SumConditionReading::AnyDecompositions);

nlohmann::json to_json(const ConjectureReport& report);

}  // namespace smoothperm::type_d
