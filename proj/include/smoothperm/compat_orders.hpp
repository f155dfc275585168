#pragma once

// Compatible orders on the reflection part of an admissible set: checking,
// the wedge-recursive construction, verification of the product identity and
// of both saturated chains, enumeration, elementary moves and the move graph.

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "smoothperm/admissible.hpp"
#include "smoothperm/bruhat.hpp"
#include "smoothperm/order_search.hpp"
#include "smoothperm/permutation.hpp"

namespace smoothperm {

inline constexpr std::size_t kDefaultMaxEnumeratedReflections = 10;
inline constexpr std::size_t kDefaultMaxGraphCheckReflections = 8;

/// A sequence of distinct reflections t_1, ..., t_k in S_n.
class ReflectionOrder {
public:
  explicit ReflectionOrder(int degree = 1) : degree_(degree) {}
  ReflectionOrder(int degree, std::vector<Transposition> sequence);

  int degree() const { return degree_; }
  const std::vector<Transposition>& sequence() const { return sequence_; }
  std::size_t size() const { return sequence_.size(); }
  bool empty() const { return sequence_.empty(); }

  /// t_1 t_2 ... t_k
  Permutation product() const;
  ReflectionOrder reversed() const;

  /// position of t, or -1
  int position(const Transposition& t) const;

  auto operator<=>(const ReflectionOrder&) const = default;
  bool operator==(const ReflectionOrder&) const = default;

private:
  int degree_;
  std::vector<Transposition> sequence_;
};

std::string format(const ReflectionOrder& order);
nlohmann::json to_json(const ReflectionOrder& order);

/// `.order` text: one "T(i,j)" per line; blank lines and '#' comments skipped.
ReflectionOrder parse_order_file(std::string_view text, int degree);
std::string to_order_file(const ReflectionOrder& order);

/// For every i < j < k with T(i,j), T(j,k) in A: if T(i,k) in A it lies
/// strictly between them; otherwise R(i,j,k) in A iff T(i,j) precedes T(j,k).
/// Throws std::invalid_argument unless the order's elements are exactly A_T.
bool is_compatible(const ReflectionOrder& order, const AdmissibleSet& a);

/// T(i,i+d) T(i,i+d-1) ... T(i,i+1) in S_n.
Permutation tail_product(int n, int i, int d);

struct ConstructionStep {
  enum class Kind { Wedge, Inversion };
  Kind kind = Kind::Wedge;
  Wedge wedge;          // meaningful for Kind::Wedge
  AdmissibleSet level;  // the set handled at this step
};

struct Construction {
  ReflectionOrder order;
  std::vector<ConstructionStep> steps;
};

/// Recursive construction on sets: peel the lexicographically smallest wedge
/// (i,j), recurse on A°, append T(i,j), T(i,j-1), ..., T(i,i+1).  A set
/// without a wedge is handled through A^{-1} and the reversed order.
Construction construct_compatible_order_traced(const AdmissibleSet& a);
ReflectionOrder construct_compatible_order(const AdmissibleSet& a);

/// Order for C(w); throws std::domain_error for non-smooth w.
ReflectionOrder construct_compatible_order(const Permutation& w);

struct VerificationReport {
  Permutation w;
  Permutation product;
  BruhatChain prefix_chain;  // e, t1, t1 t2, ..., t1...tk
  BruhatChain suffix_chain;  // e, tk, tk t(k-1), ..., tk...t1
  bool product_ok = false;
  bool prefix_saturated = false;
  bool suffix_saturated = false;  // includes ending at w^{-1}
  std::optional<std::size_t> prefix_first_non_cover;
  std::optional<std::size_t> suffix_first_non_cover;

  bool all_ok() const { return product_ok && prefix_saturated && suffix_saturated; }
};

/// Throws std::invalid_argument unless the order's elements are exactly C_T(w).
VerificationReport verify_theorem(const Permutation& w, const ReflectionOrder& order);
nlohmann::json to_json(const VerificationReport& report);

/// The constraint engine instance for A; items index A.reflections().
OrderSearch make_order_search(const AdmissibleSet& a);

/// Visits every compatible order of A.  Throws std::length_error when
/// |A_T| exceeds max_reflections.
template <class Visit>
std::size_t for_each_compatible_order(const AdmissibleSet& a, Visit&& visit,
                                      std::size_t max_reflections = kDefaultMaxEnumeratedReflections);

std::vector<ReflectionOrder> enumerate_compatible_orders(
    const AdmissibleSet& a, std::size_t max_reflections = kDefaultMaxEnumeratedReflections);

/// Orders reachable by one elementary move (swap of adjacent commuting
/// reflections, or reversal of a consecutive T(i,j), T(i,k), T(j,k)) that are
/// again compatible with A.  Sorted, without duplicates.
std::vector<ReflectionOrder> elementary_neighbors(const ReflectionOrder& order,
                                                  const AdmissibleSet& a);

struct OrderGraph {
  std::vector<ReflectionOrder> vertices;
  std::vector<std::pair<std::size_t, std::size_t>> edges;  // i < j
};

/// Connected component of the first compatible order under elementary moves.
OrderGraph explore_order_graph(const AdmissibleSet& a,
                               std::size_t max_reflections = kDefaultMaxEnumeratedReflections);

struct ConnectivityReport {
  std::size_t reflections = 0;
  std::size_t component_size = 0;
  /// Only filled when the full enumeration was run.
  std::optional<std::size_t> total_orders;
  std::optional<bool> connected;
};

/// BFS closure, compared against full enumeration when |A_T| <= full_check.
ConnectivityReport check_connectivity(const AdmissibleSet& a,
                                      std::size_t full_check = kDefaultMaxGraphCheckReflections);

/// Throws std::length_error if |A_T| exceeds the full-check bound.
bool graph_connected(const AdmissibleSet& a);

std::string to_dot(const OrderGraph& graph, const std::string& graph_name = "G_A");

struct SmoothnessCertificate {
  bool smooth = false;
  int length = 0;
  std::size_t reflection_count = 0;
  std::optional<ReflectionOrder> witness;
  std::optional<VerificationReport> report;
};

/// Pattern verdict; non-smooth elements come with |C_T(w)| != length(w),
/// smooth ones with a verified witness order.
SmoothnessCertificate smoothness_characterization(const Permutation& w);

// --- implementation -------------------------------------------------------

template <class Visit>
std::size_t for_each_compatible_order(const AdmissibleSet& a, Visit&& visit,
                                      std::size_t max_reflections) {
  const auto items = a.reflections();
  if (items.size() > max_reflections)
    throw std::length_error("refusing to enumerate orders of " + std::to_string(items.size()) +
                            " reflections (cap " + std::to_string(max_reflections) + ")");
  const auto search = make_order_search(a);
  return search.for_each([&](std::span<const int> idx) {
    std::vector<Transposition> seq;
    seq.reserve(idx.size());
    for (int x : idx) seq.push_back(items[static_cast<std::size_t>(x)]);
    return visit(ReflectionOrder(a.degree(), std::move(seq)));
  });
}

}  // namespace smoothperm
