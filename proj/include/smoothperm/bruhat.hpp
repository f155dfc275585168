#pragma once

// Strong Bruhat order on S_n.

#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "smoothperm/element23.hpp"
#include "smoothperm/permutation.hpp"

namespace smoothperm {

/// A nonempty sequence of permutations of one degree, consecutive entries
/// distinct.  Elements are stored in full so every step can be re-verified.
class BruhatChain {
public:
  explicit BruhatChain(std::vector<Permutation> elements);

  const std::vector<Permutation>& elements() const { return elements_; }
  std::size_t size() const { return elements_.size(); }
  const Permutation& front() const { return elements_.front(); }
  const Permutation& back() const { return elements_.back(); }

private:
  std::vector<Permutation> elements_;
};

/// x <= y, by dominance of the rank counts #{a <= i : w(a) >= j}.
bool leq(const Permutation& x, const Permutation& y);

/// y covers x: y = x T(a,b) with x(a) < x(b) and no a < c < b having
/// x(a) < x(c) < x(b).
bool is_cover(const Permutation& x, const Permutation& y);

/// Same relation computed as leq(x,y) && length(y) == length(x) + 1.
bool is_cover_by_length(const Permutation& x, const Permutation& y);

/// T(i,j) <= w iff mu_w(i) >= j and mu_{w^{-1}}(i) >= j.
bool reflection_leq(const Transposition& t, const Permutation& w);

bool element23_leq(const Element23& c, const Permutation& w);

bool is_saturated_chain(const BruhatChain& chain);

/// Index d of the first step elements[d] -> elements[d+1] that is not a cover.
std::optional<std::size_t> first_non_cover(const BruhatChain& chain);

/// Array of one-line notations.
nlohmann::json to_json(const BruhatChain& chain);

/// The chain as a directed path graph.
std::string to_dot(const BruhatChain& chain, const std::string& graph_name = "chain");

}  // namespace smoothperm
