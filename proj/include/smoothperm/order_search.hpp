#pragma once

// Backtracking enumeration of linear orders on {0, ..., k-1} subject to
// local ordering constraints.  A constraint names a small set of items and
// the admissible relative orders of those items; a partial order (a prefix)
// is kept only while, for every constraint, the already placed members in
// placement order form a prefix of at least one admissible relative order.
//
// Both the type A and the type D compatible-order searches are instances.

#include <cstddef>
#include <span>
#include <stdexcept>
#include <vector>

namespace smoothperm {

struct OrderConstraint {
  std::vector<int> members;
  /// Each alternative is a permutation of `members`.  No alternatives means
  /// the constraint can never be met.
  std::vector<std::vector<int>> alternatives;
};

class OrderSearch {
public:
  OrderSearch(int item_count, std::vector<OrderConstraint> constraints)
      : item_count_(item_count), constraints_(std::move(constraints)),
        touching_(static_cast<std::size_t>(item_count)) {
    for (std::size_t c = 0; c < constraints_.size(); ++c)
      for (int m : constraints_[c].members) {
        if (m < 0 || m >= item_count_) throw std::out_of_range("constraint member out of range");
        touching_[static_cast<std::size_t>(m)].push_back(c);
      }
  }

  int item_count() const { return item_count_; }

  /// Calls visit(order) for every satisfying order, in lexicographic order of
  /// item sequences.  `visit` returns false to stop early.  Returns the number
  /// of orders visited.
  template <class Visit>
  std::size_t for_each(Visit&& visit) const {
    for (const auto& c : constraints_)
      if (c.alternatives.empty() && !c.members.empty()) return 0;
    State s;
    s.position.assign(static_cast<std::size_t>(item_count_), -1);
    s.order.reserve(static_cast<std::size_t>(item_count_));
    bool keep_going = true;
    std::size_t visited = 0;
    extend(s, visit, keep_going, visited);
    return visited;
  }

  std::vector<std::vector<int>> all() const {
    std::vector<std::vector<int>> out;
    for_each([&](std::span<const int> order) {
      out.emplace_back(order.begin(), order.end());
      return true;
    });
    return out;
  }

  bool any() const {
    return for_each([](std::span<const int>) { return false; }) > 0;
  }

private:
  struct State {
    std::vector<int> position;
    std::vector<int> order;
  };

  bool consistent(const State& s, const OrderConstraint& c) const {
    // placed members, sorted by position (constraints have at most a few members)
    int placed[8];
    int count = 0;
    for (int m : c.members)
      if (s.position[static_cast<std::size_t>(m)] >= 0) placed[count++] = m;
    for (int a = 1; a < count; ++a)
      for (int b = a; b > 0 && s.position[static_cast<std::size_t>(placed[b])] <
                                   s.position[static_cast<std::size_t>(placed[b - 1])];
           --b)
        std::swap(placed[b], placed[b - 1]);
    for (const auto& alt : c.alternatives) {
      bool prefix = true;
      for (int p = 0; p < count && prefix; ++p) prefix = alt[static_cast<std::size_t>(p)] == placed[p];
      if (prefix) return true;
    }
    return false;
  }

  template <class Visit>
  void extend(State& s, Visit& visit, bool& keep_going, std::size_t& visited) const {
    if (static_cast<int>(s.order.size()) == item_count_) {
      ++visited;
      keep_going = visit(std::span<const int>(s.order));
      return;
    }
    for (int x = 0; x < item_count_ && keep_going; ++x) {
      if (s.position[static_cast<std::size_t>(x)] >= 0) continue;
      s.position[static_cast<std::size_t>(x)] = static_cast<int>(s.order.size());
      s.order.push_back(x);
      bool ok = true;
      for (std::size_t c : touching_[static_cast<std::size_t>(x)])
        if (!consistent(s, constraints_[c])) {
          ok = false;
          break;
        }
      if (ok) extend(s, visit, keep_going, visited);
      s.order.pop_back();
      s.position[static_cast<std::size_t>(x)] = -1;
    }
  }

  int item_count_;
  std::vector<OrderConstraint> constraints_;
  std::vector<std::vector<std::size_t>> touching_;
};

}  // namespace smoothperm
