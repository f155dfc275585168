#pragma once

#include <algorithm>
#include <numeric>

namespace smoothperm {

template <class F>
void for_each_permutation(int n, F&& f) {
  std::vector<int> window(static_cast<std::size_t>(n));
  std::iota(window.begin(), window.end(), 1);
  do {
    f(Permutation(window));
  } while (std::next_permutation(window.begin(), window.end()));
}

}  // namespace smoothperm
