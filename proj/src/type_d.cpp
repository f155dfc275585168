#include "smoothperm/type_d.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <nlohmann/json.hpp>
#include <stdexcept>
#include <thread>

namespace smoothperm::type_d {

namespace {

int simple_key(const RootD& simple) { return simple.j; }

}  // namespace

// --- roots ----------------------------------------------------------------

RootD RootD::difference(int j, int i) {
  if (i < 1 || j < 1 || i == j) throw std::invalid_argument("e_j - e_i needs distinct indices >= 1");
  return {Kind::Difference, j, i};
}

RootD RootD::sum(int j, int i) {
  if (i < 1 || j <= i) throw std::invalid_argument("e_j + e_i needs j > i >= 1");
  return {Kind::Sum, j, i};
}

RootD RootD::neg_sum(int j, int i) {
  if (i < 1 || j <= i) throw std::invalid_argument("-e_j - e_i needs j > i >= 1");
  return {Kind::NegSum, j, i};
}

std::vector<int> RootD::coordinates(int n) const {
  if (max_index() > n) throw std::invalid_argument(format(*this) + " exceeds rank");
  std::vector<int> c(static_cast<std::size_t>(n), 0);
  const auto J = static_cast<std::size_t>(j - 1);
  const auto I = static_cast<std::size_t>(i - 1);
  switch (kind) {
    case Kind::Difference: c[J] = 1; c[I] = -1; break;
    case Kind::Sum: c[J] = 1; c[I] = 1; break;
    case Kind::NegSum: c[J] = -1; c[I] = -1; break;
  }
  return c;
}

std::optional<RootD> RootD::from_coordinates(std::span<const int> c) {
  std::vector<int> support;
  for (std::size_t x = 0; x < c.size(); ++x) {
    if (c[x] == 0) continue;
    if (c[x] != 1 && c[x] != -1) return std::nullopt;
    support.push_back(static_cast<int>(x) + 1);
  }
  if (support.size() != 2) return std::nullopt;
  const int lo = support[0];
  const int hi = support[1];
  const int a = c[static_cast<std::size_t>(hi - 1)];
  const int b = c[static_cast<std::size_t>(lo - 1)];
  if (a == 1 && b == 1) return RootD::sum(hi, lo);
  if (a == -1 && b == -1) return RootD::neg_sum(hi, lo);
  if (a == 1) return RootD::difference(hi, lo);
  return RootD::difference(lo, hi);
}

RootD operator-(const RootD& a) {
  switch (a.kind) {
    case RootD::Kind::Difference: return RootD::difference(a.i, a.j);
    case RootD::Kind::Sum: return RootD::neg_sum(a.j, a.i);
    case RootD::Kind::NegSum: return RootD::sum(a.j, a.i);
  }
  throw std::logic_error("unreachable");
}

std::optional<RootD> root_sum(const RootD& a, const RootD& b) {
  const int n = std::max(a.max_index(), b.max_index());
  auto ca = a.coordinates(n);
  const auto cb = b.coordinates(n);
  for (std::size_t x = 0; x < ca.size(); ++x) ca[x] += cb[x];
  return RootD::from_coordinates(ca);
}

std::string format(const RootD& a) {
  const auto J = std::to_string(a.j);
  const auto I = std::to_string(a.i);
  switch (a.kind) {
    case RootD::Kind::Difference: return "e" + J + "-e" + I;
    case RootD::Kind::Sum: return "e" + J + "+e" + I;
    case RootD::Kind::NegSum: return "-e" + J + "-e" + I;
  }
  return {};
}

RootD parse_root(std::string_view text) {
  // [-]e<a>(+|-)e<b>
  const std::string original(text);
  auto fail = [&]() -> RootD { throw std::invalid_argument("malformed root: '" + original + "'"); };
  bool leading_minus = false;
  if (!text.empty() && text.front() == '-') {
    leading_minus = true;
    text.remove_prefix(1);
  }
  auto read_index = [&](int& out) {
    if (text.empty() || text.front() != 'e') return false;
    text.remove_prefix(1);
    std::size_t used = 0;
    while (used < text.size() && std::isdigit(static_cast<unsigned char>(text[used]))) ++used;
    if (used == 0) return false;
    out = std::stoi(std::string(text.substr(0, used)));
    text.remove_prefix(used);
    return true;
  };
  int a = 0;
  int b = 0;
  if (!read_index(a) || text.empty()) return fail();
  const char op = text.front();
  text.remove_prefix(1);
  if ((op != '+' && op != '-') || !read_index(b) || !text.empty()) return fail();
  try {
    if (!leading_minus && op == '-') return RootD::difference(a, b);
    if (!leading_minus && op == '+' && a > b) return RootD::sum(a, b);
    if (leading_minus && op == '-' && a > b) return RootD::neg_sum(a, b);
  } catch (const std::invalid_argument&) {
  }
  return fail();
}

RootSystem root_system(int n) {
  if (n < 2) throw std::invalid_argument("type D needs rank >= 2");
  RootSystem rs;
  rs.rank = n;
  for (int j = 2; j <= n; ++j)
    for (int i = 1; i < j; ++i) {
      rs.positive.push_back(RootD::difference(j, i));
      rs.positive.push_back(RootD::sum(j, i));
    }
  std::sort(rs.positive.begin(), rs.positive.end());
  for (const auto& a : rs.positive) {
    rs.roots.push_back(a);
    rs.roots.push_back(-a);
  }
  std::sort(rs.roots.begin(), rs.roots.end());
  for (int i = 1; i < n; ++i) rs.simple.push_back(RootD::difference(i + 1, i));
  rs.simple.push_back(RootD::sum(2, 1));
  return rs;
}

std::vector<std::pair<RootD, RootD>> root_poset_covers(int n) {
  const auto rs = root_system(n);
  std::vector<std::pair<RootD, RootD>> out;
  for (const auto& a : rs.positive)
    for (const auto& b : rs.positive) {
      auto cb = b.coordinates(n);
      const auto ca = a.coordinates(n);
      for (std::size_t x = 0; x < cb.size(); ++x) cb[x] -= ca[x];
      const auto diff = RootD::from_coordinates(cb);
      if (diff && std::find(rs.simple.begin(), rs.simple.end(), *diff) != rs.simple.end())
        out.emplace_back(a, b);
    }
  return out;
}

RootD f_map(const RootD& a) {
  if (!a.is_positive()) throw std::invalid_argument(format(a) + " is not a positive root");
  if (a.kind == RootD::Kind::Sum && a.j == 2 && a.i == 1) return RootD::sum(2, 1);
  return RootD::difference(a.j, a.j - 1);
}

std::string format(SimpleRootOrder order) {
  return order == SimpleRootOrder::ByIndex ? "by-index" : "reversed-index";
}

std::string format(SumConditionReading reading) {
  return reading == SumConditionReading::AnyDecompositions ? "any-decompositions" : "same-decomposition";
}

bool simple_precedes(const RootD& a, const RootD& b, SimpleRootOrder order) {
  if (a == b) return false;
  const int ka = simple_key(a);
  const int kb = simple_key(b);
  if (ka == kb)
    throw std::logic_error("simple roots " + format(a) + " and " + format(b) + " share an index");
  return order == SimpleRootOrder::ByIndex ? ka < kb : ka > kb;
}

// --- signed permutations ----------------------------------------------------

SignedPermutation::SignedPermutation(int n) {
  if (n < 1) throw std::invalid_argument("rank must be >= 1");
  window_.resize(static_cast<std::size_t>(n));
  for (int x = 0; x < n; ++x) window_[static_cast<std::size_t>(x)] = x + 1;
}

SignedPermutation::SignedPermutation(std::vector<int> window) : window_(std::move(window)) {
  if (window_.empty()) throw std::invalid_argument("empty signed permutation");
  const int n = rank();
  std::vector<bool> seen(static_cast<std::size_t>(n + 1), false);
  int negatives = 0;
  for (int v : window_) {
    const int a = std::abs(v);
    if (a < 1 || a > n || seen[static_cast<std::size_t>(a)])
      throw std::invalid_argument("absolute values must be a bijection on [1,n]");
    seen[static_cast<std::size_t>(a)] = true;
    if (v < 0) ++negatives;
  }
  if (negatives % 2 != 0) throw std::invalid_argument("type D needs an even number of negative entries");
}

SignedPermutation SignedPermutation::from_permutation(const Permutation& w) {
  return SignedPermutation(std::vector<int>(w.window().begin(), w.window().end()));
}

bool SignedPermutation::is_identity() const {
  for (int x = 1; x <= rank(); ++x)
    if ((*this)(x) != x) return false;
  return true;
}

SignedPermutation compose(const SignedPermutation& u, const SignedPermutation& v) {
  if (u.rank() != v.rank()) throw std::invalid_argument("rank mismatch");
  std::vector<int> out(static_cast<std::size_t>(u.rank()));
  for (int x = 1; x <= u.rank(); ++x) out[static_cast<std::size_t>(x - 1)] = u(v(x));
  return SignedPermutation(std::move(out));
}

SignedPermutation operator*(const SignedPermutation& u, const SignedPermutation& v) {
  return compose(u, v);
}

SignedPermutation inverse(const SignedPermutation& w) {
  std::vector<int> out(static_cast<std::size_t>(w.rank()));
  for (int x = 1; x <= w.rank(); ++x) {
    const int y = w(x);
    out[static_cast<std::size_t>(std::abs(y) - 1)] = y > 0 ? x : -x;
  }
  return SignedPermutation(std::move(out));
}

SignedPermutation reflection(const RootD& a, int n) {
  if (!a.is_positive()) throw std::invalid_argument(format(a) + " is not a positive root");
  if (a.max_index() > n) throw std::invalid_argument(format(a) + " exceeds rank");
  std::vector<int> w(static_cast<std::size_t>(n));
  for (int x = 0; x < n; ++x) w[static_cast<std::size_t>(x)] = x + 1;
  const auto I = static_cast<std::size_t>(a.i - 1);
  const auto J = static_cast<std::size_t>(a.j - 1);
  if (a.kind == RootD::Kind::Difference) {
    w[I] = a.j;
    w[J] = a.i;
  } else {
    w[I] = -a.j;
    w[J] = -a.i;
  }
  return SignedPermutation(std::move(w));
}

std::string format(const SignedPermutation& w) {
  std::string out;
  for (int v : w.window()) {
    if (!out.empty()) out.push_back(',');
    out += std::to_string(v);
  }
  return out;
}

SignedPermutation parse_signed_permutation(std::string_view text) {
  std::vector<int> w;
  std::size_t start = 0;
  const std::string s(text);
  if (s.find_first_not_of(" \t") == std::string::npos) throw std::invalid_argument("empty signed permutation");
  while (true) {
    const auto comma = s.find(',', start);
    const auto part = s.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
    try {
      std::size_t used = 0;
      w.push_back(std::stoi(part, &used));
      if (part.find_first_not_of(" \t", used) != std::string::npos) throw std::invalid_argument(part);
    } catch (const std::exception&) {
      throw std::invalid_argument("malformed signed permutation: '" + s + "'");
    }
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return SignedPermutation(std::move(w));
}

// --- the group ------------------------------------------------------------

WeylGroupD::WeylGroupD(int rank, int max_rank) : rank_(rank), roots_(root_system(rank)) {
  if (rank > max_rank)
    throw std::length_error("rank " + std::to_string(rank) + " exceeds the configured limit " +
                            std::to_string(max_rank));
  std::vector<SignedPermutation> simple;
  for (const auto& a : roots_.simple) simple.push_back(reflection(a, rank));

  // Breadth-first search on the right Cayley graph: distance = length.
  std::vector<SignedPermutation> found{SignedPermutation(rank)};
  std::map<SignedPermutation, std::size_t> seen{{found[0], 0}};
  std::vector<int> dist{0};
  std::vector<std::ptrdiff_t> parent{-1};
  std::vector<std::size_t> letter{0};
  for (std::size_t head = 0; head < found.size(); ++head)
    for (std::size_t s = 0; s < simple.size(); ++s) {
      auto next = compose(found[head], simple[s]);
      if (seen.contains(next)) continue;
      seen.emplace(next, found.size());
      found.push_back(std::move(next));
      dist.push_back(dist[head] + 1);
      parent.push_back(static_cast<std::ptrdiff_t>(head));
      letter.push_back(s);
    }

  std::vector<std::size_t> perm(found.size());
  for (std::size_t x = 0; x < perm.size(); ++x) perm[x] = x;
  std::sort(perm.begin(), perm.end(), [&](std::size_t a, std::size_t b) {
    return dist[a] != dist[b] ? dist[a] < dist[b] : found[a] < found[b];
  });
  std::vector<std::size_t> new_index(found.size());
  for (std::size_t x = 0; x < perm.size(); ++x) new_index[perm[x]] = x;

  for (std::size_t x = 0; x < perm.size(); ++x) {
    const auto old = perm[x];
    elements_.push_back(found[old]);
    lengths_.push_back(dist[old]);
    word_parent_.push_back(parent[old] < 0 ? -1
                                           : static_cast<std::ptrdiff_t>(new_index[static_cast<std::size_t>(parent[old])]));
    word_letter_.push_back(letter[old]);
    index_.emplace(found[old], x);
  }

  for (const auto& s : simple) simple_indices_.push_back(index_of(s));
  for (const auto& a : roots_.positive) reflection_indices_.push_back(index_of(reflection(a, rank)));

  const std::size_t count = elements_.size();
  up_.assign(count, {});
  down_.assign(count, {});
  for (std::size_t x = 0; x < count; ++x)
    for (std::size_t r = 0; r < roots_.positive.size(); ++r) {
      const auto y = multiply(x, reflection_indices_[r]);
      if (lengths_[y] == lengths_[x] + 1) {
        up_[x].push_back(y);
        down_[y].push_back(x);
      }
    }
  for (auto& v : up_) std::sort(v.begin(), v.end());
  for (auto& v : down_) std::sort(v.begin(), v.end());

  below_.assign(count, boost::dynamic_bitset<>(count));
  for (std::size_t y = 0; y < count; ++y) {
    below_[y].set(y);
    for (std::size_t x : down_[y]) below_[y] |= below_[x];
  }
}

std::size_t WeylGroupD::index_of(const SignedPermutation& w) const {
  const auto it = index_.find(w);
  if (it == index_.end()) throw std::invalid_argument(format(w) + " is not in the group");
  return it->second;
}

std::size_t WeylGroupD::multiply(std::size_t x, std::size_t y) const {
  return index_of(compose(elements_[x], elements_[y]));
}

std::size_t WeylGroupD::reflection_index(const RootD& positive_root) const {
  const auto it = std::find(roots_.positive.begin(), roots_.positive.end(), positive_root);
  if (it == roots_.positive.end()) throw std::invalid_argument(format(positive_root) + " is not a positive root");
  return reflection_indices_[static_cast<std::size_t>(it - roots_.positive.begin())];
}

std::vector<std::size_t> WeylGroupD::reduced_word(std::size_t idx) const {
  std::vector<std::size_t> word;
  for (auto x = static_cast<std::ptrdiff_t>(idx); word_parent_[static_cast<std::size_t>(x)] >= 0;
       x = word_parent_[static_cast<std::size_t>(x)])
    word.push_back(word_letter_[static_cast<std::size_t>(x)]);
  std::reverse(word.begin(), word.end());
  return word;
}

std::vector<std::size_t> WeylGroupD::rank_generating_function(std::size_t idx) const {
  std::vector<std::size_t> coeffs(static_cast<std::size_t>(lengths_[idx] + 1), 0);
  const auto& below = below_[idx];
  for (auto x = below.find_first(); x != boost::dynamic_bitset<>::npos; x = below.find_next(x))
    ++coeffs[static_cast<std::size_t>(lengths_[x])];
  return coeffs;
}

// --- C^{2,3} and admissibility ----------------------------------------------

std::string format(const ElementD& c) {
  if (c.is_reflection) return "t(" + format(c.alpha) + ")";
  return "t(" + format(c.alpha) + ")t(" + format(c.beta) + ")";
}

std::vector<ElementD> all_element23_d(const WeylGroupD& g) {
  const auto& pos = g.roots().positive;
  std::vector<ElementD> out;
  for (const auto& a : pos) out.push_back(ElementD::reflection(a));
  for (const auto& a : pos)
    for (const auto& b : pos) {
      const auto s = root_sum(a, b);
      if (s && s->is_positive()) out.push_back(ElementD::product(a, b));
    }
  std::sort(out.begin(), out.end());
  return out;
}

std::size_t realize(const WeylGroupD& g, const ElementD& c) {
  if (c.is_reflection) return g.reflection_index(c.alpha);
  return g.multiply(g.reflection_index(c.alpha), g.reflection_index(c.beta));
}

AdmissibleSetD::AdmissibleSetD(int rank, std::vector<ElementD> members) : rank_(rank) {
  for (const auto& c : members) insert(c);
}

void AdmissibleSetD::insert(const ElementD& c) {
  if (!c.alpha.is_positive() || !c.beta.is_positive())
    throw std::invalid_argument(format(c) + " uses a non-positive root");
  if (c.alpha.max_index() > rank_ || c.beta.max_index() > rank_)
    throw std::invalid_argument(format(c) + " exceeds rank");
  if (c.is_reflection && c.alpha != c.beta) throw std::invalid_argument("malformed reflection");
  if (!c.is_reflection) {
    const auto s = root_sum(c.alpha, c.beta);
    if (!s || !s->is_positive()) throw std::invalid_argument(format(c) + " is not in C^{2,3}");
  }
  members_.insert(c);
}

std::vector<RootD> AdmissibleSetD::reflections() const {
  std::vector<RootD> out;
  for (const auto& c : members_)
    if (c.is_reflection) out.push_back(c.alpha);
  return out;
}

AdmissibleSetD c23_d(const WeylGroupD& g, std::size_t w) {
  AdmissibleSetD a(g.rank());
  for (const auto& c : all_element23_d(g))
    if (g.leq(realize(g, c), w)) a.insert(c);
  return a;
}

AdmissibilityCheckD check_admissible_d(const WeylGroupD& g, const AdmissibleSetD& a,
                                       SimpleRootOrder order, SumConditionReading reading) {
  AdmissibilityCheckD result;
  const auto universe = all_element23_d(g);
  std::vector<std::size_t> realized;
  for (const auto& c : universe) realized.push_back(realize(g, c));

  // 1. downward closure within C^{2,3}
  for (std::size_t m = 0; m < universe.size(); ++m) {
    if (!a.contains(universe[m])) continue;
    for (std::size_t b = 0; b < universe.size(); ++b)
      if (!a.contains(universe[b]) && g.leq(realized[b], realized[m])) {
        result.admissible = false;
        result.violated = 1;
        result.elements = {universe[m], universe[b]};
        return result;
      }
  }

  const auto& pos = g.roots().positive;

  // 2. t_a t_b in A with f(b) < f(a), and t_b' t_a' in A with f(b') < f(a'),
  //    a + b = a' + b' = c  =>  t_c in A
  for (const auto& c : pos) {
    if (a.has_reflection(c)) continue;
    std::optional<std::pair<RootD, RootD>> forward;
    std::optional<std::pair<RootD, RootD>> backward;
    for (const auto& x : pos)
      for (const auto& y : pos) {
        const auto s = root_sum(x, y);
        if (!s || *s != c) continue;
        if (!simple_precedes(f_map(y), f_map(x), order)) continue;
        if (reading == SumConditionReading::SameDecomposition) {
          if (!forward && a.has_product(x, y) && a.has_product(y, x)) forward = backward = std::pair{x, y};
          continue;
        }
        if (!forward && a.has_product(x, y)) forward = std::pair{x, y};
        if (!backward && a.has_product(y, x)) backward = std::pair{x, y};
      }
    if (forward && backward) {
      result.admissible = false;
      result.violated = 2;
      result.witness = {forward->first, forward->second, backward->first, backward->second, c};
      return result;
    }
  }

  // 3. t_a, t_b in A and a + b positive  =>  t_a t_b or t_b t_a in A
  for (const auto& x : pos)
    for (const auto& y : pos) {
      if (!(x < y) || !a.has_reflection(x) || !a.has_reflection(y)) continue;
      const auto s = root_sum(x, y);
      if (!s || !s->is_positive()) continue;
      if (!a.has_product(x, y) && !a.has_product(y, x)) {
        result.admissible = false;
        result.violated = 3;
        result.witness = {x, y};
        return result;
      }
    }
  return result;
}

bool is_admissible_d(const WeylGroupD& g, const AdmissibleSetD& a, SimpleRootOrder order,
                     SumConditionReading reading) {
  return check_admissible_d(g, a, order, reading).admissible;
}

bool is_compatible_d(std::span<const RootD> order, const AdmissibleSetD& a) {
  auto sorted = std::vector<RootD>(order.begin(), order.end());
  std::sort(sorted.begin(), sorted.end());
  if (sorted != a.reflections() || std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw std::invalid_argument("order does not list the reflection part of the set");
  std::map<RootD, std::size_t> pos;
  for (std::size_t p = 0; p < order.size(); ++p) pos[order[p]] = p;
  for (const auto& x : order)
    for (const auto& y : order) {
      if (!(x < y)) continue;
      const auto s = root_sum(x, y);
      if (!s || !s->is_positive()) continue;
      if (a.has_reflection(*s)) {
        const auto px = pos[x];
        const auto py = pos[y];
        const auto ps = pos[*s];
        if (!((px < ps && ps < py) || (py < ps && ps < px))) return false;
      } else {
        if (a.has_product(x, y) != (pos[x] < pos[y])) return false;
        if (a.has_product(y, x) != (pos[y] < pos[x])) return false;
      }
    }
  return true;
}

OrderSearch make_order_search_d(const AdmissibleSetD& a) {
  const auto items = a.reflections();
  std::map<RootD, int> index;
  for (std::size_t x = 0; x < items.size(); ++x) index[items[x]] = static_cast<int>(x);
  std::vector<OrderConstraint> constraints;
  for (const auto& x : items)
    for (const auto& y : items) {
      if (!(x < y)) continue;
      const auto s = root_sum(x, y);
      if (!s || !s->is_positive()) continue;
      const int ix = index.at(x);
      const int iy = index.at(y);
      if (a.has_reflection(*s)) {
        const int is = index.at(*s);
        constraints.push_back({{ix, is, iy}, {{ix, is, iy}, {iy, is, ix}}});
        continue;
      }
      const bool xy = a.has_product(x, y);
      const bool yx = a.has_product(y, x);
      OrderConstraint c{{ix, iy}, {}};
      if (xy && !yx) c.alternatives.push_back({ix, iy});
      if (yx && !xy) c.alternatives.push_back({iy, ix});
      constraints.push_back(std::move(c));
    }
  return OrderSearch(static_cast<int>(items.size()), std::move(constraints));
}

std::size_t order_product(const WeylGroupD& g, std::span<const RootD> order) {
  SignedPermutation w(g.rank());
  for (const auto& a : order) w = compose(w, reflection(a, g.rank()));
  return g.index_of(w);
}

bool is_smooth_d(const WeylGroupD& g, std::size_t w) {
  const auto c = g.rank_generating_function(w);
  return std::equal(c.begin(), c.end(), c.rbegin());
}

// --- conjecture -------------------------------------------------------------

namespace {

ElementVerdict check_element(const WeylGroupD& g, std::size_t w, SimpleRootOrder order,
                             SumConditionReading reading) {
  ElementVerdict v;
  v.index = w;
  v.window = format(g.element(w));
  v.length = g.length(w);
  const auto a = c23_d(g, w);
  v.members = a.size();
  const auto items = a.reflections();
  v.reflections = items.size();
  v.admissible = is_admissible_d(g, a, order, reading);
  const auto search = make_order_search_d(a);
  std::vector<RootD> seq(items.size());
  v.orders = search.for_each([&](std::span<const int> idx) {
    for (std::size_t p = 0; p < idx.size(); ++p) seq[p] = items[static_cast<std::size_t>(idx[p])];
    if (order_product(g, seq) != w) ++v.wrong_products;
    return true;
  });
  return v;
}

}  // namespace

ConjectureReport verify_conjecture_d(const WeylGroupD& g, SimpleRootOrder order, unsigned workers,
                                     SumConditionReading reading) {
  ConjectureReport report;
  report.rank = g.rank();
  report.order = order;
  report.reading = reading;
  report.group_size = g.size();

  std::vector<std::size_t> smooth;
  for (std::size_t w = 0; w < g.size(); ++w)
    if (is_smooth_d(g, w)) smooth.push_back(w);
  report.smooth = smooth.size();

  std::vector<ElementVerdict> verdicts(smooth.size());
  workers = std::max(1u, workers);
  std::vector<std::thread> pool;
  std::vector<std::exception_ptr> errors(workers);
  for (unsigned t = 0; t < workers; ++t)
    pool.emplace_back([&, t] {
      try {
        for (std::size_t x = t; x < smooth.size(); x += workers)
          verdicts[x] = check_element(g, smooth[x], order, reading);
      } catch (...) {
        errors[t] = std::current_exception();
      }
    });
  for (auto& th : pool) th.join();
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);

  for (const auto& v : verdicts) {
    if (!v.admissible) ++report.not_admissible;
    if (v.orders == 0) ++report.without_order;
    if (v.wrong_products > 0) ++report.with_wrong_product;
    report.orders_checked += v.orders;
    if (!v.ok()) report.counterexamples.push_back(v.index);
  }
  report.verdicts = std::move(verdicts);
  return report;
}

nlohmann::json to_json(const ConjectureReport& r) {
  nlohmann::json out;
  out["rank"] = r.rank;
  out["simple_root_order"] = format(r.order);
  out["sum_condition"] = format(r.reading);
  out["group_size"] = r.group_size;
  out["smooth"] = r.smooth;
  out["not_admissible"] = r.not_admissible;
  out["without_order"] = r.without_order;
  out["with_wrong_product"] = r.with_wrong_product;
  out["orders_checked"] = r.orders_checked;
  out["pass"] = r.pass();
  auto verdicts = nlohmann::json::array();
  for (const auto& v : r.verdicts)
    verdicts.push_back({{"index", v.index},
                        {"w", v.window},
                        {"length", v.length},
                        {"members", v.members},
                        {"reflections", v.reflections},
                        {"admissible", v.admissible},
                        {"orders", v.orders},
                        {"wrong_products", v.wrong_products},
                        {"ok", v.ok()}});
  out["verdicts"] = std::move(verdicts);
  auto ce = nlohmann::json::array();
  for (const auto& v : r.verdicts)
    if (!v.ok()) ce.push_back(v.window);
  out["counterexamples"] = std::move(ce);
  return out;
}

}  // namespace smoothperm::type_d
