#include "smoothperm/element23.hpp"

#include <stdexcept>

namespace smoothperm {

namespace {

void require_triple(int i, int j, int k) {
  if (!(1 <= i && i < j && j < k))
    throw std::invalid_argument("3-cycle needs 1 <= i < j < k");
}

}  // namespace

Element23 Element23::reflection(int i, int j) {
  const Transposition t(i, j);
  return Element23{Element23Kind::Reflection, t.i, t.j, 0};
}

Element23 Element23::r_cycle(int i, int j, int k) {
  require_triple(i, j, k);
  return Element23{Element23Kind::RCycle, i, j, k};
}

Element23 Element23::l_cycle(int i, int j, int k) {
  require_triple(i, j, k);
  return Element23{Element23Kind::LCycle, i, j, k};
}

Transposition Element23::as_transposition() const {
  if (!is_reflection()) throw std::logic_error("not a reflection: " + format(*this));
  return Transposition(i, j);
}

Permutation realize(const Element23& c, int n) {
  if (c.max_index() > n) throw std::invalid_argument(format(c) + " exceeds degree");
  switch (c.kind) {
    case Element23Kind::Reflection:
      return as_permutation(Transposition(c.i, c.j), n);
    case Element23Kind::RCycle:
      return compose(as_permutation(Transposition(c.i, c.j), n),
                     as_permutation(Transposition(c.j, c.k), n));
    case Element23Kind::LCycle:
      return compose(as_permutation(Transposition(c.j, c.k), n),
                     as_permutation(Transposition(c.i, c.j), n));
  }
  throw std::logic_error("unreachable");
}

Element23 inverse(const Element23& c) {
  switch (c.kind) {
    case Element23Kind::Reflection: return c;
    case Element23Kind::RCycle: return Element23::l_cycle(c.i, c.j, c.k);
    case Element23Kind::LCycle: return Element23::r_cycle(c.i, c.j, c.k);
  }
  throw std::logic_error("unreachable");
}

std::vector<Element23> all_element23(int n) {
  std::vector<Element23> out;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) out.push_back(Element23::reflection(i, j));
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      for (int k = j + 1; k <= n; ++k) out.push_back(Element23::r_cycle(i, j, k));
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      for (int k = j + 1; k <= n; ++k) out.push_back(Element23::l_cycle(i, j, k));
  return out;
}

std::string format(const Element23& c) {
  switch (c.kind) {
    case Element23Kind::Reflection:
      return "T(" + std::to_string(c.i) + "," + std::to_string(c.j) + ")";
    case Element23Kind::RCycle:
      return "R(" + std::to_string(c.i) + "," + std::to_string(c.j) + "," + std::to_string(c.k) + ")";
    case Element23Kind::LCycle:
      return "L(" + std::to_string(c.i) + "," + std::to_string(c.j) + "," + std::to_string(c.k) + ")";
  }
  return {};
}

Element23 parse_element23(std::string_view text) {
  while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
  while (!text.empty() && text.back() == ' ') text.remove_suffix(1);
  if (text.size() < 3 || text[1] != '(' || text.back() != ')')
    throw std::invalid_argument("malformed element: '" + std::string(text) + "'");
  std::vector<int> idx;
  std::string_view body = text.substr(2, text.size() - 3);
  while (true) {
    const auto comma = body.find(',');
    const std::string part(body.substr(0, comma));
    try {
      std::size_t used = 0;
      idx.push_back(std::stoi(part, &used));
      if (used != part.size()) throw std::invalid_argument(part);
    } catch (const std::exception&) {
      throw std::invalid_argument("malformed element: '" + std::string(text) + "'");
    }
    if (comma == std::string_view::npos) break;
    body.remove_prefix(comma + 1);
  }
  switch (text.front()) {
    case 'T':
      if (idx.size() == 2) return Element23::reflection(idx[0], idx[1]);
      break;
    case 'R':
      if (idx.size() == 3) return Element23::r_cycle(idx[0], idx[1], idx[2]);
      break;
    case 'L':
      if (idx.size() == 3) return Element23::l_cycle(idx[0], idx[1], idx[2]);
      break;
    default:
      break;
  }
  throw std::invalid_argument("malformed element: '" + std::string(text) + "'");
}

std::ostream& operator<<(std::ostream& os, const Element23& c) { return os << format(c); }

}  // namespace smoothperm
