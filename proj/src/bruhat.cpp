#include "smoothperm/bruhat.hpp"

#include <nlohmann/json.hpp>
#include <sstream>
#include <stdexcept>

namespace smoothperm {

BruhatChain::BruhatChain(std::vector<Permutation> elements) : elements_(std::move(elements)) {
  if (elements_.empty()) throw std::invalid_argument("chain must be nonempty");
  for (std::size_t d = 1; d < elements_.size(); ++d) {
    if (elements_[d].degree() != elements_[0].degree())
      throw std::invalid_argument("chain elements must share a degree");
    if (elements_[d] == elements_[d - 1])
      throw std::invalid_argument("consecutive chain elements must differ");
  }
}

bool leq(const Permutation& x, const Permutation& y) {
  if (x.degree() != y.degree()) throw std::invalid_argument("degree mismatch in leq");
  const int n = x.degree();
  // count[j] = #{a <= i : w(a) >= j}, maintained as i advances.
  std::vector<int> cx(static_cast<std::size_t>(n + 1), 0);
  std::vector<int> cy(static_cast<std::size_t>(n + 1), 0);
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= x(i); ++j) ++cx[static_cast<std::size_t>(j)];
    for (int j = 1; j <= y(i); ++j) ++cy[static_cast<std::size_t>(j)];
    for (int j = 1; j <= n; ++j)
      if (cx[static_cast<std::size_t>(j)] > cy[static_cast<std::size_t>(j)]) return false;
  }
  return true;
}

bool is_cover(const Permutation& x, const Permutation& y) {
  if (x.degree() != y.degree()) throw std::invalid_argument("degree mismatch in is_cover");
  std::vector<int> diff;
  for (int p = 1; p <= x.degree(); ++p)
    if (x(p) != y(p)) diff.push_back(p);
  if (diff.size() != 2) return false;
  const int a = diff[0];
  const int b = diff[1];
  if (x(a) != y(b) || x(b) != y(a)) return false;
  if (x(a) > x(b)) return false;
  for (int c = a + 1; c < b; ++c)
    if (x(a) < x(c) && x(c) < x(b)) return false;
  return true;
}

bool is_cover_by_length(const Permutation& x, const Permutation& y) {
  return length(y) == length(x) + 1 && leq(x, y);
}

bool reflection_leq(const Transposition& t, const Permutation& w) {
  if (t.j > w.degree()) throw std::invalid_argument("transposition outside degree");
  const auto mw = mu(w);
  const auto mwi = mu(inverse(w));
  const auto i = static_cast<std::size_t>(t.i - 1);
  return mw[i] >= t.j && mwi[i] >= t.j;
}

bool element23_leq(const Element23& c, const Permutation& w) {
  return leq(realize(c, w.degree()), w);
}

bool is_saturated_chain(const BruhatChain& chain) { return !first_non_cover(chain).has_value(); }

std::optional<std::size_t> first_non_cover(const BruhatChain& chain) {
  const auto& e = chain.elements();
  for (std::size_t d = 0; d + 1 < e.size(); ++d)
    if (!is_cover(e[d], e[d + 1])) return d;
  return std::nullopt;
}

nlohmann::json to_json(const BruhatChain& chain) {
  auto out = nlohmann::json::array();
  for (const auto& w : chain.elements()) out.push_back(format(w));
  return out;
}

std::string to_dot(const BruhatChain& chain, const std::string& graph_name) {
  std::ostringstream os;
  os << "digraph " << graph_name << " {\n";
  const auto& e = chain.elements();
  for (std::size_t d = 0; d < e.size(); ++d)
    os << "  n" << d << " [label=\"" << format(e[d]) << "\"];\n";
  for (std::size_t d = 0; d + 1 < e.size(); ++d) {
    os << "  n" << d << " -> n" << d + 1;
    if (!is_cover(e[d], e[d + 1])) os << " [style=dashed]";
    os << ";\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace smoothperm
