#include "smoothperm/compat_orders.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <nlohmann/json.hpp>
#include <set>
#include <sstream>
#include <stdexcept>

namespace smoothperm {

namespace {

void require_same_elements(const ReflectionOrder& order, const std::vector<Transposition>& expected,
                           const char* what) {
  auto sorted = order.sequence();
  std::sort(sorted.begin(), sorted.end());
  if (sorted != expected)
    throw std::invalid_argument(std::string("order elements differ from ") + what);
}

}  // namespace

ReflectionOrder::ReflectionOrder(int degree, std::vector<Transposition> sequence)
    : degree_(degree), sequence_(std::move(sequence)) {
  std::set<Transposition> seen;
  for (const auto& t : sequence_) {
    if (t.j > degree_) throw std::invalid_argument(format(t) + " exceeds degree");
    if (!seen.insert(t).second) throw std::invalid_argument("duplicate reflection " + format(t));
  }
}

Permutation ReflectionOrder::product() const { return smoothperm::product(sequence_, degree_); }

ReflectionOrder ReflectionOrder::reversed() const {
  return ReflectionOrder(degree_, std::vector<Transposition>(sequence_.rbegin(), sequence_.rend()));
}

int ReflectionOrder::position(const Transposition& t) const {
  const auto it = std::find(sequence_.begin(), sequence_.end(), t);
  return it == sequence_.end() ? -1 : static_cast<int>(it - sequence_.begin());
}

std::string format(const ReflectionOrder& order) {
  std::string out = "(";
  for (std::size_t d = 0; d < order.size(); ++d) {
    if (d) out += ", ";
    out += format(order.sequence()[d]);
  }
  return out + ")";
}

nlohmann::json to_json(const ReflectionOrder& order) {
  auto out = nlohmann::json::array();
  for (const auto& t : order.sequence()) out.push_back(format(t));
  return out;
}

ReflectionOrder parse_order_file(std::string_view text, int degree) {
  std::vector<Transposition> seq;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    seq.push_back(parse_transposition(line));
  }
  return ReflectionOrder(degree, std::move(seq));
}

std::string to_order_file(const ReflectionOrder& order) {
  std::string out;
  for (const auto& t : order.sequence()) out += format(t) + "\n";
  return out;
}

bool is_compatible(const ReflectionOrder& order, const AdmissibleSet& a) {
  if (order.degree() != a.degree()) throw std::invalid_argument("degree mismatch");
  require_same_elements(order, a.reflections(), "the reflection part of the set");
  const int n = a.degree();
  std::map<Transposition, int> pos;
  for (std::size_t d = 0; d < order.size(); ++d) pos[order.sequence()[d]] = static_cast<int>(d);
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      if (!a.has_reflection(i, j)) continue;
      for (int k = j + 1; k <= n; ++k) {
        if (!a.has_reflection(j, k)) continue;
        const int pij = pos.at(Transposition(i, j));
        const int pjk = pos.at(Transposition(j, k));
        if (a.has_reflection(i, k)) {
          const int pik = pos.at(Transposition(i, k));
          if (!((pij < pik && pik < pjk) || (pjk < pik && pik < pij))) return false;
        } else if (a.has_r(i, j, k) != (pij < pjk)) {
          return false;
        }
      }
    }
  return true;
}

Permutation tail_product(int n, int i, int d) {
  Permutation w(n);
  for (int r = i + d; r >= i + 1; --r) w = right_multiply(w, Transposition(i, r));
  return w;
}

Construction construct_compatible_order_traced(const AdmissibleSet& a) {
  Construction result{ReflectionOrder(a.degree()), {}};
  if (a.reflections().empty()) return result;

  const auto wedges = find_wedges(a);
  if (wedges.empty()) {
    const auto inv = inverse(a);
    if (find_wedges(inv).empty())
      throw std::logic_error("neither the set nor its inverse has a wedge");
    auto sub = construct_compatible_order_traced(inv);
    result.steps.push_back({ConstructionStep::Kind::Inversion, Wedge{}, a});
    result.steps.insert(result.steps.end(), sub.steps.begin(), sub.steps.end());
    result.order = sub.order.reversed();
    return result;
  }

  const Wedge wedge = wedges.front();
  const auto rest = restrict(a, wedge);

  // The removed reflections must be exactly T(i,i+1), ..., T(i,j).
  std::vector<Transposition> removed;
  for (const auto& t : a.reflections())
    if (t.i == wedge.i) removed.push_back(t);
  std::vector<Transposition> expected;
  for (int r = wedge.i + 1; r <= wedge.j; ++r) expected.emplace_back(wedge.i, r);
  if (removed != expected)
    throw std::logic_error("reflections through the wedge pivot are not T(i,i+1..j)");

  auto sub = construct_compatible_order_traced(rest);
  result.steps.push_back({ConstructionStep::Kind::Wedge, wedge, a});
  result.steps.insert(result.steps.end(), sub.steps.begin(), sub.steps.end());
  auto seq = sub.order.sequence();
  for (int r = wedge.j; r >= wedge.i + 1; --r) seq.emplace_back(wedge.i, r);
  result.order = ReflectionOrder(a.degree(), std::move(seq));
  return result;
}

ReflectionOrder construct_compatible_order(const AdmissibleSet& a) {
  return construct_compatible_order_traced(a).order;
}

ReflectionOrder construct_compatible_order(const Permutation& w) {
  if (!is_smooth_pattern(w)) throw std::domain_error(format(w) + " is not smooth");
  return construct_compatible_order(c23(w));
}

VerificationReport verify_theorem(const Permutation& w, const ReflectionOrder& order) {
  if (order.degree() != w.degree()) throw std::invalid_argument("degree mismatch");
  require_same_elements(order, c_t(w), "C_T(w)");
  const int n = w.degree();
  const auto& seq = order.sequence();

  std::vector<Permutation> prefix{Permutation(n)};
  for (const auto& t : seq) prefix.push_back(right_multiply(prefix.back(), t));
  std::vector<Permutation> suffix{Permutation(n)};
  for (auto it = seq.rbegin(); it != seq.rend(); ++it)
    suffix.push_back(right_multiply(suffix.back(), *it));

  VerificationReport r{w, prefix.back(), BruhatChain(std::move(prefix)),
                       BruhatChain(std::move(suffix)), false, false, false, std::nullopt,
                       std::nullopt};
  r.product_ok = r.product == w;
  r.prefix_first_non_cover = first_non_cover(r.prefix_chain);
  r.suffix_first_non_cover = first_non_cover(r.suffix_chain);
  r.prefix_saturated = !r.prefix_first_non_cover.has_value();
  r.suffix_saturated = !r.suffix_first_non_cover.has_value() && r.suffix_chain.back() == inverse(w);
  return r;
}

nlohmann::json to_json(const VerificationReport& r) {
  nlohmann::json out;
  out["w"] = format(r.w);
  out["product"] = format(r.product);
  out["product_ok"] = r.product_ok;
  out["prefix_saturated"] = r.prefix_saturated;
  out["suffix_saturated"] = r.suffix_saturated;
  out["prefix_chain"] = to_json(r.prefix_chain);
  out["suffix_chain"] = to_json(r.suffix_chain);
  out["prefix_first_non_cover"] =
      r.prefix_first_non_cover ? nlohmann::json(*r.prefix_first_non_cover) : nlohmann::json();
  out["suffix_first_non_cover"] =
      r.suffix_first_non_cover ? nlohmann::json(*r.suffix_first_non_cover) : nlohmann::json();
  return out;
}

OrderSearch make_order_search(const AdmissibleSet& a) {
  const auto items = a.reflections();
  std::map<Transposition, int> index;
  for (std::size_t x = 0; x < items.size(); ++x) index[items[x]] = static_cast<int>(x);
  const int n = a.degree();
  std::vector<OrderConstraint> constraints;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      if (!a.has_reflection(i, j)) continue;
      for (int k = j + 1; k <= n; ++k) {
        if (!a.has_reflection(j, k)) continue;
        const int ij = index.at(Transposition(i, j));
        const int jk = index.at(Transposition(j, k));
        if (a.has_reflection(i, k)) {
          const int ik = index.at(Transposition(i, k));
          constraints.push_back({{ij, ik, jk}, {{ij, ik, jk}, {jk, ik, ij}}});
        } else if (a.has_r(i, j, k)) {
          constraints.push_back({{ij, jk}, {{ij, jk}}});
        } else {
          constraints.push_back({{ij, jk}, {{jk, ij}}});
        }
      }
    }
  return OrderSearch(static_cast<int>(items.size()), std::move(constraints));
}

std::vector<ReflectionOrder> enumerate_compatible_orders(const AdmissibleSet& a,
                                                         std::size_t max_reflections) {
  std::vector<ReflectionOrder> out;
  for_each_compatible_order(
      a,
      [&](ReflectionOrder order) {
        out.push_back(std::move(order));
        return true;
      },
      max_reflections);
  return out;
}

std::vector<ReflectionOrder> elementary_neighbors(const ReflectionOrder& order,
                                                  const AdmissibleSet& a) {
  std::set<ReflectionOrder> out;
  const auto& seq = order.sequence();
  auto consider = [&](std::vector<Transposition> candidate) {
    ReflectionOrder next(order.degree(), std::move(candidate));
    if (next != order && is_compatible(next, a)) out.insert(std::move(next));
  };
  for (std::size_t p = 0; p + 1 < seq.size(); ++p)
    if (seq[p].commutes_with(seq[p + 1])) {
      auto c = seq;
      std::swap(c[p], c[p + 1]);
      consider(std::move(c));
    }
  for (std::size_t p = 0; p + 2 < seq.size(); ++p) {
    const auto& x = seq[p];
    const auto& y = seq[p + 1];
    const auto& z = seq[p + 2];
    // T(i,j), T(i,k), T(j,k)  or  T(j,k), T(i,k), T(i,j)
    const bool forward = x.i == y.i && x.j == z.i && y.j == z.j;
    const bool backward = z.i == y.i && z.j == x.i && y.j == x.j;
    if (forward || backward) {
      auto c = seq;
      std::swap(c[p], c[p + 2]);
      consider(std::move(c));
    }
  }
  return {out.begin(), out.end()};
}

OrderGraph explore_order_graph(const AdmissibleSet& a, std::size_t max_reflections) {
  OrderGraph g;
  std::optional<ReflectionOrder> start;
  for_each_compatible_order(
      a,
      [&](ReflectionOrder order) {
        start = std::move(order);
        return false;
      },
      max_reflections);
  if (!start) return g;

  std::map<ReflectionOrder, std::size_t> index;
  std::deque<std::size_t> queue;
  index.emplace(*start, 0);
  g.vertices.push_back(*start);
  queue.push_back(0);
  std::set<std::pair<std::size_t, std::size_t>> edges;
  while (!queue.empty()) {
    const std::size_t v = queue.front();
    queue.pop_front();
    const auto neighbors = elementary_neighbors(g.vertices[v], a);
    for (const auto& nb : neighbors) {
      auto [it, inserted] = index.emplace(nb, g.vertices.size());
      if (inserted) {
        g.vertices.push_back(nb);
        queue.push_back(it->second);
      }
      edges.emplace(std::min(v, it->second), std::max(v, it->second));
    }
  }
  g.edges.assign(edges.begin(), edges.end());
  return g;
}

ConnectivityReport check_connectivity(const AdmissibleSet& a, std::size_t full_check) {
  ConnectivityReport r;
  r.reflections = a.reflections().size();
  const auto graph = explore_order_graph(a, std::max(full_check, kDefaultMaxEnumeratedReflections));
  r.component_size = graph.vertices.size();
  if (r.reflections <= full_check) {
    const auto all = enumerate_compatible_orders(a, full_check);
    r.total_orders = all.size();
    std::set<ReflectionOrder> component(graph.vertices.begin(), graph.vertices.end());
    bool covered = component.size() == all.size();
    for (const auto& o : all)
      if (!component.contains(o)) covered = false;
    r.connected = covered;
  }
  return r;
}

bool graph_connected(const AdmissibleSet& a) {
  const auto r = check_connectivity(a);
  if (!r.connected)
    throw std::length_error("connectivity not checked for " + std::to_string(r.reflections) +
                            " reflections");
  return *r.connected;
}

std::string to_dot(const OrderGraph& graph, const std::string& graph_name) {
  std::ostringstream os;
  os << "graph " << graph_name << " {\n";
  for (std::size_t v = 0; v < graph.vertices.size(); ++v) {
    std::string label;
    for (const auto& t : graph.vertices[v].sequence()) {
      if (!label.empty()) label += " ";
      label += format(t);
    }
    os << "  v" << v << " [label=\"" << label << "\"];\n";
  }
  for (const auto& [x, y] : graph.edges) os << "  v" << x << " -- v" << y << ";\n";
  os << "}\n";
  return os.str();
}

SmoothnessCertificate smoothness_characterization(const Permutation& w) {
  SmoothnessCertificate cert;
  cert.smooth = is_smooth_pattern(w);
  cert.length = length(w);
  cert.reflection_count = c_t(w).size();
  if (cert.smooth) {
    cert.witness = construct_compatible_order(w);
    cert.report = verify_theorem(w, *cert.witness);
  }
  return cert;
}

}  // namespace smoothperm
