#include "smoothperm/admissible.hpp"

#include <nlohmann/json.hpp>
#include <algorithm>
#include <stdexcept>

#include "smoothperm/bruhat.hpp"

namespace smoothperm {

namespace {

struct Realized {
  Element23 element;
  Permutation perm;
  int len;
};

std::vector<Realized> realize_all(int n) {
  std::vector<Realized> out;
  for (const auto& c : all_element23(n)) {
    auto p = realize(c, n);
    const int len = length(p);
    out.push_back({c, std::move(p), len});
  }
  return out;
}

}  // namespace

AdmissibleSet::AdmissibleSet(int degree) : degree_(degree) {
  if (degree < 1) throw std::invalid_argument("degree must be >= 1");
}

AdmissibleSet::AdmissibleSet(int degree, std::vector<Element23> members) : AdmissibleSet(degree) {
  for (const auto& c : members) insert(c);
}

void AdmissibleSet::insert(const Element23& c) {
  if (c.max_index() > degree_) throw std::invalid_argument(format(c) + " exceeds degree");
  members_.insert(c);
}

bool AdmissibleSet::has_reflection(int i, int j) const {
  return i >= 1 && j <= degree_ && i < j && contains(Element23::reflection(i, j));
}

bool AdmissibleSet::has_r(int i, int j, int k) const {
  return i >= 1 && k <= degree_ && i < j && j < k && contains(Element23::r_cycle(i, j, k));
}

bool AdmissibleSet::has_l(int i, int j, int k) const {
  return i >= 1 && k <= degree_ && i < j && j < k && contains(Element23::l_cycle(i, j, k));
}

std::vector<Transposition> AdmissibleSet::reflections() const {
  std::vector<Transposition> out;
  for (const auto& c : members_)
    if (c.is_reflection()) out.push_back(c.as_transposition());
  return out;
}

bool is_smooth_pattern(const Permutation& w) { return !contains_3412(w) && !contains_4231(w); }

bool is_smooth_length(const Permutation& w) {
  return static_cast<std::size_t>(length(w)) == c_t(w).size();
}

std::vector<Transposition> c_t(const Permutation& w) {
  const int n = w.degree();
  const auto mw = mu(w);
  const auto mwi = mu(inverse(w));
  std::vector<Transposition> out;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      if (mw[static_cast<std::size_t>(i - 1)] >= j && mwi[static_cast<std::size_t>(i - 1)] >= j)
        out.emplace_back(i, j);
  return out;
}

AdmissibleSet c23(const Permutation& w) {
  AdmissibleSet a(w.degree());
  for (const auto& c : all_element23(w.degree()))
    if (element23_leq(c, w)) a.insert(c);
  return a;
}

AdmissibleSet inverse(const AdmissibleSet& a) {
  AdmissibleSet out(a.degree());
  for (const auto& c : a.members()) out.insert(inverse(c));
  return out;
}

AdmissibilityCheck check_admissible(const AdmissibleSet& a) {
  const int n = a.degree();
  AdmissibilityCheck result;
  auto fail = [&](AdmissibilityAxiom axiom, std::vector<Element23> witness) {
    result.admissible = false;
    result.violated = axiom;
    result.witness = std::move(witness);
    return result;
  };

  // (a) downward closure within C^{2,3}
  const auto universe = realize_all(n);
  for (const auto& m : universe) {
    if (!a.contains(m.element)) continue;
    for (const auto& below : universe) {
      if (below.len >= m.len || a.contains(below.element)) continue;
      if (leq(below.perm, m.perm))
        return fail(AdmissibilityAxiom::DownwardClosed, {m.element, below.element});
    }
  }

  // (b) R(i,j,l), L(i,k,l) in A with i < j,k < l  =>  T(i,l) in A
  for (int i = 1; i <= n; ++i)
    for (int l = i + 2; l <= n; ++l) {
      if (a.has_reflection(i, l)) continue;
      for (int j = i + 1; j < l; ++j) {
        if (!a.has_r(i, j, l)) continue;
        for (int k = i + 1; k < l; ++k)
          if (a.has_l(i, k, l))
            return fail(AdmissibilityAxiom::RLImpliesT,
                        {Element23::r_cycle(i, j, l), Element23::l_cycle(i, k, l),
                         Element23::reflection(i, l)});
      }
    }

  // (c) T(i,j), T(j,k) in A  =>  R(i,j,k) or L(i,j,k) in A
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      for (int k = j + 1; k <= n; ++k)
        if (a.has_reflection(i, j) && a.has_reflection(j, k) && !a.has_r(i, j, k) &&
            !a.has_l(i, j, k))
          return fail(AdmissibilityAxiom::TTImpliesCycle,
                      {Element23::reflection(i, j), Element23::reflection(j, k)});

  return result;
}

bool is_admissible(const AdmissibleSet& a) { return check_admissible(a).admissible; }

std::vector<Wedge> find_wedges(const AdmissibleSet& a) {
  const int n = a.degree();
  std::vector<Wedge> out;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      if (!a.has_reflection(i, j)) continue;
      if (i > 1 && a.has_reflection(i - 1, i)) continue;
      if (j < n && a.has_r(i, j, j + 1)) continue;
      out.push_back({i, j});
    }
  return out;
}

bool wedge_criterion(const Permutation& w, int i, int j) {
  for (int x = 1; x < i; ++x)
    if (w(x) >= i) return false;
  return w(i) >= j && inverse(w)(i) == j;
}

AdmissibleSet restrict(const AdmissibleSet& a, const Wedge& wedge) {
  const auto wedges = find_wedges(a);
  if (std::find(wedges.begin(), wedges.end(), wedge) == wedges.end())
    throw std::invalid_argument(format(wedge) + " is not a wedge of the set");
  AdmissibleSet out(a.degree());
  for (const auto& c : a.members())
    if (c.i != wedge.i) out.insert(c);
  return out;
}

nlohmann::json to_json(const AdmissibleSet& a) {
  auto out = nlohmann::json::array();
  for (const auto& c : a.members()) out.push_back(format(c));
  return out;
}

std::string format(const Wedge& w) {
  return "(" + std::to_string(w.i) + "," + std::to_string(w.j) + ")";
}

}  // namespace smoothperm
