#include <nlohmann/json.hpp>
#include <set>

#include "doctest.h"
#include "smoothperm/admissible.hpp"
#include "smoothperm/type_d.hpp"

using namespace smoothperm;
using namespace smoothperm::type_d;

namespace {

RootD R(const char* s) { return parse_root(s); }
SignedPermutation S(const char* s) { return parse_signed_permutation(s); }

const WeylGroupD& d3() {
  static const WeylGroupD g(3);
  return g;
}
const WeylGroupD& d4() {
  static const WeylGroupD g(4);
  return g;
}

// inv(w) + nsp(w): pairs i<j with w(i) > w(j), plus pairs with w(i) + w(j) < 0.
int length_formula(const SignedPermutation& w) {
  int count = 0;
  for (int i = 1; i <= w.rank(); ++i)
    for (int j = i + 1; j <= w.rank(); ++j) {
      if (w(i) > w(j)) ++count;
      if (w(i) + w(j) < 0) ++count;
    }
  return count;
}

// Subword property: x <= y iff some subword of a reduced word of y multiplies to x.
std::set<std::size_t> subword_closure(const WeylGroupD& g, std::size_t y) {
  const auto word = g.reduced_word(y);
  std::set<std::size_t> out;
  const std::size_t subsets = std::size_t{1} << word.size();
  for (std::size_t mask = 0; mask < subsets; ++mask) {
    std::size_t x = g.identity_index();
    for (std::size_t p = 0; p < word.size(); ++p)
      if (mask & (std::size_t{1} << p)) x = g.multiply(x, g.simple_index(word[p]));
    out.insert(x);
  }
  return out;
}

}  // namespace

TEST_CASE("root counts") {
  for (int n = 2; n <= 6; ++n) {
    const auto rs = root_system(n);
    CHECK(rs.roots.size() == static_cast<std::size_t>(2 * n * (n - 1)));
    CHECK(rs.positive.size() == static_cast<std::size_t>(n * (n - 1)));
    CHECK(rs.simple.size() == static_cast<std::size_t>(n));
  }
  CHECK_THROWS_AS(root_system(1), std::invalid_argument);
}

TEST_CASE("simple and positive roots in small rank") {
  CHECK(root_system(2).simple == std::vector<RootD>{R("e2-e1"), R("e2+e1")});
  auto pos = root_system(3).positive;
  std::vector<RootD> expected{R("e2-e1"), R("e3-e1"), R("e3-e2"), R("e2+e1"), R("e3+e1"), R("e3+e2")};
  std::sort(expected.begin(), expected.end());
  CHECK(pos == expected);
}

TEST_CASE("root text form") {
  for (const auto& a : root_system(5).roots) CHECK(parse_root(format(a)) == a);
  CHECK(format(R("e3-e1")) == "e3-e1");
  CHECK(format(-R("e3+e1")) == "-e3-e1");
  CHECK_THROWS_AS(parse_root("e1+e3"), std::invalid_argument);
  CHECK_THROWS_AS(parse_root("e1-e1"), std::invalid_argument);
  CHECK_THROWS_AS(parse_root("2e1"), std::invalid_argument);
}

TEST_CASE("root sums") {
  CHECK(root_sum(R("e2-e1"), R("e3-e2")) == R("e3-e1"));
  CHECK(root_sum(R("e2-e1"), R("e2+e1")) == std::nullopt);
  CHECK(root_sum(R("e3-e2"), R("e2+e1")) == R("e3+e1"));
  CHECK(root_sum(R("e3-e1"), -R("e3-e1")) == std::nullopt);
}

TEST_CASE("root poset covers") {
  const auto covers = root_poset_covers(3);
  CHECK(std::find(covers.begin(), covers.end(), std::pair{R("e2-e1"), R("e3-e1")}) != covers.end());

  // Brute force for n = 4: b - a simple.
  const auto rs = root_system(4);
  std::size_t expected = 0;
  for (const auto& a : rs.positive)
    for (const auto& s : rs.simple) {
      const auto b = root_sum(a, s);
      if (b && b->is_positive()) ++expected;
    }
  CHECK(root_poset_covers(4).size() == expected);
}

TEST_CASE("f examples") {
  CHECK(f_map(R("e3-e1")) == R("e3-e2"));
  CHECK(f_map(R("e2+e1")) == R("e2+e1"));
  CHECK(f_map(R("e4+e2")) == R("e4-e3"));
  CHECK(f_map(R("e2-e1")) == R("e2-e1"));
  CHECK_THROWS_AS(f_map(-R("e2-e1")), std::invalid_argument);
}

TEST_CASE("f of a sum is one of the summands' images, n <= 6") {
  // For a + b = c positive, exactly one of f(a), f(b) equals f(c), and the two
  // images are distinct, so the simple-root comparison never ties.
  for (int n = 2; n <= 6; ++n) {
    const auto rs = root_system(n);
    for (const auto& a : rs.positive)
      for (const auto& b : rs.positive) {
        const auto c = root_sum(a, b);
        if (!c || !c->is_positive()) continue;
        CHECK(f_map(a) != f_map(b));
        CHECK(((f_map(a) == f_map(*c)) != (f_map(b) == f_map(*c))));
        CHECK_NOTHROW(simple_precedes(f_map(a), f_map(b), SimpleRootOrder::ByIndex));
      }
  }
}

TEST_CASE("simple-root order") {
  CHECK(simple_precedes(R("e2-e1"), R("e3-e2"), SimpleRootOrder::ByIndex));
  CHECK(simple_precedes(R("e3-e2"), R("e2-e1"), SimpleRootOrder::ReversedIndex));
  CHECK_THROWS_AS(simple_precedes(R("e2-e1"), R("e2+e1"), SimpleRootOrder::ByIndex), std::logic_error);
}

TEST_CASE("reflections") {
  CHECK(reflection(R("e3-e1"), 3) == S("3,2,1"));
  CHECK(reflection(R("e2+e1"), 3) == S("-2,-1,3"));
  CHECK(reflection(R("e4+e2"), 4) == S("1,-4,3,-2"));
  for (const auto& a : root_system(5).positive) {
    const auto t = reflection(a, 5);
    CHECK(compose(t, t).is_identity());
    CHECK(inverse(t) == t);
  }
  CHECK_THROWS_AS(reflection(-R("e2-e1"), 3), std::invalid_argument);
}

TEST_CASE("signed permutation validation and text form") {
  CHECK_THROWS_AS(S("-1,2"), std::invalid_argument);
  CHECK_THROWS_AS(S("1,1"), std::invalid_argument);
  CHECK_THROWS_AS(S("1,x"), std::invalid_argument);
  CHECK(format(S("-2,-1,3,4")) == "-2,-1,3,4");
  CHECK(S("-2,-1")(-1) == 2);
}

TEST_CASE("W(D4) counts") {
  const auto& g = d4();
  CHECK(g.size() == 192);
  CHECK(g.length(g.longest_index()) == 12);
  std::size_t ones = 0;
  for (std::size_t x = 0; x < g.size(); ++x)
    if (g.length(x) == 1) ++ones;
  CHECK(ones == 4);
  CHECK(WeylGroupD(2).size() == 4);
  CHECK(d3().size() == 24);
  CHECK_THROWS_AS(WeylGroupD(6), std::length_error);
}

TEST_CASE("BFS length agrees with inv + nsp and with the inverse") {
  for (const auto* g : {&d3(), &d4()})
    for (std::size_t x = 0; x < g->size(); ++x) {
      const auto& w = g->element(x);
      CHECK(g->length(x) == length_formula(w));
      CHECK(g->length(x) == g->length(g->index_of(inverse(w))));
      CHECK(g->reduced_word(x).size() == static_cast<std::size_t>(g->length(x)));
      for (const auto& a : g->roots().positive)
        CHECK(g->length(g->index_of(compose(w, reflection(a, g->rank())))) != g->length(x));
    }
}

TEST_CASE("Bruhat order agrees with the subword property") {
  for (const auto* g : {&d3(), &d4()})
    for (std::size_t y = 0; y < g->size(); ++y) {
      const auto closure = subword_closure(*g, y);
      for (std::size_t x = 0; x < g->size(); ++x) REQUIRE(g->leq(x, y) == closure.contains(x));
      std::vector<std::size_t> down;
      for (auto x : closure)
        if (g->length(x) + 1 == g->length(y)) down.push_back(x);
      CHECK(g->covers_down(y) == down);
    }
}

TEST_CASE("C(w) for the longest element of D3 lists everything") {
  const auto& g = d3();
  const auto a = c23_d(g, g.longest_index());
  CHECK(a.size() == all_element23_d(g).size());
  CHECK(a.reflections() == g.roots().positive);
  CHECK(c23_d(g, g.identity_index()).empty());

  const auto t = g.reflection_index(R("e2-e1"));
  const auto single = c23_d(g, t);
  CHECK(single.size() == 1);
  CHECK(single.has_reflection(R("e2-e1")));
}

TEST_CASE("element text form") {
  CHECK(format(ElementD::reflection(R("e3-e1"))) == "t(e3-e1)");
  CHECK(format(ElementD::product(R("e2-e1"), R("e3-e2"))) == "t(e2-e1)t(e3-e2)");
}

TEST_CASE("admissibility diagnostics") {
  const auto& g = d3();
  CHECK(is_admissible_d(g, AdmissibleSetD(3)));

  const AdmissibleSetD pair(3, {ElementD::reflection(R("e2-e1")), ElementD::reflection(R("e3-e2"))});
  const auto c = check_admissible_d(g, pair);
  CHECK_FALSE(c.admissible);
  CHECK(c.violated == 3);
  CHECK(c.witness == std::vector<RootD>{R("e2-e1"), R("e3-e2")});

  const AdmissibleSetD top_only(3, {ElementD::reflection(R("e3-e1"))});
  CHECK(check_admissible_d(g, top_only).violated == 1);

  const AdmissibleSetD no_top(3, {ElementD::reflection(R("e2-e1")), ElementD::reflection(R("e3-e2")),
                                  ElementD::product(R("e2-e1"), R("e3-e2")),
                                  ElementD::product(R("e3-e2"), R("e2-e1"))});
  const auto d = check_admissible_d(g, no_top);
  CHECK(d.violated == 2);
  CHECK(d.witness.back() == R("e3-e1"));

  CHECK_THROWS_AS(AdmissibleSetD(3, {ElementD::product(R("e2-e1"), R("e2+e1"))}), std::invalid_argument);
}

TEST_CASE("compatibility examples") {
  const auto& g = d3();
  const auto a = c23_d(g, g.longest_index());
  // Every pair with a positive sum has the sum in A, so only betweenness applies.
  const std::vector<RootD> bad{R("e2-e1"), R("e3-e2"), R("e3-e1"), R("e2+e1"), R("e3+e1"), R("e3+e2")};
  CHECK_FALSE(is_compatible_d(bad, a));
  const std::vector<RootD> wrong_set{R("e2-e1")};
  CHECK_THROWS_AS(is_compatible_d(wrong_set, a), std::invalid_argument);

  const auto search = make_order_search_d(a);
  const auto items = a.reflections();
  std::size_t seen = 0;
  search.for_each([&](std::span<const int> idx) {
    std::vector<RootD> seq;
    for (int x : idx) seq.push_back(items[static_cast<std::size_t>(x)]);
    CHECK(is_compatible_d(seq, a));
    CHECK(order_product(g, seq) == g.longest_index());
    ++seen;
    return true;
  });
  CHECK(seen > 0);
}

TEST_CASE("search agrees with brute-force compatibility on D3") {
  const auto& g = d3();
  for (std::size_t w = 0; w < g.size(); ++w) {
    const auto a = c23_d(g, w);
    auto items = a.reflections();
    std::size_t brute = 0;
    do {
      if (is_compatible_d(items, a)) ++brute;
    } while (std::next_permutation(items.begin(), items.end()));
    CHECK(make_order_search_d(a).for_each([](std::span<const int>) { return true; }) == brute);
  }
}

TEST_CASE("smoothness examples") {
  const auto& g = d4();
  CHECK(is_smooth_d(g, g.identity_index()));
  CHECK(is_smooth_d(g, g.longest_index()));
  for (std::size_t s = 0; s < 4; ++s) CHECK(is_smooth_d(g, g.simple_index(s)));
}

TEST_CASE("on the S_n copy, palindromic intervals match pattern avoidance") {
  for (int n : {3, 4}) {
    const WeylGroupD g(n);
    for_each_permutation(n, [&](const Permutation& w) {
      const auto x = g.index_of(SignedPermutation::from_permutation(w));
      CHECK(is_smooth_d(g, x) == is_smooth_pattern(w));
    });
  }
}

TEST_CASE("conjecture in rank 2") {
  const auto r = verify_conjecture_d(WeylGroupD(2));
  CHECK(r.pass());
  CHECK(r.smooth == 4);
}

TEST_CASE("sum condition with two different decompositions of e3+e2") {
  // e3+e2 = (e3-e1) + (e2+e1) = (e3+e1) + (e2-e1); each decomposition
  // supplies one of the two products, and t(e3+e2) is not below w.
  const auto& g = d3();
  const auto w = g.index_of(S("-2,1,-3"));
  REQUIRE(is_smooth_d(g, w));
  const auto a = c23_d(g, w);
  CHECK(a.has_product(R("e3-e1"), R("e2+e1")));
  CHECK(a.has_product(R("e2-e1"), R("e3+e1")));
  CHECK_FALSE(a.has_reflection(R("e3+e2")));

  const auto c = check_admissible_d(g, a);
  CHECK(c.violated == 2);
  CHECK(c.witness.back() == R("e3+e2"));
  CHECK(check_admissible_d(g, a, SimpleRootOrder::ReversedIndex).violated == 2);
  CHECK(is_admissible_d(g, a, SimpleRootOrder::ByIndex, SumConditionReading::SameDecomposition));
}

TEST_CASE("conjecture reports in ranks 3 and 4") {
  // Compatible orders exist and multiply to w for every smooth element; the
  // admissibility part depends on how the sum condition is read.
  for (const auto* g : {&d3(), &d4()}) {
    const auto literal = verify_conjecture_d(*g, SimpleRootOrder::ByIndex, 2);
    CHECK(literal.without_order == 0);
    CHECK(literal.with_wrong_product == 0);
    CHECK(literal.orders_checked > 0);
    CHECK(literal.counterexamples.size() == literal.not_admissible);
    CHECK(literal.not_admissible == (g->rank() == 3 ? 2u : 18u));

    const auto same =
        verify_conjecture_d(*g, SimpleRootOrder::ByIndex, 2, SumConditionReading::SameDecomposition);
    CHECK(same.pass());
    CHECK(same.orders_checked == literal.orders_checked);
  }
  const auto r = verify_conjecture_d(d4());
  CHECK(r.group_size == 192);
  const auto j = to_json(r);
  CHECK(j["pass"] == r.pass());
  CHECK(j["verdicts"].size() == r.smooth);
  CHECK(j["simple_root_order"] == "by-index");
  CHECK(j["sum_condition"] == "any-decompositions");
  CHECK(j["counterexamples"].size() == 18);
}

TEST_CASE("worker count does not change the report") {
  const auto one = to_json(verify_conjecture_d(d3(), SimpleRootOrder::ByIndex, 1)).dump();
  const auto three = to_json(verify_conjecture_d(d3(), SimpleRootOrder::ByIndex, 3)).dump();
  CHECK(one == three);
}
