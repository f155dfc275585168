// smoothperm: queries, sweeps and exports for smooth permutations.
//
//   smoothperm smooth 35142
//   smoothperm order 321 --enumerate --dot g.dot
//   smoothperm order 35142 --verify listed.order
//   smoothperm sweep --mode theorem-verify --n 6 --workers 4 --json
//   smoothperm typed verify --rank 4
//
// Exit status: 0 success, 1 negative verdict (violations, failed
// verification, non-smooth input to `order`), 2 usage errors and refusals.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <nlohmann/json.hpp>
#include <sstream>
#include <stdexcept>

#include "smoothperm/admissible.hpp"
#include "smoothperm/bruhat.hpp"
#include "smoothperm/compat_orders.hpp"
#include "smoothperm/sweep.hpp"
#include "smoothperm/type_d.hpp"

using namespace smoothperm;
using nlohmann::json;

namespace {

constexpr int kExitNegative = 1;
constexpr int kExitUsage = 2;

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot read " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw std::invalid_argument("cannot write " + path);
  out << text;
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string positions(const std::vector<int>& p) {
  std::string out = "(";
  for (std::size_t x = 0; x < p.size(); ++x) out += (x ? "," : "") + std::to_string(p[x]);
  return out + ")";
}

// --- smooth -----------------------------------------------------------------

struct SmoothArgs {
  std::string perm;
  bool json = false;
};

int cmd_smooth(const SmoothArgs& args) {
  const auto w = parse_permutation(args.perm);
  const bool by_pattern = is_smooth_pattern(w);
  const bool by_length = is_smooth_length(w);
  const int len = length(w);
  const auto ct = c_t(w).size();

  std::optional<std::pair<std::string, std::vector<int>>> witness;
  for (const char* p : {"3412", "4231"}) {
    const auto occ = find_pattern(w, parse_permutation(p));
    if (occ) {
      witness = std::pair{std::string(p), *occ};
      break;
    }
  }

  if (args.json) {
    json out{{"schema", "smoothperm.smooth/1"},
             {"w", format(w)},
             {"smooth_by_pattern", by_pattern},
             {"smooth_by_length", by_length},
             {"length", len},
             {"reflections", ct}};
    out["witness"] = witness ? json{{"pattern", witness->first}, {"positions", witness->second}} : json(nullptr);
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << format(w) << ": " << (by_pattern ? "smooth" : "not smooth") << "\n"
              << "  pattern criterion (avoids 3412, 4231): " << yes_no(by_pattern) << "\n"
              << "  length criterion (l(w) = |C_T(w)|):    " << yes_no(by_length) << "\n"
              << "  l(w) = " << len << ", |C_T(w)| = " << ct << "\n";
    if (witness)
      std::cout << "  witness: " << witness->first << " at positions " << positions(witness->second) << "\n";
  }
  return 0;
}

// --- order ------------------------------------------------------------------

struct OrderArgs {
  std::string perm;
  bool enumerate = false;
  std::string verify;
  std::string dot;
  std::string chain_dot;
  std::string emit;
  std::size_t max_reflections = kDefaultMaxEnumeratedReflections;
  bool json = false;
};

void print_report(const VerificationReport& r) {
  std::cout << "  product = " << format(r.product) << (r.product_ok ? " (ok)" : " (expected " + format(r.w) + ")")
            << "\n  prefix chain saturated: " << yes_no(r.prefix_saturated);
  if (r.prefix_first_non_cover) std::cout << " (first non-cover at step " << *r.prefix_first_non_cover << ")";
  std::cout << "\n  suffix chain saturated: " << yes_no(r.suffix_saturated);
  if (r.suffix_first_non_cover) std::cout << " (first non-cover at step " << *r.suffix_first_non_cover << ")";
  std::cout << "\n";
}

int cmd_order(const OrderArgs& args) {
  const auto w = parse_permutation(args.perm);
  json out{{"schema", "smoothperm.order/1"}, {"w", format(w)}};

  ReflectionOrder order(w.degree());
  if (!args.verify.empty()) {
    order = parse_order_file(read_file(args.verify), w.degree());
  } else {
    if (!is_smooth_pattern(w)) {
      std::cerr << format(w) << " is not smooth; no compatible order exists (pass --verify FILE to check one)\n";
      return kExitNegative;
    }
    order = construct_compatible_order(w);
  }
  const auto report = verify_theorem(w, order);

  out["order"] = to_json(order);
  out["source"] = args.verify.empty() ? "constructed" : args.verify;
  out["verification"] = to_json(report);
  if (!args.json) {
    std::cout << (args.verify.empty() ? "constructed order: " : "order: ") << format(order) << "\n";
    print_report(report);
  }

  if (!args.emit.empty()) write_file(args.emit, to_order_file(order));
  if (!args.chain_dot.empty()) write_file(args.chain_dot, to_dot(report.prefix_chain));

  if (args.enumerate || !args.dot.empty()) {
    const auto a = c23(w);
    if (!is_admissible(a)) throw std::domain_error("C(" + format(w) + ") is not admissible");
    if (args.enumerate) {
      const auto all = enumerate_compatible_orders(a, args.max_reflections);
      auto list = json::array();
      std::size_t failing = 0;
      for (const auto& o : all) {
        const bool ok = verify_theorem(w, o).all_ok();
        if (!ok) ++failing;
        list.push_back({{"order", to_json(o)}, {"ok", ok}});
      }
      out["compatible_orders"] = list;
      if (!args.json) {
        std::cout << all.size() << " compatible orders";
        std::cout << (failing ? ", " + std::to_string(failing) + " failing verification\n" : ", all verified\n");
        for (const auto& o : all) std::cout << "  " << format(o) << "\n";
      }
      if (failing) return kExitNegative;
    }
    if (!args.dot.empty()) write_file(args.dot, to_dot(explore_order_graph(a, args.max_reflections)));
  }

  if (args.json) std::cout << out.dump(2) << "\n";
  return report.all_ok() ? 0 : kExitNegative;
}

// --- sweep ------------------------------------------------------------------

struct SweepArgs {
  std::string mode;
  std::optional<int> n;
  std::optional<int> rank;
  unsigned workers = 1;
  std::optional<std::size_t> sample;
  std::optional<std::uint64_t> seed;
  int max_degree = kDefaultMaxSweepDegree;
  std::string root_order = "by-index";
  std::string sum_condition = "any-decompositions";
  bool json = false;
};

type_d::SimpleRootOrder parse_root_order(const std::string& s) {
  if (s == "by-index") return type_d::SimpleRootOrder::ByIndex;
  if (s == "reversed-index") return type_d::SimpleRootOrder::ReversedIndex;
  throw std::invalid_argument("unknown simple-root order '" + s + "'");
}

type_d::SumConditionReading parse_reading(const std::string& s) {
  if (s == "any-decompositions") return type_d::SumConditionReading::AnyDecompositions;
  if (s == "same-decomposition") return type_d::SumConditionReading::SameDecomposition;
  throw std::invalid_argument("unknown sum-condition reading '" + s + "'");
}

int cmd_sweep(const SweepArgs& args) {
  SweepConfig c;
  c.mode = parse_sweep_mode(args.mode);
  const bool typed = c.mode == SweepMode::ConjectureD;
  if (typed ? !args.rank : !args.n)
    throw std::invalid_argument(typed ? "conjecture-d needs --rank" : "this mode needs --n");
  c.n = typed ? *args.rank : *args.n;
  c.workers = args.workers;
  c.sample = args.sample;
  c.seed = args.seed;
  c.max_degree = args.max_degree;
  c.root_order = parse_root_order(args.root_order);
  c.reading = parse_reading(args.sum_condition);

  const auto r = run_sweep(c);
  if (args.json) {
    std::cout << to_json(r).dump(2) << "\n";
  } else {
    std::cout << format(c.mode) << (typed ? " rank " : " n=") << c.n << ": " << r.elements << " elements, "
              << r.smooth << " smooth";
    if (r.orders) std::cout << ", " << r.orders << " orders";
    std::cout << ", " << r.violations.size() << " violations\n";
    if (typed)
      std::cout << "  simple-root order: " << type_d::format(c.root_order)
                << ", sum condition: " << type_d::format(c.reading) << "\n";
    for (const auto& v : r.violations) std::cout << "  " << v.element << ": " << v.reason << "\n";
  }
  return r.pass() ? 0 : kExitNegative;
}

// --- typed ------------------------------------------------------------------

struct TypedArgs {
  int rank = 4;
  std::string element;
  std::string root_order = "by-index";
  std::string sum_condition = "any-decompositions";
  unsigned workers = 1;
  bool json = false;
};

int cmd_typed_roots(const TypedArgs& args) {
  const auto rs = type_d::root_system(args.rank);
  auto names = [](const std::vector<type_d::RootD>& v) {
    std::vector<std::string> out;
    for (const auto& a : v) out.push_back(type_d::format(a));
    return out;
  };
  if (args.json) {
    json out{{"schema", "smoothperm.roots/1"}, {"rank", args.rank}, {"simple", names(rs.simple)},
             {"positive", names(rs.positive)}};
    auto f = json::object();
    for (const auto& a : rs.positive) f[type_d::format(a)] = type_d::format(type_d::f_map(a));
    out["f"] = f;
    std::cout << out.dump(2) << "\n";
    return 0;
  }
  std::cout << "D" << args.rank << ": |R| = " << rs.roots.size() << ", |R+| = " << rs.positive.size()
            << ", |Pi| = " << rs.simple.size() << "\nsimple:";
  for (const auto& a : rs.simple) std::cout << " " << type_d::format(a);
  std::cout << "\npositive (f):\n";
  for (const auto& a : rs.positive)
    std::cout << "  " << type_d::format(a) << " -> " << type_d::format(type_d::f_map(a)) << "\n";
  return 0;
}

int cmd_typed_element(const TypedArgs& args) {
  const auto w = type_d::parse_signed_permutation(args.element);
  const type_d::WeylGroupD g(w.rank());
  const auto idx = g.index_of(w);
  const auto a = type_d::c23_d(g, idx);
  const auto order = parse_root_order(args.root_order);
  const auto reading = parse_reading(args.sum_condition);
  const auto check = type_d::check_admissible_d(g, a, order, reading);
  const bool smooth = type_d::is_smooth_d(g, idx);
  const auto search = type_d::make_order_search_d(a);
  const std::size_t orders = search.for_each([](std::span<const int>) { return true; });

  std::vector<std::string> members;
  for (const auto& c : a.members()) members.push_back(type_d::format(c));
  if (args.json) {
    json out{{"schema", "smoothperm.typed-element/1"},
             {"w", type_d::format(w)},
             {"length", g.length(idx)},
             {"smooth", smooth},
             {"rank_generating_function", g.rank_generating_function(idx)},
             {"members", members},
             {"admissible", check.admissible},
             {"violated_condition", check.violated},
             {"compatible_orders", orders}};
    std::cout << out.dump(2) << "\n";
    return 0;
  }
  std::cout << type_d::format(w) << " in D" << g.rank() << ": length " << g.length(idx) << ", "
            << (smooth ? "smooth" : "not smooth") << "\n  rank generating function:";
  for (auto c : g.rank_generating_function(idx)) std::cout << " " << c;
  std::cout << "\n  C(w): " << a.size() << " members\n";
  for (const auto& m : members) std::cout << "    " << m << "\n";
  std::cout << "  admissible: " << yes_no(check.admissible);
  if (!check.admissible) {
    std::cout << " (condition " << check.violated << ";";
    for (const auto& r : check.witness) std::cout << " " << type_d::format(r);
    std::cout << ")";
  }
  std::cout << "\n  compatible orders: " << orders << "\n";
  return 0;
}

int cmd_typed_verify(const TypedArgs& args) {
  SweepArgs s;
  s.mode = "conjecture-d";
  s.rank = args.rank;
  s.workers = args.workers;
  s.root_order = args.root_order;
  s.sum_condition = args.sum_condition;
  s.json = args.json;
  return cmd_sweep(s);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Smooth permutations, compatible reflection orders and the type D analog"};
  app.require_subcommand(1);

  SmoothArgs smooth;
  auto* s = app.add_subcommand("smooth", "Smoothness verdicts for a permutation");
  s->add_option("perm", smooth.perm, "One-line notation: 35142 or 3,5,1,4,2")->required();
  s->add_flag("--json", smooth.json);

  OrderArgs order;
  auto* o = app.add_subcommand("order", "Construct and verify a compatible order of C_T(w)");
  o->add_option("perm", order.perm)->required();
  o->add_flag("--enumerate", order.enumerate, "List every compatible order and verify each");
  o->add_option("--verify", order.verify, "Verify the order in this .order file instead");
  o->add_option("--dot", order.dot, "Write the elementary-move graph as DOT");
  o->add_option("--chain-dot", order.chain_dot, "Write the prefix chain as DOT");
  o->add_option("--emit", order.emit, "Write the order as a .order file");
  o->add_option("--max-reflections", order.max_reflections, "Enumeration cap")->capture_default_str();
  o->add_flag("--json", order.json);

  SweepArgs sweep;
  sweep.workers = default_workers();
  auto* w = app.add_subcommand("sweep", "Exhaustive or sampled checks");
  w->add_option("--mode", sweep.mode)
      ->required()
      ->check(CLI::IsMember(
          {"smooth-crosscheck", "theorem-verify", "enumerate-orders", "graph-connectivity", "conjecture-d"}));
  w->add_option("--n", sweep.n, "Degree for S_n modes");
  w->add_option("--rank", sweep.rank, "Rank for conjecture-d");
  w->add_option("--workers", sweep.workers, "Worker threads (default: $SMOOTHPERM_WORKERS or 1)")
      ->check(CLI::PositiveNumber);
  w->add_option("--sample", sweep.sample, "Check this many elements, chosen by --seed");
  w->add_option("--seed", sweep.seed);
  w->add_option("--max-degree", sweep.max_degree, "Refuse larger n")->capture_default_str();
  w->add_option("--simple-root-order", sweep.root_order)->check(CLI::IsMember({"by-index", "reversed-index"}));
  w->add_option("--sum-condition", sweep.sum_condition)
      ->check(CLI::IsMember({"any-decompositions", "same-decomposition"}));
  w->add_flag("--json", sweep.json);

  TypedArgs typed;
  typed.workers = default_workers();
  auto* t = app.add_subcommand("typed", "Type D root data, elements and the conjecture check");
  t->require_subcommand(1);
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--simple-root-order", typed.root_order)->check(CLI::IsMember({"by-index", "reversed-index"}));
    sub->add_option("--sum-condition", typed.sum_condition)
        ->check(CLI::IsMember({"any-decompositions", "same-decomposition"}));
    sub->add_flag("--json", typed.json);
  };
  auto* tr = t->add_subcommand("roots", "Roots, simple roots and the f map");
  tr->add_option("--rank", typed.rank)->capture_default_str();
  tr->add_flag("--json", typed.json);
  auto* te = t->add_subcommand("element", "C(w), admissibility and orders for one element");
  te->add_option("w", typed.element, "Signed window, e.g. -2,1,-3,4")->required();
  add_common(te);
  auto* tv = t->add_subcommand("verify", "Check the conjecture over every smooth element");
  tv->add_option("--rank", typed.rank)->capture_default_str();
  tv->add_option("--workers", typed.workers)->check(CLI::PositiveNumber);
  add_common(tv);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (*s) return cmd_smooth(smooth);
    if (*o) return cmd_order(order);
    if (*w) return cmd_sweep(sweep);
    if (*tr) return cmd_typed_roots(typed);
    if (*te) return cmd_typed_element(typed);
    if (*tv) return cmd_typed_verify(typed);
  } catch (const std::length_error& e) {
    std::cerr << "refused: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitNegative;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
