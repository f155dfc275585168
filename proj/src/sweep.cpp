#include "smoothperm/sweep.hpp"

#include <algorithm>
#include <cstdlib>
#include <exception>
#include <nlohmann/json.hpp>
#include <numeric>
#include <random>
#include <stdexcept>
#include <thread>

#include "smoothperm/admissible.hpp"
#include "smoothperm/compat_orders.hpp"

namespace smoothperm {

namespace {

constexpr std::pair<SweepMode, std::string_view> kModeNames[] = {
    {SweepMode::SmoothCrosscheck, "smooth-crosscheck"},
    {SweepMode::TheoremVerify, "theorem-verify"},
    {SweepMode::EnumerateOrders, "enumerate-orders"},
    {SweepMode::GraphConnectivity, "graph-connectivity"},
    {SweepMode::ConjectureD, "conjecture-d"},
};

struct ElementResult {
  bool smooth = false;
  std::size_t orders = 0;
  std::vector<SweepViolation> violations;
};

std::string describe(const VerificationReport& r) {
  std::string out;
  if (!r.product_ok) out += "product is " + format(r.product) + "; ";
  if (!r.prefix_saturated)
    out += "prefix chain breaks at step " + std::to_string(r.prefix_first_non_cover.value_or(0)) + "; ";
  if (!r.suffix_saturated)
    out += "suffix chain breaks at step " + std::to_string(r.suffix_first_non_cover.value_or(0)) + "; ";
  if (!out.empty()) out.resize(out.size() - 2);
  return out;
}

ElementResult check_element(SweepMode mode, const Permutation& w) {
  ElementResult r;
  const auto name = format(w);
  auto fail = [&](std::string reason) { r.violations.push_back({name, std::move(reason)}); };

  switch (mode) {
    case SweepMode::SmoothCrosscheck: {
      const bool by_pattern = is_smooth_pattern(w);
      const bool by_length = is_smooth_length(w);
      r.smooth = by_pattern;
      if (by_pattern != by_length) fail("pattern and length criteria disagree");
      if (!by_pattern && c_t(w).size() <= static_cast<std::size_t>(length(w)))
        fail("non-smooth but |C_T(w)| <= l(w)");
      break;
    }
    case SweepMode::TheoremVerify: {
      r.smooth = true;
      const auto a = c23(w);
      const auto order = construct_compatible_order(a);
      r.orders = 1;
      if (!is_compatible(order, a)) fail("constructed order " + format(order) + " is not compatible");
      const auto report = verify_theorem(w, order);
      if (!report.all_ok()) fail(format(order) + ": " + describe(report));
      break;
    }
    case SweepMode::EnumerateOrders: {
      r.smooth = true;
      const auto a = c23(w);
      r.orders = for_each_compatible_order(a, [&](const ReflectionOrder& order) {
        const auto report = verify_theorem(w, order);
        if (!report.all_ok()) fail(format(order) + ": " + describe(report));
        return true;
      });
      if (r.orders == 0) fail("no compatible order");
      break;
    }
    case SweepMode::GraphConnectivity: {
      r.smooth = true;
      const auto report = check_connectivity(c23(w));
      r.orders = report.total_orders.value_or(report.component_size);
      if (!report.connected.value_or(false))
        fail("move graph has a component of " + std::to_string(report.component_size) + " of " +
             std::to_string(r.orders) + " orders");
      break;
    }
    case SweepMode::ConjectureD:
      throw std::logic_error("conjecture-d is not a per-permutation mode");
  }
  return r;
}

std::size_t reflection_cap(SweepMode mode) {
  switch (mode) {
    case SweepMode::EnumerateOrders: return kDefaultMaxEnumeratedReflections;
    case SweepMode::GraphConnectivity: return kDefaultMaxGraphCheckReflections;
    default: return std::numeric_limits<std::size_t>::max();
  }
}

SweepReport run_conjecture(const SweepConfig& config) {
  const type_d::WeylGroupD g(config.n);
  const auto r = type_d::verify_conjecture_d(g, config.root_order, config.workers, config.reading);
  SweepReport report;
  report.config = config;
  report.elements = r.group_size;
  report.smooth = r.smooth;
  report.orders = r.orders_checked;
  for (const auto& v : r.verdicts) {
    if (v.ok()) continue;
    std::string reason;
    if (!v.admissible) reason += "C(w) not admissible; ";
    if (v.orders == 0) reason += "no compatible order; ";
    if (v.wrong_products > 0) reason += std::to_string(v.wrong_products) + " orders with a wrong product; ";
    reason.resize(reason.size() - 2);
    report.violations.push_back({v.window, reason});
  }
  return report;
}

}  // namespace

std::string format(SweepMode mode) {
  for (const auto& [m, name] : kModeNames)
    if (m == mode) return std::string(name);
  return {};
}

SweepMode parse_sweep_mode(std::string_view text) {
  for (const auto& [m, name] : kModeNames)
    if (name == text) return m;
  throw std::invalid_argument("unknown sweep mode '" + std::string(text) + "'");
}

void validate(const SweepConfig& config) {
  if (config.workers == 0) throw std::invalid_argument("workers must be >= 1");
  if (config.sample && !config.seed) throw std::invalid_argument("--sample requires --seed");
  if (config.mode == SweepMode::ConjectureD) {
    if (config.sample) throw std::invalid_argument("conjecture-d does not sample");
    if (config.n < 2) throw std::invalid_argument("rank must be >= 2");
    if (config.n > type_d::kDefaultMaxRank)
      throw std::length_error("rank " + std::to_string(config.n) + " exceeds the limit " +
                              std::to_string(type_d::kDefaultMaxRank));
    return;
  }
  if (config.n < 1) throw std::invalid_argument("degree must be >= 1");
  if (config.n > config.max_degree)
    throw std::length_error("degree " + std::to_string(config.n) + " exceeds the limit " +
                            std::to_string(config.max_degree));
}

std::vector<std::size_t> sample_indices(std::size_t population, std::size_t count, std::uint64_t seed) {
  count = std::min(count, population);
  std::vector<std::size_t> pool(population);
  std::iota(pool.begin(), pool.end(), std::size_t{0});
  std::mt19937_64 rng(seed);
  for (std::size_t x = 0; x < count; ++x) {
    const auto span = static_cast<std::uint64_t>(population - x);
    std::swap(pool[x], pool[x + static_cast<std::size_t>(rng() % span)]);
  }
  pool.resize(count);
  std::sort(pool.begin(), pool.end());
  return pool;
}

unsigned default_workers() {
  const char* env = std::getenv("SMOOTHPERM_WORKERS");
  if (env == nullptr) return 1;
  try {
    std::size_t used = 0;
    const long v = std::stol(env, &used);
    if (used == std::string_view(env).size() && v > 0) return static_cast<unsigned>(v);
  } catch (const std::exception&) {
  }
  return 1;
}

SweepReport run_sweep(const SweepConfig& config) {
  validate(config);
  if (config.mode == SweepMode::ConjectureD) return run_conjecture(config);

  const int n = config.n;
  const bool smooth_only = config.mode != SweepMode::SmoothCrosscheck;
  std::vector<std::size_t> ranks;
  std::size_t rank = 0;
  for_each_permutation(n, [&](const Permutation& w) {
    if (!smooth_only || is_smooth_pattern(w)) ranks.push_back(rank);
    ++rank;
  });
  if (config.sample) {
    const auto picks = sample_indices(ranks.size(), *config.sample, *config.seed);
    std::vector<std::size_t> chosen;
    for (auto p : picks) chosen.push_back(ranks[p]);
    ranks = std::move(chosen);
  }

  // Refuse up front rather than stopping part-way: for smooth w, |C_T(w)| = l(w).
  const auto cap = reflection_cap(config.mode);
  for (auto r : ranks) {
    const auto w = unrank_lex(n, r);
    if (static_cast<std::size_t>(length(w)) > cap)
      throw std::length_error(format(w) + " has " + std::to_string(length(w)) +
                              " reflections, above the cap of " + std::to_string(cap) + " for " +
                              format(config.mode));
  }

  std::vector<ElementResult> results(ranks.size());
  const unsigned workers = std::min<unsigned>(config.workers, std::max<std::size_t>(ranks.size(), 1));
  std::vector<std::exception_ptr> errors(workers);
  std::vector<std::thread> pool;
  const std::size_t chunk = (ranks.size() + workers - 1) / workers;
  for (unsigned t = 0; t < workers; ++t)
    pool.emplace_back([&, t] {
      try {
        const std::size_t lo = t * chunk;
        const std::size_t hi = std::min(ranks.size(), lo + chunk);
        for (std::size_t x = lo; x < hi; ++x) results[x] = check_element(config.mode, unrank_lex(n, ranks[x]));
      } catch (...) {
        errors[t] = std::current_exception();
      }
    });
  for (auto& th : pool) th.join();
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);

  SweepReport report;
  report.config = config;
  report.elements = ranks.size();
  for (auto& r : results) {
    if (r.smooth) ++report.smooth;
    report.orders += r.orders;
    for (auto& v : r.violations) report.violations.push_back(std::move(v));
  }
  return report;
}

nlohmann::json to_json(const SweepReport& report) {
  const auto& c = report.config;
  nlohmann::json out;
  out["schema"] = kSweepSchema;
  out["mode"] = format(c.mode);
  out[c.mode == SweepMode::ConjectureD ? "rank" : "n"] = c.n;
  out["workers"] = c.workers;
  out["sample"] = c.sample ? nlohmann::json(*c.sample) : nlohmann::json(nullptr);
  out["seed"] = c.seed ? nlohmann::json(*c.seed) : nlohmann::json(nullptr);
  if (c.mode == SweepMode::ConjectureD) {
    out["simple_root_order"] = type_d::format(c.root_order);
    out["sum_condition"] = type_d::format(c.reading);
  }
  out["elements"] = report.elements;
  out["smooth"] = report.smooth;
  out["orders"] = report.orders;
  auto violations = nlohmann::json::array();
  for (const auto& v : report.violations) violations.push_back({{"element", v.element}, {"reason", v.reason}});
  out["violations"] = std::move(violations);
  out["pass"] = report.pass();
  return out;
}

}  // namespace smoothperm
