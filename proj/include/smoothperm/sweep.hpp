#pragma once

// Exhaustive (or seeded-sample) sweeps over S_n and W(D_n), split across
// worker threads and merged in element order.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "smoothperm/type_d.hpp"

namespace smoothperm {

inline constexpr int kDefaultMaxSweepDegree = 8;
inline constexpr std::string_view kSweepSchema = "smoothperm.sweep/1";

enum class SweepMode { SmoothCrosscheck, TheoremVerify, EnumerateOrders, GraphConnectivity, ConjectureD };

std::string format(SweepMode mode);
/// "smooth-crosscheck", "theorem-verify", ...; throws std::invalid_argument.
SweepMode parse_sweep_mode(std::string_view text);

struct SweepConfig {
  SweepMode mode = SweepMode::SmoothCrosscheck;
  int n = 4;  // degree, or rank for conjecture-d
  unsigned workers = 1;
  std::optional<std::size_t> sample;
  std::optional<std::uint64_t> seed;
  int max_degree = kDefaultMaxSweepDegree;
  type_d::SimpleRootOrder root_order = type_d::SimpleRootOrder::ByIndex;
  type_d::SumConditionReading reading = type_d::SumConditionReading::AnyDecompositions;
};

/// Throws std::invalid_argument for a malformed config (sample without seed,
/// zero workers, n out of range) and std::length_error when n exceeds
/// max_degree (or the type-D rank limit).
void validate(const SweepConfig& config);

struct SweepViolation {
  std::string element;
  std::string reason;
};

struct SweepReport {
  SweepConfig config;
  std::size_t elements = 0;  // elements examined
  std::size_t smooth = 0;
  std::size_t orders = 0;  // compatible orders examined
  std::vector<SweepViolation> violations;

  bool pass() const { return violations.empty(); }
};

/// Modes over S_n:
///   smooth-crosscheck  every w (or a sample): pattern and length criteria agree,
///                      and non-smooth w have |C_T(w)| > l(w)
///   theorem-verify     smooth w: the constructed order is compatible and passes
///                      product / prefix / suffix checks
///   enumerate-orders   smooth w: every compatible order passes those checks
///   graph-connectivity smooth w: the elementary-move graph is connected
/// The three smooth-only modes sample among smooth elements.
/// Throws std::length_error when an element exceeds an enumeration cap.
SweepReport run_sweep(const SweepConfig& config);

nlohmann::json to_json(const SweepReport& report);

/// `count` distinct indices from [0, population), ascending.  Partial
/// Fisher-Yates driven by mt19937_64 so results do not depend on the
/// standard library's distributions.
std::vector<std::size_t> sample_indices(std::size_t population, std::size_t count, std::uint64_t seed);

/// SMOOTHPERM_WORKERS if set to a positive integer, else 1.
unsigned default_workers();

}  // namespace smoothperm
