#pragma once

// Verification campaigns over families of function tables: exhaustive sweeps,
// seeded random sampling, and a hill-climb toward large average collision
// probability. Every instance is checked against the collision bound
// (exactly), the averaged Rényi bound, and the Jensen step (within kTolerance).

#include <chrono>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "maskent/budget.hpp"
#include "maskent/family.hpp"
#include "maskent/identities.hpp"
#include "maskent/tightness.hpp"

namespace maskent {

inline constexpr double kTolerance = 1e-9;

enum class CampaignMode { exhaustive, random, hillclimb };

std::string to_string(CampaignMode mode);
/// Raises ArgumentError for unknown names.
CampaignMode parse_campaign_mode(std::string_view name);

struct CampaignConfig {
  std::uint32_t q = 2;
  std::size_t n = 1;
  CampaignMode mode = CampaignMode::random;
  std::uint64_t samples = 1000;
  std::uint64_t iters = 5000;
  std::uint64_t restarts = 4;
  std::uint64_t seed = 0;
  std::uint64_t budget = default_budget();
  /// Random mode: the first this-many samples also get the joint-collision and
  /// shell identity checks.
  std::uint64_t identity_samples = 50;
  /// Worker threads for per-instance evaluation. Results do not depend on it.
  unsigned workers = 1;
};

/// One row per evaluated function.
struct InstanceSummary {
  std::uint64_t digest = 0;
  Rational avg_cp;
  double avg_h2 = 0.0;
  double avg_shannon = 0.0;
  bool coordinatewise = false;
  bool equality = false;
};

struct TrajectoryPoint {
  std::uint64_t restart = 0;
  std::uint64_t iteration = 0;
  Rational best;
};

struct CampaignResult {
  CampaignConfig config;
  Rational cp_bound;
  double h2_bound = 0.0;
  std::vector<InstanceSummary> instances;
  Rational max_avg_cp;
  /// Exhaustive mode: every table attaining max_avg_cp, in enumeration order.
  /// Hill-climb: the best table of each restart that reached the overall best.
  std::vector<FunctionTable> argmax;
  bool argmax_all_coordinatewise = false;
  std::uint64_t coordinatewise_count = 0;
  /// Slack of the collision bound, cp_bound - avg_cp, over all instances.
  Rational min_cp_slack, max_cp_slack, mean_cp_slack;
  /// Slack of the Rényi bound, avg_h2 - h2_bound.
  double min_h2_slack = 0.0, max_h2_slack = 0.0, mean_h2_slack = 0.0;
  std::vector<TrajectoryPoint> trajectory;
  std::vector<std::string> violations;
  /// Not serialized; reports must be reproducible byte for byte.
  std::chrono::duration<double> wall_time{};
};

/// Every function GF(q)^n -> GF(q)^n, in mixed-radix order over the output
/// table (output of input 0 varies fastest). Requires (q^n)^{q^n} <= budget.
CampaignResult exhaustive_campaign(const CampaignConfig& config);

/// config.samples uniformly random tables drawn from the seeded generator.
CampaignResult random_campaign(const CampaignConfig& config);

/// Strict-improvement hill-climb on avg_cp with single-entry mutations.
CampaignResult hillclimb_search(const CampaignConfig& config);

/// Dispatches on config.mode.
CampaignResult run_campaign(const CampaignConfig& config);

struct InstanceVerdict {
  TheoremReport report;
  Rational joint_collision;
  std::vector<ShellTerm> shells;
  std::optional<TightnessPrediction> prediction;  // set when f is the square map
  std::optional<double> chain_rule_gap;           // set when f is coordinate-wise
  std::vector<std::string> violations;
};

/// Single-instance check of every invariant the family satisfies.
InstanceVerdict verify_instance(const FunctionTable& f, bool keep_per_k = false, std::uint64_t budget = default_budget());

/// Uniform draw from [0, bound) by rejection on a 64-bit Mersenne Twister.
std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound);

/// Each output drawn independently and uniformly from GF(q)^n.
FunctionTable random_table(const FieldPtr& field, std::size_t n, std::mt19937_64& rng);

/// 64-bit FNV-1a over (p, m, n, outputs).
std::uint64_t table_digest(const FunctionTable& f);

}  // namespace maskent
