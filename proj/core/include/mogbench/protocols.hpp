#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "mogbench/grasp_sim.hpp"
#include "mogbench/planners.hpp"

namespace mogbench {

enum class RoundKind { opo, apt_round, pta_round, sop };
enum class ProtocolKind { apt, pta };

const char* to_string(RoundKind kind);
const char* to_string(ProtocolKind kind);
RoundKind round_kind_from_string(const std::string& text);

/// One picking round: the target, what actually ended up in the hand, and
/// the full phase ledger. settle_wait is logged for fidelity but excluded
/// from t_OPO.
struct TrialRecord {
  RoundKind protocol = RoundKind::opo;
  int target_p = 1;
  int q = 0;
  PhaseTimes phase;
  double settle_wait = kSettleWaitSeconds;
  int grouping_moves_used = 0;
  bool planner_failed = false;
  std::uint64_t scene_seed = 0;
  std::uint64_t trial_seed = 0;
};

struct RoundEntry {
  TrialRecord trial;
  SimTime t_transfer;
};

/// Aggregate of one APT or PTA run. t_total always equals the sum over
/// rounds of (t_OPO + t_transfer) plus the excess-return time, exactly.
struct ProtocolRunResult {
  ProtocolKind protocol = ProtocolKind::apt;
  int n_target = 0;  // APT only
  int initial_count = 0;
  std::vector<RoundEntry> rounds;
  int excess_returns = 0;
  SimTime excess_time;
  SimTime t_total;
  int delivered = 0;
  bool completed = false;
  bool stalled = false;

  int m_opo() const { return static_cast<int>(rounds.size()); }
};

struct SceneConfig {
  ObjectSpec spec;
  int count = 20;
  Scenario scenario = Scenario::surface;
  BinRect bin{400, 400};
};

struct PlannerConfig {
  CountPolicy policy;
  double grid_spacing = 10.0;
  int pile_yaw_samples = 8;
};

/// Everything a protocol run needs. The master seed determines every scene,
/// plan, grasp outcome, and sampled duration; equal envs give equal results.
struct BenchmarkEnv {
  SceneConfig scene;
  HandModel hand;
  TimeModel time;
  PlannerConfig planner;
  int trial_count = 100;
  int max_rounds = 50;
  std::uint64_t master_seed = 0;
};

/// Consecutive empty-handed rounds after which a PTA run aborts as stalled.
inline constexpr int kStallRoundLimit = 10;

Scene make_scene(const SceneConfig& config, std::uint64_t seed);

/// One OPO trial on a fresh scene. Trials are independent: everything is
/// derived from (master seed, trial index), so batch and per-trial execution
/// agree record for record.
TrialRecord run_opo_trial(const BenchmarkEnv& env, int p, int trial_index);

/// env.trial_count OPO repetitions. Planner failures become q = 0 records
/// with the failure flag set; the run never aborts.
std::vector<TrialRecord> run_opo(const BenchmarkEnv& env, int p);

/// Accurate pick-transferring: rounds until exactly n_target objects sit in
/// the target bin. Overshoot is paid back with single-object returns, each
/// costing one SOP pick plus one transfer.
ProtocolRunResult run_apt(const BenchmarkEnv& env, int n_target);

/// Pick-transferring-all: rounds until the source scene is empty, the round
/// cap trips, or the run stalls.
ProtocolRunResult run_pta(const BenchmarkEnv& env);

/// Independent repetitions with per-run derived seeds.
std::vector<ProtocolRunResult> run_apt_series(const BenchmarkEnv& env, int n_target, int runs);
std::vector<ProtocolRunResult> run_pta_series(const BenchmarkEnv& env, int runs);

/// Seeded mean of the single-object pick (t_SOG) and pick-plus-transfer
/// (t_sopt) times, quantized to the virtual clock's microsecond tick.
struct SopCalibration {
  int trials = 0;
  SimTime t_sog;
  SimTime t_sopt;
};

SopCalibration run_sop_calibration(const BenchmarkEnv& env, int trials);

}  // namespace mogbench
