#include "mogbench/protocols.hpp"

#include <algorithm>

#include "mogbench/error.hpp"
#include "mogbench/rng.hpp"

namespace mogbench {

const char* to_string(RoundKind kind) {
  switch (kind) {
    case RoundKind::opo: return "OPO";
    case RoundKind::apt_round: return "APT_round";
    case RoundKind::pta_round: return "PTA_round";
    case RoundKind::sop: return "SOP";
  }
  return "?";
}

const char* to_string(ProtocolKind kind) {
  return kind == ProtocolKind::apt ? "APT" : "PTA";
}

RoundKind round_kind_from_string(const std::string& text) {
  if (text == "OPO") return RoundKind::opo;
  if (text == "APT_round") return RoundKind::apt_round;
  if (text == "PTA_round") return RoundKind::pta_round;
  if (text == "SOP") return RoundKind::sop;
  fail(ErrorCode::ingest_error, "unknown round kind '" + text + "'");
}

namespace {

// Seed-stream tags; every random decision in a run hangs off one of these.
enum Stream : std::uint64_t {
  kSceneStream = 1,
  kTrialStream = 2,
  kPlannerStream = 3,
  kRoundStream = 4,
  kExcessStream = 5,
  kCalibrationStream = 6,
  kRunStream = 7,
  kTransferStream = 8,
};

bool is_planning_failure(const Error& error) {
  switch (error.code()) {
    case ErrorCode::planning_error:
    case ErrorCode::insufficient_objects:
    case ErrorCode::empty_scene:
      return true;
    default:
      return false;
  }
}

GraspPlan make_plan(const Scene& scene, const BenchmarkEnv& env, int p, std::uint64_t plan_seed) {
  if (scene.scenario == Scenario::surface)
    return plan_surface_grasp(scene, env.hand, p, plan_seed);
  return plan_pile_grasp(scene, env.hand, p, env.planner.grid_spacing,
                         env.planner.pile_yaw_samples);
}

/// Object a SOP round reaches for: topmost layer first, then lowest id.
int sop_target(const Scene& scene) {
  const ObjectInstance* best = nullptr;
  for (const ObjectInstance& object : scene.objects) {
    if (best == nullptr || object.layer > best->layer ||
        (object.layer == best->layer && object.id < best->id))
      best = &object;
  }
  return best->id;
}

struct RoundOutcome {
  TrialRecord record;
  std::vector<int> retained;
  Scene scene;  // post-round scene (moves applied, retained removed)
};

/// One protocol round on `scene`: a SOP pick when p is 1, otherwise a
/// planned multi-object grasp. Planner failures yield a flagged q = 0
/// record rather than aborting.
RoundOutcome execute_round(const Scene& scene, const BenchmarkEnv& env, int p, RoundKind kind,
                           std::uint64_t scene_seed, std::uint64_t round_seed) {
  RoundOutcome out{{}, {}, scene};
  out.record.protocol = kind;
  out.record.target_p = p;
  out.record.scene_seed = scene_seed;
  out.record.trial_seed = round_seed;

  Rng rng(round_seed);

  if (kind == RoundKind::sop) {
    const SimTime pick = sample_sop_pick_time(env.time, rng);
    out.record.phase = split_sop_phases(env.time, pick);
    const int target = sop_target(scene);
    const bool slipped = env.hand.slip_prob > 0 && rng.uniform() < env.hand.slip_prob;
    if (!slipped) out.retained.push_back(target);
    out.record.q = static_cast<int>(out.retained.size());
    out.scene = remove_objects(scene, out.retained);
    return out;
  }

  GraspPlan plan;
  bool planned = true;
  try {
    plan = make_plan(scene, env, p, derive_seed(round_seed, kPlannerStream));
  } catch (const Error& error) {
    if (!is_planning_failure(error)) throw;
    planned = false;
  }

  if (!planned) {
    out.record.planner_failed = true;
    out.record.phase = sample_phase_times(env.time, 0, rng);
    out.record.q = 0;
    return out;
  }

  out.record.grouping_moves_used = static_cast<int>(plan.grouping_moves.size());
  out.record.phase = sample_phase_times(env.time, out.record.grouping_moves_used, rng);

  const Scene staged = apply_grouping_moves(scene, plan.grouping_moves);
  const GraspOutcome outcome = simulate_grasp(staged, env.hand, plan.pose, rng);
  out.retained = outcome.retained;
  out.record.q = outcome.q();
  out.scene = remove_objects(staged, out.retained);
  return out;
}

}  // namespace

Scene make_scene(const SceneConfig& config, std::uint64_t seed) {
  if (config.scenario == Scenario::surface)
    return generate_surface_scene(config.spec, config.count, config.bin, seed);
  return generate_pile_scene(config.spec, config.count, config.bin, seed);
}

TrialRecord run_opo_trial(const BenchmarkEnv& env, int p, int trial_index) {
  if (p < 1) fail(ErrorCode::validation_error, "OPO target must be at least 1");
  const std::uint64_t scene_seed = derive_seed(env.master_seed, trial_index, kSceneStream);
  const std::uint64_t trial_seed = derive_seed(env.master_seed, trial_index, kTrialStream);
  const Scene scene = make_scene(env.scene, scene_seed);
  RoundOutcome out = execute_round(scene, env, p, RoundKind::opo, scene_seed, trial_seed);
  return out.record;
}

std::vector<TrialRecord> run_opo(const BenchmarkEnv& env, int p) {
  if (env.trial_count < 1) fail(ErrorCode::validation_error, "trial count must be at least 1");
  std::vector<TrialRecord> records;
  records.reserve(env.trial_count);
  for (int i = 0; i < env.trial_count; ++i) records.push_back(run_opo_trial(env, p, i));
  return records;
}

ProtocolRunResult run_apt(const BenchmarkEnv& env, int n_target) {
  if (n_target < 1) fail(ErrorCode::validation_error, "APT target must be at least 1");
  if (env.scene.count < n_target)
    fail(ErrorCode::validation_error,
         "source scene holds " + std::to_string(env.scene.count) + " objects, fewer than the " +
             std::to_string(n_target) + " requested");

  const std::uint64_t scene_seed = derive_seed(env.master_seed, 0, kSceneStream);
  Scene scene = make_scene(env.scene, scene_seed);

  ProtocolRunResult result;
  result.protocol = ProtocolKind::apt;
  result.n_target = n_target;
  result.initial_count = static_cast<int>(scene.objects.size());

  int remaining = n_target;
  int total_q = 0;
  for (int round = 0; remaining > 0 && round < env.max_rounds; ++round) {
    if (scene.objects.empty()) break;
    const int available = static_cast<int>(scene.objects.size());
    int p = select_target_count(remaining, env.hand, env.scene.spec, env.planner.policy);
    p = std::min(p, available);
    const RoundKind kind = p == 1 ? RoundKind::sop : RoundKind::apt_round;

    const std::uint64_t round_seed = derive_seed(env.master_seed, round, kRoundStream);
    RoundOutcome out = execute_round(scene, env, p, kind, scene_seed, round_seed);
    scene = std::move(out.scene);

    Rng transfer_rng(derive_seed(round_seed, kTransferStream));
    const SimTime t_transfer = sample_transfer_time(env.time, transfer_rng);
    result.t_total += out.record.phase.opo_total() + t_transfer;
    result.rounds.push_back({out.record, t_transfer});

    remaining -= out.record.q;
    total_q += out.record.q;
  }

  if (remaining < 0) {
    // Excess objects go back one at a time, each a SOP pick plus a transfer.
    result.excess_returns = -remaining;
    Rng excess_rng(derive_seed(env.master_seed, 0, kExcessStream));
    for (int i = 0; i < result.excess_returns; ++i) {
      result.excess_time +=
          sample_sop_pick_time(env.time, excess_rng) + sample_transfer_time(env.time, excess_rng);
    }
    result.t_total += result.excess_time;
    remaining = 0;
  }

  result.delivered = total_q - result.excess_returns;
  result.completed = result.delivered == n_target;
  return result;
}

ProtocolRunResult run_pta(const BenchmarkEnv& env) {
  const std::uint64_t scene_seed = derive_seed(env.master_seed, 0, kSceneStream);
  Scene scene = make_scene(env.scene, scene_seed);
  if (scene.objects.empty()) fail(ErrorCode::empty_scene, "PTA needs a non-empty source scene");

  ProtocolRunResult result;
  result.protocol = ProtocolKind::pta;
  result.initial_count = static_cast<int>(scene.objects.size());

  int consecutive_empty = 0;
  for (int round = 0; !scene.objects.empty() && round < env.max_rounds; ++round) {
    const int available = static_cast<int>(scene.objects.size());
    int p = select_target_count(available, env.hand, env.scene.spec, env.planner.policy);
    p = std::min(p, available);
    const RoundKind kind = p == 1 ? RoundKind::sop : RoundKind::pta_round;

    const std::uint64_t round_seed = derive_seed(env.master_seed, round, kRoundStream);
    RoundOutcome out = execute_round(scene, env, p, kind, scene_seed, round_seed);
    scene = std::move(out.scene);

    Rng transfer_rng(derive_seed(round_seed, kTransferStream));
    const SimTime t_transfer = sample_transfer_time(env.time, transfer_rng);
    result.t_total += out.record.phase.opo_total() + t_transfer;
    result.rounds.push_back({out.record, t_transfer});
    result.delivered += out.record.q;

    consecutive_empty = out.record.q == 0 ? consecutive_empty + 1 : 0;
    if (consecutive_empty >= kStallRoundLimit) {
      result.stalled = true;
      break;
    }
  }

  result.completed = scene.objects.empty();
  return result;
}

std::vector<ProtocolRunResult> run_apt_series(const BenchmarkEnv& env, int n_target, int runs) {
  std::vector<ProtocolRunResult> results;
  results.reserve(runs);
  for (int r = 0; r < runs; ++r) {
    BenchmarkEnv run_env = env;
    run_env.master_seed = derive_seed(env.master_seed, r, kRunStream);
    results.push_back(run_apt(run_env, n_target));
  }
  return results;
}

std::vector<ProtocolRunResult> run_pta_series(const BenchmarkEnv& env, int runs) {
  std::vector<ProtocolRunResult> results;
  results.reserve(runs);
  for (int r = 0; r < runs; ++r) {
    BenchmarkEnv run_env = env;
    run_env.master_seed = derive_seed(env.master_seed, r, kRunStream);
    results.push_back(run_pta(run_env));
  }
  return results;
}

SopCalibration run_sop_calibration(const BenchmarkEnv& env, int trials) {
  if (trials < 1) fail(ErrorCode::validation_error, "calibration needs at least one trial");
  std::int64_t pick_sum = 0;
  std::int64_t total_sum = 0;
  for (int t = 0; t < trials; ++t) {
    Rng rng(derive_seed(env.master_seed, t, kCalibrationStream));
    const SimTime pick = sample_sop_pick_time(env.time, rng);
    const SimTime transfer = sample_transfer_time(env.time, rng);
    pick_sum += pick.micros();
    total_sum += (pick + transfer).micros();
  }
  SopCalibration calibration;
  calibration.trials = trials;
  calibration.t_sog = SimTime::from_micros(
      static_cast<std::int64_t>(std::llround(static_cast<double>(pick_sum) / trials)));
  calibration.t_sopt = SimTime::from_micros(
      static_cast<std::int64_t>(std::llround(static_cast<double>(total_sum) / trials)));
  return calibration;
}

}  // namespace mogbench
