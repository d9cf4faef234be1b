#include "mogbench/grasp_sim.hpp"

#include <algorithm>

namespace mogbench {

std::vector<int> grasp_candidates(const Scene& scene, const HandModel& hand,
                                  const GraspPose& pose) {
  const CaptureRegion region = capture_region(hand, pose);

  int top_layer = -1;
  for (const ObjectInstance& object : scene.objects) {
    if (region.contains(object.position)) top_layer = std::max(top_layer, object.layer);
  }
  if (top_layer < 0) return {};

  const int reach_floor = top_layer - (hand.max_layers - 1);
  std::vector<int> candidates;
  for (const ObjectInstance& object : scene.objects) {
    if (object.layer >= reach_floor && region.contains(object.position))
      candidates.push_back(object.id);
  }
  std::sort(candidates.begin(), candidates.end());
  return candidates;
}

GraspOutcome simulate_grasp(const Scene& scene, const HandModel& hand, const GraspPose& pose,
                            Rng& rng) {
  GraspOutcome outcome;
  outcome.candidates = grasp_candidates(scene, hand, pose);

  const int available = static_cast<int>(outcome.candidates.size());
  const int cap = capacity(hand, scene.spec);

  std::vector<int> provisional;
  if (available <= cap) {
    provisional = outcome.candidates;
  } else {
    // Overloaded hand: it closes on roughly capacity objects, one more or
    // one fewer depending on how the pile yields.
    const int drawn = cap - 1 + static_cast<int>(rng.uniform_int(3));
    const int take = std::clamp(drawn, 0, available);
    std::vector<int> pool = outcome.candidates;
    rng.shuffle(pool);
    provisional.assign(pool.begin(), pool.begin() + take);
    std::sort(provisional.begin(), provisional.end());
  }

  for (int id : provisional) {
    const bool slipped = hand.slip_prob > 0 && rng.uniform() < hand.slip_prob;
    if (!slipped) outcome.retained.push_back(id);
  }
  return outcome;
}

namespace {

SimTime jittered(double mean_seconds, double jitter_frac, Rng& rng) {
  const double u = jitter_frac * (2 * rng.uniform() - 1);
  return SimTime::from_seconds(mean_seconds * (1 + u));
}

}  // namespace

PhaseTimes sample_phase_times(const TimeModel& model, int grouping_moves, Rng& rng) {
  const SimTime approach = jittered(model.t_approach_mean, model.jitter_frac, rng);
  SimTime grasp = jittered(model.t_grasp_mean, model.jitter_frac, rng);
  const SimTime lift = jittered(model.t_lift_mean, model.jitter_frac, rng);
  grasp += SimTime::from_seconds(grouping_moves * model.grouping_move_cost);

  PhaseTimes phase;
  phase.t0 = SimTime::from_micros(0);
  phase.t1 = phase.t0 + approach;
  phase.t2 = phase.t1 + grasp;
  phase.t3 = phase.t2 + lift;
  return phase;
}

SimTime sample_transfer_time(const TimeModel& model, Rng& rng) {
  return jittered(model.t_transfer_mean, model.jitter_frac, rng);
}

SimTime sample_sop_pick_time(const TimeModel& model, Rng& rng) {
  return jittered(model.t_sop_mean, model.jitter_frac, rng);
}

PhaseTimes split_sop_phases(const TimeModel& model, SimTime total) {
  const double mean_sum = model.t_approach_mean + model.t_grasp_mean + model.t_lift_mean;
  const auto part = [&](double mean) {
    return SimTime::from_micros(static_cast<std::int64_t>(
        std::llround(static_cast<double>(total.micros()) * mean / mean_sum)));
  };
  const SimTime approach = part(model.t_approach_mean);
  const SimTime grasp = part(model.t_grasp_mean);
  const SimTime lift = total - approach - grasp;  // remainder keeps the sum exact

  PhaseTimes phase;
  phase.t0 = SimTime::from_micros(0);
  phase.t1 = phase.t0 + approach;
  phase.t2 = phase.t1 + grasp;
  phase.t3 = phase.t2 + lift;
  return phase;
}

}  // namespace mogbench
