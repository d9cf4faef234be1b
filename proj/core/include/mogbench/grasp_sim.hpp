#pragma once

#include <vector>

#include "mogbench/hand.hpp"
#include "mogbench/rng.hpp"
#include "mogbench/scene.hpp"
#include "mogbench/sim_time.hpp"

namespace mogbench {

/// Result of one grasp attempt. retained is always a subset of candidates;
/// q is the count the protocols record.
struct GraspOutcome {
  std::vector<int> candidates;
  std::vector<int> retained;

  int q() const { return static_cast<int>(retained.size()); }
};

/// Mean phase durations (seconds) plus multiplicative jitter. Every sampled
/// duration is mean * (1 + u), u uniform in [-jitter_frac, +jitter_frac].
struct TimeModel {
  double t_approach_mean = 2.0;
  double t_grasp_mean = 3.0;
  double t_lift_mean = 1.0;
  double t_transfer_mean = 4.0;  // includes the return to the start position
  double t_sop_mean = 6.0;       // single-object pick, whole round
  double jitter_frac = 0.1;
  double grouping_move_cost = 1.5;  // seconds per grouping move, added to t_g
};

/// Mandated settling pause after lift. Logged per trial but excluded from
/// t_OPO, which sums only approach, grasp, and lift.
inline constexpr double kSettleWaitSeconds = 3.0;

/// Timestamps of one picking round on the virtual clock. t0 is always zero.
struct PhaseTimes {
  SimTime t0, t1, t2, t3;

  SimTime approach() const { return t1 - t0; }
  SimTime grasp() const { return t2 - t1; }
  SimTime lift() const { return t3 - t2; }
  SimTime opo_total() const { return approach() + grasp() + lift(); }
};

/// Objects whose centers lie in the capture region and within the hand's
/// digging depth of the top layer under the region. Deterministic; this is
/// the candidate rule shared by the simulator and the pile planner.
std::vector<int> grasp_candidates(const Scene& scene, const HandModel& hand,
                                  const GraspPose& pose);

/// One grasp attempt. Candidates within capacity are all retained; an
/// overloaded hand keeps a uniformly random subset sized capacity-1,
/// capacity, or capacity+1 (clamped to the candidate count). Each retained
/// object then slips independently with the hand's slip probability.
GraspOutcome simulate_grasp(const Scene& scene, const HandModel& hand, const GraspPose& pose,
                            Rng& rng);

/// Samples approach/grasp/lift durations; grouping moves inflate the grasp
/// phase by grouping_move_cost each.
PhaseTimes sample_phase_times(const TimeModel& model, int grouping_moves, Rng& rng);

SimTime sample_transfer_time(const TimeModel& model, Rng& rng);

/// Whole-round pick duration of a single-object-picking round.
SimTime sample_sop_pick_time(const TimeModel& model, Rng& rng);

/// Spreads a SOP pick duration over approach/grasp/lift proportionally to
/// the model's phase means, exactly preserving the total.
PhaseTimes split_sop_phases(const TimeModel& model, SimTime total);

}  // namespace mogbench
