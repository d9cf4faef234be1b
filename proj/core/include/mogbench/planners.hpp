#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "mogbench/hand.hpp"
#include "mogbench/scene.hpp"

namespace mogbench {

/// Fixed-size spatial cluster; centroid is the member-position mean.
struct Cluster {
  std::vector<int> member_ids;
  Vec2 centroid;
};

struct GroupingMove {
  int object_id = 0;
  Vec2 destination;
};

/// A planned grasp: optional grouping moves to execute first, then one grasp
/// at pose aiming for target_ids.
struct GraspPlan {
  GraspPose pose;
  std::vector<int> target_ids;
  std::vector<GroupingMove> grouping_moves;
  int expected_count = 0;
};

/// How a protocol round chooses its per-round target count.
struct CountPolicy {
  enum class Kind { greedy, conservative, fixed };

  Kind kind = Kind::greedy;
  int fixed_p = 1;

  static CountPolicy greedy() { return {Kind::greedy, 1}; }
  static CountPolicy conservative() { return {Kind::conservative, 1}; }
  static CountPolicy fixed(int p) { return {Kind::fixed, p}; }
};

/// Yaw resolution of the feasibility search (1 degree over a half turn;
/// the rectangle is symmetric under a half turn).
inline constexpr int kFeasibilityYawSamples = 180;

/// Grouping moves gather members inside this fraction of the smallest hand
/// footprint extent around their medoid.
inline constexpr double kGatherRadiusFraction = 0.4;

/// Partitions the scene into floor(n/k) clusters of exactly k members plus
/// at most one remainder cluster, via Lloyd iteration with capacity-bounded
/// greedy assignment (objects in ascending id order, ties to the lower
/// cluster index). Deterministic per seed; stops on a fixpoint or after 100
/// iterations.
std::vector<Cluster> constrained_kmeans(const Scene& scene, int k, std::uint64_t seed);

/// Sweeps yaw over the cluster centroid looking for a pose whose capture
/// region contains every member center and no outsider center. Disc
/// footprints need a single orientation.
std::optional<GraspPose> feasibility_check(const Cluster& cluster, const HandModel& hand,
                                           const Scene& scene);

/// Picks the k mutually-closest objects and plans relocations (the medoid
/// stays put) that gather them under the hand while preserving surface
/// non-overlap. The returned plan's pose already passes feasibility_check
/// on the post-move scene.
GraspPlan plan_grouping_moves(const Scene& scene, const HandModel& hand, int k,
                              std::uint64_t seed);

/// Grid search (grid_spacing mm, yaw_samples orientations) for the pose
/// whose candidate count is closest to p; ties prefer more candidates, then
/// the earlier grid pose.
GraspPlan plan_pile_grasp(const Scene& scene, const HandModel& hand, int p,
                          double grid_spacing = 10.0, int yaw_samples = 8);

/// Per-round target count: greedy fills the hand, conservative leaves one
/// slot, fixed(p) asks for p; all clamped to the remaining count.
int select_target_count(int remaining, const HandModel& hand, const ObjectSpec& spec,
                        const CountPolicy& policy);

/// Cluster, check feasibility cluster by cluster, fall back to grouping
/// moves when nothing qualifies. The surface-scene planner used by the
/// protocol runners.
GraspPlan plan_surface_grasp(const Scene& scene, const HandModel& hand, int p,
                             std::uint64_t seed);

/// Scene with the plan's grouping moves applied.
Scene apply_grouping_moves(const Scene& scene, const std::vector<GroupingMove>& moves);

}  // namespace mogbench
