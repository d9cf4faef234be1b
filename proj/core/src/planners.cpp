#include "mogbench/planners.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <set>

#include "mogbench/error.hpp"
#include "mogbench/grasp_sim.hpp"
#include "mogbench/rng.hpp"

namespace mogbench {

namespace {

Vec2 mean_position(const Scene& scene, const std::vector<int>& ids) {
  Vec2 sum;
  for (int id : ids) sum = sum + find_object(scene, id)->position;
  return (1.0 / static_cast<double>(ids.size())) * sum;
}

std::vector<const ObjectInstance*> objects_by_id(const Scene& scene) {
  std::vector<const ObjectInstance*> ordered;
  ordered.reserve(scene.objects.size());
  for (const ObjectInstance& object : scene.objects) ordered.push_back(&object);
  std::sort(ordered.begin(), ordered.end(),
            [](const ObjectInstance* a, const ObjectInstance* b) { return a->id < b->id; });
  return ordered;
}

}  // namespace

std::vector<Cluster> constrained_kmeans(const Scene& scene, int k, std::uint64_t seed) {
  if (k < 1) fail(ErrorCode::validation_error, "cluster size must be at least 1");
  const auto objects = objects_by_id(scene);
  const int n = static_cast<int>(objects.size());
  if (n < k)
    fail(ErrorCode::insufficient_objects,
         "scene has " + std::to_string(n) + " objects, need at least " + std::to_string(k));

  const int full_clusters = n / k;
  const int remainder = n % k;
  const int num_clusters = full_clusters + (remainder > 0 ? 1 : 0);

  // Per-cluster capacities; the remainder cluster, when present, is last.
  std::vector<int> cluster_capacity(num_clusters, k);
  if (remainder > 0) cluster_capacity.back() = remainder;

  // k-means++ style seeding over object positions.
  Rng rng(seed);
  std::vector<Vec2> centroids;
  centroids.push_back(objects[rng.uniform_int(n)]->position);
  while (static_cast<int>(centroids.size()) < num_clusters) {
    std::vector<double> weight(n);
    double total = 0;
    for (int i = 0; i < n; ++i) {
      double best = std::numeric_limits<double>::max();
      for (const Vec2& c : centroids) best = std::min(best, distance(objects[i]->position, c));
      weight[i] = best * best;
      total += weight[i];
    }
    if (total <= 0) {
      centroids.push_back(objects[rng.uniform_int(n)]->position);
      continue;
    }
    const double r = rng.uniform() * total;
    double cum = 0;
    int chosen = n - 1;
    for (int i = 0; i < n; ++i) {
      cum += weight[i];
      if (cum >= r) {
        chosen = i;
        break;
      }
    }
    centroids.push_back(objects[chosen]->position);
  }

  std::vector<int> assignment(n, -1);
  for (int iter = 0; iter < 100; ++iter) {
    // Greedy capacity-bounded assignment, objects in ascending id order.
    std::vector<int> fill(num_clusters, 0);
    std::vector<int> next(n, -1);
    for (int i = 0; i < n; ++i) {
      int best_cluster = -1;
      double best_dist = std::numeric_limits<double>::max();
      for (int c = 0; c < num_clusters; ++c) {
        if (fill[c] >= cluster_capacity[c]) continue;
        const double d = distance(objects[i]->position, centroids[c]);
        if (d < best_dist) {
          best_dist = d;
          best_cluster = c;
        }
      }
      next[i] = best_cluster;
      ++fill[best_cluster];
    }
    const bool stable = next == assignment;
    assignment = std::move(next);
    if (stable) break;

    for (int c = 0; c < num_clusters; ++c) {
      Vec2 sum;
      int count = 0;
      for (int i = 0; i < n; ++i) {
        if (assignment[i] == c) {
          sum = sum + objects[i]->position;
          ++count;
        }
      }
      if (count > 0) centroids[c] = (1.0 / count) * sum;
    }
  }

  std::vector<Cluster> clusters(num_clusters);
  for (int i = 0; i < n; ++i) clusters[assignment[i]].member_ids.push_back(objects[i]->id);
  for (Cluster& cluster : clusters) {
    std::sort(cluster.member_ids.begin(), cluster.member_ids.end());
    cluster.centroid = mean_position(scene, cluster.member_ids);
  }
  return clusters;
}

std::optional<GraspPose> feasibility_check(const Cluster& cluster, const HandModel& hand,
                                           const Scene& scene) {
  const std::set<int> members(cluster.member_ids.begin(), cluster.member_ids.end());
  const int yaw_count =
      hand.footprint.kind == Footprint::Kind::disc ? 1 : kFeasibilityYawSamples;

  for (int i = 0; i < yaw_count; ++i) {
    const GraspPose pose{cluster.centroid, i * std::numbers::pi / kFeasibilityYawSamples};
    const CaptureRegion region = capture_region(hand, pose);
    bool ok = true;
    for (const ObjectInstance& object : scene.objects) {
      const bool inside = region.contains(object.position);
      if (members.contains(object.id) ? !inside : inside) {
        ok = false;
        break;
      }
    }
    if (ok) return pose;
  }
  return std::nullopt;
}

namespace {

double pairwise_distance_sum(const std::vector<const ObjectInstance*>& objects,
                             const std::vector<int>& indices) {
  double sum = 0;
  for (std::size_t a = 0; a < indices.size(); ++a)
    for (std::size_t b = a + 1; b < indices.size(); ++b)
      sum += distance(objects[indices[a]]->position, objects[indices[b]]->position);
  return sum;
}

/// Indices (into objects) of the k objects with minimal pairwise distance
/// sum. Exhaustive up to 15 objects, greedy seed-and-grow beyond.
std::vector<int> tightest_group(const std::vector<const ObjectInstance*>& objects, int k) {
  const int n = static_cast<int>(objects.size());
  std::vector<int> best;
  double best_score = std::numeric_limits<double>::max();

  if (n <= 15) {
    std::vector<int> combo(k);
    // Enumerate k-combinations in lexicographic order.
    for (int i = 0; i < k; ++i) combo[i] = i;
    while (true) {
      const double score = pairwise_distance_sum(objects, combo);
      if (score < best_score) {
        best_score = score;
        best = combo;
      }
      int pos = k - 1;
      while (pos >= 0 && combo[pos] == n - k + pos) --pos;
      if (pos < 0) break;
      ++combo[pos];
      for (int i = pos + 1; i < k; ++i) combo[i] = combo[i - 1] + 1;
    }
    return best;
  }

  for (int start = 0; start < n; ++start) {
    std::vector<int> group{start};
    std::vector<bool> used(n, false);
    used[start] = true;
    while (static_cast<int>(group.size()) < k) {
      int pick = -1;
      double pick_cost = std::numeric_limits<double>::max();
      for (int i = 0; i < n; ++i) {
        if (used[i]) continue;
        double cost = 0;
        for (int g : group) cost += distance(objects[i]->position, objects[g]->position);
        if (cost < pick_cost) {
          pick_cost = cost;
          pick = i;
        }
      }
      group.push_back(pick);
      used[pick] = true;
    }
    const double score = pairwise_distance_sum(objects, group);
    if (score < best_score) {
      best_score = score;
      best = group;
    }
  }
  std::sort(best.begin(), best.end());
  return best;
}

}  // namespace

GraspPlan plan_grouping_moves(const Scene& scene, const HandModel& hand, int k,
                              std::uint64_t seed) {
  (void)seed;  // selection and placement are deterministic scans
  const auto objects = objects_by_id(scene);
  const int n = static_cast<int>(objects.size());
  if (n < k)
    fail(ErrorCode::insufficient_objects,
         "scene has " + std::to_string(n) + " objects, need at least " + std::to_string(k));

  const std::vector<int> group = tightest_group(objects, k);
  std::vector<int> member_ids;
  for (int index : group) member_ids.push_back(objects[index]->id);
  std::sort(member_ids.begin(), member_ids.end());
  const std::set<int> member_set(member_ids.begin(), member_ids.end());

  // Medoid: member minimizing total distance to the others; it is not moved.
  int medoid_id = member_ids.front();
  double medoid_cost = std::numeric_limits<double>::max();
  for (int id : member_ids) {
    double cost = 0;
    for (int other : member_ids)
      if (other != id)
        cost += distance(find_object(scene, id)->position, find_object(scene, other)->position);
    if (cost < medoid_cost) {
      medoid_cost = cost;
      medoid_id = id;
    }
  }
  const Vec2 medoid_pos = find_object(scene, medoid_id)->position;

  const double gather_radius = kGatherRadiusFraction * hand.footprint.min_extent();
  const double object_radius = bounding_radius(scene.spec);
  const double min_separation = 2 * object_radius;
  if (min_separation > gather_radius)
    fail(ErrorCode::planning_error,
         "objects too large to gather under this hand (separation " +
             std::to_string(min_separation) + " mm exceeds gather radius " +
             std::to_string(gather_radius) + " mm)");

  // Final member positions as they are planned; stayers keep their spot.
  std::vector<std::pair<int, Vec2>> final_positions{{medoid_id, medoid_pos}};
  std::vector<int> movers;
  for (int id : member_ids) {
    if (id == medoid_id) continue;
    const Vec2 pos = find_object(scene, id)->position;
    if (distance(pos, medoid_pos) <= gather_radius) {
      final_positions.emplace_back(id, pos);
    } else {
      movers.push_back(id);
    }
  }

  const auto destination_ok = [&](Vec2 dest) {
    if (!inside_bin(scene.bin, dest, object_radius)) return false;
    for (const auto& [id, pos] : final_positions) {
      (void)id;
      if (distance(dest, pos) < min_separation) return false;
    }
    for (const ObjectInstance& object : scene.objects) {
      if (member_set.contains(object.id)) continue;
      if (distance(dest, object.position) < min_separation) return false;
    }
    return true;
  };

  std::vector<GroupingMove> moves;
  for (int id : movers) {
    const Vec2 current = find_object(scene, id)->position;
    // Drag inward: prefer the direction the object already lies in, then
    // sweep the ring. Radii step outward from the clearance bound.
    const double base_angle = std::atan2(current.y - medoid_pos.y, current.x - medoid_pos.x);
    bool placed = false;
    for (int radius_step = 0; radius_step < 6 && !placed; ++radius_step) {
      const double radius =
          min_separation + (gather_radius - min_separation) * radius_step / 5.0;
      for (int angle_step = 0; angle_step < 36 && !placed; ++angle_step) {
        const double angle = base_angle + angle_step * (2 * std::numbers::pi / 36);
        const Vec2 dest = {medoid_pos.x + radius * std::cos(angle),
                           medoid_pos.y + radius * std::sin(angle)};
        if (destination_ok(dest)) {
          moves.push_back({id, dest});
          final_positions.emplace_back(id, dest);
          placed = true;
        }
      }
    }
    if (!placed)
      fail(ErrorCode::planning_error,
           "no collision-free grouping destination for object " + std::to_string(id));
  }

  const Scene grouped = apply_grouping_moves(scene, moves);
  Cluster cluster{member_ids, mean_position(grouped, member_ids)};
  const std::optional<GraspPose> pose = feasibility_check(cluster, hand, grouped);
  if (!pose)
    fail(ErrorCode::planning_error, "grouped cluster still fails the feasibility check");

  GraspPlan plan;
  plan.pose = *pose;
  plan.target_ids = member_ids;
  plan.grouping_moves = std::move(moves);
  plan.expected_count = k;
  return plan;
}

GraspPlan plan_pile_grasp(const Scene& scene, const HandModel& hand, int p, double grid_spacing,
                          int yaw_samples) {
  if (scene.objects.empty()) fail(ErrorCode::empty_scene, "cannot plan a grasp in an empty scene");
  if (p < 1) fail(ErrorCode::validation_error, "target count must be at least 1");

  const int nx = static_cast<int>(std::floor(scene.bin.width / grid_spacing)) + 1;
  const int ny = static_cast<int>(std::floor(scene.bin.height / grid_spacing)) + 1;
  const int yaw_count = hand.footprint.kind == Footprint::Kind::disc ? 1 : yaw_samples;

  GraspPose best_pose;
  int best_count = -1;
  int best_diff = std::numeric_limits<int>::max();

  for (int iy = 0; iy < ny; ++iy) {
    for (int ix = 0; ix < nx; ++ix) {
      for (int iyaw = 0; iyaw < yaw_count; ++iyaw) {
        const GraspPose pose{{ix * grid_spacing, iy * grid_spacing},
                             iyaw * std::numbers::pi / yaw_samples};
        const int count = static_cast<int>(grasp_candidates(scene, hand, pose).size());
        const int diff = std::abs(count - p);
        if (diff < best_diff || (diff == best_diff && count > best_count)) {
          best_diff = diff;
          best_count = count;
          best_pose = pose;
        }
      }
    }
  }

  GraspPlan plan;
  plan.pose = best_pose;
  plan.target_ids = grasp_candidates(scene, hand, best_pose);
  plan.expected_count = best_count;
  return plan;
}

int select_target_count(int remaining, const HandModel& hand, const ObjectSpec& spec,
                        const CountPolicy& policy) {
  if (remaining < 1) fail(ErrorCode::validation_error, "remaining count must be at least 1");
  const int cap = capacity(hand, spec);
  if (cap < 1)
    fail(ErrorCode::incapable_hand,
         "hand capacity is 0 for object '" + spec.label + "'; it cannot pick at all");
  switch (policy.kind) {
    case CountPolicy::Kind::greedy:
      return std::min(cap, remaining);
    case CountPolicy::Kind::conservative:
      return std::min(std::max(cap - 1, 1), remaining);
    case CountPolicy::Kind::fixed:
      if (policy.fixed_p < 1)
        fail(ErrorCode::validation_error, "fixed target count must be at least 1");
      return std::min(policy.fixed_p, remaining);
  }
  return 1;
}

GraspPlan plan_surface_grasp(const Scene& scene, const HandModel& hand, int p,
                             std::uint64_t seed) {
  const std::vector<Cluster> clusters = constrained_kmeans(scene, p, seed);
  for (const Cluster& cluster : clusters) {
    if (static_cast<int>(cluster.member_ids.size()) != p) continue;
    if (const std::optional<GraspPose> pose = feasibility_check(cluster, hand, scene)) {
      GraspPlan plan;
      plan.pose = *pose;
      plan.target_ids = cluster.member_ids;
      plan.expected_count = p;
      return plan;
    }
  }
  return plan_grouping_moves(scene, hand, p, seed);
}

Scene apply_grouping_moves(const Scene& scene, const std::vector<GroupingMove>& moves) {
  Scene result = scene;
  for (const GroupingMove& move : moves) {
    bool found = false;
    for (ObjectInstance& object : result.objects) {
      if (object.id == move.object_id) {
        object.position = move.destination;
        found = true;
        break;
      }
    }
    if (!found)
      fail(ErrorCode::id_error, "scene has no object with id " + std::to_string(move.object_id));
  }
  return result;
}

}  // namespace mogbench
