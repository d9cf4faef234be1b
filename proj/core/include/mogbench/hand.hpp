#pragma once

#include <optional>
#include <string>

#include "mogbench/geometry.hpp"
#include "mogbench/object_catalog.hpp"

namespace mogbench {

enum class HandKind { parallel_gripper, trifinger, soft_hand, human_hand };

const char* to_string(HandKind kind);
HandKind hand_kind_from_string(const std::string& text);

/// Planar capture footprint of a hand, millimeters.
struct Footprint {
  enum class Kind { rectangle, disc };

  Kind kind = Kind::rectangle;
  double width = 0;  // rectangle extents
  double depth = 0;
  double radius = 0;  // disc

  static Footprint rectangle(double width, double depth) {
    Footprint fp;
    fp.kind = Kind::rectangle;
    fp.width = width;
    fp.depth = depth;
    return fp;
  }

  static Footprint disc(double radius) {
    Footprint fp;
    fp.kind = Kind::disc;
    fp.radius = radius;
    return fp;
  }

  double area() const;
  /// Smallest extent across the footprint (rectangle: min side; disc:
  /// diameter). Sets the grouping gather radius.
  double min_extent() const;
};

struct HandModel {
  HandKind kind = HandKind::parallel_gripper;
  Footprint footprint;
  int max_layers = 1;    // pile digging depth, layers
  double slip_prob = 0;  // per retained object
  std::optional<int> capacity_override;
};

struct GraspPose {
  Vec2 position;
  double yaw = 0;  // radians
};

/// The hand footprint placed at a pose. Objects whose centers fall inside
/// are grasp candidates.
struct CaptureRegion {
  Footprint footprint;
  GraspPose pose;

  bool contains(Vec2 point) const;
};

/// Default parameterizations of the three robot archetypes and the human
/// hand (180x90 mm from the reported subject anthropometry). The trifinger
/// disc is sized so four medium simulated cubes fit its capacity model.
HandModel builtin_hand(HandKind kind);

CaptureRegion capture_region(const HandModel& hand, const GraspPose& pose);

/// Fraction of the capture area usable by packed objects.
inline constexpr double kPackingEfficiency = 0.6;

/// Objects the hand can retain in one grasp: the explicit override when set,
/// otherwise floor(packing efficiency * hand area / object footprint area).
int capacity(const HandModel& hand, const ObjectSpec& spec);

}  // namespace mogbench
