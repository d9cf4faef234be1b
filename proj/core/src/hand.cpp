#include "mogbench/hand.hpp"

#include <cmath>
#include <numbers>

#include "mogbench/error.hpp"

namespace mogbench {

const char* to_string(HandKind kind) {
  switch (kind) {
    case HandKind::parallel_gripper: return "parallel_gripper";
    case HandKind::trifinger: return "trifinger";
    case HandKind::soft_hand: return "soft_hand";
    case HandKind::human_hand: return "human_hand";
  }
  return "?";
}

HandKind hand_kind_from_string(const std::string& text) {
  if (text == "parallel_gripper") return HandKind::parallel_gripper;
  if (text == "trifinger") return HandKind::trifinger;
  if (text == "soft_hand") return HandKind::soft_hand;
  if (text == "human_hand") return HandKind::human_hand;
  fail(ErrorCode::validation_error, "unknown hand kind '" + text + "'");
}

double Footprint::area() const {
  if (kind == Kind::disc) return std::numbers::pi * radius * radius;
  return width * depth;
}

double Footprint::min_extent() const {
  if (kind == Kind::disc) return 2 * radius;
  return std::min(width, depth);
}

bool CaptureRegion::contains(Vec2 point) const {
  const Vec2 rel = point - pose.position;
  if (footprint.kind == Footprint::Kind::disc) return norm(rel) <= footprint.radius;
  // Inverse-rotate into the footprint frame.
  const double c = std::cos(pose.yaw);
  const double s = std::sin(pose.yaw);
  const double u = c * rel.x + s * rel.y;
  const double v = -s * rel.x + c * rel.y;
  return std::abs(u) <= footprint.width / 2 && std::abs(v) <= footprint.depth / 2;
}

HandModel builtin_hand(HandKind kind) {
  HandModel hand;
  hand.kind = kind;
  switch (kind) {
    case HandKind::parallel_gripper:
      // 85 mm stroke; 25 mm finger-pad depth.
      hand.footprint = Footprint::rectangle(85, 25);
      hand.slip_prob = 0.05;
      break;
    case HandKind::trifinger:
      // Disc calibrated so capacity(cube_m_s) == 4.
      hand.footprint = Footprint::disc(55);
      hand.max_layers = 2;
      hand.slip_prob = 0.05;
      break;
    case HandKind::soft_hand:
      hand.footprint = Footprint::rectangle(100, 90);
      hand.slip_prob = 0.05;
      break;
    case HandKind::human_hand:
      // Mean subject hand: 18 cm long, 9 cm wide.
      hand.footprint = Footprint::rectangle(180, 90);
      hand.max_layers = 2;
      hand.slip_prob = 0.02;
      break;
  }
  return hand;
}

CaptureRegion capture_region(const HandModel& hand, const GraspPose& pose) {
  return CaptureRegion{hand.footprint, pose};
}

int capacity(const HandModel& hand, const ObjectSpec& spec) {
  if (hand.capacity_override) return *hand.capacity_override;
  const double object_area = footprint_area(spec);
  if (object_area <= 0) fail(ErrorCode::validation_error, "object footprint area must be positive");
  const int fit = static_cast<int>(std::floor(kPackingEfficiency * hand.footprint.area() / object_area));
  return std::max(fit, 0);
}

}  // namespace mogbench
