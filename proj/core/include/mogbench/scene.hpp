#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "mogbench/geometry.hpp"
#include "mogbench/object_catalog.hpp"

namespace mogbench {

enum class Scenario { surface, pile };

const char* to_string(Scenario scenario);
Scenario scenario_from_string(const std::string& text);

/// One placed object. layer 0 rests on the bin floor; higher layers rest on
/// supporters one layer below.
struct ObjectInstance {
  int id = 0;
  Vec2 position;
  double yaw = 0;  // radians
  int layer = 0;
};

/// Immutable once generated. Scenes hold identical objects (one spec), which
/// is the arrangement the protocols are defined over.
struct Scene {
  BinRect bin;
  Scenario scenario = Scenario::surface;
  ObjectSpec spec;
  std::vector<ObjectInstance> objects;
  std::uint64_t seed = 0;
};

/// Rejection-sampling attempt budget per object before a density error.
inline constexpr int kPlacementAttemptCap = 10000;

/// Single-layer scene of `count` non-overlapping instances. Pure function of
/// its inputs. Throws DensityError when the bin cannot take another object
/// within the attempt cap.
Scene generate_surface_scene(const ObjectSpec& spec, int count, const BinRect& bin,
                             std::uint64_t seed);

/// Layered scene built by sequential drop: an instance whose footprint
/// overlaps existing ones stacks one layer above its supporters. Same
/// determinism and failure contract as the surface generator.
Scene generate_pile_scene(const ObjectSpec& spec, int count, const BinRect& bin,
                          std::uint64_t seed);

/// Removes the listed instances. In pile scenes, instances left without
/// support drop to the highest supported layer, cascading to a fixpoint.
/// Unknown ids raise id_error.
Scene remove_objects(const Scene& scene, const std::vector<int>& ids);

const ObjectInstance* find_object(const Scene& scene, int id);

/// Versioned plain-text scene record. Lengths carry 3 decimals, yaw 6.
std::string serialize_scene(const Scene& scene);
Scene parse_scene(const std::string& text);

}  // namespace mogbench
