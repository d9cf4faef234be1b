#include "mogbench/scene.hpp"

#include <algorithm>
#include <cinttypes>
#include <cstdio>
#include <numbers>
#include <set>
#include <sstream>

#include "mogbench/error.hpp"
#include "mogbench/rng.hpp"

namespace mogbench {

const char* to_string(Scenario scenario) {
  return scenario == Scenario::surface ? "surface" : "pile";
}

Scenario scenario_from_string(const std::string& text) {
  if (text == "surface") return Scenario::surface;
  if (text == "pile") return Scenario::pile;
  fail(ErrorCode::validation_error, "unknown scenario '" + text + "'");
}

namespace {

Vec2 sample_position(const BinRect& bin, double margin, Rng& rng) {
  return {rng.uniform(margin, bin.width - margin), rng.uniform(margin, bin.height - margin)};
}

bool bin_admits(const BinRect& bin, double radius) {
  return bin.width >= 2 * radius && bin.height >= 2 * radius;
}

}  // namespace

Scene generate_surface_scene(const ObjectSpec& spec, int count, const BinRect& bin,
                             std::uint64_t seed) {
  Scene scene{bin, Scenario::surface, spec, {}, seed};
  if (count == 0) return scene;

  const double radius = bounding_radius(spec);
  if (!bin_admits(bin, radius)) throw DensityError(0, count);

  Rng rng(seed);
  for (int id = 0; id < count; ++id) {
    bool placed = false;
    for (int attempt = 0; attempt < kPlacementAttemptCap && !placed; ++attempt) {
      const Vec2 pos = sample_position(bin, radius, rng);
      const double yaw = rng.uniform(0, 2 * std::numbers::pi);
      const bool overlaps = std::any_of(
          scene.objects.begin(), scene.objects.end(),
          [&](const ObjectInstance& other) { return distance(pos, other.position) < 2 * radius; });
      if (!overlaps) {
        scene.objects.push_back({id, pos, yaw, 0});
        placed = true;
      }
    }
    if (!placed) throw DensityError(id, count);
  }
  return scene;
}

Scene generate_pile_scene(const ObjectSpec& spec, int count, const BinRect& bin,
                          std::uint64_t seed) {
  Scene scene{bin, Scenario::pile, spec, {}, seed};
  if (count == 0) return scene;

  const double radius = bounding_radius(spec);
  if (!bin_admits(bin, radius)) throw DensityError(0, count);

  Rng rng(seed);
  for (int id = 0; id < count; ++id) {
    bool placed = false;
    for (int attempt = 0; attempt < kPlacementAttemptCap && !placed; ++attempt) {
      const Vec2 pos = sample_position(bin, radius, rng);
      const double yaw = rng.uniform(0, 2 * std::numbers::pi);

      // Sequential drop: footprint overlap forces the new instance one layer
      // above the tallest overlapped object, provided something at that level
      // actually carries it (center over the supporter's footprint circle).
      int top_overlapped = -1;
      for (const ObjectInstance& other : scene.objects) {
        if (distance(pos, other.position) < 2 * radius)
          top_overlapped = std::max(top_overlapped, other.layer);
      }
      if (top_overlapped < 0) {
        scene.objects.push_back({id, pos, yaw, 0});
        placed = true;
        continue;
      }
      const int layer = top_overlapped + 1;
      const bool supported = std::any_of(
          scene.objects.begin(), scene.objects.end(), [&](const ObjectInstance& other) {
            return other.layer == layer - 1 && distance(pos, other.position) <= radius;
          });
      if (supported) {
        scene.objects.push_back({id, pos, yaw, layer});
        placed = true;
      }
    }
    if (!placed) throw DensityError(id, count);
  }
  return scene;
}

const ObjectInstance* find_object(const Scene& scene, int id) {
  for (const ObjectInstance& object : scene.objects) {
    if (object.id == id) return &object;
  }
  return nullptr;
}

Scene remove_objects(const Scene& scene, const std::vector<int>& ids) {
  const std::set<int> removal(ids.begin(), ids.end());
  for (int id : removal) {
    if (find_object(scene, id) == nullptr)
      fail(ErrorCode::id_error, "scene has no object with id " + std::to_string(id));
  }

  Scene result = scene;
  std::erase_if(result.objects,
                [&](const ObjectInstance& object) { return removal.contains(object.id); });

  if (result.scenario != Scenario::pile) return result;

  // Re-settle: instances that lost every supporter drop to the highest layer
  // where support still exists, cascading until stable.
  const double radius = bounding_radius(result.spec);
  const auto supported_at = [&](const ObjectInstance& object, int layer) {
    if (layer == 0) return true;
    return std::any_of(result.objects.begin(), result.objects.end(),
                       [&](const ObjectInstance& other) {
                         return other.id != object.id && other.layer == layer - 1 &&
                                distance(object.position, other.position) <= radius;
                       });
  };

  bool changed = true;
  while (changed) {
    changed = false;
    for (ObjectInstance& object : result.objects) {
      if (object.layer == 0 || supported_at(object, object.layer)) continue;
      int layer = object.layer - 1;
      while (layer > 0 && !supported_at(object, layer)) --layer;
      object.layer = layer;
      changed = true;
    }
  }
  return result;
}

namespace {

std::string format_mm(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.3f", v);
  return buf;
}

std::string format_yaw(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.6f", v);
  return buf;
}

}  // namespace

std::string serialize_scene(const Scene& scene) {
  std::ostringstream out;
  out << "mogbench-scene/1\n";
  out << "object " << scene.spec.label << "\n";
  out << "scenario " << to_string(scene.scenario) << "\n";
  out << "bin " << format_mm(scene.bin.width) << " " << format_mm(scene.bin.height) << "\n";
  out << "seed " << scene.seed << "\n";
  out << "count " << scene.objects.size() << "\n";
  for (const ObjectInstance& object : scene.objects) {
    out << object.id << " " << format_mm(object.position.x) << " " << format_mm(object.position.y)
        << " " << format_yaw(object.yaw) << " " << object.layer << "\n";
  }
  return out.str();
}

Scene parse_scene(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line) || line != "mogbench-scene/1")
    fail(ErrorCode::ingest_error, "expected scene header 'mogbench-scene/1'");

  const auto expect_field = [&](const char* key) {
    if (!std::getline(in, line))
      fail(ErrorCode::ingest_error, std::string("truncated scene record, missing '") + key + "'");
    std::istringstream fields(line);
    std::string name;
    fields >> name;
    if (name != key)
      fail(ErrorCode::ingest_error, std::string("expected scene field '") + key + "', got '" + name + "'");
    std::string rest;
    std::getline(fields, rest);
    if (!rest.empty() && rest.front() == ' ') rest.erase(0, 1);
    return rest;
  };

  Scene scene;
  scene.spec = catalog_lookup(expect_field("object"));
  scene.scenario = scenario_from_string(expect_field("scenario"));
  {
    std::istringstream fields(expect_field("bin"));
    if (!(fields >> scene.bin.width >> scene.bin.height))
      fail(ErrorCode::ingest_error, "malformed bin dimensions");
  }
  scene.seed = std::strtoull(expect_field("seed").c_str(), nullptr, 10);
  const long count = std::strtol(expect_field("count").c_str(), nullptr, 10);

  for (long i = 0; i < count; ++i) {
    if (!std::getline(in, line))
      fail(ErrorCode::ingest_error, "scene record truncated at object " + std::to_string(i));
    std::istringstream fields(line);
    ObjectInstance object;
    if (!(fields >> object.id >> object.position.x >> object.position.y >> object.yaw >>
          object.layer))
      fail(ErrorCode::ingest_error, "malformed object line " + std::to_string(i));
    scene.objects.push_back(object);
  }
  return scene;
}

}  // namespace mogbench
