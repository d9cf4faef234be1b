#include "mogbench/object_catalog.hpp"

#include <cmath>
#include <numbers>

#include "mogbench/error.hpp"

namespace mogbench {

const char* to_string(Shape shape) {
  switch (shape) {
    case Shape::cube: return "cube";
    case Shape::sphere: return "sphere";
    case Shape::cylinder: return "cylinder";
    case Shape::cuboid: return "cuboid";
    case Shape::cone: return "cone";
    case Shape::ellipsoid: return "ellipsoid";
    case Shape::irregular: return "irregular";
  }
  return "?";
}

const char* to_string(SizeClass size_class) {
  switch (size_class) {
    case SizeClass::s: return "s";
    case SizeClass::m: return "m";
    case SizeClass::l: return "l";
  }
  return "?";
}

const char* to_string(Origin origin) {
  return origin == Origin::simulated ? "simulated" : "real";
}

namespace {

ObjectSpec make(Shape shape, SizeClass size_class, Origin origin, double a, double b, double c,
                const char* label) {
  ObjectSpec spec;
  spec.shape = shape;
  spec.size_class = size_class;
  spec.origin = origin;
  spec.dims_mm = {a, b, c};
  spec.label = label;
  return spec;
}

// The 31 benchmark objects: six basic shapes in three simulated sizes plus
// two real sizes each, and the single irregular object.
const std::vector<ObjectSpec>& catalog() {
  static const std::vector<ObjectSpec> entries = {
      make(Shape::cube, SizeClass::s, Origin::simulated, 30, 0, 0, "cube_s_s"),
      make(Shape::cube, SizeClass::m, Origin::simulated, 35, 0, 0, "cube_m_s"),
      make(Shape::cube, SizeClass::l, Origin::simulated, 40, 0, 0, "cube_l_s"),
      make(Shape::cube, SizeClass::l, Origin::real, 55, 0, 0, "cube_l_r"),
      make(Shape::cube, SizeClass::s, Origin::real, 25, 0, 0, "cube_s_r"),

      make(Shape::sphere, SizeClass::s, Origin::simulated, 30, 0, 0, "sphere_s_s"),
      make(Shape::sphere, SizeClass::m, Origin::simulated, 35, 0, 0, "sphere_m_s"),
      make(Shape::sphere, SizeClass::l, Origin::simulated, 40, 0, 0, "sphere_l_s"),
      make(Shape::sphere, SizeClass::l, Origin::real, 52, 0, 0, "sphere_l_r"),
      make(Shape::sphere, SizeClass::s, Origin::real, 40, 0, 0, "sphere_s_r"),

      make(Shape::cylinder, SizeClass::s, Origin::simulated, 30, 30, 0, "cylin_s_s"),
      make(Shape::cylinder, SizeClass::m, Origin::simulated, 35, 35, 0, "cylin_m_s"),
      make(Shape::cylinder, SizeClass::l, Origin::simulated, 40, 40, 0, "cylin_l_s"),
      make(Shape::cylinder, SizeClass::l, Origin::real, 26, 63, 0, "cylin_l_r"),
      make(Shape::cylinder, SizeClass::s, Origin::real, 36, 30, 0, "cylin_s_r"),

      make(Shape::cuboid, SizeClass::s, Origin::simulated, 30, 10, 30, "cuboid_s_s"),
      make(Shape::cuboid, SizeClass::m, Origin::simulated, 40, 20, 40, "cuboid_m_s"),
      make(Shape::cuboid, SizeClass::l, Origin::simulated, 50, 30, 50, "cuboid_l_s"),
      make(Shape::cuboid, SizeClass::l, Origin::real, 107, 37, 29, "cuboid_l_r"),
      make(Shape::cuboid, SizeClass::s, Origin::real, 71, 16, 44, "cuboid_s_r"),

      make(Shape::cone, SizeClass::s, Origin::simulated, 10, 30, 0, "cone_s_s"),
      make(Shape::cone, SizeClass::m, Origin::simulated, 15, 35, 0, "cone_m_s"),
      make(Shape::cone, SizeClass::l, Origin::simulated, 20, 40, 0, "cone_l_s"),
      make(Shape::cone, SizeClass::l, Origin::real, 8, 17, 0, "cone_l_r"),
      make(Shape::cone, SizeClass::s, Origin::real, 40, 56, 0, "cone_s_r"),

      make(Shape::ellipsoid, SizeClass::s, Origin::simulated, 30, 20, 0, "ellip_s_s"),
      make(Shape::ellipsoid, SizeClass::m, Origin::simulated, 35, 25, 0, "ellip_m_s"),
      make(Shape::ellipsoid, SizeClass::l, Origin::simulated, 40, 30, 0, "ellip_l_s"),
      make(Shape::ellipsoid, SizeClass::l, Origin::real, 60, 45, 0, "ellip_l_r"),
      make(Shape::ellipsoid, SizeClass::s, Origin::real, 33, 21, 0, "ellip_s_r"),

      make(Shape::irregular, SizeClass::s, Origin::simulated, 40, 16, 0, "irreg"),
  };
  return entries;
}

}  // namespace

const ObjectSpec& catalog_lookup(const std::string& label) {
  for (const ObjectSpec& spec : catalog()) {
    if (spec.label == label) return spec;
  }
  fail(ErrorCode::catalog_error, "unknown object label '" + label + "'");
}

std::vector<std::string> catalog_labels() {
  std::vector<std::string> labels;
  labels.reserve(catalog().size());
  for (const ObjectSpec& spec : catalog()) labels.push_back(spec.label);
  return labels;
}

double bounding_radius(const ObjectSpec& spec) {
  const auto& d = spec.dims_mm;
  switch (spec.shape) {
    case Shape::cube:
      // Half the planar diagonal of the square footprint.
      return d[0] * std::numbers::sqrt2 / 2.0;
    case Shape::sphere:
    case Shape::cylinder:
    case Shape::cone:
      return d[0] / 2.0;
    case Shape::cuboid:
      return std::hypot(d[0], d[1]) / 2.0;
    case Shape::ellipsoid:
      // Resting ellipse; the long semi-axis dominates at every yaw.
      return d[0] / 2.0;
    case Shape::irregular:
      // L x D cuboid surrogate; the catalog gives no mesh for this object.
      return std::hypot(d[0], d[1]) / 2.0;
  }
  return 0;
}

double footprint_area(const ObjectSpec& spec) {
  const auto& d = spec.dims_mm;
  switch (spec.shape) {
    case Shape::cube:
      return d[0] * d[0];
    case Shape::sphere:
    case Shape::cylinder:
    case Shape::cone: {
      const double r = d[0] / 2.0;
      return std::numbers::pi * r * r;
    }
    case Shape::cuboid:
      return d[0] * d[1];
    case Shape::ellipsoid:
      return std::numbers::pi * (d[0] / 2.0) * (d[1] / 2.0);
    case Shape::irregular:
      return d[0] * d[1];
  }
  return 0;
}

bool valid_dims(const ObjectSpec& spec) {
  const auto& d = spec.dims_mm;
  switch (spec.shape) {
    case Shape::cube:
    case Shape::sphere:
      return d[0] > 0;
    case Shape::cylinder:
    case Shape::cone:
    case Shape::ellipsoid:
    case Shape::irregular:
      return d[0] > 0 && d[1] > 0;
    case Shape::cuboid:
      return d[0] > 0 && d[1] > 0 && d[2] > 0;
  }
  return false;
}

}  // namespace mogbench
