#pragma once

#include <array>
#include <string>
#include <vector>

namespace mogbench {

enum class Shape { cube, sphere, cylinder, cuboid, cone, ellipsoid, irregular };
enum class SizeClass { s, m, l };
enum class Origin { simulated, real };

const char* to_string(Shape shape);
const char* to_string(SizeClass size_class);
const char* to_string(Origin origin);

/// One benchmark object. Dimension slots are shape-specific, millimeters:
///   cube       side            -  -
///   sphere     diameter        -  -
///   cylinder   diameter  height   -
///   cuboid     length    width    height
///   cone       diameter  height   -
///   ellipsoid  long axis short axis -
///   irregular  length    diameter -
struct ObjectSpec {
  Shape shape = Shape::cube;
  SizeClass size_class = SizeClass::s;
  Origin origin = Origin::simulated;
  std::array<double, 3> dims_mm{0, 0, 0};
  std::string label;
};

/// Resolves a canonical catalog label ("cube_m_s", "sphere_l_r", ...).
/// Throws catalog_error for unknown labels.
const ObjectSpec& catalog_lookup(const std::string& label);

/// All canonical labels, catalog order.
std::vector<std::string> catalog_labels();

/// Radius of the smallest circle containing the planar footprint of the
/// object resting upright, at any yaw. Used for overlap and pile-support
/// tests.
double bounding_radius(const ObjectSpec& spec);

/// Footprint area in mm^2; feeds the hand capacity model.
double footprint_area(const ObjectSpec& spec);

/// All dimensions strictly positive.
bool valid_dims(const ObjectSpec& spec);

}  // namespace mogbench
