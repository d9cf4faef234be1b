#pragma once

#include <cmath>

namespace mogbench {

/// Planar point or offset, millimeters, bin frame.
struct Vec2 {
  double x = 0;
  double y = 0;
};

inline Vec2 operator+(Vec2 a, Vec2 b) { return {a.x + b.x, a.y + b.y}; }
inline Vec2 operator-(Vec2 a, Vec2 b) { return {a.x - b.x, a.y - b.y}; }
inline Vec2 operator*(double s, Vec2 v) { return {s * v.x, s * v.y}; }

inline double norm(Vec2 v) { return std::hypot(v.x, v.y); }
inline double distance(Vec2 a, Vec2 b) { return norm(a - b); }

/// Axis-aligned bin footprint spanning [0, width] x [0, height], millimeters.
struct BinRect {
  double width = 0;
  double height = 0;
};

/// True when p lies inside the bin shrunk inward by margin on every side.
inline bool inside_bin(const BinRect& bin, Vec2 p, double margin = 0) {
  return p.x >= margin && p.x <= bin.width - margin && p.y >= margin &&
         p.y <= bin.height - margin;
}

}  // namespace mogbench
