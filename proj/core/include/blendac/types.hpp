#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <stdexcept>
#include <string>

namespace blendac {

using Vec2 = Eigen::Vector2d;
using Mat2 = Eigen::Matrix2d;
using Index2 = Eigen::Vector2i;

/// Lattice basis of the triangular lattice: columns are the primitive cells,
/// a1 = (1,0), a2 = (cos 60, sin 60). Used everywhere a homogeneous reference
/// configuration is needed.
inline Mat2 triangular_cell() {
  Mat2 a;
  a << 1.0, 0.5, 0.0, std::sqrt(3.0) / 2.0;
  return a;
}

/// Hexagonal shell number of a lattice index: sites with hex_layer(z) == n
/// form the n-th hexagonal ring around the origin (corner distance n).
inline int hex_layer(const Index2& z) {
  return std::max({std::abs(z[0]), std::abs(z[1]), std::abs(z[0] + z[1])});
}

/// Continuous analogue of hex_layer for arbitrary points: the scale factor at
/// which the lattice hexagon (corners at distance r along the six lattice
/// directions) first contains x. Agrees with hex_layer on lattice sites.
inline double hex_radius(const Vec2& x) {
  // The hexagon with corner distance 1 has inradius sqrt(3)/2; its edge
  // normals point along the six directions at 30 + 60k degrees.
  const double inr = std::sqrt(3.0) / 2.0;
  double r = 0.0;
  for (int k = 0; k < 6; ++k) {
    const double ang = (30.0 + 60.0 * k) * M_PI / 180.0;
    r = std::max(r, (x[0] * std::cos(ang) + x[1] * std::sin(ang)) / inr);
  }
  return r;
}

inline double triangle_area(const Vec2& a, const Vec2& b, const Vec2& c) {
  return 0.5 * ((b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0]));
}

struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace blendac
