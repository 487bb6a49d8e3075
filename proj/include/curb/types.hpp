// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cmath>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace curb {

// Errors surfaced by file parsers and loaders.
class IoError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Errors surfaced by configuration validation.
class ConfigError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

constexpr double kPi = 3.14159265358979323846;
constexpr double deg2rad(double d) { return d * (kPi / 180.0); }
constexpr double rad2deg(double r) { return r * (180.0 / kPi); }

// Wrap an angle in degrees to [0, 360).
inline double wrap_deg_360(double a) {
  a = std::fmod(a, 360.0);
  if (a < 0.0) a += 360.0;
  if (a >= 360.0) a = 0.0;
  return a;
}

// Wrap an angle in degrees to (-180, 180].
inline double wrap_deg_180(double a) {
  a = std::fmod(a, 360.0);
  if (a > 180.0) a -= 360.0;
  if (a <= -180.0) a += 360.0;
  return a;
}

// One LiDAR return in the vehicle frame: y forward, x right, z up.
// azimuth is degrees in [0, 360), 0 at +y and increasing toward +x.
struct LidarPoint {
  float x = 0.0f;
  float y = 0.0f;
  float z = 0.0f;
  float intensity = 0.0f;
  std::uint16_t ring = 0;
  float azimuth = 0.0f;
};

// A full sweep, points ordered by (ring, azimuth), both non-decreasing.
struct PointFrame {
  std::vector<LidarPoint> points;
  std::uint16_t ring_count = 16;
  std::uint64_t frame_id = 0;
  std::uint64_t timestamp_us = 0;

  std::size_t size() const { return points.size(); }

  // Start offset of each ring segment, length ring_count + 1.
  std::vector<std::size_t> ring_offsets() const;

  // True when ordered by (ring, azimuth) and every ring < ring_count.
  bool ordering_valid() const;
};

// Per-ring beam elevation table used to reconstruct ring membership.
struct RingModel {
  std::vector<double> vertical_angles_deg;  // strictly increasing
  double angle_tolerance_deg = 0.5;

  std::size_t ring_count() const { return vertical_angles_deg.size(); }
  void validate() const;

  // VLP-16 style: -15..+15 degrees, 2 degree spacing.
  static RingModel vlp16();
  // Uniform 64-beam table spanning the HDL-64E elevation range.
  static RingModel hdl64_uniform();
  // Uniform table between two elevations inclusive.
  static RingModel uniform(int rings, double min_deg, double max_deg,
                           double tolerance_deg = 0.5);
};

enum class Side { Left, Right };

inline const char* side_name(Side s) { return s == Side::Left ? "left" : "right"; }
std::optional<Side> side_from_name(const std::string& s);

// Cubic lateral model X(Y) = c3*Y^3 + c2*Y^2 + c1*Y + c0 over [y_min, y_max].
struct CurbPolynomial {
  double c3 = 0.0, c2 = 0.0, c1 = 0.0, c0 = 0.0;
  double y_min = 0.0, y_max = 0.0;
  Side side = Side::Right;
  bool from_lidar = false;
  bool from_ultrasonic = false;
  bool tracked = false;
  double residual_rms = 0.0;

  double eval(double y) const { return ((c3 * y + c2) * y + c1) * y + c0; }
  bool covers(double y) const { return y >= y_min && y <= y_max; }
};

}  // namespace curb
