// SPDX-License-Identifier: Apache-2.0
#pragma once

// False-positive removal: camera bounding-box masking through the
// LiDAR-to-camera calibration, and a polar occupancy grid (virtual scan)
// whose tall cells emit stixels that mask obstacle returns and the region
// they occlude.

#include <Eigen/Dense>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "curb/features.hpp"
#include "curb/types.hpp"

namespace curb::masking {

struct UltrasonicMount {
  double x = 0.0, y = 0.0, z = 0.0;
  double yaw_deg = 90.0;  // axis direction; 90 points along +x
};

struct CalibrationConfig {
  double fx = 1108.5, fy = 1108.5;
  double cx = 640.0, cy = 360.0;
  Eigen::Matrix4d extrinsic =  // LiDAR -> camera, homogeneous
      Eigen::Matrix4d::Identity();
  int image_width = 1280;
  int image_height = 720;
  std::array<UltrasonicMount, 4> ultrasonic_mounts{};

  void validate() const;
  static CalibrationConfig load(const std::string& path);
  void save(const std::string& path) const;

  // Rectified camera at the LiDAR origin looking along +y (vehicle forward),
  // 60 degree horizontal field of view; ultrasonic rig on the right side.
  static CalibrationConfig default_forward_camera();
};

struct BoundingBox2D {
  std::uint64_t frame_id = 0;
  std::string label;
  double score = 0.0;
  double x1 = 0.0, y1 = 0.0, x2 = 0.0, y2 = 0.0;

  bool contains(double u, double v) const {
    return u >= x1 && u <= x2 && v >= y1 && v <= y2;
  }
};

// Detection file: "frame_id,class,score,x1,y1,x2,y2" per line, header optional.
std::vector<BoundingBox2D> load_boxes(const std::string& path);
void save_boxes(const std::string& path, const std::vector<BoundingBox2D>& boxes);
std::map<std::uint64_t, std::vector<BoundingBox2D>> group_boxes_by_frame(
    const std::vector<BoundingBox2D>& boxes);

// Pinhole projection; nullopt when behind the camera or out of the image.
std::optional<std::pair<double, double>> project_to_image(
    const LidarPoint& p, const CalibrationConfig& cal);
std::optional<std::pair<double, double>> project_to_image(
    double x, double y, double z, const CalibrationConfig& cal);

struct MaskingConfig {
  double score_thres = 0.5;
  double az_bin_deg = 1.0;
  double range_bin_m = 0.25;
  double obstacle_height_thres_m = 0.3;
  double occlusion_margin_m = 0.2;

  void validate() const;
};

struct VScanCell {
  float min_z = 0.0f;
  float max_z = 0.0f;
  std::uint32_t count = 0;
};

struct VScanGrid {
  int az_bins = 0;
  int range_bins = 0;
  double az_bin_deg = 1.0;
  double range_bin_m = 0.25;
  std::vector<VScanCell> cells;  // az-major

  const VScanCell& at(int az, int range) const {
    return cells[static_cast<std::size_t>(az) * range_bins + range];
  }
  int az_index(double azimuth_deg) const;
  int range_index(double range_m) const;
};

struct Stixel {
  int az_bin = 0;
  double range_m = 0.0;  // near edge of the cell
  double height_m = 0.0;
};

struct VScanResult {
  VScanGrid grid;
  std::vector<Stixel> stixels;
};

VScanResult build_vscan(const PointFrame& frame, const MaskingConfig& cfg);

// Remove candidates whose projection lands inside a qualifying box.
features::CandidateSet mask_by_boxes(const features::CandidateSet& cands,
                                     const PointFrame& frame,
                                     const std::vector<BoundingBox2D>& boxes,
                                     const CalibrationConfig& cal,
                                     double score_thres);

// Remove candidates on a stixel cell or occluded behind one in its azimuth
// bin, expanded by the margin.
features::CandidateSet mask_by_stixels(const features::CandidateSet& cands,
                                       const PointFrame& frame,
                                       const std::vector<Stixel>& stixels,
                                       const MaskingConfig& cfg);

}  // namespace curb::masking
