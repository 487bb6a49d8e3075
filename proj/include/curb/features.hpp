// SPDX-License-Identifier: Apache-2.0
#pragma once

// Per-point curb feature filters and the candidate search that combines
// them. Filters operate ring by ring on (ring, azimuth)-ordered frames and
// never let a window span a ring boundary.

#include <cstdint>
#include <vector>

#include "curb/types.hpp"

namespace curb::features {

struct FilterConfig {
  int k = 5;                        // direction window half-width, points
  double dir_angle_thres_deg = 160.0;
  double elev_thres_m = 0.04;
  int edge_window_n = 5;
  int edge_count_thres = 2;
  double cont_dist_thres_m = 0.5;
  // Algorithm text marks only the left point of a gap; the prose variant
  // marks both. Default follows the pseudocode.
  bool discontinuity_marks_both = false;
  // When set, a candidate additionally needs elevation evidence
  // (elevated or edge flag) at the searched point. Off by default: at
  // glancing incidence the per-step height change on a curb face is
  // millimetric and the evidence never appears (see search_candidates).
  bool require_elevation_evidence = false;

  void validate() const;
};

struct FeatureFlags {
  std::vector<std::uint8_t> direction_change;
  std::vector<std::uint8_t> elevated;
  std::vector<std::uint8_t> edge_start;
  std::vector<std::uint8_t> edge_end;
  std::vector<std::uint8_t> continuous;
  std::vector<float> theta_deg;  // window angle, 180 at boundaries/degenerate

  std::size_t size() const { return theta_deg.size(); }
};

struct CandidateSet {
  std::vector<std::size_t> left;   // point indices, x < 0
  std::vector<std::size_t> right;  // point indices, x > 0

  std::size_t total() const { return left.size() + right.size(); }
  bool empty() const { return left.empty() && right.empty(); }
};

// Scratch SoA view of a frame plus ring segmentation; build once per frame.
struct FrameSoA {
  std::vector<float> x, y, z, azimuth;
  std::vector<std::size_t> ring_offsets;  // ring_count + 1 entries

  static FrameSoA build(const PointFrame& frame);
};

// Algorithm outputs, individually exposed for testing and composed by
// extract(). All results are index-aligned with the frame.
std::vector<std::uint8_t> elevation_filter(const FrameSoA& soa,
                                           const FilterConfig& cfg);
void direction_change_filter(const FrameSoA& soa, const FilterConfig& cfg,
                             std::vector<std::uint8_t>& flags,
                             std::vector<float>& theta_deg);
void edge_filter(const std::vector<std::uint8_t>& elevated, const FrameSoA& soa,
                 const FilterConfig& cfg, std::vector<std::uint8_t>& edge_start,
                 std::vector<std::uint8_t>& edge_end);
std::vector<std::uint8_t> continuous_filter(const FrameSoA& soa,
                                            const FilterConfig& cfg);

FeatureFlags extract(const PointFrame& frame, const FilterConfig& cfg);

// Per ring and side, scan outward from the azimuth nearest +y and take the
// first point whose flags qualify; at most one candidate per ring per side.
CandidateSet search_candidates(const PointFrame& frame,
                               const FeatureFlags& flags,
                               const FilterConfig& cfg);

}  // namespace curb::features
