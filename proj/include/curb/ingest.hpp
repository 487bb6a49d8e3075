// SPDX-License-Identifier: Apache-2.0
#pragma once

// Frame ingestion: KITTI .bin and native CSF1 parsing, ring reconstruction
// against a RingModel, ring-count downsampling and the spherical transform.
// All functions are pure; parsers validate and report drop counts.

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "curb/types.hpp"

namespace curb::ingest {

// One KITTI record: x, y, z, reflectance as stored (no axis remap).
struct RawRecord {
  float x = 0.0f, y = 0.0f, z = 0.0f, reflectance = 0.0f;
};

struct ParseResult {
  std::vector<RawRecord> records;
  std::size_t dropped_nonfinite = 0;
};

// Parse a KITTI velodyne .bin blob: consecutive 16-byte records of four
// little-endian f32. Length not divisible by 16 raises IoError; records with
// non-finite coordinates are dropped and counted.
ParseResult parse_kitti_bin(const std::vector<std::uint8_t>& bytes);
ParseResult parse_kitti_file(const std::string& path);

// Serialize records in file order, bit-exact inverse of the parser.
std::vector<std::uint8_t> write_kitti_bin(const std::vector<RawRecord>& records);
void write_kitti_file(const std::string& path,
                      const std::vector<RawRecord>& records);

// Axis permutation applied between KITTI's native frame (x forward) and the
// vehicle frame used everywhere else (y forward, x right, z up).
// Default maps (x, y, z) -> (-y, x, z).
struct AxisRemap {
  // target axis = sign * source component; index: 0=x,1=y,2=z of the source.
  std::array<int, 3> source_index{1, 0, 2};
  std::array<float, 3> sign{-1.0f, 1.0f, 1.0f};

  void apply(float sx, float sy, float sz, float& ox, float& oy,
             float& oz) const;
  static AxisRemap identity();
};

struct RingAssignResult {
  PointFrame frame;
  std::size_t dropped_out_of_band = 0;
};

// Assign each record the ring whose beam elevation is nearest to the point's
// elevation, within the model tolerance; compute azimuth; order by
// (ring, azimuth). Points outside every tolerance band are dropped.
RingAssignResult assign_rings(const std::vector<RawRecord>& records,
                              const RingModel& model,
                              const AxisRemap& remap = AxisRemap::identity());

// Keep rings congruent to 0 modulo ring_count/target and renumber densely.
// target must divide the frame's ring count.
PointFrame downsample_rings(const PointFrame& frame, int target);

// y-forward convention: x = r cos(el) sin(az), y = r cos(el) cos(az),
// z = r sin(el); angles in degrees.
void spherical_to_cartesian(double r, double azimuth_deg, double elevation_deg,
                            double& x, double& y, double& z);
void cartesian_to_spherical(double x, double y, double z, double& r,
                            double& azimuth_deg, double& elevation_deg);

// CSF1 container: "CSF1" magic, u32 point count, u16 ring count,
// u64 timestamp_us, then 22-byte records (f32 x,y,z,intensity, u16 ring,
// f32 azimuth_deg), all little-endian.
std::vector<std::uint8_t> write_csf1(const PointFrame& frame);
void write_csf1_file(const std::string& path, const PointFrame& frame);
PointFrame read_csf1(const std::vector<std::uint8_t>& bytes,
                     std::uint64_t frame_id = 0);
PointFrame read_csf1_file(const std::string& path, std::uint64_t frame_id = 0);

}  // namespace curb::ingest
