// SPDX-License-Identifier: Apache-2.0

#include "curb/ingest.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <fstream>

namespace curb {

std::vector<std::size_t> PointFrame::ring_offsets() const {
  std::vector<std::size_t> offsets(static_cast<std::size_t>(ring_count) + 1, 0);
  for (const auto& p : points) {
    offsets[static_cast<std::size_t>(p.ring) + 1]++;
  }
  for (std::size_t r = 1; r < offsets.size(); ++r) offsets[r] += offsets[r - 1];
  return offsets;
}

bool PointFrame::ordering_valid() const {
  for (std::size_t i = 0; i < points.size(); ++i) {
    const auto& p = points[i];
    if (p.ring >= ring_count) return false;
    if (p.azimuth < 0.0f || p.azimuth >= 360.0f) return false;
    if (i > 0) {
      const auto& q = points[i - 1];
      if (p.ring < q.ring) return false;
      if (p.ring == q.ring && p.azimuth < q.azimuth) return false;
    }
  }
  return true;
}

void RingModel::validate() const {
  if (vertical_angles_deg.empty()) {
    throw ConfigError("ring model: empty vertical angle table");
  }
  for (std::size_t i = 1; i < vertical_angles_deg.size(); ++i) {
    if (vertical_angles_deg[i] <= vertical_angles_deg[i - 1]) {
      throw ConfigError("ring model: vertical angles must be strictly increasing");
    }
  }
  if (angle_tolerance_deg <= 0.0) {
    throw ConfigError("ring model: tolerance must be positive");
  }
}

RingModel RingModel::uniform(int rings, double min_deg, double max_deg,
                             double tolerance_deg) {
  RingModel m;
  m.angle_tolerance_deg = tolerance_deg;
  m.vertical_angles_deg.reserve(static_cast<std::size_t>(rings));
  for (int r = 0; r < rings; ++r) {
    const double t = rings > 1 ? static_cast<double>(r) / (rings - 1) : 0.0;
    m.vertical_angles_deg.push_back(min_deg + t * (max_deg - min_deg));
  }
  m.validate();
  return m;
}

RingModel RingModel::vlp16() { return uniform(16, -15.0, 15.0, 0.5); }

RingModel RingModel::hdl64_uniform() { return uniform(64, -24.9, 2.0, 0.25); }

std::optional<Side> side_from_name(const std::string& s) {
  if (s == "left") return Side::Left;
  if (s == "right") return Side::Right;
  return std::nullopt;
}

}  // namespace curb

namespace curb::ingest {

namespace {

std::vector<std::uint8_t> read_all_bytes(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open file: " + path);
  return std::vector<std::uint8_t>(std::istreambuf_iterator<char>(in),
                                   std::istreambuf_iterator<char>());
}

void write_all_bytes(const std::string& path,
                     const std::vector<std::uint8_t>& bytes) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open file for writing: " + path);
  out.write(reinterpret_cast<const char*>(bytes.data()),
            static_cast<std::streamsize>(bytes.size()));
  if (!out) throw IoError("short write: " + path);
}

template <typename T>
void put(std::vector<std::uint8_t>& buf, T v) {
  const std::size_t at = buf.size();
  buf.resize(at + sizeof(T));
  std::memcpy(buf.data() + at, &v, sizeof(T));
}

template <typename T>
T take(const std::vector<std::uint8_t>& buf, std::size_t& at) {
  T v;
  std::memcpy(&v, buf.data() + at, sizeof(T));
  at += sizeof(T);
  return v;
}

}  // namespace

ParseResult parse_kitti_bin(const std::vector<std::uint8_t>& bytes) {
  if (bytes.size() % 16 != 0) {
    throw IoError("malformed KITTI frame: length " +
                  std::to_string(bytes.size()) + " not divisible by 16");
  }
  ParseResult res;
  const std::size_t n = bytes.size() / 16;
  res.records.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    RawRecord r;
    std::memcpy(&r, bytes.data() + i * 16, 16);
    if (!std::isfinite(r.x) || !std::isfinite(r.y) || !std::isfinite(r.z) ||
        !std::isfinite(r.reflectance)) {
      res.dropped_nonfinite++;
      continue;
    }
    res.records.push_back(r);
  }
  return res;
}

ParseResult parse_kitti_file(const std::string& path) {
  return parse_kitti_bin(read_all_bytes(path));
}

std::vector<std::uint8_t> write_kitti_bin(
    const std::vector<RawRecord>& records) {
  std::vector<std::uint8_t> out(records.size() * 16);
  std::memcpy(out.data(), records.data(), out.size());
  return out;
}

void write_kitti_file(const std::string& path,
                      const std::vector<RawRecord>& records) {
  write_all_bytes(path, write_kitti_bin(records));
}

void AxisRemap::apply(float sx, float sy, float sz, float& ox, float& oy,
                      float& oz) const {
  const float src[3] = {sx, sy, sz};
  ox = sign[0] * src[source_index[0]];
  oy = sign[1] * src[source_index[1]];
  oz = sign[2] * src[source_index[2]];
}

AxisRemap AxisRemap::identity() {
  AxisRemap r;
  r.source_index = {0, 1, 2};
  r.sign = {1.0f, 1.0f, 1.0f};
  return r;
}

RingAssignResult assign_rings(const std::vector<RawRecord>& records,
                              const RingModel& model, const AxisRemap& remap) {
  model.validate();
  RingAssignResult res;
  res.frame.ring_count = static_cast<std::uint16_t>(model.ring_count());
  res.frame.points.reserve(records.size());

  const auto& angles = model.vertical_angles_deg;
  for (const auto& rec : records) {
    float x, y, z;
    remap.apply(rec.x, rec.y, rec.z, x, y, z);
    const double r = std::sqrt(static_cast<double>(x) * x +
                               static_cast<double>(y) * y +
                               static_cast<double>(z) * z);
    if (r <= 0.0) {
      res.dropped_out_of_band++;
      continue;
    }
    const double elevation = rad2deg(std::asin(static_cast<double>(z) / r));
    // nearest angle in a sorted table
    const auto it = std::lower_bound(angles.begin(), angles.end(), elevation);
    std::size_t best = 0;
    if (it == angles.begin()) {
      best = 0;
    } else if (it == angles.end()) {
      best = angles.size() - 1;
    } else {
      const std::size_t hi = static_cast<std::size_t>(it - angles.begin());
      best = (elevation - angles[hi - 1] <= angles[hi] - elevation) ? hi - 1 : hi;
    }
    if (std::abs(elevation - angles[best]) > model.angle_tolerance_deg) {
      res.dropped_out_of_band++;
      continue;
    }
    LidarPoint p;
    p.x = x;
    p.y = y;
    p.z = z;
    p.intensity = std::clamp(rec.reflectance, 0.0f, 1.0f);
    p.ring = static_cast<std::uint16_t>(best);
    p.azimuth = static_cast<float>(
        wrap_deg_360(rad2deg(std::atan2(static_cast<double>(x), y))));
    res.frame.points.push_back(p);
  }
  std::stable_sort(res.frame.points.begin(), res.frame.points.end(),
                   [](const LidarPoint& a, const LidarPoint& b) {
                     if (a.ring != b.ring) return a.ring < b.ring;
                     return a.azimuth < b.azimuth;
                   });
  return res;
}

PointFrame downsample_rings(const PointFrame& frame, int target) {
  if (target <= 0 || frame.ring_count % target != 0) {
    throw std::invalid_argument(
        "downsample target " + std::to_string(target) +
        " does not divide ring count " + std::to_string(frame.ring_count));
  }
  const int stride = frame.ring_count / target;
  PointFrame out;
  out.ring_count = static_cast<std::uint16_t>(target);
  out.frame_id = frame.frame_id;
  out.timestamp_us = frame.timestamp_us;
  out.points.reserve(frame.points.size() / static_cast<std::size_t>(stride));
  for (const auto& p : frame.points) {
    if (p.ring % stride != 0) continue;
    LidarPoint q = p;
    q.ring = static_cast<std::uint16_t>(p.ring / stride);
    out.points.push_back(q);
  }
  return out;
}

void spherical_to_cartesian(double r, double azimuth_deg, double elevation_deg,
                            double& x, double& y, double& z) {
  const double az = deg2rad(azimuth_deg);
  const double el = deg2rad(elevation_deg);
  x = r * std::cos(el) * std::sin(az);
  y = r * std::cos(el) * std::cos(az);
  z = r * std::sin(el);
}

void cartesian_to_spherical(double x, double y, double z, double& r,
                            double& azimuth_deg, double& elevation_deg) {
  r = std::sqrt(x * x + y * y + z * z);
  azimuth_deg = r > 0.0 ? wrap_deg_360(rad2deg(std::atan2(x, y))) : 0.0;
  elevation_deg = r > 0.0 ? rad2deg(std::asin(z / r)) : 0.0;
}

std::vector<std::uint8_t> write_csf1(const PointFrame& frame) {
  std::vector<std::uint8_t> buf;
  buf.reserve(18 + frame.points.size() * 22);
  buf.push_back('C');
  buf.push_back('S');
  buf.push_back('F');
  buf.push_back('1');
  put<std::uint32_t>(buf, static_cast<std::uint32_t>(frame.points.size()));
  put<std::uint16_t>(buf, frame.ring_count);
  put<std::uint64_t>(buf, frame.timestamp_us);
  for (const auto& p : frame.points) {
    put<float>(buf, p.x);
    put<float>(buf, p.y);
    put<float>(buf, p.z);
    put<float>(buf, p.intensity);
    put<std::uint16_t>(buf, p.ring);
    put<float>(buf, p.azimuth);
  }
  return buf;
}

void write_csf1_file(const std::string& path, const PointFrame& frame) {
  write_all_bytes(path, write_csf1(frame));
}

PointFrame read_csf1(const std::vector<std::uint8_t>& bytes,
                     std::uint64_t frame_id) {
  if (bytes.size() < 18 || std::memcmp(bytes.data(), "CSF1", 4) != 0) {
    throw IoError("not a CSF1 frame (bad magic or truncated header)");
  }
  std::size_t at = 4;
  const auto count = take<std::uint32_t>(bytes, at);
  PointFrame frame;
  frame.frame_id = frame_id;
  frame.ring_count = take<std::uint16_t>(bytes, at);
  frame.timestamp_us = take<std::uint64_t>(bytes, at);
  if (bytes.size() != 18 + static_cast<std::size_t>(count) * 22) {
    throw IoError("CSF1 frame: size mismatch for declared point count");
  }
  frame.points.resize(count);
  for (auto& p : frame.points) {
    p.x = take<float>(bytes, at);
    p.y = take<float>(bytes, at);
    p.z = take<float>(bytes, at);
    p.intensity = take<float>(bytes, at);
    p.ring = take<std::uint16_t>(bytes, at);
    p.azimuth = take<float>(bytes, at);
  }
  return frame;
}

PointFrame read_csf1_file(const std::string& path, std::uint64_t frame_id) {
  return read_csf1(read_all_bytes(path), frame_id);
}

}  // namespace curb::ingest
