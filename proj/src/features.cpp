// SPDX-License-Identifier: Apache-2.0

#include "curb/features.hpp"

#include <cmath>

#include "curb/kernels.hpp"

namespace curb::features {

void FilterConfig::validate() const {
  if (k < 1) throw ConfigError("filter config: k must be >= 1");
  if (edge_window_n < edge_count_thres || edge_count_thres < 1) {
    throw ConfigError("filter config: need edge_window_n >= edge_count_thres >= 1");
  }
  if (dir_angle_thres_deg <= 0.0 || elev_thres_m <= 0.0 ||
      cont_dist_thres_m <= 0.0) {
    throw ConfigError("filter config: thresholds must be positive");
  }
}

FrameSoA FrameSoA::build(const PointFrame& frame) {
  FrameSoA soa;
  const std::size_t n = frame.points.size();
  soa.x.resize(n);
  soa.y.resize(n);
  soa.z.resize(n);
  soa.azimuth.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto& p = frame.points[i];
    soa.x[i] = p.x;
    soa.y[i] = p.y;
    soa.z[i] = p.z;
    soa.azimuth[i] = p.azimuth;
  }
  soa.ring_offsets = frame.ring_offsets();
  return soa;
}

std::vector<std::uint8_t> elevation_filter(const FrameSoA& soa,
                                           const FilterConfig& cfg) {
  const auto& fn = kernels::active();
  std::vector<std::uint8_t> out(soa.x.size(), 0);
  for (std::size_t r = 0; r + 1 < soa.ring_offsets.size(); ++r) {
    const std::size_t o = soa.ring_offsets[r];
    const std::size_t len = soa.ring_offsets[r + 1] - o;
    if (len == 0) continue;
    fn.elevation_flags(soa.z.data() + o, len,
                       static_cast<float>(cfg.elev_thres_m), out.data() + o);
  }
  return out;
}

void direction_change_filter(const FrameSoA& soa, const FilterConfig& cfg,
                             std::vector<std::uint8_t>& flags,
                             std::vector<float>& theta_deg) {
  const auto& fn = kernels::active();
  const std::size_t n = soa.x.size();
  flags.assign(n, 0);
  theta_deg.assign(n, 180.0f);
  std::vector<float> cosines(n, -1.0f);
  for (std::size_t r = 0; r + 1 < soa.ring_offsets.size(); ++r) {
    const std::size_t o = soa.ring_offsets[r];
    const std::size_t len = soa.ring_offsets[r + 1] - o;
    if (len == 0) continue;
    fn.direction_cosines(soa.x.data() + o, soa.y.data() + o, soa.z.data() + o,
                         len, cfg.k, cosines.data() + o);
    for (std::size_t i = o; i < o + len; ++i) {
      theta_deg[i] = rad2deg(std::acos(cosines[i]));
    }
    // Flag: angle below threshold and a local minimum within the ring.
    // Ties break to the leftmost point of a plateau.
    const float thres = static_cast<float>(cfg.dir_angle_thres_deg);
    for (std::size_t i = o + 1; i + 1 < o + len; ++i) {
      if (theta_deg[i] < thres && theta_deg[i] < theta_deg[i - 1] &&
          theta_deg[i] <= theta_deg[i + 1]) {
        flags[i] = 1;
      }
    }
  }
}

void edge_filter(const std::vector<std::uint8_t>& elevated, const FrameSoA& soa,
                 const FilterConfig& cfg, std::vector<std::uint8_t>& edge_start,
                 std::vector<std::uint8_t>& edge_end) {
  const std::size_t n = elevated.size();
  edge_start.assign(n, 0);
  edge_end.assign(n, 0);
  const std::size_t w = static_cast<std::size_t>(cfg.edge_window_n);
  std::vector<std::uint32_t> prefix;
  for (std::size_t r = 0; r + 1 < soa.ring_offsets.size(); ++r) {
    const std::size_t o = soa.ring_offsets[r];
    const std::size_t len = soa.ring_offsets[r + 1] - o;
    if (len == 0) continue;
    prefix.assign(len + 1, 0);
    for (std::size_t i = 0; i < len; ++i) {
      prefix[i + 1] = prefix[i] + (elevated[o + i] ? 1u : 0u);
    }
    for (std::size_t i = 0; i < len; ++i) {
      const std::size_t lo = i >= w ? i - w : 0;
      const std::size_t hi = std::min(len, i + 1 + w);
      const int cnt_left = static_cast<int>(prefix[i] - prefix[lo]);
      const int cnt_right = static_cast<int>(prefix[hi] - prefix[i + 1]);
      if (cnt_left < cfg.edge_count_thres && cnt_right > cfg.edge_count_thres) {
        edge_start[o + i] = 1;
      }
      if (cnt_left > cfg.edge_count_thres && cnt_right < cfg.edge_count_thres) {
        edge_end[o + i] = 1;
      }
    }
  }
}

std::vector<std::uint8_t> continuous_filter(const FrameSoA& soa,
                                            const FilterConfig& cfg) {
  const auto& fn = kernels::active();
  const std::size_t n = soa.x.size();
  std::vector<std::uint8_t> out(n, 0);
  std::vector<float> dist;
  const float thres = static_cast<float>(cfg.cont_dist_thres_m);
  for (std::size_t r = 0; r + 1 < soa.ring_offsets.size(); ++r) {
    const std::size_t o = soa.ring_offsets[r];
    const std::size_t len = soa.ring_offsets[r + 1] - o;
    if (len == 0) continue;
    if (len == 1) {
      out[o] = 0;
      continue;
    }
    dist.resize(len - 1);
    fn.successor_distances(soa.x.data() + o, soa.y.data() + o,
                           soa.z.data() + o, len, dist.data());
    for (std::size_t i = 0; i + 1 < len; ++i) {
      out[o + i] = dist[i] < thres ? 1 : 0;
    }
    out[o + len - 1] = out[o + len - 2];  // last point inherits
    if (cfg.discontinuity_marks_both) {
      // prose variant: a gap marks the point on each side of it
      for (std::size_t i = 0; i + 1 < len; ++i) {
        if (!(dist[i] < thres)) out[o + i + 1] = 0;
      }
    }
  }
  return out;
}

FeatureFlags extract(const PointFrame& frame, const FilterConfig& cfg) {
  cfg.validate();
  const FrameSoA soa = FrameSoA::build(frame);
  FeatureFlags f;
  f.elevated = elevation_filter(soa, cfg);
  direction_change_filter(soa, cfg, f.direction_change, f.theta_deg);
  edge_filter(f.elevated, soa, cfg, f.edge_start, f.edge_end);
  f.continuous = continuous_filter(soa, cfg);
  return f;
}

namespace {

bool qualifies(const FeatureFlags& f, std::size_t i, const FilterConfig& cfg) {
  if (!f.direction_change[i] || !f.continuous[i]) return false;
  if (cfg.require_elevation_evidence) {
    return f.elevated[i] || f.edge_start[i] || f.edge_end[i];
  }
  return true;
}

}  // namespace

CandidateSet search_candidates(const PointFrame& frame,
                               const FeatureFlags& flags,
                               const FilterConfig& cfg) {
  CandidateSet out;
  const auto offsets = frame.ring_offsets();
  for (std::uint16_t r = 0; r < frame.ring_count; ++r) {
    const std::size_t o = offsets[r];
    const std::size_t end = offsets[static_cast<std::size_t>(r) + 1];
    // Right side: azimuth ascending from the forward axis into (0, 180).
    for (std::size_t i = o; i < end; ++i) {
      if (frame.points[i].azimuth >= 180.0f) break;
      if (frame.points[i].x > 0.0f && qualifies(flags, i, cfg)) {
        out.right.push_back(i);
        break;
      }
    }
    // Left side: azimuth descending from 360 toward 180.
    for (std::size_t i = end; i > o;) {
      --i;
      if (frame.points[i].azimuth <= 180.0f) break;
      if (frame.points[i].x < 0.0f && qualifies(flags, i, cfg)) {
        out.left.push_back(i);
        break;
      }
    }
  }
  return out;
}

}  // namespace curb::features
