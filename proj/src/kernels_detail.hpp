// SPDX-License-Identifier: Apache-2.0
#pragma once

// Per-element kernel bodies shared by the scalar backend and the scalar
// tails of the SIMD backends, so remainders match the reference bit-for-bit.

#include <cmath>
#include <cstddef>

namespace curb::kernels::detail {

inline float successor_distance_at(const float* x, const float* y,
                                   const float* z, std::size_t i) {
  const float dx = x[i + 1] - x[i];
  const float dy = y[i + 1] - y[i];
  const float dz = z[i + 1] - z[i];
  return std::sqrt(dx * dx + dy * dy + dz * dz);
}

// Cosine of the window angle at interior index i (caller checks bounds).
inline float direction_cosine_at(const float* x, const float* y,
                                 const float* z, std::size_t i, int k) {
  float lx = 0.0f, ly = 0.0f, lz = 0.0f;
  float rx = 0.0f, ry = 0.0f, rz = 0.0f;
  for (int j = 1; j <= k; ++j) {
    lx += x[i - j] - x[i];
    ly += y[i - j] - y[i];
    lz += z[i - j] - z[i];
    rx += x[i + j] - x[i];
    ry += y[i + j] - y[i];
    rz += z[i + j] - z[i];
  }
  const float dot = lx * rx + ly * ry + lz * rz;
  const float na = std::sqrt(lx * lx + ly * ly + lz * lz);
  const float nb = std::sqrt(rx * rx + ry * ry + rz * rz);
  const float denom = na * nb;
  if (denom == 0.0f) return -1.0f;
  float c = dot / denom;
  if (c > 1.0f) c = 1.0f;
  if (c < -1.0f) c = -1.0f;
  return c;
}

inline float planar_range_at(const float* x, const float* y, std::size_t i) {
  return std::sqrt(x[i] * x[i] + y[i] * y[i]);
}

inline double cubic_eval_at(double yv, double c3, double c2, double c1,
                            double c0) {
  return ((c3 * yv + c2) * yv + c1) * yv + c0;
}

}  // namespace curb::kernels::detail
