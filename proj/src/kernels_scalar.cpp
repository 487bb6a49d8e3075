// SPDX-License-Identifier: Apache-2.0

// Scalar reference kernels. These define the exact arithmetic (operation
// order included) that the SIMD backends must reproduce bit-for-bit.

#include "curb/kernels.hpp"
#include "kernels_detail.hpp"

namespace curb::kernels::scalar {

void elevation_flags(const float* z, std::size_t n, float thres,
                     std::uint8_t* out) {
  if (n == 0) return;
  out[0] = 0;
  for (std::size_t i = 1; i < n; ++i) {
    out[i] = (z[i] - z[i - 1] > thres) ? 1 : 0;
  }
}

void successor_distances(const float* x, const float* y, const float* z,
                         std::size_t n, float* out) {
  for (std::size_t i = 0; i + 1 < n; ++i) {
    out[i] = detail::successor_distance_at(x, y, z, i);
  }
}

void direction_cosines(const float* x, const float* y, const float* z,
                       std::size_t n, int k, float* out) {
  const std::size_t uk = static_cast<std::size_t>(k);
  for (std::size_t i = 0; i < n; ++i) {
    if (i < uk || i + uk >= n) {
      out[i] = -1.0f;
    } else {
      out[i] = detail::direction_cosine_at(x, y, z, i, k);
    }
  }
}

void planar_ranges(const float* x, const float* y, std::size_t n, float* out) {
  for (std::size_t i = 0; i < n; ++i) {
    out[i] = detail::planar_range_at(x, y, i);
  }
}

void cubic_eval(const double* ys, std::size_t n, double c3, double c2,
                double c1, double c0, double* out) {
  for (std::size_t i = 0; i < n; ++i) {
    out[i] = detail::cubic_eval_at(ys[i], c3, c2, c1, c0);
  }
}

}  // namespace curb::kernels::scalar
