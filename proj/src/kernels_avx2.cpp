// SPDX-License-Identifier: Apache-2.0

// AVX2 kernel variants. Compiled with -mavx2 in this translation unit only;
// callers reach them through the dispatch table after a CPUID check.
//
// Arithmetic mirrors the scalar reference exactly: explicit mul/add intrinsics
// (no FMA), the same association order, and IEEE div/sqrt, so outputs are
// bit-identical lane for lane. Remainders fall back to the shared per-element
// bodies in kernels_detail.hpp.

#include "curb/kernels.hpp"

#if defined(__x86_64__) || defined(_M_X64)

#include <immintrin.h>

#include "kernels_detail.hpp"

namespace curb::kernels::avx2 {

void elevation_flags(const float* z, std::size_t n, float thres,
                     std::uint8_t* out) {
  if (n == 0) return;
  out[0] = 0;
  std::size_t i = 1;
  const __m256 vthres = _mm256_set1_ps(thres);
  for (; i + 8 <= n; i += 8) {
    const __m256 cur = _mm256_loadu_ps(z + i);
    const __m256 prev = _mm256_loadu_ps(z + i - 1);
    const __m256 diff = _mm256_sub_ps(cur, prev);
    const int mask = _mm256_movemask_ps(_mm256_cmp_ps(diff, vthres, _CMP_GT_OQ));
    for (int b = 0; b < 8; ++b) {
      out[i + static_cast<std::size_t>(b)] = (mask >> b) & 1;
    }
  }
  for (; i < n; ++i) {
    out[i] = (z[i] - z[i - 1] > thres) ? 1 : 0;
  }
}

void successor_distances(const float* x, const float* y, const float* z,
                         std::size_t n, float* out) {
  if (n < 2) return;
  const std::size_t m = n - 1;
  std::size_t i = 0;
  for (; i + 8 <= m; i += 8) {
    const __m256 dx = _mm256_sub_ps(_mm256_loadu_ps(x + i + 1), _mm256_loadu_ps(x + i));
    const __m256 dy = _mm256_sub_ps(_mm256_loadu_ps(y + i + 1), _mm256_loadu_ps(y + i));
    const __m256 dz = _mm256_sub_ps(_mm256_loadu_ps(z + i + 1), _mm256_loadu_ps(z + i));
    const __m256 sum = _mm256_add_ps(
        _mm256_add_ps(_mm256_mul_ps(dx, dx), _mm256_mul_ps(dy, dy)),
        _mm256_mul_ps(dz, dz));
    _mm256_storeu_ps(out + i, _mm256_sqrt_ps(sum));
  }
  for (; i < m; ++i) {
    out[i] = detail::successor_distance_at(x, y, z, i);
  }
}

void direction_cosines(const float* x, const float* y, const float* z,
                       std::size_t n, int k, float* out) {
  const std::size_t uk = static_cast<std::size_t>(k);
  if (n < 2 * uk + 1) {
    for (std::size_t i = 0; i < n; ++i) out[i] = -1.0f;
    return;
  }
  for (std::size_t i = 0; i < uk; ++i) out[i] = -1.0f;
  for (std::size_t i = n - uk; i < n; ++i) out[i] = -1.0f;

  const std::size_t lo = uk;
  const std::size_t hi = n - uk;  // exclusive
  const __m256 one = _mm256_set1_ps(1.0f);
  const __m256 neg_one = _mm256_set1_ps(-1.0f);
  const __m256 zero = _mm256_setzero_ps();

  std::size_t i = lo;
  for (; i + 8 <= hi; i += 8) {
    const __m256 xi = _mm256_loadu_ps(x + i);
    const __m256 yi = _mm256_loadu_ps(y + i);
    const __m256 zi = _mm256_loadu_ps(z + i);
    __m256 lx = zero, ly = zero, lz = zero;
    __m256 rx = zero, ry = zero, rz = zero;
    for (int j = 1; j <= k; ++j) {
      const std::size_t uj = static_cast<std::size_t>(j);
      lx = _mm256_add_ps(lx, _mm256_sub_ps(_mm256_loadu_ps(x + i - uj), xi));
      ly = _mm256_add_ps(ly, _mm256_sub_ps(_mm256_loadu_ps(y + i - uj), yi));
      lz = _mm256_add_ps(lz, _mm256_sub_ps(_mm256_loadu_ps(z + i - uj), zi));
      rx = _mm256_add_ps(rx, _mm256_sub_ps(_mm256_loadu_ps(x + i + uj), xi));
      ry = _mm256_add_ps(ry, _mm256_sub_ps(_mm256_loadu_ps(y + i + uj), yi));
      rz = _mm256_add_ps(rz, _mm256_sub_ps(_mm256_loadu_ps(z + i + uj), zi));
    }
    const __m256 dot = _mm256_add_ps(
        _mm256_add_ps(_mm256_mul_ps(lx, rx), _mm256_mul_ps(ly, ry)),
        _mm256_mul_ps(lz, rz));
    const __m256 na = _mm256_sqrt_ps(_mm256_add_ps(
        _mm256_add_ps(_mm256_mul_ps(lx, lx), _mm256_mul_ps(ly, ly)),
        _mm256_mul_ps(lz, lz)));
    const __m256 nb = _mm256_sqrt_ps(_mm256_add_ps(
        _mm256_add_ps(_mm256_mul_ps(rx, rx), _mm256_mul_ps(ry, ry)),
        _mm256_mul_ps(rz, rz)));
    const __m256 denom = _mm256_mul_ps(na, nb);
    const __m256 degenerate = _mm256_cmp_ps(denom, zero, _CMP_EQ_OQ);
    __m256 c = _mm256_div_ps(dot, denom);
    c = _mm256_min_ps(c, one);
    c = _mm256_max_ps(c, neg_one);
    c = _mm256_blendv_ps(c, neg_one, degenerate);
    _mm256_storeu_ps(out + i, c);
  }
  for (; i < hi; ++i) {
    out[i] = detail::direction_cosine_at(x, y, z, i, k);
  }
}

void planar_ranges(const float* x, const float* y, std::size_t n, float* out) {
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    const __m256 xi = _mm256_loadu_ps(x + i);
    const __m256 yi = _mm256_loadu_ps(y + i);
    const __m256 sum =
        _mm256_add_ps(_mm256_mul_ps(xi, xi), _mm256_mul_ps(yi, yi));
    _mm256_storeu_ps(out + i, _mm256_sqrt_ps(sum));
  }
  for (; i < n; ++i) {
    out[i] = detail::planar_range_at(x, y, i);
  }
}

void cubic_eval(const double* ys, std::size_t n, double c3, double c2,
                double c1, double c0, double* out) {
  const __m256d v3 = _mm256_set1_pd(c3);
  const __m256d v2 = _mm256_set1_pd(c2);
  const __m256d v1 = _mm256_set1_pd(c1);
  const __m256d v0 = _mm256_set1_pd(c0);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d yv = _mm256_loadu_pd(ys + i);
    __m256d acc = _mm256_add_pd(_mm256_mul_pd(v3, yv), v2);
    acc = _mm256_add_pd(_mm256_mul_pd(acc, yv), v1);
    acc = _mm256_add_pd(_mm256_mul_pd(acc, yv), v0);
    _mm256_storeu_pd(out + i, acc);
  }
  for (; i < n; ++i) {
    out[i] = detail::cubic_eval_at(ys[i], c3, c2, c1, c0);
  }
}

}  // namespace curb::kernels::avx2

#endif  // x86-64
