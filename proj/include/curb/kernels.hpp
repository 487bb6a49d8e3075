// SPDX-License-Identifier: Apache-2.0
#pragma once

// Data-parallel inner loops shared by the per-point filters, the occupancy
// grid and the evaluator. Each kernel has a scalar reference implementation
// and, on x86-64 with AVX2, a vectorized variant selected at runtime. The two
// variants perform identical arithmetic in identical order and are required
// to produce bit-identical output (equivalence-tested).

#include <cstddef>
#include <cstdint>

namespace curb::kernels {

enum class Backend { Scalar, Avx2 };

// Kernel function table. All pointers are always valid.
struct FnTable {
  // out[0] = 0; out[i] = (z[i] - z[i-1] > thres) for i in [1, n).
  void (*elevation_flags)(const float* z, std::size_t n, float thres,
                          std::uint8_t* out);
  // out[i] = |p[i+1] - p[i]| for i in [0, n-1); requires n >= 2.
  void (*successor_distances)(const float* x, const float* y, const float* z,
                              std::size_t n, float* out);
  // Cosine of the angle between the summed backward and forward window
  // vectors at each point; window half-width k. Points with fewer than k
  // neighbors on either side, and degenerate windows, get -1.
  void (*direction_cosines)(const float* x, const float* y, const float* z,
                            std::size_t n, int k, float* out);
  // out[i] = sqrt(x[i]^2 + y[i]^2).
  void (*planar_ranges)(const float* x, const float* y, std::size_t n,
                        float* out);
  // out[i] = ((c3*y + c2)*y + c1)*y + c0 (Horner).
  void (*cubic_eval)(const double* ys, std::size_t n, double c3, double c2,
                     double c1, double c0, double* out);
};

// Table for an explicit backend. Requesting Avx2 on a CPU without it throws.
const FnTable& table(Backend b);

// Active table: AVX2 when the CPU supports it, unless overridden by
// set_backend() or the CURB_KERNELS environment variable (scalar|avx2).
const FnTable& active();
Backend active_backend();
const char* backend_name(Backend b);
void set_backend(Backend b);
bool avx2_supported();

}  // namespace curb::kernels
