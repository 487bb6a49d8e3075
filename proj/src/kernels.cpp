// SPDX-License-Identifier: Apache-2.0

// Backend selection for the data-parallel kernels. Default is the best
// variant the CPU supports; CURB_KERNELS=scalar|avx2 or set_backend()
// overrides (the tests use both paths).

#include "curb/kernels.hpp"

#include <cstdlib>
#include <cstring>
#include <stdexcept>

namespace curb::kernels {

namespace scalar {
void elevation_flags(const float*, std::size_t, float, std::uint8_t*);
void successor_distances(const float*, const float*, const float*, std::size_t,
                         float*);
void direction_cosines(const float*, const float*, const float*, std::size_t,
                       int, float*);
void planar_ranges(const float*, const float*, std::size_t, float*);
void cubic_eval(const double*, std::size_t, double, double, double, double,
                double*);
}  // namespace scalar

#if defined(__x86_64__) || defined(_M_X64)
namespace avx2 {
void elevation_flags(const float*, std::size_t, float, std::uint8_t*);
void successor_distances(const float*, const float*, const float*, std::size_t,
                         float*);
void direction_cosines(const float*, const float*, const float*, std::size_t,
                       int, float*);
void planar_ranges(const float*, const float*, std::size_t, float*);
void cubic_eval(const double*, std::size_t, double, double, double, double,
                double*);
}  // namespace avx2
#endif

namespace {

constexpr FnTable kScalarTable{
    &scalar::elevation_flags, &scalar::successor_distances,
    &scalar::direction_cosines, &scalar::planar_ranges, &scalar::cubic_eval};

#if defined(__x86_64__) || defined(_M_X64)
constexpr FnTable kAvx2Table{
    &avx2::elevation_flags, &avx2::successor_distances,
    &avx2::direction_cosines, &avx2::planar_ranges, &avx2::cubic_eval};
#endif

Backend pick_default() {
  if (const char* env = std::getenv("CURB_KERNELS")) {
    if (std::strcmp(env, "scalar") == 0) return Backend::Scalar;
    if (std::strcmp(env, "avx2") == 0) return Backend::Avx2;
  }
  return avx2_supported() ? Backend::Avx2 : Backend::Scalar;
}

Backend g_backend = pick_default();

}  // namespace

bool avx2_supported() {
#if defined(__x86_64__) || defined(_M_X64)
  return __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}

const FnTable& table(Backend b) {
  switch (b) {
    case Backend::Scalar:
      return kScalarTable;
    case Backend::Avx2:
#if defined(__x86_64__) || defined(_M_X64)
      if (avx2_supported()) return kAvx2Table;
#endif
      throw std::runtime_error("AVX2 backend requested but not supported");
  }
  return kScalarTable;
}

const FnTable& active() { return table(g_backend); }

Backend active_backend() { return g_backend; }

const char* backend_name(Backend b) {
  return b == Backend::Avx2 ? "avx2" : "scalar";
}

void set_backend(Backend b) {
  (void)table(b);  // validates support
  g_backend = b;
}

}  // namespace curb::kernels
