#include <arm_neon.h>

#include "lane_kernels.inl"

namespace braidswitch::kernels::detail {
namespace {

struct NeonLane {
  using V = float64x2_t;
  static constexpr std::size_t width = 2;
  static V load(const double* p) { return vld1q_f64(p); }
  static void store(double* p, V v) { vst1q_f64(p, v); }
  static V splat(double x) { return vdupq_n_f64(x); }
  static V add(V a, V b) { return vaddq_f64(a, b); }
  static V sub(V a, V b) { return vsubq_f64(a, b); }
  static V mul(V a, V b) { return vmulq_f64(a, b); }
  static V sqrt(V a) { return vsqrtq_f64(a); }
  // a > b ? a : b, lane-wise, matching the scalar reference.
  static V max(V a, V b) { return vbslq_f64(vcgtq_f64(a, b), a, b); }
};

}  // namespace

void j_residuals_neon(const JResidualArgs& a) { run_j_residuals<NeonLane>(a); }
void unitarity_neon(const UnitarityArgs& a) { run_unitarity<NeonLane>(a); }

}  // namespace braidswitch::kernels::detail
