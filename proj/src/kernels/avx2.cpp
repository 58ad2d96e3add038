#include <immintrin.h>

#include "lane_kernels.inl"

namespace braidswitch::kernels::detail {
namespace {

struct Avx2Lane {
  using V = __m256d;
  static constexpr std::size_t width = 4;
  static V load(const double* p) { return _mm256_loadu_pd(p); }
  static void store(double* p, V v) { _mm256_storeu_pd(p, v); }
  static V splat(double x) { return _mm256_set1_pd(x); }
  static V add(V a, V b) { return _mm256_add_pd(a, b); }
  static V sub(V a, V b) { return _mm256_sub_pd(a, b); }
  static V mul(V a, V b) { return _mm256_mul_pd(a, b); }
  static V sqrt(V a) { return _mm256_sqrt_pd(a); }
  static V max(V a, V b) { return _mm256_max_pd(a, b); }
};

}  // namespace

void j_residuals_avx2(const JResidualArgs& a) { run_j_residuals<Avx2Lane>(a); }
void unitarity_avx2(const UnitarityArgs& a) { run_unitarity<Avx2Lane>(a); }

}  // namespace braidswitch::kernels::detail
