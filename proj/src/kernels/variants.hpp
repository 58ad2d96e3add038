#pragma once

#include <cstddef>

namespace braidswitch::kernels::detail {

struct JResidualArgs {
  const double* cos_half;
  const double* sin_half;
  double* err1;
  double* err2;
  std::size_t n;
};

struct UnitarityArgs {
  const double* re[4];
  const double* im[4];
  double* out;
  std::size_t n;
};

void j_residuals_scalar(const JResidualArgs& a);
void unitarity_scalar(const UnitarityArgs& a);

#if defined(BRAIDSWITCH_HAVE_AVX2)
void j_residuals_avx2(const JResidualArgs& a);
void unitarity_avx2(const UnitarityArgs& a);
#endif

#if defined(BRAIDSWITCH_HAVE_NEON)
void j_residuals_neon(const JResidualArgs& a);
void unitarity_neon(const UnitarityArgs& a);
#endif

}  // namespace braidswitch::kernels::detail
