#include "lane_kernels.inl"

namespace braidswitch::kernels::detail {

void j_residuals_scalar(const JResidualArgs& a) { run_j_residuals<ScalarLane>(a); }
void unitarity_scalar(const UnitarityArgs& a) { run_unitarity<ScalarLane>(a); }

}  // namespace braidswitch::kernels::detail
