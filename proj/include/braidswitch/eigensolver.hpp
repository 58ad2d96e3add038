#pragma once

#include <array>
#include <stdexcept>

#include "braidswitch/complex_matrix.hpp"

namespace braidswitch {

/// The QR iteration stalled. Indicates a numerics defect, not bad input.
class NoConvergence : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Eigenvalues of a 2x2 matrix from trace and determinant.
std::array<cplx, 2> eigenvalues_closed_form(const Mat2& m);

/// Eigenvalues of a general complex matrix by Hessenberg reduction followed by
/// explicitly shifted QR sweeps (Wilkinson shift, exceptional shifts on stall).
/// Order is the order of deflation, not sorted.
template <std::size_t N>
std::array<cplx, N> qr_eigenvalues(const ComplexMatrix<N>& m);

extern template std::array<cplx, 2> qr_eigenvalues<2>(const Mat2&);
extern template std::array<cplx, 4> qr_eigenvalues<4>(const Mat4&);

}  // namespace braidswitch
