#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <string>

namespace braidswitch {

using cplx = std::complex<double>;

/// Dense N x N complex matrix, row-major, value semantics. The artifact only
/// instantiates N = 2 (control / target qubit) and N = 4 (control (x) target).
template <std::size_t N>
class ComplexMatrix {
 public:
  static constexpr std::size_t dim = N;

  ComplexMatrix() { a_.fill(cplx{}); }

  /// Row-major entries; the list must hold exactly N*N values.
  ComplexMatrix(std::initializer_list<cplx> entries) {
    if (entries.size() != N * N) throw std::invalid_argument("ComplexMatrix: wrong entry count");
    std::copy(entries.begin(), entries.end(), a_.begin());
  }

  static ComplexMatrix identity() {
    ComplexMatrix m;
    for (std::size_t i = 0; i < N; ++i) m(i, i) = 1.0;
    return m;
  }

  static ComplexMatrix diagonal(const std::array<cplx, N>& d) {
    ComplexMatrix m;
    for (std::size_t i = 0; i < N; ++i) m(i, i) = d[i];
    return m;
  }

  cplx& operator()(std::size_t r, std::size_t c) { return a_[r * N + c]; }
  const cplx& operator()(std::size_t r, std::size_t c) const { return a_[r * N + c]; }

  const std::array<cplx, N * N>& data() const { return a_; }

  ComplexMatrix adjoint() const {
    ComplexMatrix m;
    for (std::size_t r = 0; r < N; ++r)
      for (std::size_t c = 0; c < N; ++c) m(c, r) = std::conj((*this)(r, c));
    return m;
  }

  cplx trace() const {
    cplx t{};
    for (std::size_t i = 0; i < N; ++i) t += (*this)(i, i);
    return t;
  }

  /// Largest entry modulus.
  double max_norm() const {
    double m = 0.0;
    for (const auto& z : a_) m = std::max(m, std::abs(z));
    return m;
  }

  ComplexMatrix& operator+=(const ComplexMatrix& o) {
    for (std::size_t i = 0; i < N * N; ++i) a_[i] += o.a_[i];
    return *this;
  }
  ComplexMatrix& operator-=(const ComplexMatrix& o) {
    for (std::size_t i = 0; i < N * N; ++i) a_[i] -= o.a_[i];
    return *this;
  }
  ComplexMatrix& operator*=(cplx k) {
    for (auto& z : a_) z *= k;
    return *this;
  }

  friend ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { return a += b; }
  friend ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { return a -= b; }
  friend ComplexMatrix operator*(ComplexMatrix a, cplx k) { return a *= k; }
  friend ComplexMatrix operator*(cplx k, ComplexMatrix a) { return a *= k; }

  friend ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
    ComplexMatrix m;
    for (std::size_t r = 0; r < N; ++r)
      for (std::size_t k = 0; k < N; ++k) {
        const cplx ark = a(r, k);
        for (std::size_t c = 0; c < N; ++c) m(r, c) += ark * b(k, c);
      }
    return m;
  }

  friend bool operator==(const ComplexMatrix&, const ComplexMatrix&) = default;

 private:
  std::array<cplx, N * N> a_;
};

using Mat2 = ComplexMatrix<2>;
using Mat4 = ComplexMatrix<4>;

template <std::size_t N>
double max_abs_diff(const ComplexMatrix<N>& a, const ComplexMatrix<N>& b) {
  return (a - b).max_norm();
}

/// max-norm of U^dagger U - I.
template <std::size_t N>
double unitarity_error(const ComplexMatrix<N>& u) {
  return (u.adjoint() * u - ComplexMatrix<N>::identity()).max_norm();
}

class NotUnitary : public std::domain_error {
 public:
  NotUnitary(const std::string& what, double error)
      : std::domain_error(what + " (unitarity error " + std::to_string(error) + ")"), error_(error) {}
  double error() const { return error_; }

 private:
  double error_;
};

/// Throws NotUnitary when unitarity_error(u) > tol.
template <std::size_t N>
void require_unitary(const ComplexMatrix<N>& u, double tol, const char* what) {
  const double err = unitarity_error(u);
  if (!(err <= tol)) throw NotUnitary(what, err);
}

/// Kronecker product with the control factor first: (a (x) b)(2i+k, 2j+l) = a(i,j) b(k,l).
Mat4 kron(const Mat2& a, const Mat2& b);

/// |0><0| (x) upper + |1><1| (x) lower.
Mat4 block_diag(const Mat2& upper, const Mat2& lower);

cplx det(const Mat2& m);
/// Determinant via partial-pivoted elimination.
cplx det(const Mat4& m);

/// Exact 2x2 inverse; throws std::domain_error for a singular matrix.
Mat2 inverse(const Mat2& m);

}  // namespace braidswitch
