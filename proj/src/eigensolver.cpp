#include "braidswitch/eigensolver.hpp"

#include <cmath>
#include <limits>

namespace braidswitch {

namespace {

// Unitary G = [[c, s], [-conj(s), c]] with G * (a, b)^T = (r, 0)^T.
struct Givens {
  double c = 1.0;
  cplx s{};

  static Givens zeroing(cplx a, cplx b) {
    Givens g;
    const double abs_b = std::abs(b);
    if (abs_b == 0.0) return g;
    const double abs_a = std::abs(a);
    if (abs_a == 0.0) {
      g.c = 0.0;
      g.s = std::conj(b) / abs_b;
      return g;
    }
    const double r = std::hypot(abs_a, abs_b);
    g.c = abs_a / r;
    g.s = (a / abs_a) * std::conj(b) / r;
    return g;
  }

  // Rows p, q of m, columns [c0, c1].
  template <std::size_t N>
  void apply_left(ComplexMatrix<N>& m, std::size_t p, std::size_t q, std::size_t c0, std::size_t c1) const {
    for (std::size_t j = c0; j <= c1; ++j) {
      const cplx x = m(p, j);
      const cplx y = m(q, j);
      m(p, j) = c * x + s * y;
      m(q, j) = -std::conj(s) * x + c * y;
    }
  }

  // Multiply columns p, q of m by G^dagger from the right, rows [r0, r1].
  template <std::size_t N>
  void apply_right_adjoint(ComplexMatrix<N>& m, std::size_t p, std::size_t q, std::size_t r0, std::size_t r1) const {
    for (std::size_t i = r0; i <= r1; ++i) {
      const cplx x = m(i, p);
      const cplx y = m(i, q);
      m(i, p) = c * x + std::conj(s) * y;
      m(i, q) = -s * x + c * y;
    }
  }
};

template <std::size_t N>
void reduce_to_hessenberg(ComplexMatrix<N>& h) {
  for (std::size_t col = 0; col + 2 < N; ++col) {
    for (std::size_t row = N - 1; row >= col + 2; --row) {
      const Givens g = Givens::zeroing(h(row - 1, col), h(row, col));
      g.apply_left(h, row - 1, row, 0, N - 1);
      g.apply_right_adjoint(h, row - 1, row, 0, N - 1);
      h(row, col) = 0.0;
    }
  }
}

// Eigenvalue of [[a, b], [c, d]] closest to d.
cplx wilkinson_shift(cplx a, cplx b, cplx c, cplx d) {
  const cplx half_diff = 0.5 * (a - d);
  const cplx root = std::sqrt(half_diff * half_diff + b * c);
  const cplx mu1 = d - b * c / (half_diff + root);
  const cplx mu2 = d - b * c / (half_diff - root);
  const bool ok1 = std::isfinite(mu1.real()) && std::isfinite(mu1.imag());
  const bool ok2 = std::isfinite(mu2.real()) && std::isfinite(mu2.imag());
  if (!ok1 && !ok2) return d;
  if (!ok1) return mu2;
  if (!ok2) return mu1;
  return std::abs(mu1 - d) <= std::abs(mu2 - d) ? mu1 : mu2;
}

}  // namespace

std::array<cplx, 2> eigenvalues_closed_form(const Mat2& m) {
  const cplx half_tr = 0.5 * m.trace();
  const cplx disc = std::sqrt(half_tr * half_tr - det(m));
  return {half_tr + disc, half_tr - disc};
}

template <std::size_t N>
std::array<cplx, N> qr_eigenvalues(const ComplexMatrix<N>& m) {
  constexpr double eps = std::numeric_limits<double>::epsilon();
  constexpr int max_iter_per_eigenvalue = 60;

  ComplexMatrix<N> h = m;
  reduce_to_hessenberg(h);

  std::array<cplx, N> out{};
  std::size_t hi = N - 1;
  int iter = 0;
  int total_iter = 0;
  while (hi > 0) {
    // Find the start of the unreduced trailing block.
    std::size_t lo = hi;
    while (lo > 0) {
      const double scale = std::abs(h(lo, lo)) + std::abs(h(lo - 1, lo - 1));
      if (std::abs(h(lo, lo - 1)) <= eps * scale) {
        h(lo, lo - 1) = 0.0;
        break;
      }
      --lo;
    }
    if (lo == hi) {
      out[hi] = h(hi, hi);
      --hi;
      iter = 0;
      continue;
    }
    if (++iter > max_iter_per_eigenvalue || ++total_iter > max_iter_per_eigenvalue * static_cast<int>(N)) {
      throw NoConvergence("qr_eigenvalues: no convergence");
    }

    cplx mu;
    if (iter % 10 == 0) {
      // Exceptional shift breaks symmetric stalls.
      mu = h(hi, hi) + cplx(std::abs(h(hi, hi - 1)), 0.0) * 0.75;
    } else {
      mu = wilkinson_shift(h(hi - 1, hi - 1), h(hi - 1, hi), h(hi, hi - 1), h(hi, hi));
    }

    for (std::size_t i = lo; i <= hi; ++i) h(i, i) -= mu;
    std::array<Givens, N> rot{};
    for (std::size_t k = lo; k < hi; ++k) {
      rot[k] = Givens::zeroing(h(k, k), h(k + 1, k));
      rot[k].apply_left(h, k, k + 1, k, hi);
      h(k + 1, k) = 0.0;
    }
    for (std::size_t k = lo; k < hi; ++k) {
      rot[k].apply_right_adjoint(h, k, k + 1, lo, std::min(k + 2, hi));
    }
    for (std::size_t i = lo; i <= hi; ++i) h(i, i) += mu;
  }
  out[0] = h(0, 0);
  return out;
}

template std::array<cplx, 2> qr_eigenvalues<2>(const Mat2&);
template std::array<cplx, 4> qr_eigenvalues<4>(const Mat4&);

}  // namespace braidswitch
