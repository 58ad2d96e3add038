#include "braidswitch/complex_matrix.hpp"

#include <utility>

namespace braidswitch {

Mat4 kron(const Mat2& a, const Mat2& b) {
  Mat4 m;
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j)
      for (std::size_t k = 0; k < 2; ++k)
        for (std::size_t l = 0; l < 2; ++l) m(2 * i + k, 2 * j + l) = a(i, j) * b(k, l);
  return m;
}

Mat4 block_diag(const Mat2& upper, const Mat2& lower) {
  Mat4 m;
  for (std::size_t k = 0; k < 2; ++k)
    for (std::size_t l = 0; l < 2; ++l) {
      m(k, l) = upper(k, l);
      m(2 + k, 2 + l) = lower(k, l);
    }
  return m;
}

cplx det(const Mat2& m) { return m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0); }

cplx det(const Mat4& m) {
  Mat4 a = m;
  cplx d = 1.0;
  for (std::size_t col = 0; col < 4; ++col) {
    std::size_t piv = col;
    for (std::size_t r = col + 1; r < 4; ++r)
      if (std::abs(a(r, col)) > std::abs(a(piv, col))) piv = r;
    if (a(piv, col) == cplx{}) return 0.0;
    if (piv != col) {
      for (std::size_t c = 0; c < 4; ++c) std::swap(a(piv, c), a(col, c));
      d = -d;
    }
    d *= a(col, col);
    for (std::size_t r = col + 1; r < 4; ++r) {
      const cplx f = a(r, col) / a(col, col);
      for (std::size_t c = col; c < 4; ++c) a(r, c) -= f * a(col, c);
    }
  }
  return d;
}

Mat2 inverse(const Mat2& m) {
  const cplx d = det(m);
  if (d == cplx{}) throw std::domain_error("inverse: singular 2x2 matrix");
  return Mat2{m(1, 1) / d, -m(0, 1) / d, -m(1, 0) / d, m(0, 0) / d};
}

}  // namespace braidswitch
