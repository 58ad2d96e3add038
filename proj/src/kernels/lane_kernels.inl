// Lane-generic kernel bodies. Included by each variant translation unit with a
// Lane type providing: V, width, load, store, splat, add, sub, mul, sqrt, max.
// Keep the operation order fixed: the variants are required to agree bitwise.

#include <cstddef>

#include "variants.hpp"

namespace braidswitch::kernels::detail {
namespace {

template <class L>
struct CV {
  typename L::V re, im;
};

template <class L>
CV<L> c_add(CV<L> a, CV<L> b) {
  return {L::add(a.re, b.re), L::add(a.im, b.im)};
}

template <class L>
CV<L> c_sub(CV<L> a, CV<L> b) {
  return {L::sub(a.re, b.re), L::sub(a.im, b.im)};
}

template <class L>
CV<L> c_mul(CV<L> a, CV<L> b) {
  return {L::sub(L::mul(a.re, b.re), L::mul(a.im, b.im)), L::add(L::mul(a.re, b.im), L::mul(a.im, b.re))};
}

// conj(a) * b
template <class L>
CV<L> c_conj_mul(CV<L> a, CV<L> b) {
  return {L::add(L::mul(a.re, b.re), L::mul(a.im, b.im)), L::sub(L::mul(a.re, b.im), L::mul(a.im, b.re))};
}

template <class L>
typename L::V c_abs(CV<L> a) {
  return L::sqrt(L::add(L::mul(a.re, a.re), L::mul(a.im, a.im)));
}

template <class L>
struct M2 {
  CV<L> e[4];
};

// max-norm of m^dagger * x - ref (ref real, row-major).
template <class L>
typename L::V adjoint_product_residual(const M2<L>& m, const M2<L>& x, const M2<L>& ref) {
  typename L::V worst = L::splat(0.0);
  for (int r = 0; r < 2; ++r) {
    for (int c = 0; c < 2; ++c) {
      const CV<L> p = c_add(c_conj_mul(m.e[r], x.e[c]), c_conj_mul(m.e[2 + r], x.e[2 + c]));
      worst = L::max(worst, c_abs(c_sub(p, ref.e[2 * r + c])));
    }
  }
  return worst;
}

template <class L>
M2<L> real_times(const M2<L>& j, const M2<L>& b) {
  M2<L> out;
  for (int r = 0; r < 2; ++r) {
    for (int c = 0; c < 2; ++c) {
      out.e[2 * r + c] = c_add(c_mul(j.e[2 * r], b.e[c]), c_mul(j.e[2 * r + 1], b.e[2 + c]));
    }
  }
  return out;
}

template <class L>
void j_residuals_block(const JResidualArgs& a, std::size_t i) {
  using V = typename L::V;
  const V zero = L::splat(0.0);
  const V one = L::splat(1.0);
  const V cs = L::load(a.cos_half + i);
  const V sn = L::load(a.sin_half + i);
  const CV<L> s{cs, sn};
  const CV<L> s2 = c_mul(s, s);
  const CV<L> neg_s2{L::sub(zero, s2.re), L::sub(zero, s2.im)};
  const CV<L> c_zero{zero, zero};
  const CV<L> c_one{one, zero};

  const V diag = L::mul(L::splat(2.0), cs);
  const CV<L> jd{diag, zero};
  const CV<L> jo{L::splat(-1.0), zero};
  const M2<L> j{{jd, jo, jo, jd}};

  const M2<L> beta1{{neg_s2, s, c_zero, c_one}};
  const M2<L> beta2{{c_one, c_zero, s, neg_s2}};

  L::store(a.err1 + i, adjoint_product_residual(beta1, real_times(j, beta1), j));
  L::store(a.err2 + i, adjoint_product_residual(beta2, real_times(j, beta2), j));
}

template <class L>
void unitarity_block(const UnitarityArgs& a, std::size_t i) {
  using V = typename L::V;
  const V zero = L::splat(0.0);
  const CV<L> c_zero{zero, zero};
  const CV<L> c_one{L::splat(1.0), zero};
  M2<L> u;
  for (int k = 0; k < 4; ++k) u.e[k] = {L::load(a.re[k] + i), L::load(a.im[k] + i)};
  const M2<L> id{{c_one, c_zero, c_zero, c_one}};
  L::store(a.out + i, adjoint_product_residual(u, u, id));
}

struct ScalarLane {
  using V = double;
  static constexpr std::size_t width = 1;
  static V load(const double* p) { return *p; }
  static void store(double* p, V v) { *p = v; }
  static V splat(double x) { return x; }
  static V add(V a, V b) { return a + b; }
  static V sub(V a, V b) { return a - b; }
  static V mul(V a, V b) { return a * b; }
  static V sqrt(V a) { return __builtin_sqrt(a); }
  // Same selection rule as maxpd / fmax on finite input.
  static V max(V a, V b) { return a > b ? a : b; }
};

template <class L>
void run_j_residuals(const JResidualArgs& a) {
  std::size_t i = 0;
  for (; i + L::width <= a.n; i += L::width) j_residuals_block<L>(a, i);
  for (; i < a.n; ++i) j_residuals_block<ScalarLane>(a, i);
}

template <class L>
void run_unitarity(const UnitarityArgs& a) {
  std::size_t i = 0;
  for (; i + L::width <= a.n; i += L::width) unitarity_block<L>(a, i);
  for (; i < a.n; ++i) unitarity_block<ScalarLane>(a, i);
}

}  // namespace
}  // namespace braidswitch::kernels::detail
