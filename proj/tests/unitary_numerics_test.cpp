#include "braidswitch/unitary_numerics.hpp"

#include <gtest/gtest.h>

#include <Eigen/Eigenvalues>
#include <cmath>
#include <numbers>
#include <random>

#include "braidswitch/eigensolver.hpp"
#include "braidswitch/switch_device.hpp"
#include "test_util.hpp"

using namespace braidswitch;
using std::numbers::pi;

namespace {

const LaurentPoly s = LaurentPoly::monomial(1);

// Independent eigen path: Eigen's complex Schur solver.
std::vector<double> eigen_phases(const Mat4& u) {
  Eigen::Matrix4cd m;
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) m(r, c) = u(r, c);
  Eigen::ComplexEigenSolver<Eigen::Matrix4cd> solver(m, false);
  std::vector<double> out;
  for (int i = 0; i < 4; ++i) out.push_back(wrap_phase(std::arg(solver.eigenvalues()[i])));
  std::sort(out.begin(), out.end());
  return out;
}

double circular_distance(double a, double b) {
  const double d = std::abs(wrap_phase(a - b));
  return std::min(d, kTwoPi - d);
}

// Every phase in `got` is within tol of a distinct phase in `want` (greedy on sorted circles is enough here).
void expect_same_phases(std::vector<double> got, std::vector<double> want, double tol) {
  ASSERT_EQ(got.size(), want.size());
  for (double g : got) {
    auto best = std::min_element(want.begin(), want.end(),
                                 [&](double a, double b) { return circular_distance(a, g) < circular_distance(b, g); });
    EXPECT_LT(circular_distance(*best, g), tol) << "phase " << g;
    want.erase(best);
  }
}

}  // namespace

TEST(Specialize, Scalars) {
  EXPECT_NEAR(std::abs(specialize(s + LaurentPoly::monomial(-1), 0.0) - cplx(2.0)), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(specialize(LaurentPoly::monomial(3, -1), pi) - cplx(0.0, 1.0)), 0.0, 1e-15);
  const Mat2 j0 = specialize_matrix(squier_form(), 0.0);
  EXPECT_LT(max_abs_diff(j0, Mat2{2.0, -1.0, -1.0, 2.0}), 1e-15);
}

TEST(SquierForm, Window) {
  auto f = squier_form_at(0.0);
  EXPECT_DOUBLE_EQ(f.lambda_plus, 1.0);
  EXPECT_DOUBLE_EQ(f.lambda_minus, 3.0);
  EXPECT_TRUE(f.positive_definite);
  EXPECT_EQ(f.j, (Mat2{2.0, -1.0, -1.0, 2.0}));

  f = squier_form_at(2.0 * pi / 3.0);
  EXPECT_NEAR(f.lambda_plus, 0.0, 1e-15);
  EXPECT_FALSE(in_positivity_window(2.0 * pi / 3.0 + 1e-12));

  f = squier_form_at(pi);
  EXPECT_LT(max_abs_diff(f.j, Mat2{0.0, -1.0, -1.0, 0.0}), 1e-15);
  EXPECT_FALSE(f.positive_definite);

  EXPECT_TRUE(in_positivity_window(-2.0));
  // 2cos(omega/2) has period 4pi: near 2pi J is negative definite.
  EXPECT_FALSE(in_positivity_window(kTwoPi - 0.1));
}

TEST(Cholesky, HandFactorAtZero) {
  const Mat2 r = cholesky_2x2(squier_form_at(0.0));
  const Mat2 expect{std::sqrt(2.0), -1.0 / std::sqrt(2.0), 0.0, std::sqrt(1.5)};
  EXPECT_LT(max_abs_diff(r, expect), 1e-15);
  EXPECT_LT(max_abs_diff(r.adjoint() * r, squier_form_at(0.0).j), 1e-14);
}

TEST(Cholesky, CanonicalOnGrid) {
  for (int k = 0; k <= 400; ++k) {
    const double omega = -2.0 * pi / 3.0 + (k + 0.5) * (4.0 * pi / 3.0) / 401.0;
    const auto f = squier_form_at(omega);
    const Mat2 r = cholesky_2x2(f);
    EXPECT_GT(r(0, 0).real(), 0.0);
    EXPECT_GT(r(1, 1).real(), 0.0);
    EXPECT_EQ(r(0, 0).imag(), 0.0);
    EXPECT_EQ(r(1, 1).imag(), 0.0);
    EXPECT_EQ(r(1, 0), cplx(0.0));
    EXPECT_LT(max_abs_diff(r.adjoint() * r, f.j), 1e-14);
  }
}

TEST(Cholesky, OutsideWindowThrows) {
  EXPECT_THROW(cholesky_2x2(squier_form_at(3.0 * pi / 4.0)), NotPositiveDefinite);
  try {
    unitarize(parse_braid_word("1"), 3.0);
    FAIL();
  } catch (const NotPositiveDefinite& e) {
    EXPECT_EQ(e.omega(), 3.0);
  }
}

TEST(Cholesky, ContinuousAcrossWindow) {
  // Lipschitz in omega on a compact sub-window, and differences halve with the step.
  const double delta = 1e-4;
  double worst_ratio = 0.0;
  for (int k = 0; k <= 200; ++k) {
    const double omega = -2.0 * pi / 3.0 + 0.05 + k * (4.0 * pi / 3.0 - 0.1) / 200.0;
    const Mat2 r0 = cholesky_2x2(squier_form_at(omega));
    const double d1 = max_abs_diff(cholesky_2x2(squier_form_at(omega + delta)), r0);
    const double d2 = max_abs_diff(cholesky_2x2(squier_form_at(omega + 0.5 * delta)), r0);
    worst_ratio = std::max(worst_ratio, d1 / delta);
    // R is even in omega, so skip the stationary point where differences are second order.
    if (d1 > 1e-6) {
      EXPECT_NEAR(d1 / d2, 2.0, 0.05);
    }
  }
  EXPECT_LT(worst_ratio, 10.0);
}

TEST(Unitarize, IdentityWordIsExactlyIdentity) {
  EXPECT_EQ(unitarize(BraidWord{}, 0.7), Mat2::identity());
}

TEST(Unitarize, YangBaxterWordTwoPaths) {
  const BraidWord w = parse_braid_word("1 2 1");
  const Mat2 swap{0.0, 1.0, 1.0, 0.0};
  for (double omega : {-2.0, -0.5, 0.0, 0.3, 1.0, 2.0}) {
    const Mat2 r = cholesky_2x2(squier_form_at(omega));
    const Mat2 closed = -std::polar(1.0, 1.5 * omega) * (r * swap * inverse(r));
    EXPECT_LT(max_abs_diff(unitarize(w, omega), closed), 1e-12) << omega;
  }
}

TEST(Unitarize, UnitaryAcrossWindow) {
  const BraidWord w = parse_braid_word("1 2 1");
  double worst = 0.0;
  for (int k = 0; k < 2001; ++k) {
    const double omega = -2.0 * pi / 3.0 + (k + 1) * (4.0 * pi / 3.0) / 2002.0;
    worst = std::max(worst, unitarity_error(unitarize(w, omega)));
  }
  EXPECT_LE(worst, kIdentityTol);
}

TEST(JUnitarity, NumericResidualSmall) {
  for (int k = 0; k <= 100; ++k) {
    const double omega = k * kTwoPi / 100.0;
    EXPECT_LE(j_unitarity_residual(1, omega), kIdentityTol);
    EXPECT_LE(j_unitarity_residual(2, omega), kIdentityTol);
  }
}

TEST(ShortestArc, Examples) {
  const std::vector<double> a{0.0, pi / 2.0};
  EXPECT_NEAR(shortest_arc(a), pi / 2.0, 1e-15);
  const std::vector<double> b{0.0, 2.0, 4.0, 6.0};
  EXPECT_NEAR(shortest_arc(b), kTwoPi - 2.0, 1e-14);
  const std::vector<double> c{1.234};
  EXPECT_EQ(shortest_arc(c), 0.0);
  EXPECT_THROW(shortest_arc(std::vector<double>{}), EmptySpectrum);
  // Unwrapped input is accepted.
  const std::vector<double> d{-0.1, 0.1};
  EXPECT_NEAR(shortest_arc(d), 0.2, 1e-15);
}

TEST(ShortestArc, BruteForceOracle) {
  // Oracle: try every phase as the arc's start and take the smallest sweep covering all.
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> u(0.0, kTwoPi);
  for (int trial = 0; trial < 300; ++trial) {
    std::vector<double> ph(1 + trial % 6);
    for (auto& p : ph) p = u(rng);
    double brute = kTwoPi;
    for (double start : ph) {
      double span = 0.0;
      for (double p : ph) span = std::max(span, wrap_phase(p - start));
      brute = std::min(brute, span);
    }
    EXPECT_NEAR(shortest_arc(ph), brute, 1e-12);
    // Rotation invariance.
    std::vector<double> rotated = ph;
    const double shift = u(rng);
    for (auto& p : rotated) p += shift;
    EXPECT_NEAR(shortest_arc(rotated), brute, 1e-12);
  }
}

TEST(Eigenphases, Diagonal) {
  auto p = eigenphases(Mat2{1.0, 0.0, 0.0, -1.0});
  ASSERT_EQ(p.phases.size(), 2u);
  EXPECT_NEAR(p.phases[0], 0.0, 1e-15);
  EXPECT_NEAR(p.phases[1], pi, 1e-15);
  EXPECT_NEAR(p.arc, pi, 1e-15);
}

TEST(Eigenphases, RejectsNonUnitary) {
  EXPECT_THROW(eigenphases(Mat2{1.0, 1.0, 0.0, 1.0}), NotUnitary);
  EXPECT_THROW(eigenphases(Mat4::diagonal({1.0, 1.0, 1.0, 1.1})), NotUnitary);
}

TEST(Eigenphases, BlockDiagonalOracle) {
  std::mt19937_64 rng(23);
  std::uniform_real_distribution<double> angle(-pi, pi);
  for (int trial = 0; trial < 50; ++trial) {
    const Mat2 a = test_support::random_unitary<2>(rng);
    const Mat2 b = test_support::random_unitary<2>(rng);
    const double theta = angle(rng);
    const Mat4 sw = block_diag(b * a, std::polar(1.0, theta) * (a * b));
    std::vector<double> want = eigenphases(b * a).phases;
    for (double p : eigenphases(a * b).phases) want.push_back(wrap_phase(p + theta));
    expect_same_phases(eigenphases(sw).phases, want, 1e-10);
  }
}

TEST(Eigenphases, AgreesWithEigenLibrary) {
  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 100; ++trial) {
    const Mat4 u = test_support::random_unitary<4>(rng);
    expect_same_phases(eigenphases(u).phases, eigen_phases(u), 1e-10);
  }
}

TEST(Eigenphases, DegenerateSpectra) {
  const Mat4 u = std::polar(1.0, 0.4) * Mat4::identity();
  auto p = eigenphases(u);
  for (double ph : p.phases) EXPECT_NEAR(ph, 0.4, 1e-14);
  EXPECT_NEAR(p.arc, 0.0, 1e-14);

  const Mat2 g = std::polar(1.0, 2.5) * Mat2::identity();
  EXPECT_NEAR(eigenphases(g).arc, 0.0, 1e-14);
}

TEST(Eigenphases, SpecialUnitaryTraceFormula) {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 50; ++trial) {
    Mat2 u = test_support::random_unitary<2>(rng);
    u = u * std::polar(1.0, -0.5 * std::arg(det(u)));  // det 1
    const double phi = std::acos(0.5 * u.trace().real());
    auto p = eigenphases(u);
    expect_same_phases(p.phases, {wrap_phase(phi), wrap_phase(-phi)}, 1e-10);
  }
}

TEST(Helstrom, Examples) {
  std::mt19937_64 rng(37);
  const Mat2 u = test_support::random_unitary<2>(rng);
  EXPECT_NEAR(helstrom(u, u), 0.5, 1e-15);
  EXPECT_NEAR(helstrom(Mat2::identity(), Mat2{1.0, 0.0, 0.0, -1.0}), 1.0, 1e-15);
  for (double alpha : {0.3, 1.0, 2.9, -2.0}) {
    EXPECT_NEAR(helstrom(Mat2::identity(), std::polar(1.0, alpha) * Mat2::identity()), 0.5, 1e-15);
  }
}

TEST(Helstrom, ClampsAtPiButReportsTrueArc) {
  const Mat4 v = Mat4::diagonal({1.0, std::polar(1.0, 2.0), std::polar(1.0, 4.0), 1.0});
  const HelstromResult r = helstrom_detail(Mat4::identity(), v);
  EXPECT_NEAR(r.arc, 4.0, 1e-12);
  EXPECT_DOUBLE_EQ(r.probability, 1.0);
  EXPECT_NEAR(helstrom_from_arc(pi / 3.0), 0.75, 1e-15);
}

TEST(Helstrom, RejectsNonUnitary) {
  EXPECT_THROW(helstrom(Mat2::identity(), Mat2{2.0, 0.0, 0.0, 1.0}), NotUnitary);
}

TEST(Helstrom, MatchesOptimizedPureStateDiscrimination) {
  // Oracle from the pure-state Helstrom bound: p = 1/2 (1 + sqrt(1 - min_psi |<psi|V|psi>|^2)),
  // minimized by dense sampling of the Bloch sphere for 2x2 V.
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 20; ++trial) {
    const Mat2 v = test_support::random_unitary<2>(rng);
    double rho = 1.0;
    for (int i = 0; i <= 400; ++i) {
      const double th = pi * i / 400.0;
      for (int j = 0; j < 400; ++j) {
        const double ph = kTwoPi * j / 400.0;
        const cplx a = std::cos(0.5 * th);
        const cplx b = std::polar(std::sin(0.5 * th), ph);
        const cplx overlap = std::conj(a) * (v(0, 0) * a + v(0, 1) * b) + std::conj(b) * (v(1, 0) * a + v(1, 1) * b);
        rho = std::min(rho, std::abs(overlap));
      }
    }
    EXPECT_NEAR(helstrom(Mat2::identity(), v), 0.5 * (1.0 + std::sqrt(1.0 - rho * rho)), 2e-4);
  }
}
