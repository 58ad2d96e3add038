// Randomised invariants over words, unitaries and switch instances. Seeds are
// fixed so failures reproduce.

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

#include "braidswitch/braid_word.hpp"
#include "braidswitch/complex_matrix.hpp"
#include "braidswitch/eigensolver.hpp"
#include "braidswitch/laurent.hpp"
#include "braidswitch/switch_device.hpp"
#include "braidswitch/unitary_numerics.hpp"
#include "test_util.hpp"

namespace braidswitch {
namespace {

using test_support::random_unitary;
using test_support::random_word;

constexpr double kPi = kTwoPi / 2.0;
constexpr int kWordTrials = 250;
constexpr int kUnitaryTrials = 150;
constexpr int kMaxWordLength = 10;

double circular_distance(double a, double b) {
  const double d = std::fmod(std::abs(a - b), kTwoPi);
  return std::min(d, kTwoPi - d);
}

/// Every phase in `expected` has a partner in `actual` (and vice versa).
void expect_same_phases(const std::vector<double>& expected, const std::vector<double>& actual, double tol) {
  ASSERT_EQ(expected.size(), actual.size());
  for (double e : expected) {
    double best = kTwoPi;
    for (double a : actual) best = std::min(best, circular_distance(e, a));
    EXPECT_LE(best, tol) << "missing phase " << e;
  }
  for (double a : actual) {
    double best = kTwoPi;
    for (double e : expected) best = std::min(best, circular_distance(e, a));
    EXPECT_LE(best, tol) << "extra phase " << a;
  }
}

LaurentPoly det_oracle(int exponent_sum) {
  // Each generator has determinant -s^2, its inverse -s^-2.
  const LaurentPoly::Coeff sign = (exponent_sum % 2 == 0) ? 1 : -1;
  return LaurentPoly::monomial(2 * exponent_sum, sign);
}

class WordProperty : public ::testing::TestWithParam<Representation> {};

TEST_P(WordProperty, EvaluationIsAHomomorphism) {
  std::mt19937_64 rng(0xB3A1D);
  const Representation rep = GetParam();
  for (int t = 0; t < kWordTrials; ++t) {
    const BraidWord u = random_word(rng, kMaxWordLength);
    const BraidWord v = random_word(rng, kMaxWordLength);
    EXPECT_EQ(evaluate_word(concat(u, v), rep), evaluate_word(u, rep) * evaluate_word(v, rep))
        << to_string(u) << " | " << to_string(v);
  }
}

TEST_P(WordProperty, DeterminantLaw) {
  std::mt19937_64 rng(0xDE7);
  const Representation rep = GetParam();
  for (int t = 0; t < kWordTrials; ++t) {
    const BraidWord w = random_word(rng, kMaxWordLength);
    EXPECT_EQ(evaluate_word(w, rep).det(), det_oracle(exponent_sum(w))) << to_string(w);
  }
}

TEST_P(WordProperty, InverseAndFreeReductionRespected) {
  std::mt19937_64 rng(0x1417);
  const Representation rep = GetParam();
  for (int t = 0; t < kWordTrials; ++t) {
    const BraidWord w = random_word(rng, kMaxWordLength);
    const LaurentMatrix m = evaluate_word(w, rep);
    EXPECT_EQ(evaluate_word(invert(w), rep) * m, LaurentMatrix::identity()) << to_string(w);
    EXPECT_EQ(evaluate_word(free_reduce(w), rep), m) << to_string(w);
    EXPECT_TRUE(free_reduce(concat(w, invert(w))).empty()) << to_string(w);
  }
}

INSTANTIATE_TEST_SUITE_P(Representations, WordProperty,
                         ::testing::Values(Representation::reduced, Representation::squier));

TEST(WordProperty, SquierImagesPreserveTheForm) {
  std::mt19937_64 rng(0x5A1);
  const LaurentMatrix j = squier_form();
  for (int t = 0; t < kWordTrials; ++t) {
    const BraidWord w = random_word(rng, kMaxWordLength);
    const LaurentMatrix m = evaluate_word(w, Representation::squier);
    EXPECT_EQ(m.star() * j * m, j) << to_string(w);
  }
}

TEST(WordProperty, UnitarizedWordsAreUnitaryInWindow) {
  std::mt19937_64 rng(0x0E6A);
  std::uniform_real_distribution<double> omega(-2.0 * kPi / 3.0 + 1e-3, 2.0 * kPi / 3.0 - 1e-3);
  for (int t = 0; t < kWordTrials; ++t) {
    const BraidWord w = random_word(rng, kMaxWordLength);
    const double om = omega(rng);
    EXPECT_LE(unitarity_error(unitarize(w, om)), 1e-10) << to_string(w) << " at " << om;
  }
}

template <std::size_t N>
void check_helstrom_invariances(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> angle(-kPi, kPi);
  for (int t = 0; t < kUnitaryTrials; ++t) {
    const auto u0 = random_unitary<N>(rng);
    const auto u1 = random_unitary<N>(rng);
    const double p = helstrom(u0, u1);
    EXPECT_GE(p, 0.5);
    EXPECT_LE(p, 1.0);
    EXPECT_NEAR(helstrom(u1, u0), p, 1e-10);
    EXPECT_NEAR(helstrom(std::polar(1.0, angle(rng)) * u0, u1), p, 1e-10);
    EXPECT_NEAR(helstrom(u0, std::polar(1.0, angle(rng)) * u1), p, 1e-10);
    const auto w = random_unitary<N>(rng);
    const auto q = random_unitary<N>(rng);
    EXPECT_NEAR(helstrom(w * u0 * q, w * u1 * q), p, 1e-10);
    EXPECT_NEAR(helstrom(u0, u0), 0.5, 1e-10);
  }
}

TEST(HelstromProperty, BoundsAndInvariances2x2) { check_helstrom_invariances<2>(0x4E15); }
TEST(HelstromProperty, BoundsAndInvariances4x4) { check_helstrom_invariances<4>(0x4E16); }

TEST(SwitchProperty, SpectrumIsUnionOfBlockSpectra) {
  std::mt19937_64 rng(0x5717);
  std::uniform_real_distribution<double> angle(0.0, kTwoPi);
  for (int t = 0; t < kUnitaryTrials; ++t) {
    const TargetPair targets(random_unitary<2>(rng), random_unitary<2>(rng));
    const double theta = angle(rng);
    const Mat2 ba = targets.b() * targets.a();
    const Mat2 ab = std::polar(1.0, theta) * (targets.a() * targets.b());
    std::vector<double> expected = eigenphases(ba).phases;
    for (double ph : eigenphases(ab).phases) expected.push_back(ph);
    expect_same_phases(expected, eigenphases(switch_matrix(targets, theta)).phases, 1e-9);
  }
}

TEST(SwitchProperty, SwitchMatrixIsBlockDiagonal) {
  std::mt19937_64 rng(0x5718);
  for (int t = 0; t < kUnitaryTrials; ++t) {
    const TargetPair targets(random_unitary<2>(rng), random_unitary<2>(rng));
    const Mat4 s = switch_matrix(targets, 0.7);
    EXPECT_LE(unitarity_error(s), 1e-12);
    for (std::size_t r = 0; r < 2; ++r)
      for (std::size_t c = 2; c < 4; ++c) {
        EXPECT_EQ(s(r, c), cplx{});
        EXPECT_EQ(s(c, r), cplx{});
      }
  }
}

TEST(SpectrumProperty, UnitModulusAndDeterminantProduct) {
  std::mt19937_64 rng(0x4444);
  for (int t = 0; t < kUnitaryTrials; ++t) {
    const Mat4 u = random_unitary<4>(rng);
    const auto values = qr_eigenvalues(u);
    cplx product{1.0, 0.0};
    for (const cplx& z : values) {
      EXPECT_NEAR(std::abs(z), 1.0, 1e-10);
      product *= z;
    }
    EXPECT_NEAR(std::abs(product - det(u)), 0.0, 1e-10);
    const PhaseList pl = eigenphases(u);
    ASSERT_EQ(pl.phases.size(), 4u);
    EXPECT_TRUE(std::is_sorted(pl.phases.begin(), pl.phases.end()));
    double phase_sum = 0.0;
    for (double ph : pl.phases) phase_sum += ph;
    EXPECT_LE(circular_distance(phase_sum, std::arg(det(u))), 1e-9);
    EXPECT_GE(pl.arc, 0.0);
    EXPECT_LT(pl.arc, kTwoPi);
  }
}

TEST(ReductionProperty, IdentityMixersGiveSwitchPerformance) {
  for (const Placement placement : {Placement::both, Placement::pre, Placement::post}) {
    const DeviceConfig cfg = DeviceConfig::standard().with_word(BraidWord{}, placement);
    for (std::size_t i = 0; i < cfg.grid.points; ++i) {
      const double omega = cfg.grid.at(i);
      if (!in_positivity_window(omega)) continue;
      ASSERT_NEAR(p_test(cfg, omega), p_switch(cfg, omega), 1e-12) << omega;
    }
  }
}

}  // namespace
}  // namespace braidswitch
