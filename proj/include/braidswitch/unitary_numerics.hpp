#pragma once

#include <array>
#include <numbers>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "braidswitch/braid_word.hpp"
#include "braidswitch/complex_matrix.hpp"
#include "braidswitch/laurent.hpp"

namespace braidswitch {

/// Tolerance for algebraic identities evaluated in double precision.
inline constexpr double kIdentityTol = 1e-12;
/// Tolerance for residuals of the iterative eigen path.
inline constexpr double kEigenResidualTol = 1e-8;
/// Unitarity a matrix must meet before its spectrum is extracted.
inline constexpr double kSpectrumUnitarityTol = 1e-10;

inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

/// Value at s = e^{i omega / 2}.
cplx specialize(const LaurentPoly& p, double omega);
Mat2 specialize_matrix(const LaurentMatrix& m, double omega);

/// J(omega) = ((2cos(omega/2), -1), (-1, 2cos(omega/2))) and its spectrum.
struct SpecializedForm {
  double omega = 0.0;
  Mat2 j;
  double lambda_plus = 0.0;   ///< 2cos(omega/2) - 1
  double lambda_minus = 0.0;  ///< 2cos(omega/2) + 1
  bool positive_definite = false;
};

SpecializedForm squier_form_at(double omega);

/// J(omega) is positive definite. On [0, 2pi) this is exactly [0, 2pi/3).
bool in_positivity_window(double omega);

class NotPositiveDefinite : public std::domain_error {
 public:
  explicit NotPositiveDefinite(double omega);
  double omega() const { return omega_; }

 private:
  double omega_;
};

/// Upper-triangular R with J = R^dagger R and strictly positive real diagonal.
/// This is the unique such factor, so it varies continuously with omega.
Mat2 cholesky_2x2(const SpecializedForm& form);

/// R(omega) beta(w) R(omega)^-1, unitary for omega inside the window.
Mat2 unitarize(const BraidWord& w, double omega);
Mat2 unitarize(const LaurentMatrix& squier_image, double omega);

/// max-norm of beta_i^dagger J beta_i - J at s = e^{i omega/2}, via dense complex products.
double j_unitarity_residual(int generator, double omega);

struct PhaseList {
  std::vector<double> phases;  ///< sorted, each in [0, 2pi)
  double arc = 0.0;            ///< shortest closed arc containing all phases
};

class EmptySpectrum : public std::invalid_argument {
 public:
  EmptySpectrum() : std::invalid_argument("shortest_arc: empty spectrum") {}
};

/// Maps an angle into [0, 2pi).
double wrap_phase(double angle);

/// 2pi minus the largest circular gap between consecutive phases. The input
/// need not be sorted or wrapped.
double shortest_arc(std::span<const double> phases);

/// Eigenphases of a unitary. N = 2 uses the closed form, N = 4 the QR path.
/// Throws NotUnitary if unitarity_error(u) > 1e-10, NoConvergence if the
/// eigenvalues fail the unit-modulus or characteristic-polynomial checks.
PhaseList eigenphases(const Mat2& u);
PhaseList eigenphases(const Mat4& u);

struct HelstromResult {
  double arc = 0.0;          ///< true shortest arc of spec(U0^dagger U1), may exceed pi
  double probability = 0.5;  ///< 1/2 (1 + sin(min(arc, pi) / 2))
};

HelstromResult helstrom_detail(const Mat2& u0, const Mat2& u1);
HelstromResult helstrom_detail(const Mat4& u0, const Mat4& u1);

/// Optimal single-shot equal-prior success probability for telling u0 from u1.
inline double helstrom(const Mat2& u0, const Mat2& u1) { return helstrom_detail(u0, u1).probability; }
inline double helstrom(const Mat4& u0, const Mat4& u1) { return helstrom_detail(u0, u1).probability; }

/// Success probability for a given arc, with the arc >= pi saturation.
double helstrom_from_arc(double arc);

}  // namespace braidswitch
