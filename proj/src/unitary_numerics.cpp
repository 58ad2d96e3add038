#include "braidswitch/unitary_numerics.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "braidswitch/eigensolver.hpp"

namespace braidswitch {

cplx specialize(const LaurentPoly& p, double omega) {
  cplx v{};
  for (const auto& [e, c] : p.terms()) {
    v += static_cast<double>(c) * std::polar(1.0, 0.5 * omega * e);
  }
  return v;
}

Mat2 specialize_matrix(const LaurentMatrix& m, double omega) {
  return Mat2{specialize(m(0, 0), omega), specialize(m(0, 1), omega), specialize(m(1, 0), omega),
              specialize(m(1, 1), omega)};
}

SpecializedForm squier_form_at(double omega) {
  const double diag = 2.0 * std::cos(0.5 * omega);
  SpecializedForm f;
  f.omega = omega;
  f.j = Mat2{diag, -1.0, -1.0, diag};
  f.lambda_plus = diag - 1.0;
  f.lambda_minus = diag + 1.0;
  f.positive_definite = f.lambda_plus > 0.0 && f.lambda_minus > 0.0;
  return f;
}

bool in_positivity_window(double omega) { return squier_form_at(omega).positive_definite; }

namespace {
std::string omega_message(double omega) {
  std::ostringstream os;
  os.precision(17);
  os << "J(omega) is not positive definite at omega = " << omega;
  return os.str();
}
}  // namespace

NotPositiveDefinite::NotPositiveDefinite(double omega) : std::domain_error(omega_message(omega)), omega_(omega) {}

Mat2 cholesky_2x2(const SpecializedForm& form) {
  if (!form.positive_definite) throw NotPositiveDefinite(form.omega);
  const Mat2& j = form.j;
  const double r00 = std::sqrt(j(0, 0).real());
  const cplx r01 = j(0, 1) / r00;
  const double pivot = j(1, 1).real() - std::norm(r01);
  if (!(pivot > 0.0)) throw NotPositiveDefinite(form.omega);
  return Mat2{r00, r01, 0.0, std::sqrt(pivot)};
}

Mat2 unitarize(const LaurentMatrix& squier_image, double omega) {
  const Mat2 r = cholesky_2x2(squier_form_at(omega));
  // Trivial braids map to I exactly rather than R R^-1 up to rounding.
  if (squier_image == LaurentMatrix::identity()) return Mat2::identity();
  return r * specialize_matrix(squier_image, omega) * inverse(r);
}

Mat2 unitarize(const BraidWord& w, double omega) {
  return unitarize(evaluate_word(w, Representation::squier), omega);
}

double j_unitarity_residual(int generator, double omega) {
  const Mat2 beta = specialize_matrix(burau_generator(generator, Representation::squier), omega);
  const Mat2 j = squier_form_at(omega).j;
  return max_abs_diff(beta.adjoint() * j * beta, j);
}

double wrap_phase(double angle) {
  double p = std::fmod(angle, kTwoPi);
  if (p < 0.0) p += kTwoPi;
  // fmod of a tiny negative value can round back up to exactly 2pi.
  if (p >= kTwoPi) p = 0.0;
  return p;
}

double shortest_arc(std::span<const double> phases) {
  if (phases.empty()) throw EmptySpectrum();
  std::vector<double> sorted(phases.size());
  std::transform(phases.begin(), phases.end(), sorted.begin(), wrap_phase);
  std::sort(sorted.begin(), sorted.end());
  double largest_gap = sorted.front() + kTwoPi - sorted.back();
  for (std::size_t i = 1; i < sorted.size(); ++i) {
    largest_gap = std::max(largest_gap, sorted[i] - sorted[i - 1]);
  }
  return std::max(0.0, kTwoPi - largest_gap);
}

namespace {

template <std::size_t N>
PhaseList phases_from_eigenvalues(const ComplexMatrix<N>& u, const std::array<cplx, N>& ev) {
  PhaseList out;
  out.phases.reserve(N);
  for (const cplx& z : ev) {
    if (std::abs(std::abs(z) - 1.0) > kSpectrumUnitarityTol) {
      throw NoConvergence("eigenphases: eigenvalue off the unit circle");
    }
    const double theta = wrap_phase(std::arg(z));
    const cplx on_circle = std::polar(1.0, theta);
    if (std::abs(det(u - ComplexMatrix<N>::identity() * on_circle)) > kEigenResidualTol) {
      throw NoConvergence("eigenphases: characteristic polynomial residual too large");
    }
    out.phases.push_back(theta);
  }
  std::sort(out.phases.begin(), out.phases.end());
  out.arc = shortest_arc(out.phases);
  return out;
}

// For unitary u = e^{i gamma} W with W in SU(2), W = cos(phi) I - i sin(phi) n.sigma.
// Reading cos(phi) from the trace and sin(phi) from the traceless part keeps
// full accuracy when the two eigenvalues nearly coincide, where the quadratic
// formula loses half the digits.
std::array<cplx, 2> unitary_2x2_eigenvalues(const Mat2& u) {
  const cplx phase = std::polar(1.0, 0.5 * std::arg(det(u)));
  const Mat2 w = u * std::conj(phase);
  const double cos_phi = 0.5 * (w(0, 0) + w(1, 1)).real();
  const double nz = 0.5 * (w(1, 1) - w(0, 0)).imag();
  const cplx ny = 0.5 * (w(1, 0) - w(0, 1));
  const cplx nx = 0.5 * (w(1, 0) + w(0, 1));
  const double sin_phi = std::sqrt(nz * nz + std::norm(ny) + std::norm(nx));
  const double phi = std::atan2(sin_phi, cos_phi);
  return {phase * std::polar(1.0, phi), phase * std::polar(1.0, -phi)};
}

}  // namespace

PhaseList eigenphases(const Mat2& u) {
  require_unitary(u, kSpectrumUnitarityTol, "eigenphases");
  return phases_from_eigenvalues(u, unitary_2x2_eigenvalues(u));
}

PhaseList eigenphases(const Mat4& u) {
  require_unitary(u, kSpectrumUnitarityTol, "eigenphases");
  return phases_from_eigenvalues(u, qr_eigenvalues(u));
}

double helstrom_from_arc(double arc) { return 0.5 * (1.0 + std::sin(0.5 * std::min(arc, std::numbers::pi))); }

namespace {

template <std::size_t N>
HelstromResult helstrom_impl(const ComplexMatrix<N>& u0, const ComplexMatrix<N>& u1) {
  require_unitary(u0, kSpectrumUnitarityTol, "helstrom: first argument");
  require_unitary(u1, kSpectrumUnitarityTol, "helstrom: second argument");
  const double arc = eigenphases(u0.adjoint() * u1).arc;
  return {arc, helstrom_from_arc(arc)};
}

}  // namespace

HelstromResult helstrom_detail(const Mat2& u0, const Mat2& u1) { return helstrom_impl(u0, u1); }
HelstromResult helstrom_detail(const Mat4& u0, const Mat4& u1) { return helstrom_impl(u0, u1); }

}  // namespace braidswitch
