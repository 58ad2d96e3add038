#include "braidswitch/switch_device.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace braidswitch {

Mat2 rotation(Axis axis, double angle) {
  const double c = std::cos(0.5 * angle);
  const double s = std::sin(0.5 * angle);
  const cplx i{0.0, 1.0};
  switch (axis) {
    case Axis::x:
      return Mat2{c, -i * s, -i * s, c};
    case Axis::y:
      return Mat2{c, -s, s, c};
    case Axis::z:
      return Mat2{std::polar(1.0, -0.5 * angle), 0.0, 0.0, std::polar(1.0, 0.5 * angle)};
  }
  throw std::invalid_argument("rotation: bad axis");
}

TargetPair::TargetPair(Mat2 a, Mat2 b) : a_(a), b_(b) {
  require_unitary(a_, kIdentityTol, "target A");
  require_unitary(b_, kIdentityTol, "target B");
}

double TargetPair::commutator_norm() const { return max_abs_diff(a_ * b_, b_ * a_); }

double PhaseMap::operator()(double omega) const {
  switch (kind) {
    case Kind::identity:
      return omega;
    case Kind::constant:
      return offset;
    case Kind::linear:
      return slope * omega + offset;
  }
  return omega;
}

Grid Grid::full_circle(std::size_t points) {
  return {0.0, kTwoPi * static_cast<double>(points - 1) / static_cast<double>(points), points};
}

double Grid::step() const { return (omega_max - omega_min) / static_cast<double>(points - 1); }

double Grid::at(std::size_t i) const {
  if (i + 1 == points) return omega_max;
  return omega_min + step() * static_cast<double>(i);
}

void Grid::validate() const {
  if (points < 2) throw std::invalid_argument("grid needs at least 2 points");
  if (!(std::isfinite(omega_min) && std::isfinite(omega_max))) throw std::invalid_argument("grid bounds must be finite");
  if (!(omega_min >= 0.0 && omega_max < kTwoPi && omega_min <= omega_max)) {
    throw std::invalid_argument("grid must satisfy 0 <= min <= max < 2pi");
  }
}

const char* to_string(Placement p) {
  switch (p) {
    case Placement::both:
      return "both";
    case Placement::pre:
      return "pre";
    case Placement::post:
      return "post";
  }
  return "both";
}

Placement parse_placement(const std::string& text) {
  if (text == "both") return Placement::both;
  if (text == "pre") return Placement::pre;
  if (text == "post") return Placement::post;
  throw std::invalid_argument("placement must be both, pre or post, got '" + text + "'");
}

DeviceConfig DeviceConfig::standard() {
  const BraidWord w = parse_braid_word("1 2 1");
  return DeviceConfig{TargetPair(rotation(Axis::x, 1.1), rotation(Axis::z, 0.9)), w, w, PhaseMap::identity(),
                      Grid::full_circle()};
}

DeviceConfig DeviceConfig::with_word(const BraidWord& w, Placement placement) const {
  DeviceConfig cfg = *this;
  cfg.w_pre = placement == Placement::post ? BraidWord{} : w;
  cfg.w_post = placement == Placement::pre ? BraidWord{} : w;
  return cfg;
}

Mat2 mixer(const BraidWord& w, double omega) { return unitarize(w, omega); }

Mat4 switch_matrix(const TargetPair& targets, double theta) {
  return block_diag(targets.b() * targets.a(), std::polar(1.0, theta) * (targets.a() * targets.b()));
}

Mat4 test_device(const DeviceConfig& cfg, double omega) {
  const Mat2 id = Mat2::identity();
  const Mat4 s = switch_matrix(cfg.targets, cfg.phase_map(omega));
  return kron(mixer(cfg.w_post, omega), id) * s * kron(mixer(cfg.w_pre, omega), id);
}

double p_fixed(const TargetPair& targets) {
  const Mat2 id = Mat2::identity();
  const double ab = helstrom(id, targets.a() * targets.b());
  const double ba = helstrom(id, targets.b() * targets.a());
  // AB = A (BA) A^dagger, so the two spectra coincide.
  if (std::abs(ab - ba) > 1e-10) {
    std::ostringstream os;
    os.precision(17);
    os << "p_fixed: p*(I,AB) = " << ab << " and p*(I,BA) = " << ba << " disagree";
    throw std::logic_error(os.str());
  }
  return std::max(ab, ba);
}

HelstromResult switch_performance(const DeviceConfig& cfg, double omega) {
  return helstrom_detail(Mat4::identity(), switch_matrix(cfg.targets, cfg.phase_map(omega)));
}

HelstromResult test_performance(const DeviceConfig& cfg, double omega) {
  return helstrom_detail(Mat4::identity(), test_device(cfg, omega));
}

double p_switch(const DeviceConfig& cfg, double omega) { return switch_performance(cfg, omega).probability; }
double p_test(const DeviceConfig& cfg, double omega) { return test_performance(cfg, omega).probability; }
double gap_switch(const DeviceConfig& cfg, double omega) { return p_switch(cfg, omega) - p_fixed(cfg.targets); }
double gap_test(const DeviceConfig& cfg, double omega) { return p_test(cfg, omega) - p_fixed(cfg.targets); }

}  // namespace braidswitch
