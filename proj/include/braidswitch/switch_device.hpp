#pragma once

#include <cstddef>
#include <string>

#include "braidswitch/braid_word.hpp"
#include "braidswitch/complex_matrix.hpp"
#include "braidswitch/unitary_numerics.hpp"

namespace braidswitch {

enum class Axis { x, y, z };

/// exp(-i angle sigma_axis / 2).
Mat2 rotation(Axis axis, double angle);

/// The two target operations. Validated unitary on construction.
class TargetPair {
 public:
  TargetPair(Mat2 a, Mat2 b);

  const Mat2& a() const { return a_; }
  const Mat2& b() const { return b_; }
  /// max-norm of AB - BA; zero means the switch cannot beat a fixed order.
  double commutator_norm() const;

 private:
  Mat2 a_;
  Mat2 b_;
};

/// omega -> theta. identity: theta = omega; constant: theta = offset;
/// linear: theta = slope * omega + offset.
struct PhaseMap {
  enum class Kind { identity, constant, linear };
  Kind kind = Kind::identity;
  double slope = 1.0;
  double offset = 0.0;

  static PhaseMap identity() { return {}; }
  static PhaseMap constant(double c) { return {Kind::constant, 0.0, c}; }
  static PhaseMap linear(double slope, double offset) { return {Kind::linear, slope, offset}; }

  double operator()(double omega) const;
};

/// Inclusive linear grid omega_min, ..., omega_max with `points` samples.
struct Grid {
  double omega_min = 0.0;
  double omega_max = kTwoPi * 2000.0 / 2001.0;
  std::size_t points = 2001;

  /// 2001 samples over [0, 2pi) with spacing 2pi / 2001.
  static Grid full_circle(std::size_t points = 2001);

  double step() const;
  double at(std::size_t i) const;
  /// Throws std::invalid_argument unless 0 <= min <= max < 2pi and points >= 2.
  void validate() const;
};

/// Which side(s) of the switch carry the control mixer.
enum class Placement { both, pre, post };

const char* to_string(Placement p);
Placement parse_placement(const std::string& text);

struct DeviceConfig {
  TargetPair targets;
  BraidWord w_pre;
  BraidWord w_post;
  PhaseMap phase_map;
  Grid grid;

  /// A = R_x(1.1), B = R_z(0.9), theta(omega) = omega, w = 1 2 1 on both sides.
  static DeviceConfig standard();
  /// Same targets and phase map with `w` placed per `placement`; the other side gets the identity.
  DeviceConfig with_word(const BraidWord& w, Placement placement) const;
};

/// Unitarized image of `w` acting on the control qubit.
Mat2 mixer(const BraidWord& w, double omega);

/// |0><0| (x) BA + e^{i theta} |1><1| (x) AB, control factor first.
Mat4 switch_matrix(const TargetPair& targets, double theta);

/// (M_post (x) I) S(theta(omega)) (M_pre (x) I).
Mat4 test_device(const DeviceConfig& cfg, double omega);

/// max(p*(I, AB), p*(I, BA)). Throws std::logic_error if the two disagree by more than 1e-10.
double p_fixed(const TargetPair& targets);

HelstromResult switch_performance(const DeviceConfig& cfg, double omega);
HelstromResult test_performance(const DeviceConfig& cfg, double omega);

double p_switch(const DeviceConfig& cfg, double omega);
double p_test(const DeviceConfig& cfg, double omega);
double gap_switch(const DeviceConfig& cfg, double omega);
double gap_test(const DeviceConfig& cfg, double omega);

}  // namespace braidswitch
