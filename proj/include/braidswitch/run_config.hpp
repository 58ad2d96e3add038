#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>

#include "braidswitch/switch_device.hpp"

namespace braidswitch {

/// Malformed run configuration (CLI exit code 2).
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// File could not be read or written (CLI exit code 3).
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Parsed run configuration. Every key is optional; omitted keys fall back to
/// the standard experiment (A = R_x(1.1), B = R_z(0.9), theta = omega,
/// w = 1 2 1 on both sides, 2001 points over [0, 2pi)).
///
/// Format: one `key = value` per line, `#` starts a comment.
///
///   a.axis = x | y | z         a.angle = <radians>
///   a.matrix = <8 reals>       (re im pairs, row-major; replaces axis/angle)
///   b.axis, b.angle, b.matrix  as for a
///   w = <braid word>           placement = both | pre | post
///   w_pre = <braid word>       w_post = <braid word>   (instead of w/placement)
///   theta = identity | constant | linear
///   theta.value = <c>          (constant)
///   theta.slope = <a>          theta.offset = <b>      (linear)
///   grid.min, grid.max         (radians, 0 <= min <= max < 2pi)
///   grid.points = <n >= 2>
///   out = <csv path>
struct RunConfig {
  DeviceConfig device = DeviceConfig::standard();
  BraidWord word = parse_braid_word("1 2 1");
  Placement placement = Placement::both;
  /// w_pre / w_post were given directly; placement overrides do not apply.
  bool explicit_words = false;
  std::string out_path;

  /// The device with `word` moved to the given placement. With explicit
  /// words this throws ConfigError.
  DeviceConfig device_for(Placement p) const;
};

RunConfig parse_run_config(std::string_view text);
RunConfig load_run_config(const std::filesystem::path& path);

}  // namespace braidswitch
