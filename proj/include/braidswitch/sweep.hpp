#pragma once

#include <cstddef>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "braidswitch/switch_device.hpp"

namespace braidswitch {

/// One grid point of a sweep. Test-device fields (and the Euclidean error of
/// the mixers) exist only inside the positivity window.
struct SweepRow {
  double omega = 0.0;
  double j_err_1 = 0.0;
  double j_err_2 = 0.0;
  std::optional<double> euclid_err;
  double arc_switch = 0.0;
  std::optional<double> arc_test;
  double p_switch = 0.0;
  std::optional<double> p_test;
  double p_fixed = 0.0;
  double gap_switch = 0.0;
  std::optional<double> gap_test;
  bool in_window = false;
};

inline constexpr const char* kSweepCsvHeader =
    "omega,j_err_1,j_err_2,euclid_err,arc_switch,arc_test,p_switch,p_test,p_fixed,gap_switch,gap_test,in_window";

/// Evaluates every grid point of cfg.grid. Rows are independent and computed
/// on `threads` workers (0 = hardware concurrency); output order is by omega
/// and bit-identical for any thread count.
std::vector<SweepRow> run_sweep(const DeviceConfig& cfg, unsigned threads = 0);

/// Header plus one line per row, numbers as %.17g, empty optional fields.
void write_csv(std::ostream& out, const std::vector<SweepRow>& rows);
std::string to_csv(const std::vector<SweepRow>& rows);

struct CsvValidation {
  std::size_t rows = 0;
  std::vector<std::string> problems;
  bool ok() const { return problems.empty(); }
};

/// Re-reads a sweep CSV and checks the row invariants.
CsvValidation validate_csv(std::istream& in);

struct Extremum {
  double omega_grid = 0.0;  ///< grid point attaining the extremum
  double value_grid = 0.0;
  double omega = 0.0;       ///< after three-point parabolic refinement
  double value = 0.0;
  double uncertainty = 0.0;  ///< grid spacing
  bool refined = false;      ///< false on plateaus and window edges
};

struct ExtremaReport {
  Placement placement = Placement::both;
  std::size_t grid_points = 0;
  std::size_t window_points = 0;
  double grid_step = 0.0;
  double p_fixed = 0.0;
  Extremum switch_max;
  Extremum test_min;
  Extremum test_max;
  bool test_sign_change = false;
  /// Smallest omega where gap_test changes sign, refined by bisection.
  std::optional<double> test_zero_crossing;
};

using GapFunction = std::function<double(double)>;

/// Requires at least one in-window row. Zero crossings of gap_test are
/// refined by bisection on `gap` (defaults to gap_test on `cfg`).
ExtremaReport find_extrema(const DeviceConfig& cfg, const std::vector<SweepRow>& rows, GapFunction gap = {});

/// Bisection on [lo, hi] for a sign change of f; f(lo) and f(hi) must differ in sign.
double bisect_root(const GapFunction& f, double lo, double hi, int iterations = 60);

/// key=value lines.
void write_extrema(std::ostream& out, const ExtremaReport& report);

/// Minimal SVG polyline chart of gap_switch and gap_test against omega.
void write_gap_svg(std::ostream& out, const std::vector<SweepRow>& rows);

}  // namespace braidswitch
