#include "braidswitch/sweep.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>
#include <thread>

#include "braidswitch/kernels/kernels.hpp"

namespace braidswitch {

namespace {

struct PointResult {
  HelstromResult sw;
  std::optional<HelstromResult> test;
  Mat2 m_pre;
  Mat2 m_post;
};

PointResult evaluate_point(const DeviceConfig& cfg, double omega, bool in_window) {
  PointResult r;
  r.sw = switch_performance(cfg, omega);
  if (in_window) {
    r.m_pre = mixer(cfg.w_pre, omega);
    r.m_post = mixer(cfg.w_post, omega);
    r.test = test_performance(cfg, omega);
  }
  return r;
}

}  // namespace

std::vector<SweepRow> run_sweep(const DeviceConfig& cfg, unsigned threads) {
  cfg.grid.validate();
  const std::size_t n = cfg.grid.points;
  const double pf = p_fixed(cfg.targets);

  std::vector<double> omega(n);
  std::vector<char> window(n);
  for (std::size_t i = 0; i < n; ++i) {
    omega[i] = cfg.grid.at(i);
    window[i] = in_positivity_window(omega[i]);
  }

  std::vector<PointResult> points(n);
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, n));
  {
    std::vector<std::jthread> workers;
    const std::size_t chunk = (n + threads - 1) / threads;
    for (unsigned t = 0; t < threads; ++t) {
      const std::size_t lo = t * chunk;
      const std::size_t hi = std::min(n, lo + chunk);
      workers.emplace_back([&, lo, hi] {
        for (std::size_t i = lo; i < hi; ++i) points[i] = evaluate_point(cfg, omega[i], window[i]);
      });
    }
  }

  std::vector<double> j1(n), j2(n);
  kernels::j_unitarity_residuals(omega, j1, j2);
  kernels::Mat2Batch pre(n), post(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (window[i]) {
      pre.set(i, points[i].m_pre);
      post.set(i, points[i].m_post);
    }
  }
  std::vector<double> pre_err(n), post_err(n);
  kernels::unitarity_errors(pre, pre_err);
  kernels::unitarity_errors(post, post_err);

  std::vector<SweepRow> rows(n);
  for (std::size_t i = 0; i < n; ++i) {
    SweepRow& row = rows[i];
    const PointResult& p = points[i];
    row.omega = omega[i];
    row.j_err_1 = j1[i];
    row.j_err_2 = j2[i];
    row.arc_switch = p.sw.arc;
    row.p_switch = p.sw.probability;
    row.p_fixed = pf;
    row.gap_switch = p.sw.probability - pf;
    row.in_window = window[i];
    if (window[i]) {
      row.euclid_err = std::max(pre_err[i], post_err[i]);
      row.arc_test = p.test->arc;
      row.p_test = p.test->probability;
      row.gap_test = p.test->probability - pf;
    }
  }
  return rows;
}

namespace {

void put_number(std::string& line, double v) {
  char buf[32];
  const int len = std::snprintf(buf, sizeof buf, "%.17g", v);
  line.append(buf, static_cast<std::size_t>(len));
}

void put_optional(std::string& line, const std::optional<double>& v) {
  if (v) put_number(line, *v);
}

}  // namespace

void write_csv(std::ostream& out, const std::vector<SweepRow>& rows) {
  out << kSweepCsvHeader << '\n';
  std::string line;
  for (const auto& r : rows) {
    line.clear();
    put_number(line, r.omega);
    line += ',';
    put_number(line, r.j_err_1);
    line += ',';
    put_number(line, r.j_err_2);
    line += ',';
    put_optional(line, r.euclid_err);
    line += ',';
    put_number(line, r.arc_switch);
    line += ',';
    put_optional(line, r.arc_test);
    line += ',';
    put_number(line, r.p_switch);
    line += ',';
    put_optional(line, r.p_test);
    line += ',';
    put_number(line, r.p_fixed);
    line += ',';
    put_number(line, r.gap_switch);
    line += ',';
    put_optional(line, r.gap_test);
    line += ',';
    line += r.in_window ? "true" : "false";
    out << line << '\n';
  }
}

std::string to_csv(const std::vector<SweepRow>& rows) {
  std::ostringstream os;
  write_csv(os, rows);
  return os.str();
}

namespace {

constexpr double kProbabilitySlack = 1e-15;
constexpr double kGapTol = 1e-12;

std::vector<std::string> split_fields(const std::string& line) {
  std::vector<std::string> fields;
  std::size_t start = 0;
  while (true) {
    const auto comma = line.find(',', start);
    fields.push_back(line.substr(start, comma == std::string::npos ? std::string::npos : comma - start));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return fields;
}

std::optional<double> read_number(const std::string& s) {
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size()) return std::nullopt;
  return v;
}

}  // namespace

CsvValidation validate_csv(std::istream& in) {
  CsvValidation report;
  auto problem = [&report](std::size_t line_no, const std::string& msg) {
    report.problems.push_back("line " + std::to_string(line_no) + ": " + msg);
  };

  std::string line;
  if (!std::getline(in, line)) {
    report.problems.emplace_back("empty file");
    return report;
  }
  if (line != kSweepCsvHeader) {
    report.problems.emplace_back("line 1: header mismatch");
    return report;
  }

  std::size_t line_no = 1;
  std::optional<double> prev_omega;
  std::optional<double> first_p_fixed;
  while (std::getline(in, line)) {
    ++line_no;
    ++report.rows;
    const auto f = split_fields(line);
    if (f.size() != 12) {
      problem(line_no, "expected 12 fields, got " + std::to_string(f.size()));
      continue;
    }
    const bool in_window = f[11] == "true";
    if (!in_window && f[11] != "false") {
      problem(line_no, "in_window must be true or false");
      continue;
    }
    // Always-present columns: 0,1,2,4,6,8,9. Window-only: 3,5,7,10.
    std::array<std::optional<double>, 11> v;
    bool parse_ok = true;
    for (std::size_t k = 0; k < 11; ++k) {
      const bool window_only = k == 3 || k == 5 || k == 7 || k == 10;
      if (window_only && !in_window) {
        if (!f[k].empty()) {
          problem(line_no, "field " + std::to_string(k + 1) + " must be empty outside the window");
          parse_ok = false;
        }
        continue;
      }
      v[k] = read_number(f[k]);
      if (!v[k]) {
        problem(line_no, "field " + std::to_string(k + 1) + " is not a number");
        parse_ok = false;
      }
    }
    if (!parse_ok) continue;

    const double omega = *v[0];
    if (prev_omega && !(omega > *prev_omega)) problem(line_no, "omega not strictly increasing");
    prev_omega = omega;
    if (in_positivity_window(omega) != in_window) problem(line_no, "in_window disagrees with J(omega) positivity");

    const double pf = *v[8];
    if (!first_p_fixed) first_p_fixed = pf;
    if (pf != *first_p_fixed) problem(line_no, "p_fixed differs from the first row");

    auto check_p = [&](double p, const char* name) {
      if (p < 0.5 - kProbabilitySlack || p > 1.0 + kProbabilitySlack) {
        problem(line_no, std::string(name) + " outside [1/2, 1]");
      }
    };
    check_p(*v[6], "p_switch");
    check_p(pf, "p_fixed");
    if (std::abs(*v[9] - (*v[6] - pf)) > kGapTol) problem(line_no, "gap_switch != p_switch - p_fixed");
    if (*v[4] < 0.0 || *v[4] >= kTwoPi) problem(line_no, "arc_switch outside [0, 2pi)");
    if (in_window) {
      check_p(*v[7], "p_test");
      if (std::abs(*v[10] - (*v[7] - pf)) > kGapTol) problem(line_no, "gap_test != p_test - p_fixed");
      if (*v[5] < 0.0 || *v[5] >= kTwoPi) problem(line_no, "arc_test outside [0, 2pi)");
    }
  }
  return report;
}

namespace {

// Three-point parabolic refinement of an interior strict extremum. `sign` is
// +1 for a maximum, -1 for a minimum.
Extremum refine(const std::vector<double>& xs, const std::vector<double>& ys, std::size_t i, double step, int sign) {
  Extremum e;
  e.omega_grid = e.omega = xs[i];
  e.value_grid = e.value = ys[i];
  e.uncertainty = step;
  if (i == 0 || i + 1 >= xs.size()) return e;
  const double y0 = sign * ys[i - 1];
  const double y1 = sign * ys[i];
  const double y2 = sign * ys[i + 1];
  if (!(y1 > y0 && y1 > y2)) return e;
  const double curvature = y0 - 2.0 * y1 + y2;
  if (!(curvature < 0.0)) return e;
  const double frac = 0.5 * (y0 - y2) / curvature;
  e.omega = xs[i] + frac * step;
  e.value = sign * (y1 - 0.25 * (y0 - y2) * frac);
  e.refined = true;
  return e;
}

// First index attaining the extremum.
std::size_t arg_extreme(const std::vector<double>& ys, int sign) {
  std::size_t best = 0;
  for (std::size_t i = 1; i < ys.size(); ++i) {
    if (sign * ys[i] > sign * ys[best]) best = i;
  }
  return best;
}

}  // namespace

double bisect_root(const GapFunction& f, double lo, double hi, int iterations) {
  const bool lo_negative = f(lo) < 0.0;
  if (lo_negative == (f(hi) < 0.0)) throw std::invalid_argument("bisect_root: no sign change on the bracket");
  for (int it = 0; it < iterations; ++it) {
    const double mid = 0.5 * (lo + hi);
    if ((f(mid) < 0.0) == lo_negative) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

ExtremaReport find_extrema(const DeviceConfig& cfg, const std::vector<SweepRow>& rows, GapFunction gap) {
  if (!gap) gap = [&cfg](double omega) { return gap_test(cfg, omega); };
  ExtremaReport rep;
  rep.grid_points = rows.size();
  rep.grid_step = cfg.grid.step();

  std::vector<double> xs, sw, te;
  for (const auto& r : rows) {
    if (!r.in_window) continue;
    xs.push_back(r.omega);
    sw.push_back(r.gap_switch);
    te.push_back(*r.gap_test);
    rep.p_fixed = r.p_fixed;
  }
  rep.window_points = xs.size();
  if (xs.empty()) throw std::invalid_argument("find_extrema: no grid point inside the positivity window");

  rep.switch_max = refine(xs, sw, arg_extreme(sw, +1), rep.grid_step, +1);
  rep.test_min = refine(xs, te, arg_extreme(te, -1), rep.grid_step, -1);
  rep.test_max = refine(xs, te, arg_extreme(te, +1), rep.grid_step, +1);
  rep.test_sign_change = rep.test_min.value_grid < 0.0 && rep.test_max.value_grid > 0.0;

  for (std::size_t i = 0; i + 1 < xs.size(); ++i) {
    if ((te[i] < 0.0) == (te[i + 1] < 0.0)) continue;
    // Window rows are contiguous on [0, 2pi/3), so neighbours are adjacent grid points.
    rep.test_zero_crossing = bisect_root(gap, xs[i], xs[i + 1]);
    break;
  }
  return rep;
}

void write_extrema(std::ostream& out, const ExtremaReport& r) {
  auto num = [](double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return std::string(buf);
  };
  out << "placement=" << to_string(r.placement) << '\n'
      << "grid_points=" << r.grid_points << '\n'
      << "window_points=" << r.window_points << '\n'
      << "grid_step=" << num(r.grid_step) << '\n'
      << "p_fixed=" << num(r.p_fixed) << '\n'
      << "gap_switch_max=" << num(r.switch_max.value) << '\n'
      << "gap_switch_argmax=" << num(r.switch_max.omega) << '\n'
      << "gap_switch_argmax_uncertainty=" << num(r.switch_max.uncertainty) << '\n'
      << "gap_switch_refined=" << (r.switch_max.refined ? "true" : "false") << '\n'
      << "gap_test_min=" << num(r.test_min.value) << '\n'
      << "gap_test_argmin=" << num(r.test_min.omega) << '\n'
      << "gap_test_argmin_uncertainty=" << num(r.test_min.uncertainty) << '\n'
      << "gap_test_refined=" << (r.test_min.refined ? "true" : "false") << '\n'
      << "gap_test_max=" << num(r.test_max.value) << '\n'
      << "gap_test_sign_change=" << (r.test_sign_change ? "true" : "false") << '\n'
      << "gap_test_zero_crossing=" << (r.test_zero_crossing ? num(*r.test_zero_crossing) : "none") << '\n';
}

void write_gap_svg(std::ostream& out, const std::vector<SweepRow>& rows) {
  constexpr double width = 640, height = 360, pad = 40;
  double x_min = 1e300, x_max = -1e300, y_min = 0.0, y_max = 0.0;
  for (const auto& r : rows) {
    if (!r.in_window) continue;
    x_min = std::min(x_min, r.omega);
    x_max = std::max(x_max, r.omega);
    y_min = std::min({y_min, r.gap_switch, *r.gap_test});
    y_max = std::max({y_max, r.gap_switch, *r.gap_test});
  }
  if (x_max <= x_min) x_max = x_min + 1.0;
  if (y_max <= y_min) y_max = y_min + 1.0;
  auto px = [&](double x) { return pad + (x - x_min) / (x_max - x_min) * (width - 2 * pad); };
  auto py = [&](double y) { return height - pad - (y - y_min) / (y_max - y_min) * (height - 2 * pad); };

  auto polyline = [&](auto value, const char* colour) {
    out << "<polyline fill=\"none\" stroke=\"" << colour << "\" stroke-width=\"1.5\" points=\"";
    for (const auto& r : rows) {
      if (!r.in_window) continue;
      char buf[64];
      std::snprintf(buf, sizeof buf, "%.2f,%.2f ", px(r.omega), py(value(r)));
      out << buf;
    }
    out << "\"/>\n";
  };

  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height << "\">\n";
  out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  out << "<line x1=\"" << pad << "\" y1=\"" << py(0.0) << "\" x2=\"" << width - pad << "\" y2=\"" << py(0.0)
      << "\" stroke=\"#999\"/>\n";
  polyline([](const SweepRow& r) { return r.gap_switch; }, "#1f77b4");
  polyline([](const SweepRow& r) { return *r.gap_test; }, "#d62728");
  out << "<text x=\"" << pad << "\" y=\"20\" font-size=\"12\">gap_switch (blue), gap_test (red) vs omega</text>\n";
  out << "</svg>\n";
}

}  // namespace braidswitch
