// braidswitch: identity checks, omega sweeps and witness-gap extrema for the
// braid-controlled quantum switch.
//
// Exit codes: 0 success, 1 failed check, 2 config error, 3 I/O error.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "braidswitch/kernels/kernels.hpp"
#include "braidswitch/run_config.hpp"
#include "braidswitch/sweep.hpp"
#include "braidswitch/verify.hpp"

namespace bs = braidswitch;

namespace {

enum ExitCode { kOk = 0, kCheckFailed = 1, kConfigError = 2, kIoError = 3 };

bs::RunConfig load_or_default(const std::string& path) {
  return path.empty() ? bs::RunConfig{} : bs::load_run_config(path);
}

bs::DeviceConfig resolve_device(const bs::RunConfig& rc, const std::optional<std::string>& placement,
                                std::size_t points) {
  bs::DeviceConfig dev = rc.device;
  if (placement) {
    try {
      dev = rc.device_for(bs::parse_placement(*placement));
    } catch (const std::invalid_argument& e) {
      throw bs::ConfigError(e.what());
    }
  }
  if (points != 0) {
    // Keep the configured lower bound; re-derive the upper one for the full circle default.
    const bool full_circle = dev.grid.omega_min == 0.0 && dev.grid.omega_max == bs::Grid::full_circle(dev.grid.points).omega_max;
    dev.grid.points = points;
    if (full_circle) dev.grid = bs::Grid::full_circle(points);
    try {
      dev.grid.validate();
    } catch (const std::invalid_argument& e) {
      throw bs::ConfigError(e.what());
    }
  }
  return dev;
}

bs::Placement effective_placement(const bs::RunConfig& rc, const std::optional<std::string>& placement) {
  return placement ? bs::parse_placement(*placement) : rc.placement;
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw bs::IoError("cannot open '" + path + "' for writing");
  out << content;
  out.flush();
  if (!out) throw bs::IoError("write to '" + path + "' failed");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Braid-controlled quantum switch: identity checks, sweeps and witness gaps"};
  app.require_subcommand(1);

  std::string isa_name;
  app.add_option("--isa", isa_name, "Kernel variant for batched diagnostics (scalar|avx2|neon)");

  auto* verify = app.add_subcommand("verify", "Check the braid, J-unitarity and similarity identities");
  bool inject_fault = false;
  verify->add_flag("--inject-fault", inject_fault, "Negate the s entry of beta_2 (falsifiability check)");

  auto* sweep = app.add_subcommand("sweep", "Evaluate all diagnostics over the omega grid and write CSV");
  std::string sweep_config, sweep_out, sweep_svg;
  std::size_t sweep_points = 0;
  unsigned sweep_threads = 0;
  std::optional<std::string> sweep_placement;
  sweep->add_option("--config", sweep_config, "Run configuration file");
  sweep->add_option("--out", sweep_out, "Output CSV path (overrides 'out' in the config)");
  sweep->add_option("--points", sweep_points, "Grid points (overrides grid.points)");
  sweep->add_option("--threads", sweep_threads, "Worker threads (0 = all cores)");
  sweep->add_option("--placement", sweep_placement, "Mixer placement both|pre|post");
  sweep->add_option("--svg", sweep_svg, "Also write an SVG chart of the gaps");

  auto* extrema = app.add_subcommand("extrema", "Report witness-gap extrema inside the positivity window");
  std::string extrema_config;
  std::size_t extrema_points = 0;
  std::optional<std::string> extrema_placement;
  extrema->add_option("--config", extrema_config, "Run configuration file");
  extrema->add_option("--placement", extrema_placement, "Mixer placement both|pre|post");
  extrema->add_option("--points", extrema_points, "Grid points (overrides grid.points)");

  auto* validate = app.add_subcommand("validate", "Re-read a sweep CSV and check its row invariants");
  std::string csv_path;
  validate->add_option("--csv", csv_path, "Sweep CSV")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kConfigError;
  }

  try {
    if (!isa_name.empty()) {
      bool found = false;
      for (auto isa : {bs::kernels::Isa::scalar, bs::kernels::Isa::avx2, bs::kernels::Isa::neon}) {
        if (isa_name == bs::kernels::to_string(isa)) {
          bs::kernels::set_active_isa(isa);
          found = true;
        }
      }
      if (!found) throw bs::ConfigError("unknown --isa '" + isa_name + "'");
    }

    if (*verify) {
      bs::VerifyOptions opts;
      opts.flip_beta2_sign = inject_fault;
      return bs::print_checks(std::cout, bs::run_verify(opts)) ? kOk : kCheckFailed;
    }

    if (*sweep) {
      const bs::RunConfig rc = load_or_default(sweep_config);
      const bs::DeviceConfig dev = resolve_device(rc, sweep_placement, sweep_points);
      const std::string out_path = sweep_out.empty() ? rc.out_path : sweep_out;
      if (out_path.empty()) throw bs::ConfigError("no output path: pass --out or set 'out' in the config");
      const auto rows = bs::run_sweep(dev, sweep_threads);
      write_file(out_path, bs::to_csv(rows));
      if (!sweep_svg.empty()) {
        std::ostringstream svg;
        bs::write_gap_svg(svg, rows);
        write_file(sweep_svg, svg.str());
      }
      std::cerr << "wrote " << rows.size() << " rows to " << out_path << '\n';
      return kOk;
    }

    if (*extrema) {
      const bs::RunConfig rc = load_or_default(extrema_config);
      const bs::DeviceConfig dev = resolve_device(rc, extrema_placement, extrema_points);
      auto report = bs::find_extrema(dev, bs::run_sweep(dev));
      report.placement = effective_placement(rc, extrema_placement);
      bs::write_extrema(std::cout, report);
      return kOk;
    }

    if (*validate) {
      std::ifstream in(csv_path, std::ios::binary);
      if (!in) throw bs::IoError("cannot read '" + csv_path + "'");
      const auto v = bs::validate_csv(in);
      for (const auto& p : v.problems) std::cout << "INVALID " << p << '\n';
      std::cout << (v.ok() ? "OK " : "FAILED ") << v.rows << " rows\n";
      return v.ok() ? kOk : kCheckFailed;
    }
  } catch (const bs::IoError& e) {
    std::cerr << "I/O error: " << e.what() << '\n';
    return kIoError;
  } catch (const bs::ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kConfigError;
  } catch (const std::invalid_argument& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kConfigError;
  }
  return kOk;
}
