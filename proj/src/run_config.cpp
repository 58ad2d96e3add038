#include "braidswitch/run_config.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <vector>

namespace braidswitch {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

double parse_real(const std::string& key, std::string_view text) {
  text = trim(text);
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc{} || ptr != text.data() + text.size() || text.empty()) {
    throw ConfigError(key + ": expected a real number, got '" + std::string(text) + "'");
  }
  if (!std::isfinite(v)) throw ConfigError(key + ": value must be finite");
  return v;
}

std::size_t parse_count(const std::string& key, std::string_view text) {
  text = trim(text);
  std::size_t v = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc{} || ptr != text.data() + text.size() || text.empty()) {
    throw ConfigError(key + ": expected a non-negative integer, got '" + std::string(text) + "'");
  }
  return v;
}

Axis parse_axis(const std::string& key, const std::string& v) {
  if (v == "x") return Axis::x;
  if (v == "y") return Axis::y;
  if (v == "z") return Axis::z;
  throw ConfigError(key + ": axis must be x, y or z, got '" + v + "'");
}

BraidWord parse_word(const std::string& key, const std::string& v) {
  try {
    return parse_braid_word(v);
  } catch (const BraidParseError& e) {
    throw ConfigError(key + ": " + e.what());
  }
}

class KeyValues {
 public:
  explicit KeyValues(std::string_view text) {
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
      const auto nl = text.find('\n', pos);
      std::string_view line = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
      pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
      ++line_no;
      if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
      line = trim(line);
      if (line.empty()) continue;
      const auto eq = line.find('=');
      if (eq == std::string_view::npos) {
        throw ConfigError("line " + std::to_string(line_no) + ": expected 'key = value'");
      }
      std::string key(trim(line.substr(0, eq)));
      if (key.empty()) throw ConfigError("line " + std::to_string(line_no) + ": empty key");
      if (!values_.emplace(key, std::string(trim(line.substr(eq + 1)))).second) {
        throw ConfigError("line " + std::to_string(line_no) + ": duplicate key '" + key + "'");
      }
    }
  }

  std::optional<std::string> take(const std::string& key) {
    auto it = values_.find(key);
    if (it == values_.end()) return std::nullopt;
    std::string v = std::move(it->second);
    values_.erase(it);
    return v;
  }

  void reject_leftovers() const {
    if (!values_.empty()) throw ConfigError("unknown key '" + values_.begin()->first + "'");
  }

 private:
  std::map<std::string, std::string> values_;
};

Mat2 parse_target(KeyValues& kv, const std::string& name, Mat2 fallback) {
  const auto axis = kv.take(name + ".axis");
  const auto angle = kv.take(name + ".angle");
  const auto matrix = kv.take(name + ".matrix");
  if (matrix) {
    if (axis || angle) throw ConfigError(name + ".matrix cannot be combined with " + name + ".axis/angle");
    std::istringstream in(*matrix);
    std::vector<double> v;
    std::string tok;
    while (in >> tok) v.push_back(parse_real(name + ".matrix", tok));
    if (v.size() != 8) throw ConfigError(name + ".matrix: expected 8 reals (re im pairs, row-major)");
    return Mat2{{v[0], v[1]}, {v[2], v[3]}, {v[4], v[5]}, {v[6], v[7]}};
  }
  if (axis.has_value() != angle.has_value()) {
    throw ConfigError(name + ".axis and " + name + ".angle must be given together");
  }
  if (!axis) return fallback;
  return rotation(parse_axis(name + ".axis", *axis), parse_real(name + ".angle", *angle));
}

}  // namespace

DeviceConfig RunConfig::device_for(Placement p) const {
  if (explicit_words) throw ConfigError("placement override needs 'w', not explicit w_pre/w_post");
  return device.with_word(word, p);
}

RunConfig parse_run_config(std::string_view text) {
  KeyValues kv(text);
  RunConfig cfg;
  const DeviceConfig standard = DeviceConfig::standard();

  const Mat2 a = parse_target(kv, "a", standard.targets.a());
  const Mat2 b = parse_target(kv, "b", standard.targets.b());

  PhaseMap phase = PhaseMap::identity();
  const auto theta = kv.take("theta").value_or("identity");
  const auto theta_value = kv.take("theta.value");
  const auto theta_slope = kv.take("theta.slope");
  const auto theta_offset = kv.take("theta.offset");
  if (theta == "identity") {
    if (theta_value || theta_slope || theta_offset) throw ConfigError("theta = identity takes no parameters");
  } else if (theta == "constant") {
    if (!theta_value || theta_slope || theta_offset) throw ConfigError("theta = constant needs theta.value only");
    phase = PhaseMap::constant(parse_real("theta.value", *theta_value));
  } else if (theta == "linear") {
    if (theta_value) throw ConfigError("theta = linear uses theta.slope and theta.offset");
    phase = PhaseMap::linear(theta_slope ? parse_real("theta.slope", *theta_slope) : 1.0,
                             theta_offset ? parse_real("theta.offset", *theta_offset) : 0.0);
  } else {
    throw ConfigError("theta must be identity, constant or linear, got '" + theta + "'");
  }

  Grid grid = Grid::full_circle();
  const auto points = kv.take("grid.points");
  if (points) grid.points = parse_count("grid.points", *points);
  const auto gmin = kv.take("grid.min");
  const auto gmax = kv.take("grid.max");
  if (gmin) grid.omega_min = parse_real("grid.min", *gmin);
  if (gmax) {
    grid.omega_max = parse_real("grid.max", *gmax);
  } else if (points) {
    grid.omega_max = Grid::full_circle(grid.points).omega_max;
  }
  try {
    grid.validate();
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }

  const auto w = kv.take("w");
  const auto placement = kv.take("placement");
  const auto w_pre = kv.take("w_pre");
  const auto w_post = kv.take("w_post");
  if (w_pre || w_post) {
    if (w || placement) throw ConfigError("give either w (with placement) or w_pre/w_post, not both");
    cfg.explicit_words = true;
  }
  if (w) cfg.word = parse_word("w", *w);
  if (placement) {
    try {
      cfg.placement = parse_placement(*placement);
    } catch (const std::invalid_argument& e) {
      throw ConfigError(e.what());
    }
  }
  if (auto out = kv.take("out")) cfg.out_path = *out;
  kv.reject_leftovers();

  try {
    cfg.device = DeviceConfig{TargetPair(a, b), {}, {}, phase, grid};
  } catch (const NotUnitary& e) {
    throw ConfigError(e.what());
  }
  if (cfg.explicit_words) {
    cfg.device.w_pre = w_pre ? parse_word("w_pre", *w_pre) : BraidWord{};
    cfg.device.w_post = w_post ? parse_word("w_post", *w_post) : BraidWord{};
  } else {
    cfg.device = cfg.device.with_word(cfg.word, cfg.placement);
  }
  return cfg;
}

RunConfig load_run_config(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read config file '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_run_config(buf.str());
}

}  // namespace braidswitch
