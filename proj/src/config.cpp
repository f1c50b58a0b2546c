#include "v2v/config.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>

#include "v2v/error.hpp"

namespace v2v {

SweepConfig::SweepConfig() {
  for (int d = 25; d <= 600; d += 25) distances.push_back(d);
  for (int i = 1; i <= 12; ++i) densities.push_back(0.025 * i);
  for (int f = 1; f <= 10; ++f) cam_frequencies.push_back(f);
}

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::string lower(std::string s) {
  for (auto& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return s;
}

double to_double(const std::string& text, const std::string& key, std::size_t line) {
  try {
    std::size_t used = 0;
    const double v = std::stod(text, &used);
    if (used == text.size() && std::isfinite(v)) return v;
  } catch (const std::exception&) {
  }
  throw ParseError("key '" + key + "': invalid number '" + text + "'", line);
}

long long to_int(const std::string& text, const std::string& key, std::size_t line) {
  const double v = to_double(text, key, line);
  if (v != std::floor(v) || std::fabs(v) > 9e15) throw ParseError("key '" + key + "': expected an integer", line);
  return static_cast<long long>(v);
}

bool to_bool(const std::string& text, const std::string& key, std::size_t line) {
  const auto t = lower(text);
  if (t == "true" || t == "yes" || t == "1" || t == "on") return true;
  if (t == "false" || t == "no" || t == "0" || t == "off") return false;
  throw ParseError("key '" + key + "': expected true or false", line);
}

using Setter = std::function<void(Config&, const std::string&, const std::string&, std::size_t)>;

template <class F>
Setter real(F field) {
  return [field](Config& c, const std::string& v, const std::string& k, std::size_t l) {
    field(c) = to_double(v, k, l);
  };
}

template <class T, class F>
Setter integer(F field) {
  return [field](Config& c, const std::string& v, const std::string& k, std::size_t l) {
    const auto x = to_int(v, k, l);
    if (x < 0) throw ParseError("key '" + k + "': must be nonnegative", l);
    field(c) = static_cast<T>(x);
  };
}

template <class F>
Setter boolean(F field) {
  return [field](Config& c, const std::string& v, const std::string& k, std::size_t l) {
    field(c) = to_bool(v, k, l);
  };
}

template <class F>
Setter list(F field) {
  return [field](Config& c, const std::string& v, const std::string& k, std::size_t l) {
    try {
      field(c) = parse_number_list(v);
    } catch (const Error& e) {
      throw ParseError("key '" + k + "': " + e.what(), l);
    }
  };
}

const std::map<std::string, std::map<std::string, Setter>>& schema() {
  static const std::map<std::string, std::map<std::string, Setter>> s = {
      {"radio",
       {
           {"pt_dbm", real([](Config& c) -> double& { return c.radio.pt_dbm; })},
           {"gt_db", real([](Config& c) -> double& { return c.radio.gt_db; })},
           {"gr_db", real([](Config& c) -> double& { return c.radio.gr_db; })},
           {"l0_db", real([](Config& c) -> double& { return c.radio.l0_db; })},
           {"beta", real([](Config& c) -> double& { return c.radio.beta; })},
           {"gamma_min_db", real([](Config& c) -> double& { return c.radio.gamma_min_db; })},
           {"shadow_sigma_db", real([](Config& c) -> double& { return c.radio.shadow_sigma_db; })},
           {"decorr_distance_m", real([](Config& c) -> double& { return c.radio.decorr_distance_m; })},
           {"noise_figure_db", real([](Config& c) -> double& { return c.noise_figure_db; })},
           {"channel_bandwidth_hz", real([](Config& c) -> double& { return c.channel_bandwidth_hz; })},
           {"noise_power_dbm",
            [](Config& c, const std::string& v, const std::string& k, std::size_t l) {
              c.radio.noise_power_dbm = to_double(v, k, l);
              c.noise_power_explicit = true;
            }},
           {"noise_bandwidth",
            [](Config& c, const std::string& v, const std::string& k, std::size_t l) {
              const auto t = lower(v);
              if (t == "occupied")
                c.noise_bandwidth = NoiseBandwidth::occupied;
              else if (t == "channel")
                c.noise_bandwidth = NoiseBandwidth::channel;
              else
                throw ParseError("key '" + k + "': expected occupied or channel", l);
            }},
           {"dual_slope",
            [](Config& c, const std::string& v, const std::string& k, std::size_t l) {
              if (to_bool(v, k, l)) {
                if (!c.radio.dual_slope) c.radio.dual_slope = DualSlope{};
              } else {
                c.radio.dual_slope.reset();
              }
            }},
           {"dual_slope_break_m",
            [](Config& c, const std::string& v, const std::string& k, std::size_t l) {
              if (!c.radio.dual_slope) c.radio.dual_slope = DualSlope{};
              c.radio.dual_slope->break_distance_m = to_double(v, k, l);
            }},
           {"dual_slope_near_exponent",
            [](Config& c, const std::string& v, const std::string& k, std::size_t l) {
              if (!c.radio.dual_slope) c.radio.dual_slope = DualSlope{};
              c.radio.dual_slope->near_exponent = to_double(v, k, l);
            }},
       }},
      {"scenario",
       {
           {"density", real([](Config& c) -> double& { return c.scenario.density; })},
           {"road_length_m", real([](Config& c) -> double& { return c.scenario.road_length; })},
           {"wrap", boolean([](Config& c) -> bool& { return c.scenario.wrap; })},
       }},
      {"cam",
       {
           {"frequency_hz", real([](Config& c) -> double& { return c.cam.beacon_frequency_hz; })},
           {"size_bytes", integer<int>([](Config& c) -> int& { return c.cam.beacon_size_bytes; })},
           {"rbs_per_cam", integer<int>([](Config& c) -> int& { return c.cam.rbs_per_cam; })},
           {"rb_pairs_per_subframe", integer<int>([](Config& c) -> int& { return c.cam.rb_pairs_per_subframe; })},
       }},
      {"sim",
       {
           {"drops", integer<std::size_t>([](Config& c) -> std::size_t& { return c.sim.drops; })},
           {"periods", integer<int>([](Config& c) -> int& { return c.sim.periods; })},
           {"warmup_s", real([](Config& c) -> double& { return c.sim.warmup_s; })},
           {"seed", integer<std::uint64_t>([](Config& c) -> std::uint64_t& { return c.sim.seed; })},
           {"eval_margin_m", real([](Config& c) -> double& { return c.sim.eval_margin_m; })},
           {"threads", integer<unsigned>([](Config& c) -> unsigned& { return c.sim.threads; })},
           {"bin_edges", list([](Config& c) -> std::vector<double>& { return c.sim.bin_edges; })},
           {"algorithms",
            [](Config& c, const std::string& v, const std::string& k, std::size_t l) {
              try {
                c.sim.algorithms = parse_algorithm_list(v, c.mode4.p_keep);
              } catch (const Error& e) {
                throw ParseError("key '" + k + "': " + e.what(), l);
              }
            }},
       }},
      {"mode4",
       {
           {"p_keep", real([](Config& c) -> double& { return c.mode4.p_keep; })},
           {"i_th_dbm", real([](Config& c) -> double& { return c.mode4.i_th_dbm; })},
           {"candidate_fraction", real([](Config& c) -> double& { return c.mode4.candidate_fraction; })},
           {"sensing_window_s", real([](Config& c) -> double& { return c.mode4.sensing_window_s; })},
           {"reselection_min_s", real([](Config& c) -> double& { return c.mode4.reselection_min_s; })},
           {"reselection_max_s", real([](Config& c) -> double& { return c.mode4.reselection_max_s; })},
       }},
      {"crr",
       {
           {"reuse_distance_m", real([](Config& c) -> double& { return c.crr.reuse_distance_m; })},
           {"position_error_sigma_m", real([](Config& c) -> double& { return c.crr.position_error_sigma_m; })},
       }},
      {"analysis",
       {
           {"md_mode",
            [](Config& c, const std::string& v, const std::string& k, std::size_t l) {
              const auto t = lower(v);
              if (t == "approx" || t == "approximate")
                c.analysis.md_mode = MdMode::approximate;
              else if (t == "full")
                c.analysis.md_mode = MdMode::full;
              else
                throw ParseError("key '" + k + "': expected approx or full", l);
            }},
       }},
      {"sweep",
       {
           {"distances", list([](Config& c) -> std::vector<double>& { return c.sweep.distances; })},
           {"densities", list([](Config& c) -> std::vector<double>& { return c.sweep.densities; })},
           {"cam_frequencies", list([](Config& c) -> std::vector<double>& { return c.sweep.cam_frequencies; })},
           {"density_distance_m", real([](Config& c) -> double& { return c.sweep.density_distance_m; })},
           {"r_distance_m", real([](Config& c) -> double& { return c.sweep.r_distance_m; })},
           {"simulate", boolean([](Config& c) -> bool& { return c.sweep.simulate; })},
       }},
  };
  return s;
}

}  // namespace

std::vector<double> parse_number_list(const std::string& text) {
  const std::string t = trim(text);
  std::vector<double> out;
  auto number = [](const std::string& s) {
    const std::string x = trim(s);
    std::size_t used = 0;
    double v = 0;
    try {
      v = std::stod(x, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (x.empty() || used != x.size() || !std::isfinite(v)) throw ConfigError("invalid number '" + x + "'");
    return v;
  };
  if (t.find(':') != std::string::npos) {
    std::vector<std::string> parts;
    std::stringstream ss(t);
    for (std::string p; std::getline(ss, p, ':');) parts.push_back(p);
    if (parts.size() != 3) throw ConfigError("range must be start:stop:step");
    const double a = number(parts[0]), b = number(parts[1]), step = number(parts[2]);
    if (!(step > 0) || b < a) throw ConfigError("range needs step > 0 and stop >= start");
    const auto n = static_cast<long>(std::floor((b - a) / step + 1e-9));
    if (n > 1000000) throw ConfigError("range too long");
    for (long i = 0; i <= n; ++i) out.push_back(a + i * step);
  } else {
    std::stringstream ss(t);
    for (std::string p; std::getline(ss, p, ',');) out.push_back(number(p));
  }
  if (out.empty()) throw ConfigError("empty list");
  return out;
}

void Config::resolve() {
  cam.validate();
  const ResourceGrid g = grid();
  if (!noise_power_explicit) {
    const double bw = noise_bandwidth == NoiseBandwidth::occupied ? cam.rb_pairs_per_cam() * kResourceBlockHz
                                                                  : channel_bandwidth_hz;
    if (!(bw > 0)) throw ConfigError("radio: noise bandwidth must be positive");
    radio.noise_power_dbm = thermal_noise_dbm(bw, noise_figure_db);
  }
  mode4.beacon_period_s = cam.beacon_period_s();
  radio.validate();
  scenario.validate();
  sim.validate();
  mode4.validate();
  crr.validate();
  g.validate();
  if (sweep.distances.empty() || sweep.densities.empty() || sweep.cam_frequencies.empty())
    throw ConfigError("sweep: lists must be nonempty");
  for (double d : sweep.distances)
    if (!(d > 0)) throw ConfigError("sweep: distances must be positive");
  for (double r : sweep.densities)
    if (!(r > 0)) throw ConfigError("sweep: densities must be positive");
  for (double f : sweep.cam_frequencies)
    if (!(f > 0)) throw ConfigError("sweep: CAM frequencies must be positive");
}

SimInputs Config::inputs() const { return SimInputs{radio, grid(), crr, mode4}; }

Config parse_config(std::istream& in) {
  Config cfg;
  std::string section;
  std::string raw;
  std::size_t line = 0;
  while (std::getline(in, raw)) {
    ++line;
    if (line == 1 && raw.rfind("\xEF\xBB\xBF", 0) == 0) raw.erase(0, 3);
    std::string text = raw;
    const auto hash = text.find_first_of("#;");
    if (hash != std::string::npos) text.erase(hash);
    text = trim(text);
    if (text.empty()) continue;
    if (text.front() == '[') {
      if (text.back() != ']') throw ParseError("unterminated section header", line);
      section = lower(trim(text.substr(1, text.size() - 2)));
      if (!schema().count(section)) throw ParseError("unknown section [" + section + "]", line);
      continue;
    }
    const auto eq = text.find('=');
    if (eq == std::string::npos) throw ParseError("expected key = value", line);
    const std::string key = lower(trim(text.substr(0, eq)));
    const std::string value = trim(text.substr(eq + 1));
    if (section.empty()) throw ParseError("key '" + key + "' outside any section", line);
    const auto& keys = schema().at(section);
    const auto it = keys.find(key);
    if (it == keys.end()) throw ParseError("unknown key '" + key + "' in [" + section + "]", line);
    if (value.empty()) throw ParseError("key '" + key + "': missing value", line);
    it->second(cfg, value, key, line);
  }
  cfg.resolve();
  return cfg;
}

Config load_config(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw ConfigError("cannot open config file " + path);
  try {
    return parse_config(f);
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what(), 0);
  }
}

namespace {
std::string join(const std::vector<double>& v) {
  std::ostringstream os;
  os.precision(10);
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  return os.str();
}
}  // namespace

void write_config(std::ostream& out, const Config& c) {
  const auto old = out.precision(12);
  out << "[radio]\n"
      << "pt_dbm = " << c.radio.pt_dbm << "\ngt_db = " << c.radio.gt_db << "\ngr_db = " << c.radio.gr_db
      << "\nl0_db = " << c.radio.l0_db << "\nbeta = " << c.radio.beta << "\ngamma_min_db = " << c.radio.gamma_min_db
      << "\nshadow_sigma_db = " << c.radio.shadow_sigma_db << "\ndecorr_distance_m = " << c.radio.decorr_distance_m
      << "\nnoise_bandwidth = " << (c.noise_bandwidth == NoiseBandwidth::occupied ? "occupied" : "channel")
      << "\nchannel_bandwidth_hz = " << c.channel_bandwidth_hz << "\nnoise_figure_db = " << c.noise_figure_db
      << "\nnoise_power_dbm = " << c.radio.noise_power_dbm << "\ndual_slope = " << (c.radio.dual_slope ? "true" : "false")
      << "\n";
  if (c.radio.dual_slope)
    out << "dual_slope_break_m = " << c.radio.dual_slope->break_distance_m
        << "\ndual_slope_near_exponent = " << c.radio.dual_slope->near_exponent << "\n";
  out << "\n[scenario]\ndensity = " << c.scenario.density << "\nroad_length_m = " << c.scenario.road_length
      << "\nwrap = " << (c.scenario.wrap ? "true" : "false") << "\n";
  out << "\n[cam]\nfrequency_hz = " << c.cam.beacon_frequency_hz << "\nsize_bytes = " << c.cam.beacon_size_bytes
      << "\nrbs_per_cam = " << c.cam.rbs_per_cam << "\nrb_pairs_per_subframe = " << c.cam.rb_pairs_per_subframe
      << "\n";
  out << "\n[sim]\ndrops = " << c.sim.drops << "\nperiods = " << c.sim.periods << "\nwarmup_s = " << c.sim.warmup_s
      << "\nseed = " << c.sim.seed << "\neval_margin_m = " << c.sim.eval_margin_m << "\nthreads = " << c.sim.threads
      << "\nbin_edges = " << join(c.sim.bin_edges) << "\nalgorithms = ";
  for (std::size_t i = 0; i < c.sim.algorithms.size(); ++i) {
    const auto& a = c.sim.algorithms[i];
    out << (i ? "," : "");
    if (a.kind == AlgorithmKind::mode4)
      out << "m4:" << a.p_keep;
    else
      out << lower(a.name());
  }
  out << "\n\n[mode4]\np_keep = " << c.mode4.p_keep << "\ni_th_dbm = " << c.mode4.i_th_dbm
      << "\ncandidate_fraction = " << c.mode4.candidate_fraction << "\nsensing_window_s = " << c.mode4.sensing_window_s
      << "\nreselection_min_s = " << c.mode4.reselection_min_s << "\nreselection_max_s = " << c.mode4.reselection_max_s
      << "\n";
  out << "\n[crr]\nreuse_distance_m = " << c.crr.reuse_distance_m
      << "\nposition_error_sigma_m = " << c.crr.position_error_sigma_m << "\n";
  out << "\n[analysis]\nmd_mode = " << (c.analysis.md_mode == MdMode::approximate ? "approx" : "full") << "\n";
  out << "\n[sweep]\ndistances = " << join(c.sweep.distances) << "\ndensities = " << join(c.sweep.densities)
      << "\ncam_frequencies = " << join(c.sweep.cam_frequencies)
      << "\ndensity_distance_m = " << c.sweep.density_distance_m << "\nr_distance_m = " << c.sweep.r_distance_m
      << "\nsimulate = " << (c.sweep.simulate ? "true" : "false") << "\n";
  out.precision(old);
}

}  // namespace v2v
