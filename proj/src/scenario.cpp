#include "v2v/scenario.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <string>
#include <unordered_set>

#include "v2v/error.hpp"
#include "v2v/rng.hpp"

namespace v2v {

void ScenarioConfig::validate() const {
  if (!std::isfinite(density) || density <= 0) throw ConfigError("scenario: density must be positive");
  if (!std::isfinite(road_length) || road_length <= 0)
    throw ConfigError("scenario: road_length must be positive");
}

double Scenario::distance(double a, double b) const {
  const double d = std::abs(a - b);
  return wrap ? std::min(d, road_length - d) : d;
}

void sort_scenario(Scenario& s) {
  std::vector<std::size_t> order(s.positions.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return s.positions[a] < s.positions[b]; });
  std::vector<double> pos(order.size());
  std::vector<std::uint32_t> ids(order.size());
  for (std::size_t k = 0; k < order.size(); ++k) {
    pos[k] = s.positions[order[k]];
    ids[k] = s.ids.empty() ? static_cast<std::uint32_t>(order[k]) : s.ids[order[k]];
  }
  s.positions = std::move(pos);
  s.ids = std::move(ids);
}

Scenario generate_ppp(const ScenarioConfig& cfg) {
  cfg.validate();
  Rng rng(cfg.seed);
  std::poisson_distribution<std::uint64_t> count(cfg.density * cfg.road_length);
  std::uniform_real_distribution<double> where(0.0, cfg.road_length);

  Scenario s;
  s.road_length = cfg.road_length;
  s.wrap = cfg.wrap;
  const auto n = count(rng);
  s.positions.resize(n);
  for (auto& x : s.positions) {
    x = where(rng);
    if (x >= cfg.road_length) x = 0;  // guard the half-open interval
  }
  std::sort(s.positions.begin(), s.positions.end());
  s.ids.resize(n);
  std::iota(s.ids.begin(), s.ids.end(), std::uint32_t{0});
  return s;
}

namespace {

std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> out;
  std::string field;
  std::istringstream ss(line);
  while (std::getline(ss, field, ',')) out.push_back(field);
  if (!line.empty() && line.back() == ',') out.emplace_back();
  return out;
}

std::string trim(std::string s) {
  const auto b = s.find_first_not_of(" \t");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t");
  return s.substr(b, e - b + 1);
}

double parse_double(const std::string& text, const char* what, std::size_t line) {
  const std::string t = trim(text);
  std::size_t used = 0;
  double v = 0;
  try {
    v = std::stod(t, &used);
  } catch (const std::exception&) {
    throw ParseError(std::string("invalid ") + what + " '" + t + "'", line);
  }
  if (used != t.size() || !std::isfinite(v))
    throw ParseError(std::string("invalid ") + what + " '" + t + "'", line);
  return v;
}

}  // namespace

std::vector<Scenario> load_trace(std::istream& in, const TraceFormat& format) {
  std::vector<Scenario> out;
  std::string line;
  std::size_t line_no = 0;
  bool header_seen = false;
  double current_time = 0;
  double max_position = 0;
  std::unordered_set<std::uint32_t> seen_ids;

  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (trim(line).empty()) continue;
    if (!header_seen) {
      if (line_no == 1 && line.size() >= 3 && static_cast<unsigned char>(line[0]) == 0xEF)
        line = line.substr(3);  // UTF-8 BOM
      auto cols = split_csv(line);
      for (auto& c : cols) c = trim(c);
      if (cols != std::vector<std::string>{"time_s", "vehicle_id", "position_m"})
        throw ParseError("expected header 'time_s,vehicle_id,position_m'", line_no);
      header_seen = true;
      continue;
    }
    const auto cols = split_csv(line);
    if (cols.size() != 3) throw ParseError("expected 3 fields, got " + std::to_string(cols.size()), line_no);
    const double t = parse_double(cols[0], "time_s", line_no);
    const double id_value = parse_double(cols[1], "vehicle_id", line_no);
    const double x = parse_double(cols[2], "position_m", line_no);
    if (id_value < 0 || id_value != std::floor(id_value) || id_value > 4294967295.0)
      throw ParseError("vehicle_id must be a non-negative integer", line_no);
    if (x < 0) throw ParseError("negative position", line_no);
    if (format.road_length > 0 && x >= format.road_length)
      throw ParseError("position beyond road length", line_no);

    if (out.empty() || t != current_time) {
      if (!out.empty() && t < current_time) throw ParseError("timestamps must be nondecreasing", line_no);
      out.emplace_back();
      out.back().wrap = format.wrap;
      current_time = t;
      seen_ids.clear();
    }
    const auto id = static_cast<std::uint32_t>(id_value);
    if (!seen_ids.insert(id).second)
      throw ParseError("duplicate vehicle_id " + std::to_string(id) + " in snapshot", line_no);
    out.back().positions.push_back(x);
    out.back().ids.push_back(id);
    max_position = std::max(max_position, x);
  }

  const double length = format.road_length > 0 ? format.road_length : std::floor(max_position) + 1.0;
  for (auto& s : out) {
    s.road_length = length;
    sort_scenario(s);
  }
  return out;
}

double empirical_density(const Scenario& s) {
  if (s.road_length <= 0) throw DomainError("empirical_density: road_length must be positive");
  return static_cast<double>(s.size()) / s.road_length;
}

}  // namespace v2v
