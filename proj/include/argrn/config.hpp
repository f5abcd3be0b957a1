#pragma once

#include <charconv>
#include <string>
#include <string_view>
#include <vector>

#include "engine.hpp"
#include "errors.hpp"
#include "evolve.hpp"
#include "trace_io.hpp"

namespace argrn {

// One `key = value` line of a config file.
struct ConfigEntry {
  std::string key;
  std::string value;
  std::size_t line = 0;
};

namespace detail {

inline std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

template <typename T>
T config_number(const ConfigEntry& e) {
  T v{};
  const auto& s = e.value;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc{} || p != s.data() + s.size()) {
    throw ConfigError("line " + std::to_string(e.line) + ": bad value '" + s + "' for " + e.key);
  }
  return v;
}

}  // namespace detail

// Flat `key = value` text; `#` starts a comment; blank lines are ignored.
inline std::vector<ConfigEntry> parse_config_text(std::string_view text) {
  std::vector<ConfigEntry> entries;
  std::size_t line_no = 0;
  while (!text.empty()) {
    ++line_no;
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = detail::trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw ConfigError("line " + std::to_string(line_no) + ": expected key = value");
    }
    const auto key = detail::trim(line.substr(0, eq));
    if (key.empty()) throw ConfigError("line " + std::to_string(line_no) + ": empty key");
    entries.push_back({std::string(key), std::string(detail::trim(line.substr(eq + 1))), line_no});
  }
  return entries;
}

// Applies a simulation key; returns false if the key is not a simulation key.
inline bool apply_entry(const ConfigEntry& e, SimulationConfig& c) {
  using detail::config_number;
  if (e.key == "grid_size") c.grid.side = config_number<int>(e);
  else if (e.key == "step") c.grid.step = config_number<int>(e);
  else if (e.key == "threshold") c.grid.threshold = config_number<double>(e);
  else if (e.key == "beta") c.beta = config_number<double>(e);
  else if (e.key == "delta") c.delta = config_number<double>(e);
  else if (e.key == "tf_per_gene") c.tf_per_gene = config_number<std::size_t>(e);
  else if (e.key == "cycles") c.cycles = config_number<std::size_t>(e);
  else if (e.key == "seed") c.seed = config_number<std::uint64_t>(e);
  else if (e.key == "initial_concentration_mode") c.initial = InitialConcentration::parse(e.value);
  else return false;
  return true;
}

inline bool apply_entry(const ConfigEntry& e, GaConfig& c) {
  using detail::config_number;
  if (e.key == "population") c.population = config_number<std::size_t>(e);
  else if (e.key == "generations") c.generations = config_number<std::size_t>(e);
  else if (e.key == "mutation_rate") c.mutation_rate = config_number<double>(e);
  else if (e.key == "tournament_k") c.tournament_k = config_number<std::size_t>(e);
  else if (e.key == "elitism") c.elitism = config_number<std::size_t>(e);
  else if (e.key == "genome_length") c.genome_length = config_number<std::size_t>(e);
  else if (e.key == "workers") c.workers = config_number<std::size_t>(e);
  else return apply_entry(e, c.sim);
  return true;
}

// Applies every entry to `target`; unknown keys are errors.
template <typename Config>
void apply_config(const std::vector<ConfigEntry>& entries, Config& target) {
  for (const auto& e : entries) {
    if (!apply_entry(e, target)) {
      throw ConfigError("line " + std::to_string(e.line) + ": unknown key '" + e.key + "'");
    }
  }
}

inline Json to_json(const GaConfig& c) {
  return Json{{"population", c.population},     {"generations", c.generations},
              {"mutation_rate", c.mutation_rate}, {"tournament_k", c.tournament_k},
              {"elitism", c.elitism},           {"genome_length", c.genome_length},
              {"workers", c.workers},           {"sim", to_json(c.sim)}};
}

}  // namespace argrn
