#pragma once

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "chemistry.hpp"
#include "errors.hpp"
#include "format.hpp"
#include "genome.hpp"
#include "random.hpp"
#include "space.hpp"

namespace argrn {

// How cycle-0 concentrations are chosen before normalization.
struct InitialConcentration {
  enum class Mode { Uniform, Constant, Random, Explicit };

  Mode mode = Mode::Uniform;
  double constant = 0.0;
  std::vector<double> values;

  static InitialConcentration uniform() { return {}; }
  static InitialConcentration constant_value(double c) { return {Mode::Constant, c, {}}; }
  static InitialConcentration random() { return {Mode::Random, 0.0, {}}; }
  static InitialConcentration list(std::vector<double> v) { return {Mode::Explicit, 0.0, std::move(v)}; }

  // Accepts "uniform", "random", "constant:<c>" and "list:<c0>,<c1>,...".
  static InitialConcentration parse(std::string_view text) {
    auto number = [&](std::string_view s) {
      double v = 0.0;
      auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
      if (ec != std::errc{} || p != s.data() + s.size() || s.empty()) {
        throw ConfigError("bad number '" + std::string(s) + "' in initial concentration '" +
                          std::string(text) + "'");
      }
      return v;
    };
    if (text == "uniform") return uniform();
    if (text == "random") return random();
    if (text.starts_with("constant:")) return constant_value(number(text.substr(9)));
    if (text.starts_with("list:")) {
      std::vector<double> v;
      std::string_view rest = text.substr(5);
      while (true) {
        const auto comma = rest.find(',');
        v.push_back(number(rest.substr(0, comma)));
        if (comma == std::string_view::npos) break;
        rest.remove_prefix(comma + 1);
      }
      return list(std::move(v));
    }
    throw ConfigError("unknown initial concentration mode '" + std::string(text) + "'");
  }

  std::string str() const {
    switch (mode) {
      case Mode::Uniform: return "uniform";
      case Mode::Random: return "random";
      case Mode::Constant: return "constant:" + shortest(constant);
      case Mode::Explicit: {
        std::string s = "list:";
        for (std::size_t i = 0; i < values.size(); ++i) s += (i ? "," : "") + shortest(values[i]);
        return s;
      }
    }
    return {};
  }

  friend bool operator==(const InitialConcentration&, const InitialConcentration&) = default;
};

struct SimulationConfig {
  GridSpec grid;
  double beta = 1.0;
  double delta = 1.0;
  std::size_t tf_per_gene = 25;
  std::size_t cycles = 1000;
  std::uint64_t seed = kDefaultSeed;
  InitialConcentration initial;

  void validate() const {
    grid.validate();
    if (!std::isfinite(beta)) throw ConfigError("beta must be finite");
    if (!std::isfinite(delta)) throw ConfigError("delta must be finite");
  }

  friend bool operator==(const SimulationConfig& a, const SimulationConfig& b) {
    return a.grid.side == b.grid.side && a.grid.step == b.grid.step &&
           a.grid.threshold == b.grid.threshold && a.beta == b.beta && a.delta == b.delta &&
           a.tf_per_gene == b.tf_per_gene && a.cycles == b.cycles && a.seed == b.seed &&
           a.initial == b.initial;
  }
};

enum class SiteKind : std::uint8_t { Enhancer, Inhibitor };

constexpr std::string_view to_string(SiteKind k) noexcept {
  return k == SiteKind::Enhancer ? "enhancer" : "inhibitor";
}

inline SiteKind site_kind_from_string(std::string_view s) {
  if (s == "enhancer") return SiteKind::Enhancer;
  if (s == "inhibitor") return SiteKind::Inhibitor;
  throw ConfigError("unknown site '" + std::string(s) + "' (expected enhancer or inhibitor)");
}

struct GeneState {
  Gene gene;
  Position enhancer_pos;
  Position inhibitor_pos;
  double rate = 0.0;           // R, signed
  double concentration = 0.0;  // C, normalized across genes

  const Position& site_pos(SiteKind k) const {
    return k == SiteKind::Enhancer ? enhancer_pos : inhibitor_pos;
  }
  Position& site_pos(SiteKind k) { return k == SiteKind::Enhancer ? enhancer_pos : inhibitor_pos; }
  const std::vector<Base>& site_seq(SiteKind k) const {
    return k == SiteKind::Enhancer ? gene.enhancer : gene.inhibitor;
  }
};

struct Binding {
  std::size_t target_gene = 0;
  SiteKind site = SiteKind::Enhancer;
  BindingStrength original_strength = 0;
  BindingStrength remaining = 0;
};

struct TranscriptionFactor {
  std::uint64_t id = 0;
  std::size_t parent_gene = 0;
  std::vector<Base> protein;
  Position pos;
  std::optional<Binding> binding;

  bool bound() const noexcept { return binding.has_value(); }
};

struct SimulationState;

// Hooks for instrumenting a run. All callbacks default to no-ops.
class EngineObserver {
 public:
  virtual ~EngineObserver() = default;
  virtual void on_bind(const TranscriptionFactor&) {}
  // A bound TF contributed to its target's rate update this cycle.
  virtual void on_rate_contribution(const TranscriptionFactor&) {}
  virtual void on_expire(const TranscriptionFactor&) {}
  virtual void on_cycle_end(const SimulationState&) {}
};

struct SimulationState {
  SimulationConfig config;
  std::vector<GeneState> genes;
  std::vector<TranscriptionFactor> tfs;  // ascending id
  std::vector<std::uint64_t> expired;    // removed this cycle, awaiting respawn
  std::uint64_t next_tf_id = 0;
  std::uint64_t cycle = 0;
  Rng rng;
  EngineObserver* observer = nullptr;

  std::size_t gene_count() const noexcept { return genes.size(); }
};

namespace detail {

inline void normalize_initial(std::vector<double>& c) {
  const double n = static_cast<double>(c.size());
  for (double v : c) {
    if (!(v >= 0.0) || !std::isfinite(v)) {
      throw ConfigError("initial concentrations must be finite and >= 0");
    }
  }
  double sum = 0.0;
  for (double v : c) sum += v;
  const bool all_equal = std::adjacent_find(c.begin(), c.end(), std::not_equal_to<>()) == c.end();
  if (sum == 0.0 || all_equal) {
    std::fill(c.begin(), c.end(), 1.0 / n);
    return;
  }
  for (double& v : c) v /= sum;
}

inline std::size_t most_concentrated(const std::vector<GeneState>& genes) {
  std::size_t best = 0;
  for (std::size_t i = 1; i < genes.size(); ++i) {
    if (genes[i].concentration > genes[best].concentration) best = i;
  }
  return best;
}

}  // namespace detail

inline TranscriptionFactor spawn_tf(SimulationState& state, std::size_t parent) {
  return {state.next_tf_id++, parent, state.genes[parent].gene.protein, Position{0, 0}, std::nullopt};
}

// Places both sites of every gene near the grid centre (gene order, then
// enhancer before inhibitor), creates tf_per_gene TFs per gene at the corner
// and sets the cycle-0 concentrations.
inline SimulationState init_state(std::vector<Gene> genes, const SimulationConfig& config) {
  if (genes.empty()) throw UnusableGenome();
  config.validate();

  SimulationState st;
  st.config = config;
  st.rng = Rng(config.seed);
  st.genes.reserve(genes.size());
  for (auto& g : genes) {
    GeneState gs;
    gs.gene = std::move(g);
    gs.enhancer_pos = central_placement(config.grid, st.rng);
    gs.inhibitor_pos = central_placement(config.grid, st.rng);
    st.genes.push_back(std::move(gs));
  }
  st.tfs.reserve(st.genes.size() * config.tf_per_gene);
  for (std::size_t i = 0; i < st.genes.size(); ++i) {
    for (std::size_t k = 0; k < config.tf_per_gene; ++k) st.tfs.push_back(spawn_tf(st, i));
  }

  const std::size_t n = st.genes.size();
  std::vector<double> c(n, 1.0);
  switch (config.initial.mode) {
    case InitialConcentration::Mode::Uniform: break;
    case InitialConcentration::Mode::Constant:
      std::fill(c.begin(), c.end(), config.initial.constant);
      break;
    case InitialConcentration::Mode::Random: {
      Rng side_stream(derive_seed(config.seed, 1));
      for (double& v : c) v = side_stream.uniform_real();
      break;
    }
    case InitialConcentration::Mode::Explicit:
      if (config.initial.values.size() != n) {
        throw ConfigError("explicit initial concentrations list " +
                          std::to_string(config.initial.values.size()) + " values for " +
                          std::to_string(n) + " genes");
      }
      c = config.initial.values;
      break;
  }
  detail::normalize_initial(c);
  for (std::size_t i = 0; i < n; ++i) st.genes[i].concentration = c[i];
  return st;
}

// Updates every gene's rate from the bindings active at the start of the
// cycle, then ages those bindings and removes the TFs whose binding ran out.
inline void rate_phase(SimulationState& st) {
  BindingStrength strongest = 0;
  for (const auto& tf : st.tfs) {
    if (tf.bound()) strongest = std::max(strongest, tf.binding->original_strength);
  }

  std::vector<double> signal(st.genes.size(), 0.0);
  std::vector<std::size_t> bound_count(st.genes.size(), 0);
  for (const auto& tf : st.tfs) {
    if (!tf.bound()) continue;
    const auto& b = *tf.binding;
    const double excess = static_cast<double>(b.original_strength) - static_cast<double>(strongest) - 1.0;
    const double term = std::exp(st.config.beta * excess);
    signal[b.target_gene] += b.site == SiteKind::Enhancer ? term : -term;
    ++bound_count[b.target_gene];
    if (st.observer) st.observer->on_rate_contribution(tf);
  }
  for (std::size_t i = 0; i < st.genes.size(); ++i) {
    auto& r = st.genes[i].rate;
    r = bound_count[i] == 0 ? 0.0 : r + signal[i] / static_cast<double>(bound_count[i]);
  }

  for (auto& tf : st.tfs) {
    if (tf.bound() && --tf.binding->remaining == 0) {
      st.expired.push_back(tf.id);
      if (st.observer) st.observer->on_expire(tf);
    }
  }
  if (!st.expired.empty()) {
    std::erase_if(st.tfs, [](const TranscriptionFactor& tf) {
      return tf.bound() && tf.binding->remaining == 0;
    });
  }
}

inline void movement_phase(SimulationState& st) {
  for (auto& tf : st.tfs) {
    if (!tf.bound()) tf.pos = random_step(tf.pos, st.config.grid, st.rng);
  }
}

// Each unbound TF binds the nearest in-range site of a non-parent gene with
// nonzero strength. Ties go to the lower gene id, then enhancer first.
inline void binding_phase(SimulationState& st) {
  const auto& grid = st.config.grid;
  for (auto& tf : st.tfs) {
    if (tf.bound()) continue;
    std::optional<Binding> best;
    double best_distance = std::numeric_limits<double>::infinity();
    for (std::size_t g = 0; g < st.genes.size(); ++g) {
      if (g == tf.parent_gene) continue;
      for (SiteKind kind : {SiteKind::Enhancer, SiteKind::Inhibitor}) {
        const double d = toroidal_distance(tf.pos, st.genes[g].site_pos(kind), grid.side);
        if (!(d < grid.threshold) || !(d < best_distance)) continue;
        const BindingStrength s = binding_strength(tf.protein, st.genes[g].site_seq(kind));
        if (s == 0) continue;
        best = Binding{g, kind, s, s};
        best_distance = d;
      }
    }
    if (best) {
      tf.binding = best;
      if (st.observer) st.observer->on_bind(tf);
    }
  }
}

inline void production_phase(SimulationState& st) {
  const double delta = st.config.delta;
  double total = 0.0;
  for (auto& g : st.genes) {
    g.concentration = std::max(0.0, g.concentration + delta * g.concentration * g.rate);
    total += g.concentration;
  }
  if (total < 1e-12) {
    const double even = 1.0 / static_cast<double>(st.genes.size());
    for (auto& g : st.genes) g.concentration = even;
    return;
  }
  for (auto& g : st.genes) g.concentration /= total;
}

// Replaces each expired TF with a fresh one at the corner, parented by the
// gene currently holding the highest concentration (lowest id on ties).
inline void respawn_phase(SimulationState& st) {
  if (st.expired.empty()) return;
  const std::size_t parent = detail::most_concentrated(st.genes);
  for (std::size_t k = 0; k < st.expired.size(); ++k) st.tfs.push_back(spawn_tf(st, parent));
  st.expired.clear();
}

inline void step(SimulationState& st) {
  rate_phase(st);
  movement_phase(st);
  binding_phase(st);
  production_phase(st);
  respawn_phase(st);
  ++st.cycle;
  if (st.observer) st.observer->on_cycle_end(st);
}

// Concentration and rate time series; row t is the state after cycle t, row 0
// the initial state.
struct Trace {
  SimulationConfig config;
  std::vector<GeneState> initial;
  std::vector<std::vector<double>> concentrations;
  std::vector<std::vector<double>> rates;

  std::size_t rows() const noexcept { return concentrations.size(); }
  std::size_t gene_count() const noexcept { return initial.size(); }
  double concentration(std::size_t cycle, std::size_t gene) const {
    return concentrations.at(cycle).at(gene);
  }
  std::vector<double> protein_series(std::size_t gene) const {
    std::vector<double> out;
    out.reserve(rows());
    for (const auto& row : concentrations) out.push_back(row.at(gene));
    return out;
  }
};

inline void record_row(const SimulationState& st, Trace& trace) {
  std::vector<double> c, r;
  c.reserve(st.genes.size());
  r.reserve(st.genes.size());
  for (const auto& g : st.genes) {
    c.push_back(g.concentration);
    r.push_back(g.rate);
  }
  trace.concentrations.push_back(std::move(c));
  trace.rates.push_back(std::move(r));
}

// Runs config.cycles cycles from the given state.
inline Trace simulate(SimulationState& st) {
  Trace trace;
  trace.config = st.config;
  trace.initial = st.genes;
  trace.concentrations.reserve(st.config.cycles + 1);
  trace.rates.reserve(st.config.cycles + 1);
  record_row(st, trace);
  for (std::size_t t = 0; t < st.config.cycles; ++t) {
    step(st);
    record_row(st, trace);
  }
  return trace;
}

inline Trace run(std::vector<Gene> genes, const SimulationConfig& config,
                 EngineObserver* observer = nullptr) {
  auto st = init_state(std::move(genes), config);
  st.observer = observer;
  return simulate(st);
}

inline Trace run(const DnaSequence& genome, const SimulationConfig& config,
                 EngineObserver* observer = nullptr) {
  return run(scan_genes(genome), config, observer);
}

}  // namespace argrn
