#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <exception>
#include <functional>
#include <numeric>
#include <span>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "dna.hpp"
#include "engine.hpp"
#include "errors.hpp"
#include "genome.hpp"
#include "random.hpp"

namespace argrn {

enum class Direction { Minimize, Maximize };

// A fitness problem: how to score a trace, which way is better, and what a
// genome without usable genes scores.
struct FitnessDefinition {
  std::string name;
  Direction direction = Direction::Minimize;
  std::size_t min_cycles = 0;
  double no_gene_score = 0.0;
  std::function<double(const Trace&)> score;

  bool better(double a, double b) const {
    return direction == Direction::Minimize ? a < b : a > b;
  }
};

inline constexpr std::size_t kProblem1Cycle = 100;
inline constexpr double kProblem1Target = 0.085;
inline constexpr std::size_t kProblem2Period = 50;
inline constexpr std::size_t kProblem2Periods = 10;

// |C_0(100) - 0.085|, to be minimized.
inline double fitness_problem1(const Trace& trace) {
  if (trace.rows() <= kProblem1Cycle) {
    throw InvalidArgument("problem 1 needs at least 101 trace rows, got " +
                          std::to_string(trace.rows()));
  }
  if (trace.gene_count() == 0) return 1.0;
  return std::abs(trace.concentration(kProblem1Cycle, 0) - kProblem1Target);
}

// Alternation reward in [0, 10]: one point per 50-cycle period, checked at the
// period's last cycle, for as long as proteins 0 and 1 keep swapping the lead
// (protein 0 ahead in even periods, protein 1 ahead in odd ones). The first
// broken period ends the streak.
inline double fitness_problem2(const Trace& trace) {
  if (trace.rows() <= kProblem2Period * kProblem2Periods) {
    throw InvalidArgument("problem 2 needs at least 501 trace rows, got " +
                          std::to_string(trace.rows()));
  }
  if (trace.gene_count() < 2) return 0.0;
  double reward = 0.0;
  for (std::size_t k = 0; k < kProblem2Periods; ++k) {
    const std::size_t cycle = kProblem2Period * (k + 1);
    const double first = trace.concentration(cycle, 0);
    const double second = trace.concentration(cycle, 1);
    const bool ok = k % 2 == 0 ? first > second : second > first;
    if (!ok) break;
    reward += 1.0;
  }
  return reward;
}

inline FitnessDefinition problem(int id) {
  switch (id) {
    case 1:
      return {"problem1", Direction::Minimize, kProblem1Cycle, 1.0, fitness_problem1};
    case 2:
      return {"problem2", Direction::Maximize, kProblem2Period * kProblem2Periods, 0.0,
              fitness_problem2};
    default:
      throw InvalidArgument("unknown problem id " + std::to_string(id) + " (expected 1 or 2)");
  }
}

struct GaConfig {
  std::size_t population = 25;
  std::size_t generations = 50;
  double mutation_rate = 0.10;
  std::size_t tournament_k = 3;
  std::size_t elitism = 1;
  std::size_t genome_length = 3000;
  std::size_t workers = 1;
  SimulationConfig sim;

  void validate() const {
    if (population < 2) throw ConfigError("population must be >= 2");
    if (!(mutation_rate >= 0.0 && mutation_rate <= 1.0)) {
      throw ConfigError("mutation_rate must lie in [0, 1]");
    }
    if (tournament_k < 1 || tournament_k > population) {
      throw ConfigError("tournament_k must lie in [1, population]");
    }
    if (elitism > population) throw ConfigError("elitism must not exceed population");
    sim.validate();
  }
};

struct Individual {
  DnaSequence genome;
  double fitness = 0.0;
  std::size_t gene_count = 0;
};

// Cut drawn uniformly from [1, len-1]; children swap suffixes.
inline std::pair<DnaSequence, DnaSequence> one_point_crossover(const DnaSequence& a,
                                                               const DnaSequence& b, Rng& rng) {
  if (a.size() != b.size()) {
    throw InvalidArgument("crossover parents differ in length (" + std::to_string(a.size()) +
                          " vs " + std::to_string(b.size()) + ")");
  }
  if (a.size() < 2) return {a, b};
  const std::size_t cut = static_cast<std::size_t>(rng.uniform_int(1, static_cast<std::int64_t>(a.size()) - 1));
  std::vector<Base> c1(a.begin(), a.begin() + static_cast<std::ptrdiff_t>(cut));
  std::vector<Base> c2(b.begin(), b.begin() + static_cast<std::ptrdiff_t>(cut));
  c1.insert(c1.end(), b.begin() + static_cast<std::ptrdiff_t>(cut), b.end());
  c2.insert(c2.end(), a.begin() + static_cast<std::ptrdiff_t>(cut), a.end());
  return {DnaSequence(std::move(c1)), DnaSequence(std::move(c2))};
}

// With probability `rate`, substitutes one uniformly chosen base with one of
// the three other bases.
inline DnaSequence point_mutate(const DnaSequence& g, double rate, Rng& rng) {
  if (g.empty() || !rng.bernoulli(rate)) return g;
  std::vector<Base> bases(g.begin(), g.end());
  const std::size_t pos = rng.index(bases.size());
  const auto old = static_cast<std::size_t>(bases[pos]);
  bases[pos] = kBases[(old + 1 + rng.index(3)) % 4];
  return DnaSequence(std::move(bases));
}

// Samples k indices with replacement and returns the fittest; equal fitness
// goes to the lower population index.
inline std::size_t tournament_select(std::span<const Individual> population, std::size_t k,
                                     const FitnessDefinition& fitness, Rng& rng) {
  if (k < 1 || population.empty()) throw InvalidArgument("tournament needs k >= 1 and a population");
  std::size_t best = rng.index(population.size());
  for (std::size_t i = 1; i < k; ++i) {
    const std::size_t c = rng.index(population.size());
    const double fc = population[c].fitness, fb = population[best].fitness;
    if (fitness.better(fc, fb) || (fc == fb && c < best)) best = c;
  }
  return best;
}

inline Individual evaluate(DnaSequence genome, const SimulationConfig& sim,
                           const FitnessDefinition& fitness) {
  Individual ind;
  ind.genome = std::move(genome);
  auto genes = scan_genes(ind.genome);
  ind.gene_count = genes.size();
  if (genes.empty()) {
    ind.fitness = fitness.no_gene_score;
    return ind;
  }
  ind.fitness = fitness.score(run(std::move(genes), sim));
  return ind;
}

// Runs fn(i) for i in [0, n) on up to `workers` threads. Each index is
// handled exactly once; callers write results into index-owned slots.
template <typename Fn>
void parallel_for(std::size_t n, std::size_t workers, Fn&& fn) {
  workers = std::max<std::size_t>(1, std::min(workers, n));
  if (workers == 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::vector<std::thread> pool;
  std::vector<std::exception_ptr> errors(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      try {
        for (std::size_t i = w; i < n; i += workers) fn(i);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

// Linear-interpolated quantile of unsorted values.
inline double quantile(std::vector<double> values, double q) {
  if (values.empty()) return 0.0;
  std::sort(values.begin(), values.end());
  const double pos = q * static_cast<double>(values.size() - 1);
  const auto lo = static_cast<std::size_t>(std::floor(pos));
  const auto hi = std::min(lo + 1, values.size() - 1);
  return values[lo] + (pos - static_cast<double>(lo)) * (values[hi] - values[lo]);
}

struct GenerationStats {
  std::size_t generation = 0;
  double best = 0.0;
  double median = 0.0;
  double q25 = 0.0;
  double q75 = 0.0;
};

inline GenerationStats summarize(std::size_t generation, const std::vector<double>& values,
                                 const FitnessDefinition& fitness) {
  GenerationStats s;
  s.generation = generation;
  s.best = values.front();
  for (double v : values) {
    if (fitness.better(v, s.best)) s.best = v;
  }
  s.median = quantile(values, 0.5);
  s.q25 = quantile(values, 0.25);
  s.q75 = quantile(values, 0.75);
  return s;
}

struct EvolutionResult {
  Individual best;
  std::vector<GenerationStats> history;
  std::vector<Individual> final_population;
};

// Population indices ordered best first; stable, so ties keep index order.
inline std::vector<std::size_t> rank(const std::vector<Individual>& pop,
                                     const FitnessDefinition& fitness) {
  std::vector<std::size_t> order(pop.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return fitness.better(pop[a].fitness, pop[b].fitness);
  });
  return order;
}

// Generational GA. Every random decision draws from a stream derived from
// (master_seed, generation, slot) and every evaluation uses config.sim.seed,
// so the outcome does not depend on config.workers.
inline EvolutionResult evolve(const GaConfig& config, const FitnessDefinition& fitness,
                              std::uint64_t master_seed) {
  config.validate();
  if (config.sim.cycles < fitness.min_cycles) {
    throw ConfigError(fitness.name + " needs cycles >= " + std::to_string(fitness.min_cycles));
  }
  const std::size_t n = config.population;

  auto evaluate_range = [&](std::vector<Individual>& pop, std::size_t from) {
    parallel_for(n - from, config.workers, [&](std::size_t i) {
      auto& ind = pop[from + i];
      ind = evaluate(std::move(ind.genome), config.sim, fitness);
    });
  };

  std::vector<Individual> pop(n);
  for (std::size_t i = 0; i < n; ++i) {
    Rng rng(derive_seed(master_seed, 0, i));
    pop[i].genome = random_genome(config.genome_length, rng);
  }
  evaluate_range(pop, 0);

  EvolutionResult result;
  auto record = [&](std::size_t gen) {
    std::vector<double> values;
    values.reserve(n);
    for (const auto& ind : pop) values.push_back(ind.fitness);
    result.history.push_back(summarize(gen, values, fitness));
    const auto& best = pop[rank(pop, fitness).front()];
    if (gen == 0 || fitness.better(best.fitness, result.best.fitness)) result.best = best;
  };
  record(0);

  for (std::size_t gen = 1; gen <= config.generations; ++gen) {
    const auto order = rank(pop, fitness);
    std::vector<Individual> next;
    next.reserve(n);
    for (std::size_t e = 0; e < config.elitism; ++e) next.push_back(pop[order[e]]);
    const std::size_t elite = next.size();
    for (std::uint64_t pair = 0; next.size() < n; ++pair) {
      Rng rng(derive_seed(master_seed, gen, pair));
      const auto a = tournament_select(pop, config.tournament_k, fitness, rng);
      const auto b = tournament_select(pop, config.tournament_k, fitness, rng);
      auto [c1, c2] = one_point_crossover(pop[a].genome, pop[b].genome, rng);
      next.push_back({point_mutate(c1, config.mutation_rate, rng), 0.0, 0});
      if (next.size() < n) next.push_back({point_mutate(c2, config.mutation_rate, rng), 0.0, 0});
    }
    pop = std::move(next);
    evaluate_range(pop, elite);
    record(gen);
  }
  result.final_population = std::move(pop);
  return result;
}

// Per-generation statistics across independent runs, computed over each run's
// best-of-population value.
inline std::vector<GenerationStats> aggregate_runs(const std::vector<EvolutionResult>& runs,
                                                   const FitnessDefinition& fitness) {
  std::vector<GenerationStats> out;
  if (runs.empty()) return out;
  for (std::size_t g = 0; g < runs.front().history.size(); ++g) {
    std::vector<double> bests;
    for (const auto& r : runs) bests.push_back(r.history.at(g).best);
    out.push_back(summarize(g, bests, fitness));
  }
  return out;
}

}  // namespace argrn
