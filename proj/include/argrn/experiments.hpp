#pragma once

#include <charconv>
#include <cmath>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dna.hpp"
#include "engine.hpp"
#include "errors.hpp"
#include "evolve.hpp"
#include "genome.hpp"
#include "random.hpp"

namespace argrn {

struct GeneCountRow {
  std::size_t length = 0;
  double mean = 0.0;
  long rounded = 0;
};

// Mean scan_genes count over `trials` random genomes per length. Genome t of
// length L is drawn from the stream derive_seed(master_seed, L, t).
inline std::vector<GeneCountRow> gene_count_table(const std::vector<std::size_t>& lengths,
                                                  std::size_t trials, std::uint64_t master_seed) {
  if (trials < 1) throw InvalidArgument("trials must be >= 1");
  std::vector<GeneCountRow> rows;
  for (std::size_t length : lengths) {
    std::size_t total = 0;
    for (std::size_t t = 0; t < trials; ++t) {
      Rng rng(derive_seed(master_seed, length, t));
      total += scan_genes(random_genome(length, rng)).size();
    }
    const double mean = static_cast<double>(total) / static_cast<double>(trials);
    rows.push_back({length, mean, std::lround(mean)});
  }
  return rows;
}

enum class SweepParameter { Beta, Delta, TfPerGene, GridSize, InitialConcentration };

inline SweepParameter sweep_parameter_from_string(std::string_view name) {
  if (name == "beta") return SweepParameter::Beta;
  if (name == "delta") return SweepParameter::Delta;
  if (name == "tf_per_gene") return SweepParameter::TfPerGene;
  if (name == "grid_size") return SweepParameter::GridSize;
  if (name == "initial_concentration_mode") return SweepParameter::InitialConcentration;
  throw InvalidArgument("unknown sweep parameter '" + std::string(name) + "'");
}

constexpr std::string_view to_string(SweepParameter p) noexcept {
  switch (p) {
    case SweepParameter::Beta: return "beta";
    case SweepParameter::Delta: return "delta";
    case SweepParameter::TfPerGene: return "tf_per_gene";
    case SweepParameter::GridSize: return "grid_size";
    case SweepParameter::InitialConcentration: return "initial_concentration_mode";
  }
  return "";
}

namespace detail {

template <typename T>
T parse_number(std::string_view s, std::string_view what) {
  T v{};
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc{} || p != s.data() + s.size()) {
    throw InvalidArgument("bad value '" + std::string(s) + "' for " + std::string(what));
  }
  return v;
}

}  // namespace detail

// Returns a copy of `base` with one parameter set from its textual value.
inline SimulationConfig with_parameter(SimulationConfig base, SweepParameter p, std::string_view value) {
  switch (p) {
    case SweepParameter::Beta: base.beta = detail::parse_number<double>(value, "beta"); break;
    case SweepParameter::Delta: base.delta = detail::parse_number<double>(value, "delta"); break;
    case SweepParameter::TfPerGene:
      base.tf_per_gene = detail::parse_number<std::size_t>(value, "tf_per_gene");
      break;
    case SweepParameter::GridSize: base.grid.side = detail::parse_number<int>(value, "grid_size"); break;
    case SweepParameter::InitialConcentration:
      base.initial = InitialConcentration::parse(value);
      break;
  }
  base.validate();
  return base;
}

struct SweepSpec {
  SweepParameter parameter = SweepParameter::Beta;
  std::vector<std::string> values;
  SimulationConfig base;
  DnaSequence genome;
};

struct SweepRun {
  std::string value;
  SimulationConfig config;
  Trace trace;
};

// One run per value; every run shares genome and seed.
inline std::vector<SweepRun> sweep(const SweepSpec& spec, std::size_t workers = 1) {
  const auto genes = scan_genes(spec.genome);
  if (genes.empty()) throw UnusableGenome();
  std::vector<SweepRun> runs(spec.values.size());
  for (std::size_t i = 0; i < runs.size(); ++i) {
    runs[i].value = spec.values[i];
    runs[i].config = with_parameter(spec.base, spec.parameter, spec.values[i]);
  }
  parallel_for(runs.size(), workers, [&](std::size_t i) { runs[i].trace = run(genes, runs[i].config); });
  return runs;
}

struct PerturbResult {
  Trace baseline;
  Trace perturbed;
};

// Baseline run and a run whose named site is shifted by (dx, dy) on the
// torus; everything else, including the rng stream, is shared.
inline PerturbResult perturb_site(const DnaSequence& genome, const SimulationConfig& config,
                                  std::size_t gene_id, SiteKind site, long dx, long dy) {
  auto base = init_state(scan_genes(genome), config);
  if (gene_id >= base.genes.size()) {
    throw InvalidArgument("gene id " + std::to_string(gene_id) + " out of range (" +
                          std::to_string(base.genes.size()) + " genes)");
  }
  auto moved = base;
  auto& pos = moved.genes[gene_id].site_pos(site);
  pos = shifted(pos, dx, dy, config.grid.side);
  return {simulate(base), simulate(moved)};
}

struct MutationRun {
  std::size_t k = 0;
  std::vector<std::size_t> positions;  // mutated loci, in application order
  DnaSequence genome;
  std::optional<Trace> trace;  // empty when the mutated genome has no genes
};

// Runs k = 0..max_k substitutions on regulatory loci (locator, enhancer and
// inhibitor bases of expressed genes). The substitution sets are nested: run k
// applies the first k of one sampled sequence of loci.
inline std::vector<MutationRun> mutation_impact(const DnaSequence& genome,
                                                const SimulationConfig& config,
                                                std::size_t max_k, Rng& rng) {
  const auto genes = scan_genes(genome);
  if (genes.empty()) throw UnusableGenome();
  auto loci = regulatory_loci(genome, genes);
  if (loci.size() < max_k) {
    throw InvalidArgument("only " + std::to_string(loci.size()) +
                          " regulatory loci available for " + std::to_string(max_k) + " mutations");
  }
  std::vector<Base> replacement(max_k);
  for (std::size_t i = 0; i < max_k; ++i) {
    std::swap(loci[i], loci[i + rng.index(loci.size() - i)]);
    const auto old = static_cast<std::size_t>(genome[loci[i]]);
    replacement[i] = kBases[(old + 1 + rng.index(3)) % 4];
  }

  std::vector<MutationRun> runs;
  std::vector<Base> bases(genome.begin(), genome.end());
  for (std::size_t k = 0; k <= max_k; ++k) {
    if (k > 0) bases[loci[k - 1]] = replacement[k - 1];
    MutationRun r;
    r.k = k;
    r.positions.assign(loci.begin(), loci.begin() + static_cast<std::ptrdiff_t>(k));
    r.genome = DnaSequence(bases);
    auto mutated_genes = scan_genes(r.genome);
    if (!mutated_genes.empty()) r.trace = run(std::move(mutated_genes), config);
    runs.push_back(std::move(r));
  }
  return runs;
}

}  // namespace argrn
