#pragma once

#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "argrn/argrn.hpp"

namespace argrn::cli {

namespace fs = std::filesystem;

inline std::uint64_t fnv1a64(std::string_view data) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : data) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  return h;
}

inline std::string hex64(std::uint64_t v) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
  return buf;
}

inline std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read '" + path.string() + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline void write_file(const fs::path& path, std::string_view data) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out || !out.write(data.data(), static_cast<std::streamsize>(data.size()))) {
    throw IoError("cannot write '" + path.string() + "'");
  }
}

inline DnaSequence load_genome(const fs::path& path) { return DnaSequence::parse(read_file(path)); }

// Collects the files a command emits and writes manifest.json last.
class Artifacts {
 public:
  Artifacts(fs::path dir, std::string command, const std::vector<std::string>& argv)
      : dir_(std::move(dir)) {
    std::error_code ec;
    fs::create_directories(dir_, ec);
    if (ec || !fs::is_directory(dir_)) throw IoError("cannot create directory '" + dir_.string() + "'");
    manifest_["command"] = std::move(command);
    manifest_["argv"] = argv;
  }

  Json& manifest() { return manifest_; }

  void input(const fs::path& path, std::string_view content) {
    manifest_["inputs"].push_back(
        Json{{"path", path.string()}, {"bytes", content.size()}, {"fnv1a64", hex64(fnv1a64(content))}});
  }

  void emit(const std::string& name, std::string_view content) {
    write_file(dir_ / name, content);
    outputs_.push_back(Json{{"path", name}, {"bytes", content.size()}, {"fnv1a64", hex64(fnv1a64(content))}});
  }

  void finish() {
    manifest_["outputs"] = outputs_;
    write_file(dir_ / "manifest.json", manifest_.dump(2) + "\n");
  }

 private:
  fs::path dir_;
  Json manifest_ = Json::object();
  Json outputs_ = Json::array();
};

// Simulation flags; unset ones leave the config-file or default value alone.
struct SimFlags {
  std::string config_path;
  std::optional<int> grid_size, step;
  std::optional<double> threshold, beta, delta;
  std::optional<std::size_t> tf_per_gene, cycles;
  std::optional<std::uint64_t> seed;
  std::optional<std::string> initial;

  void add_to(CLI::App* app) {
    app->add_option("--config", config_path, "key = value config file")->check(CLI::ExistingFile);
    app->add_option("--grid-size", grid_size, "torus side length");
    app->add_option("--step", step, "max TF step per axis");
    app->add_option("--threshold", threshold, "binding distance threshold (strict)");
    app->add_option("--beta", beta);
    app->add_option("--delta", delta);
    app->add_option("--tf-per-gene", tf_per_gene);
    app->add_option("--cycles", cycles);
    app->add_option("--seed", seed, "master seed (default " + std::to_string(kDefaultSeed) + ")");
    app->add_option("--initial", initial, "uniform | random | constant:c | list:a,b,...");
  }

  void override(SimulationConfig& c) const {
    if (grid_size) c.grid.side = *grid_size;
    if (step) c.grid.step = *step;
    if (threshold) c.grid.threshold = *threshold;
    if (beta) c.beta = *beta;
    if (delta) c.delta = *delta;
    if (tf_per_gene) c.tf_per_gene = *tf_per_gene;
    if (cycles) c.cycles = *cycles;
    if (seed) c.seed = *seed;
    if (initial) c.initial = InitialConcentration::parse(*initial);
  }

  template <typename Config>
  void load_file(Config& c) const {
    if (!config_path.empty()) apply_config(parse_config_text(read_file(config_path)), c);
  }

  SimulationConfig resolve() const {
    SimulationConfig c;
    load_file(c);
    override(c);
    c.validate();
    return c;
  }
};

// "1000..10000" (step 1000), "1000..10000:500", or "1000,2000,4000".
inline std::vector<std::size_t> parse_lengths(const std::string& text) {
  std::vector<std::size_t> out;
  if (const auto dots = text.find(".."); dots != std::string::npos) {
    const auto colon = text.find(':', dots);
    const auto lo = detail::parse_number<std::size_t>(std::string_view(text).substr(0, dots), "--lengths");
    const auto hi = detail::parse_number<std::size_t>(
        std::string_view(text).substr(dots + 2, colon == std::string::npos ? std::string::npos : colon - dots - 2),
        "--lengths");
    const std::size_t step = colon == std::string::npos
                                 ? 1000
                                 : detail::parse_number<std::size_t>(std::string_view(text).substr(colon + 1), "--lengths");
    if (step == 0 || hi < lo) throw InvalidArgument("bad length range '" + text + "'");
    for (std::size_t l = lo; l <= hi; l += step) out.push_back(l);
    return out;
  }
  std::stringstream ss(text);
  for (std::string item; std::getline(ss, item, ',');) {
    out.push_back(detail::parse_number<std::size_t>(item, "--lengths"));
  }
  if (out.empty()) throw InvalidArgument("empty --lengths");
  return out;
}

// Values split on ';' when present (so list:a,b stays whole), else on ','.
inline std::vector<std::string> split_values(const std::string& text) {
  const char sep = text.find(';') != std::string::npos ? ';' : ',';
  std::vector<std::string> out;
  std::stringstream ss(text);
  for (std::string item; std::getline(ss, item, sep);) {
    if (!item.empty()) out.push_back(item);
  }
  if (out.empty()) throw InvalidArgument("no sweep values given");
  return out;
}

inline std::string indexed(std::string_view stem, std::size_t i, std::string_view ext) {
  char buf[16];
  std::snprintf(buf, sizeof buf, "%02zu", i);
  return std::string(stem) + buf + std::string(ext);
}

inline std::string evolution_csv(const std::vector<GenerationStats>& history) {
  std::ostringstream os;
  os << "generation,best,median,q25,q75\n";
  for (const auto& s : history) {
    os << s.generation << ',' << precise(s.best) << ',' << precise(s.median) << ',' << precise(s.q25)
       << ',' << precise(s.q75) << '\n';
  }
  return os.str();
}

inline svg::LineChart overlay_chart(std::string title) {
  svg::LineChart chart;
  chart.title = std::move(title);
  return chart;
}

inline int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Artificial gene regulatory network simulator", "argrn"};
  app.require_subcommand(1);
  std::vector<std::string> argv(args.begin() + (args.empty() ? 0 : 1), args.end());

  // gen
  std::size_t gen_length = 3000;
  std::uint64_t gen_seed = kDefaultSeed;
  std::string gen_out;
  auto* gen = app.add_subcommand("gen", "write a random genome");
  gen->add_option("--length", gen_length, "bases");
  gen->add_option("--seed", gen_seed);
  gen->add_option("--out", gen_out, "genome file")->required();

  // parse
  std::string genome_path;
  auto* parse = app.add_subcommand("parse", "print the gene table as JSON");
  parse->add_option("genome", genome_path)->required();
  std::uint64_t unused_seed = kDefaultSeed;
  parse->add_option("--seed", unused_seed, "accepted for uniformity; parsing is deterministic");

  // simulate
  std::string out_dir;
  SimFlags sim_flags;
  auto* simulate_cmd = app.add_subcommand("simulate", "run the regulatory dynamics");
  simulate_cmd->add_option("genome", genome_path)->required();
  simulate_cmd->add_option("--out", out_dir)->required();
  sim_flags.add_to(simulate_cmd);

  // evolve
  int problem_id = 1;
  std::size_t runs = 1;
  std::optional<std::size_t> population, generations, tournament_k, elitism, genome_length, workers;
  std::optional<double> mutation_rate;
  SimFlags evo_flags;
  auto* evolve_cmd = app.add_subcommand("evolve", "evolve genomes for a fitness problem");
  evolve_cmd->add_option("--problem", problem_id, "1 or 2");
  evolve_cmd->add_option("--out", out_dir)->required();
  evolve_cmd->add_option("--runs", runs, "independent master seeds")->check(CLI::PositiveNumber);
  evolve_cmd->add_option("--population", population);
  evolve_cmd->add_option("--generations", generations);
  evolve_cmd->add_option("--mutation-rate", mutation_rate);
  evolve_cmd->add_option("--tournament-k", tournament_k);
  evolve_cmd->add_option("--elitism", elitism);
  evolve_cmd->add_option("--genome-length", genome_length);
  evolve_cmd->add_option("--workers", workers);
  evo_flags.add_to(evolve_cmd);

  // sweep
  std::string sweep_param, sweep_values;
  std::size_t protein = 0;
  std::size_t study_workers = 1;
  SimFlags sweep_flags;
  auto* sweep_cmd = app.add_subcommand("sweep", "one run per parameter value");
  sweep_cmd->add_option("genome", genome_path)->required();
  sweep_cmd->add_option("--out", out_dir)->required();
  sweep_cmd->add_option("--param", sweep_param)->required();
  sweep_cmd->add_option("--values", sweep_values)->required();
  sweep_cmd->add_option("--protein", protein, "protein plotted in the overlay");
  sweep_cmd->add_option("--workers", study_workers);
  sweep_flags.add_to(sweep_cmd);

  // stats
  std::string lengths_spec = "1000..10000";
  std::size_t trials = 100;
  std::uint64_t stats_seed = kDefaultSeed;
  auto* stats = app.add_subcommand("stats", "mean gene count per genome length");
  stats->add_option("--lengths", lengths_spec, "a..b[:step] or a,b,c");
  stats->add_option("--trials", trials);
  stats->add_option("--seed", stats_seed);
  stats->add_option("--out", out_dir)->required();

  // perturb
  std::size_t gene_id = 0;
  std::string site_name = "enhancer";
  long dx = 0, dy = 0;
  SimFlags perturb_flags;
  auto* perturb = app.add_subcommand("perturb", "shift one binding site and rerun");
  perturb->add_option("genome", genome_path)->required();
  perturb->add_option("--out", out_dir)->required();
  perturb->add_option("--gene", gene_id, "0-based gene id");
  perturb->add_option("--site", site_name, "enhancer or inhibitor");
  perturb->add_option("--dx", dx);
  perturb->add_option("--dy", dy);
  perturb_flags.add_to(perturb);

  // mutstudy
  std::size_t max_k = 5;
  SimFlags mut_flags;
  auto* mutstudy = app.add_subcommand("mutstudy", "0..k point mutations on regulatory loci");
  mutstudy->add_option("genome", genome_path)->required();
  mutstudy->add_option("--out", out_dir)->required();
  mutstudy->add_option("--max-k", max_k);
  mutstudy->add_option("--protein", protein, "protein plotted in the overlay");
  mut_flags.add_to(mutstudy);

  std::vector<const char*> cargv;
  for (const auto& a : args) cargv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(cargv.size()), cargv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: usage: " << e.what() << '\n';
    return 2;
  }

  try {
    if (*gen) {
      Rng rng(gen_seed);
      const auto genome = random_genome(gen_length, rng);
      write_file(gen_out, genome.str());
      out << scan_genes(genome).size() << '\n';
      return 0;
    }

    if (*parse) {
      const auto genome = load_genome(genome_path);
      out << gene_table_json(scan_genes(genome)).dump(2) << '\n';
      return 0;
    }

    if (*simulate_cmd) {
      const auto config = sim_flags.resolve();
      const auto text = read_file(genome_path);
      const auto genes = scan_genes(DnaSequence::parse(text));
      if (genes.empty()) throw UnusableGenome();
      const auto trace = run(genes, config);
      Artifacts art(out_dir, "simulate", argv);
      art.input(genome_path, text);
      art.manifest()["seed"] = config.seed;
      art.manifest()["config"] = to_json(config);
      art.emit("trace.csv", trace_csv(trace));
      art.emit("run.json", run_metadata(trace).dump(2) + "\n");
      art.emit("dynamics.svg", dynamics_svg(trace));
      art.finish();
      out << "genes " << genes.size() << ", rows " << trace.rows() << '\n';
      return 0;
    }

    if (*evolve_cmd) {
      const auto fitness = problem(problem_id);
      GaConfig ga;
      ga.sim.cycles = fitness.min_cycles;
      evo_flags.load_file(ga);
      evo_flags.override(ga.sim);
      if (population) ga.population = *population;
      if (generations) ga.generations = *generations;
      if (mutation_rate) ga.mutation_rate = *mutation_rate;
      if (tournament_k) ga.tournament_k = *tournament_k;
      if (elitism) ga.elitism = *elitism;
      if (genome_length) ga.genome_length = *genome_length;
      if (workers) ga.workers = *workers;
      ga.validate();

      Artifacts art(out_dir, "evolve", argv);
      art.manifest()["seed"] = ga.sim.seed;
      art.manifest()["problem"] = problem_id;
      art.manifest()["runs"] = runs;
      art.manifest()["config"] = to_json(ga);

      std::vector<EvolutionResult> results;
      Json summary{{"problem", fitness.name}, {"direction", fitness.direction == Direction::Minimize ? "minimize" : "maximize"},
                   {"runs", Json::array()}};
      std::size_t overall = 0;
      for (std::size_t r = 0; r < runs; ++r) {
        // Run r uses master seed seed + r; evaluations share config.sim.seed.
        const std::uint64_t master = ga.sim.seed + r;
        results.push_back(evolve(ga, fitness, master));
        const auto& res = results.back();
        if (fitness.better(res.best.fitness, results[overall].best.fitness)) overall = r;
        summary["runs"].push_back(Json{{"run", r},
                                       {"master_seed", master},
                                       {"best_fitness", res.best.fitness},
                                       {"best_gene_count", res.best.gene_count}});
        if (runs > 1) {
          art.emit(indexed("run_", r, "_evolution.csv"), evolution_csv(res.history));
          art.emit(indexed("run_", r, "_best_genome.txt"), res.best.genome.str());
        }
      }
      const auto& best = results[overall].best;
      summary["best"] = Json{{"run", overall}, {"fitness", best.fitness}, {"gene_count", best.gene_count}};
      art.emit("evolution.csv", evolution_csv(results.front().history));
      if (runs > 1) art.emit("aggregate.csv", evolution_csv(aggregate_runs(results, fitness)));
      art.emit("best_genome.txt", best.genome.str());
      art.emit("summary.json", summary.dump(2) + "\n");
      art.finish();
      out << fitness.name << " best " << shortest(best.fitness) << '\n';
      return 0;
    }

    if (*sweep_cmd) {
      const auto text = read_file(genome_path);
      SweepSpec spec{sweep_parameter_from_string(sweep_param), split_values(sweep_values),
                     sweep_flags.resolve(), DnaSequence::parse(text)};
      const auto results = sweep(spec, study_workers);
      Artifacts art(out_dir, "sweep", argv);
      art.input(genome_path, text);
      art.manifest()["seed"] = spec.base.seed;
      art.manifest()["config"] = to_json(spec.base);
      art.manifest()["parameter"] = std::string(to_string(spec.parameter));
      auto chart = overlay_chart("protein " + std::to_string(protein) + " across " + sweep_param);
      Json listed = Json::array();
      for (std::size_t i = 0; i < results.size(); ++i) {
        const auto& r = results[i];
        if (protein >= r.trace.gene_count()) throw InvalidArgument("protein index out of range");
        const auto name = indexed("trace_", i, ".csv");
        art.emit(name, trace_csv(r.trace));
        chart.series.push_back({sweep_param + "=" + r.value, r.trace.protein_series(protein)});
        listed.push_back(Json{{"value", r.value}, {"trace", name}, {"seed", r.config.seed}, {"config", to_json(r.config)}});
      }
      art.manifest()["runs"] = listed;
      art.emit("overlay.svg", svg::render(chart));
      art.finish();
      out << results.size() << " runs\n";
      return 0;
    }

    if (*stats) {
      const auto rows = gene_count_table(parse_lengths(lengths_spec), trials, stats_seed);
      std::ostringstream csv;
      csv << "length,mean_genes,rounded\n";
      for (const auto& r : rows) csv << r.length << ',' << shortest(r.mean) << ',' << r.rounded << '\n';
      Artifacts art(out_dir, "stats", argv);
      art.manifest()["seed"] = stats_seed;
      art.manifest()["config"] = Json{{"lengths", lengths_spec}, {"trials", trials}};
      art.emit("gene_counts.csv", csv.str());
      art.finish();
      out << csv.str();
      return 0;
    }

    if (*perturb) {
      const auto config = perturb_flags.resolve();
      const auto text = read_file(genome_path);
      const auto site = site_kind_from_string(site_name);
      const auto result = perturb_site(DnaSequence::parse(text), config, gene_id, site, dx, dy);
      Artifacts art(out_dir, "perturb", argv);
      art.input(genome_path, text);
      art.manifest()["seed"] = config.seed;
      art.manifest()["config"] = to_json(config);
      art.manifest()["perturbation"] =
          Json{{"gene", gene_id}, {"site", std::string(to_string(site))}, {"dx", dx}, {"dy", dy},
               {"from", position_json(result.baseline.initial[gene_id].site_pos(site))},
               {"to", position_json(result.perturbed.initial[gene_id].site_pos(site))}};
      art.emit("baseline.csv", trace_csv(result.baseline));
      art.emit("perturbed.csv", trace_csv(result.perturbed));
      auto chart = overlay_chart("baseline vs perturbed");
      for (std::size_t g = 0; g < result.baseline.gene_count(); ++g) {
        chart.series.push_back({"baseline protein " + std::to_string(g), result.baseline.protein_series(g)});
        chart.series.push_back({"perturbed protein " + std::to_string(g), result.perturbed.protein_series(g)});
      }
      art.emit("comparison.svg", svg::render(chart));
      art.finish();
      out << (result.baseline.concentrations == result.perturbed.concentrations ? "identical" : "differs")
          << '\n';
      return 0;
    }

    if (*mutstudy) {
      const auto config = mut_flags.resolve();
      const auto text = read_file(genome_path);
      Rng rng(derive_seed(config.seed, 2));
      const auto results = mutation_impact(DnaSequence::parse(text), config, max_k, rng);
      Artifacts art(out_dir, "mutstudy", argv);
      art.input(genome_path, text);
      art.manifest()["seed"] = config.seed;
      art.manifest()["config"] = to_json(config);
      auto chart = overlay_chart("protein " + std::to_string(protein) + " under k mutations");
      Json listed = Json::array();
      for (const auto& r : results) {
        Json row{{"k", r.k}, {"positions", r.positions}};
        const auto genome_name = indexed("genome_k", r.k, ".txt");
        art.emit(genome_name, r.genome.str());
        row["genome"] = genome_name;
        if (r.trace) {
          const auto name = indexed("trace_k", r.k, ".csv");
          art.emit(name, trace_csv(*r.trace));
          row["trace"] = name;
          if (protein < r.trace->gene_count()) {
            chart.series.push_back({"k=" + std::to_string(r.k), r.trace->protein_series(protein)});
          }
        } else {
          row["trace"] = nullptr;
        }
        listed.push_back(std::move(row));
      }
      art.manifest()["runs"] = listed;
      art.emit("overlay.svg", svg::render(chart));
      art.finish();
      out << results.size() << " runs\n";
      return 0;
    }
  } catch (const Error& e) {
    err << "error: " << e.kind() << ": " << e.what() << '\n';
    return 1;
  }
  return 2;
}

}  // namespace argrn::cli
