#pragma once

#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "engine.hpp"
#include "format.hpp"
#include "svg.hpp"

namespace argrn {

using Json = nlohmann::ordered_json;

// Header: cycle,c_0..c_{N-1},r_0..r_{N-1}; values with 17 significant digits.
inline void write_trace_csv(std::ostream& out, const Trace& trace) {
  const std::size_t n = trace.gene_count();
  out << "cycle";
  for (std::size_t i = 0; i < n; ++i) out << ",c_" << i;
  for (std::size_t i = 0; i < n; ++i) out << ",r_" << i;
  out << '\n';
  for (std::size_t t = 0; t < trace.rows(); ++t) {
    out << t;
    for (double v : trace.concentrations[t]) out << ',' << precise(v);
    for (double v : trace.rates[t]) out << ',' << precise(v);
    out << '\n';
  }
}

inline std::string trace_csv(const Trace& trace) {
  std::ostringstream os;
  write_trace_csv(os, trace);
  return os.str();
}

inline Json to_json(const Gene& g) {
  return Json{{"id", g.id},
              {"promoter_start", g.promoter_start},
              {"internal_start", g.internal_start},
              {"internal_end", g.internal_end},
              {"L", g.length},
              {"S", g.site_size},
              {"locator", to_string(g.locator)},
              {"d", g.locator_offset},
              {"enhancer_start", g.enhancer_start},
              {"enhancer", to_string(g.enhancer)},
              {"inhibitor_start", g.inhibitor_start},
              {"inhibitor", to_string(g.inhibitor)},
              {"protein", to_string(g.protein)}};
}

inline Json gene_table_json(const std::vector<Gene>& genes) {
  Json rows = Json::array();
  for (const auto& g : genes) rows.push_back(to_json(g));
  return rows;
}

inline Json to_json(const SimulationConfig& c) {
  return Json{{"grid_size", c.grid.side},
              {"step", c.grid.step},
              {"threshold", c.grid.threshold},
              {"beta", c.beta},
              {"delta", c.delta},
              {"tf_per_gene", c.tf_per_gene},
              {"cycles", c.cycles},
              {"seed", c.seed},
              {"initial_concentration_mode", c.initial.str()}};
}

inline Json position_json(Position p) { return Json::array({p.x, p.y}); }

// Seed, config and the per-gene table with site placements.
inline Json run_metadata(const Trace& trace) {
  Json genes = Json::array();
  for (const auto& gs : trace.initial) {
    Json row = to_json(gs.gene);
    row["enhancer_pos"] = position_json(gs.enhancer_pos);
    row["inhibitor_pos"] = position_json(gs.inhibitor_pos);
    row["initial_concentration"] = gs.concentration;
    genes.push_back(std::move(row));
  }
  return Json{{"seed", trace.config.seed},
              {"config", to_json(trace.config)},
              {"rows", trace.rows()},
              {"genes", std::move(genes)}};
}

// One polyline per protein, legend by gene id.
inline std::string dynamics_svg(const Trace& trace, std::string title = "Protein concentrations") {
  svg::LineChart chart;
  chart.title = std::move(title);
  for (std::size_t g = 0; g < trace.gene_count(); ++g) {
    chart.series.push_back({"protein " + std::to_string(g), trace.protein_series(g)});
  }
  return svg::render(chart);
}

}  // namespace argrn
