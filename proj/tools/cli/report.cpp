#include "cli/report.hpp"

#include <cstdio>

namespace lensattack::cli {

std::string format_number(double value) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", value);
  return buf;
}

namespace {

std::string focal_text(const std::optional<double>& f) { return f ? format_number(*f) : "none"; }

void emit_point(const SweepRow& row, std::ostream& out) {
  out << focal_text(row.focal_length) << ',' << format_number(row.gap) << ','
      << format_number(row.object_distance) << ',';
}

}  // namespace

void emit_sweep_csv(std::span<const SweepRow> rows, std::ostream& out) {
  out << kSweepCsvHeader << '\n';
  for (const SweepRow& row : rows) {
    emit_point(row, out);
    if (!row.outcome) {
      out << "error:" << row.error << ",,,,,,false\n";
      continue;
    }
    const AttackOutcome& o = *row.outcome;
    out << scenario_name(o.scenario.scenario) << ',' << format_number(o.formation.m_total) << ','
        << format_number(o.formation.m_ori) << ',' << format_number(o.expected_depth) << ','
        << format_number(o.oracle_magnification) << ',' << format_number(o.divergence) << ','
        << (o.scenario.feasible_in_ad ? "true" : "false") << '\n';
  }
}

void emit_divergence_csv(std::span<const SweepRow> rows, std::ostream& out) {
  out << "f_m,db_m,do1_m,scenario,closed_form_mag,oracle_mag,divergence\n";
  for (const SweepRow& row : rows) {
    emit_point(row, out);
    if (!row.outcome) {
      out << "error:" << row.error << ",,,\n";
      continue;
    }
    const AttackOutcome& o = *row.outcome;
    out << scenario_name(o.scenario.scenario) << ',' << format_number(o.formation.m_total) << ','
        << format_number(o.oracle_magnification) << ',' << format_number(o.divergence) << '\n';
  }
}

nlohmann::json verdict_json(const DetectionVerdict& verdict, const BlurMap& map, double score_threshold,
                            double min_fraction) {
  nlohmann::json tiles = nlohmann::json::array();
  for (const TileCoord& t : verdict.blurry_tiles) tiles.push_back({t.row, t.col});
  return {{"attacked", verdict.attacked},
          {"blurry_fraction", verdict.blurry_fraction},
          {"blurry_tiles", tiles},
          {"tile_size", map.tile_size},
          {"rows", map.rows},
          {"cols", map.cols},
          {"scores", map.scores},
          {"score_threshold", score_threshold},
          {"min_fraction", min_fraction}};
}

}  // namespace lensattack::cli
