#pragma once

#include <ostream>
#include <span>
#include <string>

#include <json.hpp>

#include "lensattack/attack_model.hpp"
#include "lensattack/defense.hpp"

namespace lensattack::cli {

inline constexpr const char* kSweepCsvHeader =
    "f_m,db_m,do1_m,scenario,m_total,m_ori,expected_depth_m,oracle_mag,divergence,feasible";

// %.6g, the number format used by every CSV column.
std::string format_number(double value);

// Header plus one LF-terminated line per row. Rows that failed carry
// "error:<Kind>" in the scenario column and empty numeric fields.
void emit_sweep_csv(std::span<const SweepRow> rows, std::ostream& out);

// Closed-form versus ray-traced magnification, one line per grid point.
void emit_divergence_csv(std::span<const SweepRow> rows, std::ostream& out);

nlohmann::json verdict_json(const DetectionVerdict& verdict, const BlurMap& map, double score_threshold,
                            double min_fraction);

}  // namespace lensattack::cli
