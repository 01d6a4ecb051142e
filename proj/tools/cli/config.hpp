#pragma once

#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "lensattack/attack_model.hpp"
#include "lensattack/defense.hpp"
#include "lensattack/image_sim.hpp"
#include "lensattack/raster.hpp"

namespace lensattack::cli {

// Usage or configuration problem; `field` names the offending flag or JSON
// path so the diagnostic can point at it.
class ConfigError : public std::runtime_error {
 public:
  ConfigError(std::string field, const std::string& message)
      : std::runtime_error(field.empty() ? message : field + ": " + message), field_(std::move(field)) {}

  const std::string& field() const noexcept { return field_; }

 private:
  std::string field_;
};

struct StackConfig {
  std::optional<double> focal_length;  // nullopt: no lens
  std::optional<double> gap;
  std::optional<double> object_distance;

  friend bool operator==(const StackConfig&, const StackConfig&) = default;
};

struct PlanConfig {
  std::optional<double> target_depth;
  std::optional<double> object_distance;
  std::vector<double> candidates;
  std::optional<double> gap_min;
  std::optional<double> gap_max;

  friend bool operator==(const PlanConfig&, const PlanConfig&) = default;
};

struct SimulateConfig {
  std::string input;
  std::string output;
  std::string sidecar;
  RegionSpec region = FullRegion{};
  std::optional<double> sigma;  // pixels; when absent use defocus_gain
  double defocus_gain = kDefaultDefocusGain;
};

struct DetectConfig {
  std::string input;
  std::string output;
  int tile_size = kDefaultTileSize;
  double score_threshold = kDefaultScoreThreshold;
  double min_fraction = kDefaultMinFraction;

  friend bool operator==(const DetectConfig&, const DetectConfig&) = default;
};

struct RunConfig {
  double camera_focal_length = kDefaultCameraFocalLength;
  unsigned threads = 1;
  StackConfig stack;
  SweepGrid sweep;
  PlanConfig plan;
  SimulateConfig simulate;
  DetectConfig detect;
  std::string output;  // sweep / divergence CSV path; empty = stdout
};

bool operator==(const RunConfig& a, const RunConfig& b);

// Lengths in JSON are strings with a unit suffix; see README for the schema.
RunConfig parse_config(const nlohmann::json& document);
RunConfig load_config(const std::filesystem::path& path);
nlohmann::json to_json(const RunConfig& config);

// "full" or "circle:cx,cy,r" (pixels).
RegionSpec parse_region(std::string_view text);

}  // namespace lensattack::cli
