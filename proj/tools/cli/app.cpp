#include "cli/app.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "cli/config.hpp"
#include "cli/report.hpp"
#include "cli/units.hpp"
#include "lensattack/image_io.hpp"
#include "lensattack/ray_oracle.hpp"

namespace lensattack::cli {

namespace {

// Raw flag text; parsed after CLI11 so unit errors name the flag.
struct Flags {
  std::string config;
  std::string f, db, d_o, fc;
  std::string f_list, db_list, do_list;
  std::string target, candidates, db_min, db_max;
  std::string input, output, sidecar, region;
  std::string sigma, gain;
  std::string tile, threshold, min_fraction;
  unsigned threads = 0;
  bool oracle = false;
};

template <typename T, typename F>
T flag_value(const std::string& flag, const std::string& text, F&& parse) {
  try {
    return parse(text);
  } catch (const ConfigError& e) {
    throw ConfigError(flag, e.what());
  }
}

double length_flag(const std::string& flag, const std::string& text) {
  return flag_value<double>(flag, text, [](const std::string& t) { return parse_length(t); });
}

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> items;
  std::stringstream ss(text);
  for (std::string item; std::getline(ss, item, ',');) items.push_back(item);
  return items;
}

double number_flag(const std::string& flag, const std::string& text) {
  try {
    std::size_t used = 0;
    const double v = std::stod(text, &used);
    if (used == text.size()) return v;
  } catch (const std::exception&) {
  }
  throw ConfigError(flag, "expected a number, got '" + text + "'");
}

template <typename T>
T require(const std::optional<T>& value, const std::string& flag) {
  if (!value) throw ConfigError(flag, "is required");
  return *value;
}

RunConfig merged_config(const Flags& flags) {
  RunConfig config = flags.config.empty() ? RunConfig{} : load_config(flags.config);
  if (!flags.fc.empty()) {
    config.camera_focal_length = length_flag("--fc", flags.fc);
    if (!(config.camera_focal_length > 0.0)) throw ConfigError("--fc", "must be positive");
    config.sweep.camera_focal_length = config.camera_focal_length;
  }
  if (flags.threads > 0) config.threads = flags.threads;
  if (!flags.f.empty()) {
    config.stack.focal_length =
        flag_value<std::optional<double>>("--f", flags.f, [](const std::string& t) { return parse_focal_length(t); });
  }
  if (!flags.db.empty()) config.stack.gap = length_flag("--db", flags.db);
  if (!flags.d_o.empty()) config.stack.object_distance = length_flag("--do", flags.d_o);

  if (!flags.f_list.empty()) {
    config.sweep.focal_lengths.clear();
    for (const auto& item : split_list(flags.f_list)) {
      config.sweep.focal_lengths.push_back(flag_value<std::optional<double>>(
          "--f-list", item, [](const std::string& t) { return parse_focal_length(t); }));
    }
  }
  if (!flags.db_list.empty()) {
    config.sweep.gaps.clear();
    for (const auto& item : split_list(flags.db_list)) config.sweep.gaps.push_back(length_flag("--db-list", item));
  }
  if (!flags.do_list.empty()) {
    config.sweep.object_distances.clear();
    for (const auto& item : split_list(flags.do_list)) {
      config.sweep.object_distances.push_back(length_flag("--do-list", item));
    }
  }

  if (!flags.target.empty()) config.plan.target_depth = length_flag("--target", flags.target);
  if (!flags.d_o.empty()) config.plan.object_distance = config.stack.object_distance;
  if (!flags.candidates.empty()) {
    config.plan.candidates.clear();
    for (const auto& item : split_list(flags.candidates)) {
      config.plan.candidates.push_back(length_flag("--candidates", item));
    }
  }
  if (!flags.db_min.empty()) config.plan.gap_min = length_flag("--db-min", flags.db_min);
  if (!flags.db_max.empty()) config.plan.gap_max = length_flag("--db-max", flags.db_max);

  if (!flags.region.empty()) {
    config.simulate.region =
        flag_value<RegionSpec>("--region", flags.region, [](const std::string& t) { return parse_region(t); });
  }
  if (!flags.sigma.empty()) {
    config.simulate.sigma = number_flag("--sigma", flags.sigma);
    if (!(*config.simulate.sigma >= 0.0)) throw ConfigError("--sigma", "must be >= 0");
  }
  if (!flags.gain.empty()) config.simulate.defocus_gain = number_flag("--gain", flags.gain);
  if (!flags.tile.empty()) {
    const double tile = number_flag("--tile", flags.tile);
    if (tile < 3 || tile != static_cast<int>(tile)) throw ConfigError("--tile", "expected an integer >= 3");
    config.detect.tile_size = static_cast<int>(tile);
  }
  if (!flags.threshold.empty()) config.detect.score_threshold = number_flag("--threshold", flags.threshold);
  if (!flags.min_fraction.empty()) {
    config.detect.min_fraction = number_flag("--min-fraction", flags.min_fraction);
    if (!(config.detect.min_fraction >= 0.0 && config.detect.min_fraction <= 1.0)) {
      throw ConfigError("--min-fraction", "must lie in [0, 1]");
    }
  }
  return config;
}

OpticalStack stack_from(const RunConfig& config) {
  const StackConfig& s = config.stack;
  if (!s.focal_length && !s.gap && !s.object_distance) throw ConfigError("--f", "is required");
  return make_stack(s.focal_length, require(s.gap, "--db"), require(s.object_distance, "--do"),
                    config.camera_focal_length);
}

void write_text(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw Error(ErrorKind::Io, "cannot open " + path);
  file << text;
  if (!file) throw Error(ErrorKind::Io, "write failed: " + path);
}

std::string num(double value) { return format_number(value); }

int cmd_predict(const RunConfig& config, bool oracle_details, std::ostream& out) {
  const OpticalStack stack = stack_from(config);
  const AttackOutcome o = evaluate(stack);
  out << "scenario: " << scenario_name(o.scenario.scenario)
      << (o.scenario.feasible_in_ad ? " (feasible)" : " (infeasible: " + std::string(o.scenario.reason) + ")")
      << '\n';
  out << "m_total: " << num(o.formation.m_total) << '\n';
  out << "m_ori: " << num(o.formation.m_ori) << '\n';
  char depth[64];
  std::snprintf(depth, sizeof depth, "%.2f", o.expected_depth);
  out << "expected_depth_m: " << num(o.expected_depth) << " (" << depth << " m)\n";
  out << "oracle_magnification: " << num(o.oracle_magnification) << '\n';
  out << "divergence: " << num(o.divergence) << '\n';
  if (oracle_details) {
    out << "oracle_image_distance_m: " << num(oracle::stack_image_distance(stack)) << '\n';
    out << "focus_shift_m: " << num(focus_shift(stack)) << '\n';
  }
  if (o.divergence > 1e-6) {
    out << "note: closed-form and ray-traced |m_total| differ by " << num(100.0 * o.divergence)
        << "%; depth uses the closed form\n";
  }
  return kExitOk;
}

SweepGrid grid_from(const RunConfig& config) {
  SweepGrid grid = config.sweep;
  grid.camera_focal_length = config.camera_focal_length;
  return grid;
}

int cmd_sweep(const RunConfig& config, std::ostream& out) {
  const auto rows = sweep(grid_from(config), config.threads);
  std::ostringstream csv;
  emit_sweep_csv(rows, csv);
  write_text(config.output, csv.str(), out);
  return kExitOk;
}

int cmd_divergence(const RunConfig& config, std::ostream& out) {
  const auto rows = sweep(grid_from(config), config.threads);
  std::ostringstream csv;
  emit_divergence_csv(rows, csv);
  write_text(config.output, csv.str(), out);
  return kExitOk;
}

int cmd_plan(const RunConfig& config, std::ostream& out, std::ostream& err) {
  PlanRequest request;
  request.target_depth = require(config.plan.target_depth, "--target");
  request.object_distance = require(config.plan.object_distance, "--do");
  request.camera_focal_length = config.camera_focal_length;
  request.candidate_focal_lengths = config.plan.candidates;
  if (request.candidate_focal_lengths.empty()) throw ConfigError("--candidates", "is required");
  request.gap_min = require(config.plan.gap_min, "--db-min");
  request.gap_max = require(config.plan.gap_max, "--db-max");
  try {
    const PlanResult r = plan_attack(request);
    out << "focal_length_m: " << num(r.focal_length) << '\n';
    out << "gap_m: " << num(r.gap) << '\n';
    out << "achieved_depth_m: " << num(r.achieved_depth) << '\n';
    out << "residual_m: " << num(r.residual) << '\n';
    return kExitOk;
  } catch (const PlanUnreachable& e) {
    err << "error: " << e.what() << '\n';
    for (const CandidateRange& r : e.ranges()) {
      out << "candidate " << num(r.focal_length) << " m: ";
      if (r.reachable) {
        out << "depth range [" << num(r.min_depth) << ", " << num(r.max_depth) << "] m\n";
      } else {
        out << "no feasible gap\n";
      }
    }
    return kExitDomainError;
  }
}

int cmd_simulate(const RunConfig& config, std::ostream& out) {
  const SimulateConfig& sim = config.simulate;
  if (sim.input.empty()) throw ConfigError("--in", "is required");
  if (sim.output.empty()) throw ConfigError("--out", "is required");
  const OpticalStack stack = stack_from(config);
  const RasterImage image = read_image(sim.input);
  const double sigma = sim.sigma ? *sim.sigma : (stack.attack_lens ? defocus_sigma(stack, sim.defocus_gain) : 0.0);
  const SimulatedView view = simulate_attack_view(image, stack, sim.region, sigma);
  write_image(sim.output, view.image);

  nlohmann::json sidecar = {{"scenario", scenario_name(classify_scenario(stack).scenario)},
                            {"magnification", view.magnification},
                            {"depth_scale", view.depth_scale},
                            {"object_distance_m", stack.object_distance},
                            {"expected_depth_m", expected_depth(stack)},
                            {"blur_sigma_px", sigma},
                            {"output", sim.output}};
  const std::string sidecar_path = sim.sidecar.empty() ? sim.output + ".json" : sim.sidecar;
  write_text(sidecar_path, sidecar.dump(2) + "\n", out);
  out << "wrote " << sim.output << " (depth scale " << num(view.depth_scale) << ")\n";
  return kExitOk;
}

int cmd_detect(const RunConfig& config, std::ostream& out) {
  const DetectConfig& det = config.detect;
  if (det.input.empty()) throw ConfigError("--in", "is required");
  const RasterImage image = read_image(det.input);
  const BlurMap map = tiled_blur_map(image, det.tile_size);
  const DetectionVerdict verdict = detect(map, det.score_threshold, det.min_fraction);
  const auto doc = verdict_json(verdict, map, det.score_threshold, det.min_fraction);
  write_text(det.output, doc.dump(2) + "\n", out);
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Model, plan, simulate and detect lens attacks on monocular depth estimation", "lensattack"};
  app.require_subcommand(1);
  Flags flags;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--config", flags.config, "JSON run configuration; flags override it");
    sub->add_option("--fc", flags.fc, "camera focal length (default 26mm)");
  };
  auto add_stack = [&](CLI::App* sub) {
    sub->add_option("--f", flags.f, "attack lens focal length, e.g. -20cm, or 'none'");
    sub->add_option("--db", flags.db, "attack lens to camera lens gap, e.g. 2cm");
    sub->add_option("--do", flags.d_o, "object to attack lens distance, e.g. 6m");
  };
  auto add_grid = [&](CLI::App* sub) {
    sub->add_option("--f-list", flags.f_list, "comma-separated focal lengths");
    sub->add_option("--db-list", flags.db_list, "comma-separated gaps");
    sub->add_option("--do-list", flags.do_list, "comma-separated object distances");
    sub->add_option("--out", flags.output, "CSV output path (default stdout)");
    sub->add_option("--threads", flags.threads, "worker threads");
  };

  auto* predict = app.add_subcommand("predict", "evaluate one attack configuration");
  add_common(predict);
  add_stack(predict);
  predict->add_flag("--oracle", flags.oracle, "also print ray-traced image distances");

  auto* sweep_cmd = app.add_subcommand("sweep", "evaluate a parameter grid to CSV");
  add_common(sweep_cmd);
  add_grid(sweep_cmd);

  auto* divergence = app.add_subcommand("divergence", "closed form vs ray tracer over a grid");
  add_common(divergence);
  add_grid(divergence);

  auto* plan = app.add_subcommand("plan", "find a lens and gap for a target depth");
  add_common(plan);
  plan->add_option("--target", flags.target, "target spoofed depth, e.g. 8.78m");
  plan->add_option("--do", flags.d_o, "object distance");
  plan->add_option("--candidates", flags.candidates, "comma-separated candidate focal lengths");
  plan->add_option("--db-min", flags.db_min, "smallest gap");
  plan->add_option("--db-max", flags.db_max, "largest gap");

  auto* simulate = app.add_subcommand("simulate", "render the attacked view of an image");
  add_common(simulate);
  add_stack(simulate);
  simulate->add_option("--in", flags.input, "input PNG/PGM/PPM");
  simulate->add_option("--out", flags.output, "output image (.png, .pgm, .ppm)");
  simulate->add_option("--sidecar", flags.sidecar, "JSON sidecar path (default <out>.json)");
  simulate->add_option("--region", flags.region, "'full' or 'circle:cx,cy,r'");
  simulate->add_option("--sigma", flags.sigma, "blur sigma in pixels (default from defocus)");
  simulate->add_option("--gain", flags.gain, "blur pixels per meter of focus shift");

  auto* detect_cmd = app.add_subcommand("detect", "blur-based attack detection");
  add_common(detect_cmd);
  detect_cmd->add_option("--in", flags.input, "input image");
  detect_cmd->add_option("--out", flags.output, "verdict JSON path (default stdout)");
  detect_cmd->add_option("--tile", flags.tile, "tile size in pixels");
  detect_cmd->add_option("--threshold", flags.threshold, "VarLap score below which a tile is blurry");
  detect_cmd->add_option("--min-fraction", flags.min_fraction, "blurry tile fraction that raises an alert");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return kExitOk;
    }
    err << "usage error: " << e.what() << '\n';
    return kExitUsageError;
  }

  try {
    RunConfig config = merged_config(flags);
    if (predict->parsed()) return cmd_predict(config, flags.oracle, out);
    if (!flags.output.empty()) {
      if (simulate->parsed()) {
        config.simulate.output = flags.output;
      } else if (detect_cmd->parsed()) {
        config.detect.output = flags.output;
      } else {
        config.output = flags.output;
      }
    }
    if (!flags.input.empty()) config.simulate.input = config.detect.input = flags.input;
    if (!flags.sidecar.empty()) config.simulate.sidecar = flags.sidecar;
    if (sweep_cmd->parsed()) return cmd_sweep(config, out);
    if (divergence->parsed()) return cmd_divergence(config, out);
    if (plan->parsed()) return cmd_plan(config, out, err);
    if (simulate->parsed()) return cmd_simulate(config, out);
    if (detect_cmd->parsed()) return cmd_detect(config, out);
  } catch (const ConfigError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsageError;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitDomainError;
  }
  return kExitUsageError;
}

}  // namespace lensattack::cli
