#include "cli/config.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "cli/units.hpp"

namespace lensattack::cli {

using nlohmann::json;

namespace {

// Re-throws a ConfigError from a nested parser with the JSON path attached.
template <typename F>
auto at_field(const std::string& path, F&& parse) {
  try {
    return parse();
  } catch (const ConfigError& e) {
    throw ConfigError(e.field().empty() ? path : path + "." + e.field(),
                      e.field().empty() ? e.what() : std::string(e.what()).substr(e.field().size() + 2));
  } catch (const json::exception& e) {
    throw ConfigError(path, e.what());
  }
}

double length_field(const json& node, const std::string& path) {
  return at_field(path, [&] {
    if (!node.is_string()) throw ConfigError("", "expected a length string such as \"20cm\"");
    return parse_length(node.get<std::string>());
  });
}

std::optional<double> focal_field(const json& node, const std::string& path) {
  return at_field(path, [&] {
    if (!node.is_string()) throw ConfigError("", "expected a length string or \"none\"");
    return parse_focal_length(node.get<std::string>());
  });
}

std::vector<double> length_list(const json& node, const std::string& path) {
  if (!node.is_array()) throw ConfigError(path, "expected an array of lengths");
  std::vector<double> values;
  for (std::size_t i = 0; i < node.size(); ++i) {
    values.push_back(length_field(node[i], path + "[" + std::to_string(i) + "]"));
  }
  return values;
}

void reject_unknown(const json& node, const std::string& path, std::initializer_list<const char*> keys) {
  if (!node.is_object()) throw ConfigError(path.empty() ? "<root>" : path, "expected an object");
  for (const auto& [key, value] : node.items()) {
    bool known = false;
    for (const char* k : keys) known = known || key == k;
    if (!known) throw ConfigError(path.empty() ? key : path + "." + key, "unknown field");
  }
}

std::string string_field(const json& node, const std::string& path) {
  if (!node.is_string()) throw ConfigError(path, "expected a string");
  return node.get<std::string>();
}

double number_field(const json& node, const std::string& path) {
  if (!node.is_number()) throw ConfigError(path, "expected a number");
  return node.get<double>();
}

RegionSpec region_field(const json& node, const std::string& path) {
  if (node.is_string()) return at_field(path, [&] { return parse_region(node.get<std::string>()); });
  reject_unknown(node, path, {"type", "center_x", "center_y", "radius"});
  const std::string type = string_field(node.value("type", json("full")), path + ".type");
  if (type == "full") return FullRegion{};
  if (type != "circle") throw ConfigError(path + ".type", "expected \"full\" or \"circle\"");
  return CircleRegion{number_field(node.at("center_x"), path + ".center_x"),
                      number_field(node.at("center_y"), path + ".center_y"),
                      number_field(node.at("radius"), path + ".radius")};
}

json region_json(const RegionSpec& region) {
  if (const auto* c = std::get_if<CircleRegion>(&region)) {
    return {{"type", "circle"}, {"center_x", c->center_x}, {"center_y", c->center_y}, {"radius", c->radius}};
  }
  return {{"type", "full"}};
}

bool same_region(const RegionSpec& a, const RegionSpec& b) {
  const auto* ca = std::get_if<CircleRegion>(&a);
  const auto* cb = std::get_if<CircleRegion>(&b);
  if (!ca || !cb) return !ca && !cb;
  return ca->center_x == cb->center_x && ca->center_y == cb->center_y && ca->radius == cb->radius;
}

json focal_json(const std::optional<double>& f) {
  return f ? json(format_length(*f)) : json("none");
}

}  // namespace

RegionSpec parse_region(std::string_view text) {
  if (text == "full") return FullRegion{};
  if (text.starts_with("circle:")) {
    CircleRegion circle{};
    char tail = 0;
    const std::string body(text.substr(7));
    if (std::sscanf(body.c_str(), "%lf,%lf,%lf%c", &circle.center_x, &circle.center_y, &circle.radius,
                    &tail) == 3) {
      return circle;
    }
  }
  throw ConfigError("", "region must be \"full\" or \"circle:cx,cy,r\"");
}

RunConfig parse_config(const json& doc) {
  RunConfig config;
  reject_unknown(doc, "", {"camera_focal_length", "threads", "stack", "sweep", "plan", "simulate", "detect", "output"});

  if (doc.contains("camera_focal_length")) {
    config.camera_focal_length = length_field(doc["camera_focal_length"], "camera_focal_length");
    if (!(config.camera_focal_length > 0.0)) throw ConfigError("camera_focal_length", "must be positive");
  }
  config.sweep.camera_focal_length = config.camera_focal_length;
  if (doc.contains("threads")) {
    const json& t = doc["threads"];
    if (!t.is_number_integer() || t.get<long long>() <= 0 || t.get<long long>() > 1024) throw ConfigError("threads", "expected a positive integer");
    config.threads = t.get<unsigned>();
  }
  if (doc.contains("output")) config.output = string_field(doc["output"], "output");

  if (doc.contains("stack")) {
    const json& s = doc["stack"];
    reject_unknown(s, "stack", {"f", "db", "do"});
    if (s.contains("f")) config.stack.focal_length = focal_field(s["f"], "stack.f");
    if (s.contains("db")) config.stack.gap = length_field(s["db"], "stack.db");
    if (s.contains("do")) config.stack.object_distance = length_field(s["do"], "stack.do");
  }

  if (doc.contains("sweep")) {
    const json& s = doc["sweep"];
    reject_unknown(s, "sweep", {"f", "db", "do"});
    if (s.contains("f")) {
      if (!s["f"].is_array()) throw ConfigError("sweep.f", "expected an array of lengths");
      for (std::size_t i = 0; i < s["f"].size(); ++i) {
        config.sweep.focal_lengths.push_back(focal_field(s["f"][i], "sweep.f[" + std::to_string(i) + "]"));
      }
    }
    if (s.contains("db")) config.sweep.gaps = length_list(s["db"], "sweep.db");
    if (s.contains("do")) config.sweep.object_distances = length_list(s["do"], "sweep.do");
  }

  if (doc.contains("plan")) {
    const json& p = doc["plan"];
    reject_unknown(p, "plan", {"target", "do", "candidates", "db_min", "db_max"});
    if (p.contains("target")) config.plan.target_depth = length_field(p["target"], "plan.target");
    if (p.contains("do")) config.plan.object_distance = length_field(p["do"], "plan.do");
    if (p.contains("candidates")) config.plan.candidates = length_list(p["candidates"], "plan.candidates");
    if (p.contains("db_min")) config.plan.gap_min = length_field(p["db_min"], "plan.db_min");
    if (p.contains("db_max")) config.plan.gap_max = length_field(p["db_max"], "plan.db_max");
  }

  if (doc.contains("simulate")) {
    const json& s = doc["simulate"];
    reject_unknown(s, "simulate", {"input", "output", "sidecar", "region", "sigma", "defocus_gain"});
    if (s.contains("input")) config.simulate.input = string_field(s["input"], "simulate.input");
    if (s.contains("output")) config.simulate.output = string_field(s["output"], "simulate.output");
    if (s.contains("sidecar")) config.simulate.sidecar = string_field(s["sidecar"], "simulate.sidecar");
    if (s.contains("region")) config.simulate.region = region_field(s["region"], "simulate.region");
    if (s.contains("sigma") && !s["sigma"].is_null()) {
      config.simulate.sigma = number_field(s["sigma"], "simulate.sigma");
      if (!(*config.simulate.sigma >= 0.0)) throw ConfigError("simulate.sigma", "must be >= 0");
    }
    if (s.contains("defocus_gain")) {
      config.simulate.defocus_gain = number_field(s["defocus_gain"], "simulate.defocus_gain");
      if (!(config.simulate.defocus_gain >= 0.0)) throw ConfigError("simulate.defocus_gain", "must be >= 0");
    }
  }

  if (doc.contains("detect")) {
    const json& d = doc["detect"];
    reject_unknown(d, "detect", {"input", "output", "tile_size", "score_threshold", "min_fraction"});
    if (d.contains("input")) config.detect.input = string_field(d["input"], "detect.input");
    if (d.contains("output")) config.detect.output = string_field(d["output"], "detect.output");
    if (d.contains("tile_size")) {
      if (!d["tile_size"].is_number_integer() || d["tile_size"].get<int>() < 3) {
        throw ConfigError("detect.tile_size", "expected an integer >= 3");
      }
      config.detect.tile_size = d["tile_size"].get<int>();
    }
    if (d.contains("score_threshold")) {
      config.detect.score_threshold = number_field(d["score_threshold"], "detect.score_threshold");
    }
    if (d.contains("min_fraction")) {
      config.detect.min_fraction = number_field(d["min_fraction"], "detect.min_fraction");
      if (!(config.detect.min_fraction >= 0.0 && config.detect.min_fraction <= 1.0)) {
        throw ConfigError("detect.min_fraction", "must lie in [0, 1]");
      }
    }
  }
  return config;
}

RunConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("--config", "cannot open " + path.string());
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    throw ConfigError("--config", path.string() + ": " + e.what());
  }
  return parse_config(doc);
}

json to_json(const RunConfig& config) {
  json doc;
  doc["camera_focal_length"] = format_length(config.camera_focal_length);
  doc["threads"] = config.threads;
  if (!config.output.empty()) doc["output"] = config.output;

  json stack = json::object();
  if (config.stack.focal_length || config.stack.gap || config.stack.object_distance) {
    stack["f"] = focal_json(config.stack.focal_length);
  }
  if (config.stack.gap) stack["db"] = format_length(*config.stack.gap);
  if (config.stack.object_distance) stack["do"] = format_length(*config.stack.object_distance);
  doc["stack"] = stack;

  json sweep = json::object();
  sweep["f"] = json::array();
  for (const auto& f : config.sweep.focal_lengths) sweep["f"].push_back(focal_json(f));
  sweep["db"] = json::array();
  for (double v : config.sweep.gaps) sweep["db"].push_back(format_length(v));
  sweep["do"] = json::array();
  for (double v : config.sweep.object_distances) sweep["do"].push_back(format_length(v));
  doc["sweep"] = sweep;

  json plan = json::object();
  if (config.plan.target_depth) plan["target"] = format_length(*config.plan.target_depth);
  if (config.plan.object_distance) plan["do"] = format_length(*config.plan.object_distance);
  plan["candidates"] = json::array();
  for (double v : config.plan.candidates) plan["candidates"].push_back(format_length(v));
  if (config.plan.gap_min) plan["db_min"] = format_length(*config.plan.gap_min);
  if (config.plan.gap_max) plan["db_max"] = format_length(*config.plan.gap_max);
  doc["plan"] = plan;

  json sim = {{"region", region_json(config.simulate.region)}, {"defocus_gain", config.simulate.defocus_gain}};
  if (!config.simulate.input.empty()) sim["input"] = config.simulate.input;
  if (!config.simulate.output.empty()) sim["output"] = config.simulate.output;
  if (!config.simulate.sidecar.empty()) sim["sidecar"] = config.simulate.sidecar;
  if (config.simulate.sigma) sim["sigma"] = *config.simulate.sigma;
  doc["simulate"] = sim;

  json det = {{"tile_size", config.detect.tile_size},
              {"score_threshold", config.detect.score_threshold},
              {"min_fraction", config.detect.min_fraction}};
  if (!config.detect.input.empty()) det["input"] = config.detect.input;
  if (!config.detect.output.empty()) det["output"] = config.detect.output;
  doc["detect"] = det;
  return doc;
}

bool operator==(const RunConfig& a, const RunConfig& b) {
  return a.camera_focal_length == b.camera_focal_length && a.threads == b.threads && a.stack == b.stack &&
         a.sweep.focal_lengths == b.sweep.focal_lengths && a.sweep.gaps == b.sweep.gaps &&
         a.sweep.object_distances == b.sweep.object_distances &&
         a.sweep.camera_focal_length == b.sweep.camera_focal_length && a.plan == b.plan &&
         a.simulate.input == b.simulate.input && a.simulate.output == b.simulate.output &&
         a.simulate.sidecar == b.simulate.sidecar && same_region(a.simulate.region, b.simulate.region) &&
         a.simulate.sigma == b.simulate.sigma && a.simulate.defocus_gain == b.simulate.defocus_gain &&
         a.detect == b.detect && a.output == b.output;
}

}  // namespace lensattack::cli
