#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "hecke/errors.hpp"
#include "hecke/gl1.hpp"
#include "hecke/matrix.hpp"
#include "hecke/serialize.hpp"

namespace hecke {

enum class Scenario { Gl1, Gagm, Classify, Selftest };

enum class Expectation { Isomorphic, NotIsomorphic, ReportOnly };

inline std::string to_string(Scenario s) {
  switch (s) {
    case Scenario::Gl1: return "gl1";
    case Scenario::Gagm: return "gagm";
    case Scenario::Classify: return "classify";
    case Scenario::Selftest: return "selftest";
  }
  return "?";
}

inline std::string to_string(Expectation e) {
  switch (e) {
    case Expectation::Isomorphic: return "isomorphic";
    case Expectation::NotIsomorphic: return "not_isomorphic";
    case Expectation::ReportOnly: return "report_only";
  }
  return "?";
}

// Validated run configuration.  Scalars arrive as 4-integer tuples, so the
// whole pipeline stays float-free.
struct RunConfig {
  Scenario scenario = Scenario::Selftest;
  int genus = 1;
  std::vector<GaussianRational> mult;   // gl1 / gagm: 2g nonzero values
  std::vector<GaussianRational> add;    // gagm: 2g values
  std::vector<Matrix> images;           // classify: 2g rank-2 images
  DegreeWindow window = DegreeWindow(-2, 4);
  std::uint64_t seed = 0;
  Expectation expect = Expectation::ReportOnly;
  std::optional<std::string> out;

  friend bool operator==(const RunConfig& a, const RunConfig& b) {
    return a.scenario == b.scenario && a.genus == b.genus && a.mult == b.mult &&
           a.add == b.add && a.images == b.images && a.window == b.window &&
           a.seed == b.seed && a.expect == b.expect && a.out == b.out;
  }
};

namespace detail {

inline std::vector<GaussianRational> parse_scalar_list(const Json& j, const std::string& path,
                                                       bool nonzero, std::size_t expected) {
  if (!j.is_array()) {
    throw ConfigError(path, "expected an array of scalar tuples");
  }
  if (j.size() != expected) {
    throw ConfigError(path, "expected exactly " + std::to_string(expected) + " values");
  }
  std::vector<GaussianRational> values;
  values.reserve(j.size());
  for (std::size_t i = 0; i < j.size(); ++i) {
    const std::string entry_path = path + "/" + std::to_string(i);
    GaussianRational v = parse_scalar(j[i], entry_path);
    if (nonzero && v.is_zero()) {
      throw ConfigError(entry_path, "multiplicative character value must be nonzero");
    }
    values.push_back(std::move(v));
  }
  return values;
}

}  // namespace detail

inline RunConfig parse_config(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ConfigError("", std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object()) {
    throw ConfigError("", "config must be a JSON object");
  }

  static const std::set<std::string> known = {"scenario", "genus", "mult",  "add",
                                              "images",   "window", "seed", "expect",
                                              "out"};
  for (const auto& [key, value] : j.items()) {
    if (!known.count(key)) {
      throw ConfigError("/" + key, "unknown configuration field");
    }
  }

  RunConfig config;

  if (!j.contains("scenario") || !j["scenario"].is_string()) {
    throw ConfigError("/scenario", "expected one of gl1, gagm, classify, selftest");
  }
  const std::string scenario = j["scenario"].get<std::string>();
  if (scenario == "gl1") {
    config.scenario = Scenario::Gl1;
  } else if (scenario == "gagm") {
    config.scenario = Scenario::Gagm;
  } else if (scenario == "classify") {
    config.scenario = Scenario::Classify;
  } else if (scenario == "selftest") {
    config.scenario = Scenario::Selftest;
  } else {
    throw ConfigError("/scenario", "expected one of gl1, gagm, classify, selftest");
  }

  if (j.contains("genus")) {
    if (!j["genus"].is_number_integer()) {
      throw ConfigError("/genus", "genus must be an integer");
    }
    config.genus = j["genus"].get<int>();
  }
  if (config.genus < 1) {
    throw ConfigError("/genus", "genus must be at least 1");
  }
  const std::size_t rank = 2 * static_cast<std::size_t>(config.genus);

  if (j.contains("window")) {
    const Json& w = j["window"];
    if (!w.is_array() || w.size() != 2 || !w[0].is_number_integer() ||
        !w[1].is_number_integer()) {
      throw ConfigError("/window", "expected [lo, hi] with integer bounds");
    }
    const int lo = w[0].get<int>();
    const int hi = w[1].get<int>();
    if (lo > hi) {
      throw ConfigError("/window", "empty window: lo exceeds hi");
    }
    config.window = DegreeWindow(lo, hi);
  } else {
    config.window = default_window(config.genus);
  }

  if (j.contains("seed")) {
    if (!j["seed"].is_number_unsigned() && !j["seed"].is_number_integer()) {
      throw ConfigError("/seed", "seed must be a non-negative integer");
    }
    if (j["seed"].is_number_integer() && j["seed"].get<std::int64_t>() < 0) {
      throw ConfigError("/seed", "seed must be a non-negative integer");
    }
    config.seed = j["seed"].get<std::uint64_t>();
  }

  if (j.contains("expect")) {
    if (!j["expect"].is_string()) {
      throw ConfigError("/expect", "expected isomorphic, not_isomorphic or report_only");
    }
    const std::string e = j["expect"].get<std::string>();
    if (e == "isomorphic") {
      config.expect = Expectation::Isomorphic;
    } else if (e == "not_isomorphic") {
      config.expect = Expectation::NotIsomorphic;
    } else if (e == "report_only") {
      config.expect = Expectation::ReportOnly;
    } else {
      throw ConfigError("/expect", "expected isomorphic, not_isomorphic or report_only");
    }
  }

  if (j.contains("out")) {
    if (!j["out"].is_string()) {
      throw ConfigError("/out", "output path must be a string");
    }
    config.out = j["out"].get<std::string>();
  }

  const bool needs_mult =
      config.scenario == Scenario::Gl1 || config.scenario == Scenario::Gagm;
  if (needs_mult) {
    if (!j.contains("mult")) {
      throw ConfigError("/mult", "scenario requires a multiplicative character");
    }
    config.mult = detail::parse_scalar_list(j["mult"], "/mult", /*nonzero=*/true, rank);
  } else if (j.contains("mult")) {
    throw ConfigError("/mult", "field not used by this scenario");
  }

  if (config.scenario == Scenario::Gagm) {
    if (!j.contains("add")) {
      throw ConfigError("/add", "scenario requires an additive character");
    }
    config.add = detail::parse_scalar_list(j["add"], "/add", /*nonzero=*/false, rank);
  } else if (j.contains("add")) {
    throw ConfigError("/add", "field not used by this scenario");
  }

  if (config.scenario == Scenario::Classify) {
    if (!j.contains("images")) {
      throw ConfigError("/images", "scenario requires generator images");
    }
    const Json& imgs = j["images"];
    if (!imgs.is_array() || imgs.size() != rank) {
      throw ConfigError("/images",
                        "expected exactly " + std::to_string(rank) + " generator images");
    }
    for (std::size_t i = 0; i < imgs.size(); ++i) {
      const std::string path = "/images/" + std::to_string(i);
      Matrix m = parse_matrix(imgs[i], path);
      if (m.rows() != 2 || m.cols() != 2) {
        throw ConfigError(path, "generator images must be 2x2 matrices");
      }
      config.images.push_back(std::move(m));
    }
  } else if (j.contains("images")) {
    throw ConfigError("/images", "field not used by this scenario");
  }

  return config;
}

inline Json serialize(const RunConfig& config) {
  Json out{{"scenario", to_string(config.scenario)},
           {"genus", config.genus},
           {"window", Json::array({config.window.lo, config.window.hi})},
           {"seed", config.seed},
           {"expect", to_string(config.expect)}};
  if (!config.mult.empty()) {
    out["mult"] = serialize(config.mult);
  }
  if (!config.add.empty()) {
    out["add"] = serialize(config.add);
  }
  if (!config.images.empty()) {
    Json imgs = Json::array();
    for (const Matrix& m : config.images) {
      imgs.push_back(serialize(m));
    }
    out["images"] = std::move(imgs);
  }
  if (config.out) {
    out["out"] = *config.out;
  }
  return out;
}

}  // namespace hecke
