#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

#include <nlohmann/json.hpp>

#include "trm/complex.hpp"

namespace trm {

struct RunConfig {
  std::uint64_t prime = Field::kDefaultPrime;
  bool rational = false;
  int degree_bound = 0;  // 0: each command picks its own default
  std::uint64_t seed = 0;
  int retries = 64;
  int forward = 4;
  int backward = 4;
  bool json = false;
  bool canonical = false;
  bool section4 = false;
  std::string output;            // complex file destination
  std::string mode = "ezd";      // build: ezd | factory
  std::size_t wlp_trials = 8;
  std::size_t ezd_budget = 2000;
  int lift_steps = -1;           // lift: -1 lifts all the way to R_Gamma

  Field field() const;
};

enum ExitCode { kExitOk = 0, kExitError = 1, kExitInconclusive = 2 };

/// Compose, exactness, dual exactness, minimality and periodicity verdicts.
struct WindowCertificate {
  bool composes = false;
  bool minimal = false;
  ExactnessReport exactness;
  ExactnessReport dual_exactness;
  std::optional<Periodicity> periodicity;

  bool passed() const;
  nlohmann::json to_json() const;
};

WindowCertificate certify_window(const FreeComplexWindow& w, int degree_bound = -1);

/// Each command writes its report to `out` and returns an ExitCode.
int cmd_analyze(const std::string& graph_path, const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_build(const std::string& graph_path, const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_lift(const std::string& complex_path, const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_verify(const std::string& complex_path, const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_factory(const RunConfig& cfg, std::ostream& out, std::ostream& err);

}  // namespace trm
