#pragma once

#include <array>
#include <cstdint>
#include <string>

#include <json.hpp>

#include "mlingam/direction.hpp"
#include "mlingam/synth.hpp"

namespace mlingam {

inline constexpr int kSchemaVersion = 1;

// Per-pair result row. tau values carry both the selected grid fraction and
// the absolute variance (frac^2 * var of the column).
struct PairReport {
  std::array<std::string, 2> labels;
  DirectionModel winner = DirectionModel::M1;
  bool decided = true;
  double log_ml_m1 = 0.0;  // best cell of M1
  double log_ml_m2 = 0.0;  // best cell of M2
  double tau_frac1 = 0.0;
  double tau_frac2 = 0.0;
  double tau1 = 0.0;
  double tau2 = 0.0;
  double sigma12 = 0.0;
  double mc_se = 0.0;  // winning cell

  friend bool operator==(const PairReport&, const PairReport&) = default;
};

PairReport make_pair_report(const std::array<std::string, 2>& labels,
                            const DirectionEstimate& est);

nlohmann::ordered_json to_json(const PairReport& report);
PairReport pair_report_from_json(const nlohmann::json& j);

nlohmann::ordered_json to_json(const TrialRecord& rec);
nlohmann::ordered_json to_json(const SuccessReport& report);
nlohmann::ordered_json to_json(const OrderingResult& ordering);

// One output line: {"schema_version":N,"command":...,"seed":...,"type":...,
// "payload":{...}}.
std::string jsonl_line(const std::string& command, std::uint64_t seed,
                       const std::string& type, const nlohmann::ordered_json& payload);

}  // namespace mlingam
