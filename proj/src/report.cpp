#include "mlingam/report.hpp"

#include <stdexcept>

namespace mlingam {

namespace {
DirectionModel model_from_string(const std::string& s) {
  if (s == "M1") return DirectionModel::M1;
  if (s == "M2") return DirectionModel::M2;
  throw std::invalid_argument("unknown direction tag: " + s);
}
}  // namespace

PairReport make_pair_report(const std::array<std::string, 2>& labels,
                            const DirectionEstimate& est) {
  PairReport r;
  r.labels = labels;
  r.winner = est.winner;
  r.decided = est.decided;
  if (est.winner == DirectionModel::M1) {
    r.log_ml_m1 = est.best_log_ml;
    r.log_ml_m2 = est.runner_up_log_ml;
  } else {
    r.log_ml_m1 = est.runner_up_log_ml;
    r.log_ml_m2 = est.best_log_ml;
  }
  r.tau_frac1 = est.best_tau_frac1;
  r.tau_frac2 = est.best_tau_frac2;
  r.tau1 = est.best_hyper.tau_indvdl1;
  r.tau2 = est.best_hyper.tau_indvdl2;
  r.sigma12 = est.best_hyper.sigma12;
  r.mc_se = est.mc_se_winner;
  return r;
}

nlohmann::ordered_json to_json(const PairReport& r) {
  const std::string arrow = r.winner == DirectionModel::M1
                                ? r.labels[0] + "->" + r.labels[1]
                                : r.labels[1] + "->" + r.labels[0];
  return nlohmann::ordered_json{
      {"labels", {r.labels[0], r.labels[1]}},
      {"winner", to_string(r.winner)},
      {"direction", arrow},
      {"decided", r.decided},
      {"log_ml_m1", r.log_ml_m1},
      {"log_ml_m2", r.log_ml_m2},
      {"tau1", {{"frac", r.tau_frac1}, {"value", r.tau1}}},
      {"tau2", {{"frac", r.tau_frac2}, {"value", r.tau2}}},
      {"sigma12", r.sigma12},
      {"mc_se", r.mc_se},
  };
}

PairReport pair_report_from_json(const nlohmann::json& j) {
  PairReport r;
  r.labels = {j.at("labels").at(0).get<std::string>(), j.at("labels").at(1).get<std::string>()};
  r.winner = model_from_string(j.at("winner").get<std::string>());
  r.decided = j.at("decided").get<bool>();
  r.log_ml_m1 = j.at("log_ml_m1").get<double>();
  r.log_ml_m2 = j.at("log_ml_m2").get<double>();
  r.tau_frac1 = j.at("tau1").at("frac").get<double>();
  r.tau1 = j.at("tau1").at("value").get<double>();
  r.tau_frac2 = j.at("tau2").at("frac").get<double>();
  r.tau2 = j.at("tau2").at("value").get<double>();
  r.sigma12 = j.at("sigma12").get<double>();
  r.mc_se = j.at("mc_se").get<double>();
  return r;
}

nlohmann::ordered_json to_json(const TrialRecord& rec) {
  return nlohmann::ordered_json{
      {"trial", rec.index},
      {"truth", to_string(rec.truth)},
      {"winner", to_string(rec.winner)},
      {"decided", rec.decided},
      {"success", rec.success},
      {"columns_swapped", rec.columns_swapped},
      {"best_log_ml", rec.best_log_ml},
      {"runner_up_log_ml", rec.runner_up_log_ml},
      {"tau1", {{"frac", rec.tau_frac1}, {"value", rec.tau1}}},
      {"tau2", {{"frac", rec.tau_frac2}, {"value", rec.tau2}}},
      {"sigma12", rec.sigma12},
  };
}

nlohmann::ordered_json to_json(const SuccessReport& report) {
  return nlohmann::ordered_json{
      {"trials", report.trials},
      {"successes", report.successes},
      {"success_pct", report.success_pct},
      {"se_pct", report.se_pct},
  };
}

nlohmann::ordered_json to_json(const OrderingResult& ordering) {
  nlohmann::ordered_json ranked = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < ordering.order.size(); ++i)
    ranked.push_back({{"label", ordering.order[i]}, {"wins", ordering.wins[i]}});
  return nlohmann::ordered_json{
      {"order", ordering.order},
      {"ranked", ranked},
      {"tie_flag", ordering.tie_flag},
  };
}

std::string jsonl_line(const std::string& command, std::uint64_t seed,
                       const std::string& type, const nlohmann::ordered_json& payload) {
  const nlohmann::ordered_json line{
      {"schema_version", kSchemaVersion},
      {"command", command},
      {"seed", seed},
      {"type", type},
      {"payload", payload},
  };
  return line.dump();
}

}  // namespace mlingam
