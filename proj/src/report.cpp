#include <cstdio>
#include <fstream>
#include <stdexcept>

#include "json.hpp"
#include "superint/verifier.hpp"

namespace superint {

std::string report_to_json(const VerificationReport& report, int indent) {
  nlohmann::ordered_json j;
  j["model"] = report.model;
  j["params"] = nlohmann::ordered_json::object();
  for (const auto& [key, value] : report.params) j["params"][key] = value;
  j["seed"] = report.seed;
  j["samples"] = report.samples;
  j["tol"] = report.tol;
  j["integrals"] = nlohmann::ordered_json::array();
  for (const auto& it : report.integrals)
    j["integrals"].push_back({{"label", it.label},
                              {"order", it.order},
                              {"max_residual", it.max_residual}});
  j["rank"] = {{"expected", report.rank.expected},
               {"observed_min", report.rank.observed_min},
               {"fraction", report.rank.fraction}};
  j["involution"] = report.involution;
  j["pass"] = report.pass;
  j["timestamp"] = report.timestamp;
  return j.dump(indent) + "\n";
}

VerificationReport report_from_json(const std::string& text) {
  const auto j = nlohmann::json::parse(text);
  VerificationReport r;
  r.model = j.at("model").get<std::string>();
  for (const auto& [key, value] : j.at("params").items())
    r.params[key] = value.get<double>();
  r.seed = j.at("seed").get<uint64_t>();
  r.samples = j.at("samples").get<int>();
  r.tol = j.at("tol").get<double>();
  for (const auto& it : j.at("integrals"))
    r.integrals.push_back({it.at("label").get<std::string>(),
                           it.at("order").get<int>(),
                           it.at("max_residual").get<double>()});
  r.rank.expected = j.at("rank").at("expected").get<int>();
  r.rank.observed_min = j.at("rank").at("observed_min").get<int>();
  r.rank.fraction = j.at("rank").at("fraction").get<double>();
  r.involution = j.at("involution").get<std::vector<std::vector<double>>>();
  r.pass = j.at("pass").get<bool>();
  if (j.contains("timestamp")) r.timestamp = j.at("timestamp").get<std::string>();
  return r;
}

void write_report_atomic(const VerificationReport& report, const std::string& path) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open " + tmp + " for writing");
    out << report_to_json(report);
    if (!out.flush()) throw std::runtime_error("write to " + tmp + " failed");
  }
  if (std::rename(tmp.c_str(), path.c_str()) != 0) {
    std::remove(tmp.c_str());
    throw std::runtime_error("atomic rename to " + path + " failed");
  }
}

}  // namespace superint
