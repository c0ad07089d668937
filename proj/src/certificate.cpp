#include "fracpart/certificate.hpp"

#include "json.hpp"

namespace fracpart {

std::string certificate_line(const VerificationReport& report) {
  const auto& c = report.claim;
  nlohmann::ordered_json j;
  j["family"] = std::string(to_string(c.family));
  j["alpha"] = to_string(c.alpha);
  j["d"] = c.d;
  j["ell"] = c.ell;
  j["e"] = c.e;
  j["r"] = to_string(c.r);
  j["modulus_power"] = c.modulus_power;
  j["n_max"] = report.n_max;
  j["status"] = std::string(to_string(report.status));
  if (report.counterexample) {
    const auto& ce = *report.counterexample;
    j["counterexample"] = {{"n", ce.n}, {"value", to_string(ce.value)}, {"ord", to_string(ce.ord)}};
  }
  j["artifact_version"] = kArtifactVersion;
  return j.dump();
}

}  // namespace fracpart
