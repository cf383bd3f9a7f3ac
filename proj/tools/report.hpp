// JSON shapes shared by the CLI commands. Key order is fixed at insertion,
// so identical inputs render byte-identical reports.
#ifndef GAMMALIFT_TOOLS_REPORT_HPP
#define GAMMALIFT_TOOLS_REPORT_HPP

#include <json.hpp>

#include "gammalift/cyclotomic.hpp"
#include "gammalift/gamma_value.hpp"
#include "gammalift/qsqrt.hpp"

#include <complex>
#include <string>

namespace gammalift {

using ordered_json = nlohmann::ordered_json;

inline ordered_json rational_json(const BigRational& r) { return r.str(); }

inline ordered_json cyclotomic_json(const CyclotomicNumber& c) {
  ordered_json coeffs = ordered_json::array();
  for (const auto& a : c.coeffs()) coeffs.push_back(a.str());
  return ordered_json{{"N", c.conductor()}, {"coeffs", coeffs}};
}

inline ordered_json gamma_json(const GammaValue& g) {
  return ordered_json{{"cyc", cyclotomic_json(g.cyc)}, {"q_half_power", g.q_half_power}};
}

inline ordered_json complex_json(std::complex<double> z) {
  return ordered_json::array({z.real(), z.imag()});
}

inline ordered_json qsqrt_json(const QSqrt& v) {
  if (v.is_rational()) return v.a.str();
  return ordered_json{{"rational", v.a.str()}, {"radical", v.b.str()}, {"base", v.q}};
}

struct RunReport {
  ordered_json doc;
  bool pass = true;

  RunReport(const std::string& command, const std::string& version) {
    doc["command"] = command;
    doc["version"] = version;
    doc["parameters"] = ordered_json::object();
    doc["identities"] = ordered_json::array();
    doc["results"] = ordered_json::object();
  }
  ordered_json& parameters() { return doc["parameters"]; }
  ordered_json& results() { return doc["results"]; }
  void identity(const std::string& s) { doc["identities"].push_back(s); }
  std::string render() {
    doc["pass"] = pass;
    return doc.dump(2) + "\n";
  }
};

} // namespace gammalift

#endif
