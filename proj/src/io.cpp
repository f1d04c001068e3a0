#include "maxconv/io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>
#include <vector>

#include "json.hpp"

namespace maxconv {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

ordered_json measure_json(const DiscreteMeasure& m) {
  ordered_json atoms = ordered_json::array();
  const auto& xs = m.atoms();
  const auto& ws = m.weights();
  for (std::size_t i = 0; i < xs.size(); ++i)
    atoms.push_back({{"x", xs[i]}, {"w", ws[i]}});
  return ordered_json{{"atoms", atoms}};
}

DiscreteMeasure measure_from(const json& j) {
  if (!j.is_object() || !j.contains("atoms") || !j["atoms"].is_array())
    throw ValidationError("measure JSON must be an object with an \"atoms\" array");
  std::vector<double> xs, ws;
  std::size_t idx = 0;
  for (const auto& atom : j["atoms"]) {
    if (!atom.is_object() || !atom.contains("x") || !atom.contains("w") ||
        !atom["x"].is_number() || !atom["w"].is_number())
      throw ValidationError("atom " + std::to_string(idx) +
                            " must be an object with numeric \"x\" and \"w\"");
    double x = atom["x"].get<double>();
    double w = atom["w"].get<double>();
    if (!std::isfinite(x))
      throw ValidationError("atom " + std::to_string(idx) +
                            " has non-finite position");
    if (!(w >= 0.0))
      throw ValidationError("atom " + std::to_string(idx) +
                            " has negative weight " + std::to_string(w));
    xs.push_back(x);
    ws.push_back(w);
    ++idx;
  }
  double total = 0.0;
  for (double w : ws) total += w;
  if (std::abs(total - 1.0) > kNormalizationTol) {
    std::ostringstream msg;
    msg << "weights sum " << total;
    throw ValidationError(msg.str());
  }
  try {
    return DiscreteMeasure(std::move(xs), std::move(ws));
  } catch (const std::exception& e) {
    throw ValidationError(e.what());
  }
}

}  // namespace

std::string measure_to_json(const DiscreteMeasure& m) {
  return measure_json(m).dump(2) + "\n";
}

DiscreteMeasure measure_from_json(const std::string& text) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) throw ValidationError("measure JSON failed to parse");
  return measure_from(j);
}

DiscreteMeasure load_measure(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open measure file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return measure_from_json(buf.str());
  } catch (const ValidationError& e) {
    throw ValidationError(path + ": " + e.what());
  }
}

void save_measure(const DiscreteMeasure& m, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw ValidationError("cannot write measure file: " + path);
  out << measure_to_json(m);
}

std::string cdf_to_csv(const DiscreteMeasure& m) {
  std::ostringstream out;
  out.precision(17);
  out << "x,F\n";
  for (const auto& pt : cdf_points(m)) out << pt.x << "," << pt.f << "\n";
  return out.str();
}

void save_cdf_csv(const DiscreteMeasure& m, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw ValidationError("cannot write CSV file: " + path);
  out << cdf_to_csv(m);
}

std::string report_to_json(const VerifyReport& r) {
  json j{{"max_error", r.max_error}, {"witness_x", r.witness_x},
         {"pass", r.pass}};
  return j.dump(2) + "\n";
}

}  // namespace maxconv
