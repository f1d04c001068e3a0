#ifndef MAXCONV_IO_HPP
#define MAXCONV_IO_HPP

#include <stdexcept>
#include <string>

#include "maxconv/measure.hpp"
#include "maxconv/report.hpp"

namespace maxconv {

// Bad or missing input data (file absent, malformed JSON, weights that do
// not form a probability measure). The CLI maps this to exit code 3.
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Measure JSON: {"atoms": [{"x": number, "w": number}, ...]}, sorted by x on
// output; input may arrive unsorted and is canonicalized on load.
std::string measure_to_json(const DiscreteMeasure& m);
DiscreteMeasure measure_from_json(const std::string& text);

DiscreteMeasure load_measure(const std::string& path);
void save_measure(const DiscreteMeasure& m, const std::string& path);

// CDF CSV: header "x,F", one row per atom plus a leading pre-support row
// one unit left of the first atom with F = 0.
std::string cdf_to_csv(const DiscreteMeasure& m);
void save_cdf_csv(const DiscreteMeasure& m, const std::string& path);

// {"max_error": number, "witness_x": number, "pass": bool}
std::string report_to_json(const VerifyReport& r);

}  // namespace maxconv

#endif  // MAXCONV_IO_HPP
