#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "carleman/bennett.hpp"
#include "carleman/constants.hpp"
#include "carleman/extremal.hpp"
#include "carleman/geometric.hpp"
#include "carleman/matrixnorm.hpp"

namespace carleman {

using Json = nlohmann::ordered_json;

// Shortest round-trip decimal form of a double ("nan"/"inf" spelled out).
std::string format_double(double value);

Json report_json(const VerifyReport& report);
Json report_json(const ConstantReport& report);
Json report_json(const ConstantComparison& comparison);
Json report_json(const ExtremalSolution& solution);
Json report_json(const NormEstimate& estimate);
Json report_json(const Lemma0Bounds& bounds, std::size_t n, double r);
Json report_json(const std::vector<BennettRow>& rows);

// CSV views. Bennett rows use the fixed header
// alpha,n_max,max_term,bound,margin,f_min; the other reports are flattened
// as documented in the README.
std::string report_csv(const VerifyReport& report);
std::string report_csv(const ConstantComparison& comparison);
std::string report_csv(const ExtremalSolution& solution);
std::string report_csv(const NormEstimate& estimate);
std::string report_csv(const Lemma0Bounds& bounds, std::size_t n, double r);
std::string report_csv(const std::vector<BennettRow>& rows);

}  // namespace carleman
