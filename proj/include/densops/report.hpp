#ifndef DENSOPS_REPORT_HPP
#define DENSOPS_REPORT_HPP

#include <json.hpp>

#include "densops/cohomology.hpp"
#include "densops/quantization.hpp"

namespace densops {

using Json = nlohmann::json;

inline constexpr const char* kEngineVersion = "densops 1.0.0";
inline constexpr int kSchemaVersion = 1;

Json weight_json(const Scalar& s, const std::string& name = "param");

Json to_json(const SolveReport& r, const std::string& param_name = "param");
Json to_json(const CohomReport& r, const std::string& param_name = "param");
Json to_json(const LocusReport& r, const std::string& param_name = "lambda");
Json to_json(const CircleVsLineReport& r);
Json to_json(const ClassifyReport& r);
Json to_json(const FullQuantReport& r);
Json to_json(const QuantMap& q);
Json catalog_json(const Subalgebra& g);

// Wraps a result payload into the versioned report document.
Json report_doc(Json config, Json result);

// Fixed-width text rendering used by the table output mode.
std::string render_solve_report(const SolveReport& r, const std::string& param_name);
std::string render_cohom_report(const CohomReport& r);
std::string render_classify_report(const ClassifyReport& r);
std::string render_full_quant(const FullQuantReport& r);

}  // namespace densops

#endif
