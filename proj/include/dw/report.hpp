#pragma once

#include <string>

#include "json.hpp"

#include "dw/invariants.hpp"
#include "dw/state_sum.hpp"
#include "dw/surface.hpp"
#include "dw/twisted_algebra.hpp"

namespace dw {

using Json = nlohmann::ordered_json;

Json complex_json(std::complex<double> z);

Json report_json(const InvariantReport& r);
/// Flat table: one header line, one row per report.
std::string report_csv_header();
std::string report_csv_row(const InvariantReport& r);

Json decomposition_json(const WedderburnDecomposition& dec);
Json plan_json(const ContractionPlan& plan, int group_order);
Json state_sum_json(const StateSumResult& r, int group_order);

/// {"triangles": T, "pairing": [...], "reversal": [...]}
Json triangulation_json(const GluedTriangulation& tri);
GluedTriangulation triangulation_from_json(const Json& j);
GluedTriangulation read_triangulation_file(const std::string& path);

}  // namespace dw
