#pragma once

#include <string>

#include <json.hpp>

#include "sphdim/report.hpp"

namespace sphdim {

// Rationals serialize as canonical "p/q" strings ("p" for integers), never
// as floats.
nlohmann::json rational_json(const Rational& r);
nlohmann::json vector_json(const ExactVector& v);

nlohmann::json pair_json(const SphericalPair& p);
nlohmann::json analysis_json(const PairAnalysis& a);
nlohmann::json report_json(const PairAnalysis& a, const DimensionReport& r);

// Canonical rendering: sorted keys, two-space indent, trailing newline.
// Parsing the output and re-rendering reproduces it byte for byte.
std::string render_json(const nlohmann::json& j);

std::string describe_text(const PairAnalysis& a);
std::string report_text(const PairAnalysis& a, const DimensionReport& r);
std::string sweep_csv(const PairAnalysis& a,
                      const std::vector<DimensionReport>& reports);
std::string catalog_text(const std::vector<SphericalPair>& pairs);

}  // namespace sphdim
