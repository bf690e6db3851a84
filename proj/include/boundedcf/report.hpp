#pragma once

#include <iosfwd>

#include <json.hpp>

#include "boundedcf/asymptotics.hpp"
#include "boundedcf/spectral.hpp"

namespace boundedcf {

using Json = nlohmann::ordered_json;

/// {A, delta, lo, hi, m, residual, ...}
Json to_json(const DimensionResult& r);
DimensionResult dimension_from_json(const Json& j);

Json to_json(const PoleResult& r);

/// {slope, stderr, range: [N_min, N_max], ...}
Json to_json(const PowerLawFit& fit);

/// {fit, prediction, samples: [...]}
Json fit_report(const PowerLawFit& fit, double prediction);

Json to_json(const SmoothingReport& report);

/// Two-space indented JSON followed by a newline.
void write_json(std::ostream& out, const Json& j);

/// "N,count,predicted" rows from the fitted line.
void write_fit_csv(std::ostream& out, const PowerLawFit& fit);

}  // namespace boundedcf
