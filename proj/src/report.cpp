#include "boundedcf/report.hpp"

#include <ostream>

#include "boundedcf/count_table.hpp"

namespace boundedcf {

Json to_json(const DimensionResult& r) {
  return Json{{"A", r.bound},
              {"delta", r.delta},
              {"lo", r.lo},
              {"hi", r.hi},
              {"lambda_lo", r.lambda_lo},
              {"lambda_hi", r.lambda_hi},
              {"m", r.m},
              {"delta_2m", r.delta_check},
              {"residual", r.residual},
              {"iterations", r.iterations}};
}

DimensionResult dimension_from_json(const Json& j) {
  DimensionResult r;
  r.bound = j.at("A").get<std::uint64_t>();
  r.delta = j.at("delta").get<double>();
  r.lo = j.at("lo").get<double>();
  r.hi = j.at("hi").get<double>();
  r.lambda_lo = j.value("lambda_lo", 0.0);
  r.lambda_hi = j.value("lambda_hi", 0.0);
  r.m = j.at("m").get<std::size_t>();
  r.delta_check = j.value("delta_2m", 0.0);
  r.residual = j.at("residual").get<double>();
  r.iterations = j.value("iterations", 0);
  return r;
}

Json to_json(const PoleResult& r) {
  return Json{{"A", r.bound}, {"w", r.w},   {"s0", r.s0},          {"lo", r.lo},
              {"hi", r.hi},   {"m", r.m},   {"s0_2m", r.s0_check}, {"iterations", r.iterations}};
}

Json to_json(const PowerLawFit& fit) {
  return Json{{"slope", fit.slope},
              {"intercept", fit.intercept},
              {"stderr", fit.slope_se},
              {"residual_se", fit.residual_se},
              {"range", Json::array({fit.n_min, fit.n_max})},
              {"points", fit.points}};
}

Json fit_report(const PowerLawFit& fit, double prediction) {
  Json samples = Json::array();
  for (const auto& s : fit.samples) samples.push_back(Json{{"N", s.N}, {"count", s.count}});
  return Json{{"fit", to_json(fit)}, {"prediction", prediction}, {"samples", samples}};
}

Json to_json(const SmoothingReport& report) {
  Json records = Json::array();
  for (const auto& r : report.records) {
    records.push_back(Json{{"N", r.N},
                           {"width", r.width},
                           {"n_low", r.n_low},
                           {"sigma", r.sigma},
                           {"thickened", r.thickened},
                           {"omega", r.omega},
                           {"ratio", r.ratio ? Json(*r.ratio) : Json(nullptr)},
                           {"inclusion", r.inclusion_ok}});
  }
  Json j{{"gamma", report.gamma},
         {"delta", report.delta},
         {"fit", to_json(report.fit)},
         {"prediction", report.predicted},
         {"window_fit", report.window_fit ? to_json(*report.window_fit) : Json(nullptr)},
         {"window_prediction", report.predicted_window_slope},
         {"inclusion", report.inclusion_ok},
         {"samples", records}};
  return j;
}

void write_json(std::ostream& out, const Json& j) { out << j.dump(2) << '\n'; }

void write_fit_csv(std::ostream& out, const PowerLawFit& fit) {
  out << "N,count,predicted\n";
  for (const auto& s : fit.samples) {
    out << s.N << ',' << shortest_decimal(s.count) << ','
        << shortest_decimal(fit.predict(static_cast<double>(s.N))) << '\n';
  }
}

}  // namespace boundedcf
