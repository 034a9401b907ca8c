#pragma once

#include "phonogest/dynamics.hpp"
#include "phonogest/gesture.hpp"
#include "phonogest/timing.hpp"

#include <nlohmann/json.hpp>

#include <cstdio>
#include <sstream>
#include <string>

namespace phonogest {

using Json = nlohmann::ordered_json;

inline Json score_to_json(const GesturalScore& score, const ParameterTable& params) {
  Json j;
  j["utterance"] = score.utterance;
  j["span_ms"] = Json::array({0.0, score.span_end_ms()});
  Json gs = Json::array();
  for (const auto& g : score.gestures) {
    Json e;
    e["tract_var"] = to_string(g.spec.tract);
    e["code"] = params.tract(g.spec.tract).code;
    e["class"] = g.spec.gesture_class;
    e["target"] = g.spec.target;
    e["cd_category"] = g.spec.cd;
    e["cl_category"] = g.spec.cl;
    e["start_ms"] = g.start_ms();
    e["end_ms"] = g.end_ms();
    e["eigenperiod_ms"] = to_double(g.timing.eigenperiod);
    e["assoc_deg"] = to_double(g.timing.assoc);
    e["release_deg"] = to_double(g.timing.release);
    e["segment"] = g.segment;
    e["role"] = g.role;
    gs.push_back(std::move(e));
  }
  j["gestures"] = std::move(gs);
  return j;
}

inline std::string score_json_text(const GesturalScore& score, const ParameterTable& params) {
  return score_to_json(score, params).dump(2) + "\n";
}

/// Inverse of score_to_json. Times come back as the exact binary values that
/// were written, so re-rendering reproduces the original samples.
inline GesturalScore score_from_json(const Json& j) {
  try {
    GesturalScore s;
    s.utterance = j.at("utterance").get<std::vector<std::string>>();
    const auto& span = j.at("span_ms");
    if (!span.is_array() || span.size() != 2) throw ConfigError("score: span_ms must be [0, T]");
    s.span_end = from_double(span.at(1).get<double>());
    for (const auto& e : j.at("gestures")) {
      ScoredGesture g;
      g.spec.tract = tract_from_string(e.at("tract_var").get<std::string>());
      g.spec.gesture_class = e.at("class").get<std::string>();
      g.spec.target = e.at("target").get<double>();
      g.spec.cd = e.at("cd_category").get<std::string>();
      g.spec.cl = e.at("cl_category").get<std::string>();
      g.timing.start = from_double(e.at("start_ms").get<double>());
      g.timing.end = from_double(e.at("end_ms").get<double>());
      g.timing.eigenperiod = from_double(e.at("eigenperiod_ms").get<double>());
      g.timing.assoc = from_double(e.at("assoc_deg").get<double>());
      g.timing.release = from_double(e.at("release_deg").get<double>());
      g.segment = e.at("segment").get<std::string>();
      g.role = e.at("role").get<std::string>();
      g.vocalic = g.role == "nucleus";
      if (g.timing.eigenperiod <= 0) throw ConfigError("score: gesture with non-positive eigenperiod");
      if (g.timing.end < g.timing.start) throw ConfigError("score: gesture ends before it starts");
      s.gestures.push_back(std::move(g));
    }
    return s;
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("malformed score: ") + e.what());
  } catch (const LookupError& e) {
    throw ConfigError(std::string("malformed score: ") + e.what());
  }
}

/// Fixed six-decimal formatting; negative zero prints as zero.
inline std::string fixed6(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", x);
  std::string s(buf);
  if (s == "-0.000000") s = "0.000000";
  return s;
}

inline std::string trajectory_csv(const Trajectory& tr) {
  std::string out = "t_ms";
  for (auto tv : kTractVariables) out += "," + std::string(to_string(tv));
  out += ",voiced\n";
  for (std::size_t k = 0; k < tr.t.size(); ++k) {
    out += fixed6(tr.t[k]);
    for (const auto& col : tr.values) out += "," + fixed6(col[k]);
    out += tr.voiced[k] ? ",1\n" : ",0\n";
  }
  return out;
}

/// Stacked panels, one per tract variable, with shaded activation intervals.
inline std::string trajectory_svg(const Trajectory& tr, const GesturalScore& score, const ParameterTable& params) {
  const double width = 900, left = 60, right = 20, panel = 70, gap = 12, top = 30;
  const double plot_w = width - left - right;
  const double span = std::max(score.span_end_ms(), tr.t.empty() ? 0.0 : tr.t.back());
  const double height = top + kTractVariables.size() * (panel + gap) + 30;
  auto x_of = [&](double t) { return left + (span > 0 ? t / span : 0) * plot_w; };

  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
      << "\" font-family=\"sans-serif\" font-size=\"10\">\n";
  svg << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  std::string title;
  for (const auto& u : score.utterance) title += (title.empty() ? "" : " ") + u;
  svg << "<text x=\"" << left << "\" y=\"18\" font-size=\"13\">/" << title << "/</text>\n";

  for (std::size_t p = 0; p < kTractVariables.size(); ++p) {
    const TractVariable tv = kTractVariables[p];
    const TractInfo& info = params.tract(tv);
    const double y0 = top + p * (panel + gap);
    auto y_of = [&](double v) {
      double r = info.max > info.min ? (v - info.min) / (info.max - info.min) : 0.5;
      return y0 + panel - r * panel;
    };
    svg << "<g>\n<rect x=\"" << left << "\" y=\"" << y0 << "\" width=\"" << plot_w << "\" height=\"" << panel
        << "\" fill=\"none\" stroke=\"#999\"/>\n";
    svg << "<text x=\"8\" y=\"" << y0 + panel / 2 + 4 << "\">" << to_string(tv) << "</text>\n";
    for (const auto& g : score.gestures) {
      if (g.spec.tract != tv) continue;
      const double a = x_of(g.start_ms()), b = x_of(g.end_ms());
      svg << "<rect x=\"" << a << "\" y=\"" << y0 << "\" width=\"" << b - a << "\" height=\"" << panel
          << "\" fill=\"#4a7ebb\" fill-opacity=\"0.18\" stroke=\"#4a7ebb\" stroke-opacity=\"0.5\"/>\n";
      svg << "<text x=\"" << a + 2 << "\" y=\"" << y0 + 10 << "\" fill=\"#234\">" << g.segment << "</text>\n";
    }
    svg << "<polyline fill=\"none\" stroke=\"black\" stroke-width=\"1.2\" points=\"";
    const auto& col = tr.of(tv);
    for (std::size_t k = 0; k < tr.t.size(); ++k) svg << x_of(tr.t[k]) << "," << y_of(col[k]) << " ";
    svg << "\"/>\n</g>\n";
  }
  const double axis_y = top + kTractVariables.size() * (panel + gap) + 10;
  svg << "<text x=\"" << left << "\" y=\"" << axis_y << "\">0 ms</text>\n";
  svg << "<text x=\"" << left + plot_w - 60 << "\" y=\"" << axis_y << "\">" << fixed6(span).substr(0, fixed6(span).size() - 4)
      << " ms</text>\n";
  svg << "</svg>\n";
  return svg.str();
}

}  // namespace phonogest
