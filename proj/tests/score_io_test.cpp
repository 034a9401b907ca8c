#include "phonogest/score_io.hpp"
#include "phonogest/word.hpp"

#include <gtest/gtest.h>

using namespace phonogest;

namespace {

const Model& model() {
  static const Model m = Model::defaults();
  return m;
}

}  // namespace

TEST(ScoreJson, SchemaFields) {
  auto w = solve_score({"ʔ", "ɛ", "b", "t", "ppo"}, model());
  Json j = score_to_json(w.score, model().params);
  EXPECT_EQ(j["utterance"].size(), 5u);
  EXPECT_EQ(j["span_ms"][0].get<double>(), 0.0);
  EXPECT_EQ(j["span_ms"][1].get<double>(), w.score.span_end_ms());
  const std::vector<std::string> keys{"tract_var", "code",     "class",          "target",    "cd_category",
                                      "cl_category", "start_ms", "end_ms",        "eigenperiod_ms", "assoc_deg",
                                      "release_deg", "segment",  "role"};
  for (const auto& g : j["gestures"]) {
    std::vector<std::string> got;
    for (auto it = g.begin(); it != g.end(); ++it) got.push_back(it.key());
    EXPECT_EQ(got, keys);
  }
  bool ga_for_b = false;
  for (const auto& g : j["gestures"]) ga_for_b |= g["segment"] == "b" && g["tract_var"] == "GA";
  EXPECT_TRUE(ga_for_b);
}

TEST(ScoreJson, RoundTripRendersIdentically) {
  for (auto ids : std::vector<std::vector<std::string>>{{"ʔ", "ɛ", "b", "t", "ppo"}, {"b", "ʁ", "aː", "v", "ə", "ʁ"}}) {
    auto w = solve_score(ids, model());
    std::string text = score_json_text(w.score, model().params);
    GesturalScore back = score_from_json(Json::parse(text));
    EXPECT_EQ(score_json_text(back, model().params), text);
    EXPECT_EQ(trajectory_csv(render(back, 1000, model().params)), trajectory_csv(render(w.score, 1000, model().params)));
  }
}

TEST(ScoreJson, MalformedInputIsAConfigError) {
  EXPECT_THROW(score_from_json(Json::parse("{}")), ConfigError);
  EXPECT_THROW(score_from_json(Json::parse(R"({"utterance":[],"span_ms":[0],"gestures":[]})")), ConfigError);
  EXPECT_THROW(score_from_json(Json::parse(R"({"utterance":[],"span_ms":[0,1],"gestures":[{"tract_var":"XX"}]})")),
               ConfigError);
}

TEST(TrajectoryCsv, HeaderAndFixedFormatting) {
  GesturalScore s;
  s.span_end = 2;
  auto csv = trajectory_csv(render(s, 1000, model().params));
  EXPECT_EQ(csv.substr(0, csv.find('\n')), "t_ms,VA,LP,LA,TH,TP,TTH,TTP,PR,CT,GA,voiced");
  EXPECT_NE(csv.find("\n1.000000,0.000000,0.000000,12.000000,10.000000,0.000000,8.000000,0.000000,8.000000,"
                     "0.500000,0.300000,1\n"),
            std::string::npos);
  EXPECT_EQ(fixed6(-1e-12), "0.000000");
  EXPECT_EQ(fixed6(2.5), "2.500000");
}

TEST(PlotSvg, OnePanelPerTractVariableAndShadedIntervals) {
  auto w = solve_score({"ʔ", "ɛ", "b", "ə"}, model());
  auto svg = trajectory_svg(render(w.score, 1000, model().params), w.score, model().params);
  EXPECT_EQ(svg.rfind("<svg", 0), 0u);
  std::size_t panels = 0, boxes = 0;
  for (auto p = svg.find("<polyline"); p != std::string::npos; p = svg.find("<polyline", p + 1)) ++panels;
  for (auto p = svg.find("fill-opacity"); p != std::string::npos; p = svg.find("fill-opacity", p + 1)) ++boxes;
  EXPECT_EQ(panels, kTractVariables.size());
  EXPECT_EQ(boxes, w.score.gestures.size());
}
