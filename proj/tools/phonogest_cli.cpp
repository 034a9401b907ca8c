// phonogest command line: synthesize a word, render a saved score, or run
// the regression corpus.

#include "phonogest/phonogest.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

namespace fs = std::filesystem;
using namespace phonogest;

namespace {

enum Exit { kOk = 0, kFailed = 1, kUnsat = 2, kUndetermined = 3, kConfig = 4 };

std::vector<std::string> split_word_spec(const std::vector<std::string>& args) {
  std::vector<std::string> ids;
  for (std::string a : args) {
    for (char& c : a)
      if (c == ',' || c == '[' || c == ']') c = ' ';
    for (auto& w : split_words(a)) ids.push_back(w);
  }
  return ids;
}

Model load_model(const std::string& dir) { return dir.empty() ? Model::defaults() : Model::from_directory(dir); }

void write_file(const fs::path& p, const std::string& text) {
  std::ofstream f(p, std::ios::binary);
  if (!f) throw ConfigError("cannot write " + p.string());
  f << text;
  std::cout << "wrote " << p.string() << "\n";
}

struct Outputs {
  bool score = false, trajectory = false, plot = false, explain = false;
  // No selection means everything.
  void resolve() {
    if (!score && !trajectory && !plot) score = trajectory = plot = true;
  }
};

int run_guarded(const std::function<int()>& body) {
  try {
    return body();
  } catch (const Unsyllabifiable& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUnsat;
  } catch (const Unsatisfiable& e) {
    std::cerr << "error: unsatisfiable; failing constraints:\n";
    for (const auto& c : e.culprits()) std::cerr << "  " << c << "\n";
    return kUnsat;
  } catch (const UndeterminedTiming& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUndetermined;
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kConfig;
  } catch (const LookupError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kConfig;
  } catch (const UnsupportedConstruct& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kConfig;
  } catch (const RenderError& e) {
    std::cerr << "render error: " << e.what() << "\n";
    return kConfig;
  }
}

void emit(const GesturalScore& score, const Model& model, double rate, const fs::path& out, const Outputs& o) {
  fs::create_directories(out);
  if (o.score) write_file(out / "score.json", score_json_text(score, model.params));
  if (o.trajectory || o.plot) {
    Trajectory tr = render(score, rate, model.params);
    if (o.trajectory) write_file(out / "trajectory.csv", trajectory_csv(tr));
    if (o.plot) write_file(out / "plot.svg", trajectory_svg(tr, score, model.params));
  }
}

// Corpus lines: `Word | segment ids | seg=voiced seg=voiceless ...`
struct CorpusEntry {
  std::string word;
  std::vector<std::string> ids;
  std::vector<std::pair<std::string, std::string>> expect;
  int line = 0;
};

std::vector<CorpusEntry> read_corpus(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw ConfigError("cannot read corpus '" + path + "'");
  std::vector<CorpusEntry> out;
  std::string line;
  for (int n = 1; std::getline(f, line); ++n) {
    if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
    if (ConfigDocument::trim(line).empty()) continue;
    auto parts = split_on(line, '|');
    if (parts.size() != 3) throw ConfigError(path + ":" + std::to_string(n) + ": expected `word | segments | expectations`");
    CorpusEntry e;
    e.word = ConfigDocument::trim(parts[0]);
    e.ids = split_words(parts[1]);
    e.line = n;
    for (const auto& x : split_words(parts[2])) {
      auto eq = x.find('=');
      if (eq == std::string::npos) throw ConfigError(path + ":" + std::to_string(n) + ": expectation needs seg=value");
      std::string v = x.substr(eq + 1);
      if (v != "voiced" && v != "voiceless")
        throw ConfigError(path + ":" + std::to_string(n) + ": expectation must be voiced or voiceless");
      e.expect.emplace_back(x.substr(0, eq), v);
    }
    out.push_back(std::move(e));
  }
  return out;
}

// Pads to `width` code points, not bytes.
std::string pad(const std::string& s, std::size_t width) {
  std::size_t cps = 0;
  for (unsigned char c : s) cps += (c & 0xC0) != 0x80;
  return s + std::string(cps < width ? width - cps : 1, ' ');
}

int check_corpus(const std::string& path, const std::string& config) {
  Model model = load_model(config);
  auto corpus = read_corpus(path);
  int failed = 0;
  auto t0 = std::chrono::steady_clock::now();
  std::cout << pad("word", 10) << pad("segments", 20) << pad("expected", 26) << pad("solved", 26) << "result\n";
  for (const auto& e : corpus) {
    std::string segs, expected, solved;
    for (const auto& s : e.ids) segs += s + " ";
    bool ok = true;
    try {
      SolvedWord w = solve_score(e.ids, model);
      for (const auto& [seg, want] : e.expect) {
        expected += seg + "=" + want + " ";
        const std::string id = model.inventory.lookup(seg).id;
        int at = -1;
        for (std::size_t i = 0; i < w.problem.word.positions.size() && at < 0; ++i)
          if (w.problem.word.positions[i].segment->id == id) at = static_cast<int>(i);
        if (at < 0) {
          ok = false;
          solved += seg + "=absent ";
          continue;
        }
        std::string got = secondary_state(w, at, model.lattice()) == "voiceless" ? "voiceless" : "voiced";
        solved += seg + "=" + got + " ";
        ok = ok && got == want;
      }
    } catch (const std::exception& ex) {
      ok = false;
      solved = std::string("error: ") + ex.what();
    }
    if (!ok) ++failed;
    std::cout << pad(e.word, 10) << pad(segs, 20) << pad(expected, 26) << pad(solved, 26) << (ok ? "PASS" : "FAIL")
              << "\n";
  }
  double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  std::cout << corpus.size() - failed << "/" << corpus.size() << " passed in " << std::fixed << std::setprecision(1)
            << ms << " ms\n";
  return failed ? kFailed : kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Gestural score synthesis from constraint-based phonology"};
  app.require_subcommand(1);

  std::string config;
  double rate = 1000;
  std::string out = ".";
  Outputs outputs;

  auto* syn = app.add_subcommand("synthesize", "Solve a word and write score, trajectory and plot");
  std::vector<std::string> word;
  syn->add_option("word", word, "Segment ids, e.g. \"ʔ ɛ b t ppo\"")->required();
  syn->add_option("--config", config, "Directory with lattice.cfg, inventory.cfg, parameters.cfg");
  syn->add_option("--rate", rate, "Sample rate in Hz");
  syn->add_option("--out", out, "Output directory");
  syn->add_flag("--emit-score", outputs.score, "Write score.json");
  syn->add_flag("--emit-trajectory", outputs.trajectory, "Write trajectory.csv");
  syn->add_flag("--emit-plot", outputs.plot, "Write plot.svg");
  syn->add_flag("--explain", outputs.explain, "Also write the solved structure to explain.txt and stdout");

  auto* ren = app.add_subcommand("render", "Render a previously written score.json");
  std::string score_path;
  ren->add_option("score", score_path, "score.json")->required();
  ren->add_option("--config", config, "Configuration directory (tract ranges, thresholds)");
  ren->add_option("--rate", rate, "Sample rate in Hz");
  ren->add_option("--out", out, "Output directory");
  ren->add_flag("--emit-trajectory", outputs.trajectory, "Write trajectory.csv");
  ren->add_flag("--emit-plot", outputs.plot, "Write plot.svg");

  auto* chk = app.add_subcommand("check-corpus", "Solve a regression corpus and print a pass/fail table");
  std::string corpus;
  chk->add_option("corpus", corpus, "Corpus file")->required();
  chk->add_option("--config", config, "Configuration directory");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kConfig;
  }

  if (*syn) {
    return run_guarded([&] {
      Model model = load_model(config);
      auto ids = split_word_spec(word);
      if (ids.empty()) throw Unsyllabifiable("empty word");
      for (const auto& id : ids) model.inventory.lookup(id);
      SolvedWord w = solve_score(ids, model);
      Outputs o = outputs;
      o.resolve();
      emit(w.score, model, rate, out, o);
      if (o.explain) {
        std::string text = explain(w, model);
        write_file(fs::path(out) / "explain.txt", text);
        std::cout << text;
      }
      return kOk;
    });
  }
  if (*ren) {
    return run_guarded([&] {
      Model model = load_model(config);
      std::ifstream f(score_path);
      if (!f) throw ConfigError("cannot read score '" + score_path + "'");
      Json j;
      try {
        j = Json::parse(f);
      } catch (const nlohmann::json::exception& e) {
        throw ConfigError(std::string("malformed score: ") + e.what());
      }
      GesturalScore score = score_from_json(j);
      Outputs o = outputs;
      if (!o.trajectory && !o.plot) o.trajectory = o.plot = true;
      emit(score, model, rate, out, o);
      return kOk;
    });
  }
  return run_guarded([&] { return check_corpus(corpus, config); });
}
