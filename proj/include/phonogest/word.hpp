#pragma once

#include "phonogest/config_text.hpp"
#include "phonogest/defaults.hpp"
#include "phonogest/phonology.hpp"
#include "phonogest/solver.hpp"
#include "phonogest/timing.hpp"

#include <cstdio>
#include <filesystem>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace phonogest {

/// Grammar, parameter table and inventory loaded together. Immutable after load.
struct Model {
  std::shared_ptr<const Grammar> grammar;
  ParameterTable params;
  SegmentInventory inventory;

  const TypeLattice& lattice() const { return grammar->lattice; }

  static Model from_text(std::string_view lattice, std::string_view inventory, std::string_view parameters) {
    auto grammar = std::make_shared<const Grammar>(Grammar::from_config(ConfigDocument::parse(lattice, "lattice")));
    ParameterTable params = ParameterTable::from_config(ConfigDocument::parse(parameters, "parameters"));
    SegmentInventory inv = SegmentInventory::from_config(ConfigDocument::parse(inventory, "inventory"), grammar, params);
    return Model{grammar, std::move(params), std::move(inv)};
  }

  static Model defaults() {
    return from_text(defaults::kDefaultLattice, defaults::kDefaultInventory, defaults::kDefaultParameters);
  }

  /// Loads the given files; an empty path selects the built-in default.
  static Model load(const std::string& lattice_path, const std::string& inventory_path,
                    const std::string& parameters_path) {
    auto read = [](const std::string& path, std::string_view fallback) {
      if (path.empty()) return ConfigDocument::parse(fallback, "built-in");
      return ConfigDocument::load(path);
    };
    auto grammar = std::make_shared<const Grammar>(Grammar::from_config(read(lattice_path, defaults::kDefaultLattice)));
    ParameterTable params = ParameterTable::from_config(read(parameters_path, defaults::kDefaultParameters));
    SegmentInventory inv =
        SegmentInventory::from_config(read(inventory_path, defaults::kDefaultInventory), grammar, params);
    return Model{grammar, std::move(params), std::move(inv)};
  }

  /// lattice.cfg, inventory.cfg and parameters.cfg from `dir`; missing files
  /// fall back to the built-in defaults.
  static Model from_directory(const std::filesystem::path& dir) {
    if (!std::filesystem::is_directory(dir)) throw ConfigError("configuration directory '" + dir.string() + "' not found");
    auto pick = [&](const char* name) {
      auto p = dir / name;
      return std::filesystem::exists(p) ? p.string() : std::string();
    };
    return load(pick("lattice.cfg"), pick("inventory.cfg"), pick("parameters.cfg"));
  }
};

struct LabeledTerm {
  std::string label;
  FeatureTerm term;
};

/// Everything needed to solve one word: the syllabified word, its potential
/// gestures and the labelled conjuncts of its description.
struct WordProblem {
  PhonWord word;
  std::vector<GestureSlot> slots;
  std::vector<LabeledTerm> conjuncts;

  FeatureTerm term() const {
    std::vector<FeatureTerm> parts;
    for (const auto& c : conjuncts) parts.push_back(c.term);
    return FeatureTerm::conj(std::move(parts));
  }

  /// Conjunction in the given posting order (a permutation of indices).
  FeatureTerm term(const std::vector<std::size_t>& order) const {
    std::vector<FeatureTerm> parts;
    for (auto i : order) parts.push_back(conjuncts.at(i).term);
    return FeatureTerm::conj(std::move(parts));
  }
};

namespace detail {

inline FeatureTerm equation_term(const AffineEquation& eq) {
  auto to_expr = [](const AffineExpr& a) {
    Expr e = Expr::number(a.constant);
    for (const auto& [v, c] : a.coeffs) e = e + Expr::number(c) * Expr::var(v);
    return e;
  };
  return FeatureTerm::equal(to_expr(eq.lhs), to_expr(eq.rhs));
}

inline FeatureTerm constant_feature(const std::string& attr, const std::string& var, const Rational& value) {
  return FeatureTerm::conj({FeatureTerm::feature(attr, FeatureTerm::var(var)),
                            FeatureTerm::equal(Expr::var(var), Expr::number(value))});
}

/// time:(start:S & end:E & eigenperiod:T & assoc:A & release:R) with the
/// class constants bound.
inline FeatureTerm timing_term(const GestureSlot& g) {
  const std::string p = g.prefix();
  return FeatureTerm::feature(
      "time", FeatureTerm::conj({FeatureTerm::feature("start", FeatureTerm::var(g.start_var())),
                                 FeatureTerm::feature("end", FeatureTerm::var(g.end_var())),
                                 constant_feature("eigenperiod", p + ".eigenperiod", g.constants.eigenperiod),
                                 constant_feature("assoc", p + ".assoc", g.constants.assoc),
                                 constant_feature("release", p + ".release", g.constants.release)}));
}

inline Path position_path(int position) { return {"phon", std::to_string(position + 1)}; }

}  // namespace detail

/// Description of a word: lexicon entries, syllable roles, attached process
/// constraints, end-time equations and association rules.
inline WordProblem build_word(const std::vector<std::string>& ids, const Model& model) {
  WordProblem wp;
  wp.word = syllabify(ids, model.inventory);
  wp.slots = gesture_slots(wp.word, model.inventory, model.params);
  auto timing = associate(wp.word, wp.slots);

  for (std::size_t i = 0; i < wp.word.positions.size(); ++i) {
    const WordPosition& pos = wp.word.positions[i];
    const Segment& seg = *pos.segment;
    const int at = static_cast<int>(i);
    const std::string where = seg.id + "@" + std::to_string(i + 1);
    const Path here = detail::position_path(at);

    const GestureSlot* primary = nullptr;
    for (const auto& g : wp.slots)
      if (g.position == at && !g.secondary()) primary = &g;

    std::vector<FeatureTerm> options;
    for (const auto& st : seg.secondary) {
      if (st == "inactive") {
        options.push_back(FeatureTerm::type(st));
        continue;
      }
      std::vector<FeatureTerm> branch{FeatureTerm::type(st)};
      for (std::size_t k = 0; k < wp.slots.size(); ++k) {
        const GestureSlot& g = wp.slots[k];
        if (g.position != at || g.state != st) continue;
        branch.push_back(detail::timing_term(g));
        branch.push_back(detail::equation_term(end_constraint(g)));
        for (const auto& te : timing)
          if (te.slot == static_cast<int>(k)) branch.push_back(detail::equation_term(te.equation));
      }
      options.push_back(FeatureTerm::conj(std::move(branch)));
    }
    FeatureTerm secondary = options.size() == 1 ? options.front() : FeatureTerm::disj(std::move(options));
    FeatureTerm lexical = FeatureTerm::feature(
        "seg", FeatureTerm::conj({FeatureTerm::type(seg.class_type),
                                  FeatureTerm::feature("primary", detail::timing_term(*primary)),
                                  FeatureTerm::feature("secondary", secondary)}));
    wp.conjuncts.push_back({"lexicon:" + where, FeatureTerm::at(here, FeatureTerm::feature("self", lexical))});
    wp.conjuncts.push_back({"endtime:" + primary->describe(), detail::equation_term(end_constraint(*primary))});
    if (pos.role)
      wp.conjuncts.push_back({"syllabify:" + where,
                              FeatureTerm::at(here, FeatureTerm::feature("self", FeatureTerm::type(to_string(*pos.role))))});
    for (const auto& c : seg.constraints)
      wp.conjuncts.push_back(
          {c + ":" + where, FeatureTerm::at(here, model.grammar->instantiate(c, "s" + std::to_string(i + 1) + "."))});
  }
  for (const auto& te : timing)
    if (te.slot < 0) wp.conjuncts.push_back({te.equation.label, detail::equation_term(te.equation)});
  return wp;
}

/// Labels of a minimal subset of conjuncts that is still unsatisfiable.
inline std::vector<std::string> unsat_core(const WordProblem& wp, const Solver& solver) {
  std::vector<std::size_t> core;
  for (std::size_t i = 0; i < wp.conjuncts.size(); ++i) core.push_back(i);
  for (std::size_t i = 0; i < wp.conjuncts.size(); ++i) {
    std::vector<std::size_t> without;
    for (auto k : core)
      if (k != i) without.push_back(k);
    if (without.size() == core.size()) continue;
    if (!solver.satisfiable(wp.term(without))) core = std::move(without);
  }
  std::vector<std::string> labels;
  for (auto k : core) labels.push_back(wp.conjuncts[k].label);
  return labels;
}

/// Solves the word; throws Unsatisfiable listing a minimal conflicting set.
inline Solution solve_word(const WordProblem& wp, const Model& model,
                           const std::optional<std::vector<std::size_t>>& order = std::nullopt) {
  Solver solver(model.lattice());
  auto s = solver.solve(order ? wp.term(*order) : wp.term());
  if (s) return std::move(*s);
  auto core = unsat_core(wp, solver);
  std::string msg = "unsatisfiable constraints:";
  for (const auto& c : core) msg += " " + c;
  throw Unsatisfiable(msg, core);
}

struct SolvedWord {
  WordProblem problem;
  Solution solution;
  GesturalScore score;
};

inline SolvedWord solve_score(const std::vector<std::string>& ids, const Model& model) {
  WordProblem wp = build_word(ids, model);
  Solution s = solve_word(wp, model);
  GesturalScore score = assemble_score(wp.word, wp.slots, s, model.lattice());
  return SolvedWord{std::move(wp), std::move(s), std::move(score)};
}

/// Solved secondary state of the segment at `position` (e.g. "voiceless").
inline std::string secondary_state(const SolvedWord& w, int position, const TypeLattice& lattice) {
  return lattice.name_of(w.solution.type_at(secondary_path(position)));
}

namespace detail {

inline std::string exact(const Rational& q) {
  std::string s = to_string(q);
  if (s.find('/') == std::string::npos) return s;
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", to_double(q));
  return std::string(buf) + " (" + s + ")";
}

inline void explain_gesture(std::ostringstream& os, const std::string& pad, const GestureSpec& spec,
                            const Timing& t, const ParameterTable& params) {
  os << pad << "art: " << to_string(spec.tract) << " (" << params.tract(spec.tract).code << ")\n";
  os << pad << "cd: " << spec.cd << "  val: " << spec.target << "\n";
  os << pad << "cl: " << spec.cl << "\n";
  os << pad << "clip: " << to_string(spec.clip) << "\n";
  os << pad << "class: " << spec.gesture_class << "\n";
  os << pad << "time:\n";
  os << pad << "  start: " << exact(t.start) << "\n";
  os << pad << "  end: " << exact(t.end) << "\n";
  os << pad << "  eigenperiod: " << exact(t.eigenperiod) << "\n";
  os << pad << "  assoc: " << exact(t.assoc) << "\n";
  os << pad << "  release: " << exact(t.release) << "\n";
}

}  // namespace detail

/// Indented text form of the solved structure, one block per segment.
inline std::string explain(const SolvedWord& w, const Model& model) {
  std::ostringstream os;
  const auto& lat = model.lattice();
  os << "phon:";
  for (const auto& id : w.score.utterance) os << " " << id;
  os << "\n";
  for (std::size_t i = 0; i < w.problem.word.positions.size(); ++i) {
    const WordPosition& pos = w.problem.word.positions[i];
    const int at = static_cast<int>(i);
    Path self{"phon", std::to_string(i + 1), "self"};
    os << "  " << i + 1 << ": " << pos.segment->id << "\n";
    os << "    self: " << lat.name_of(w.solution.type_at(self)) << "  (" << pos.role_label() << ", syllable "
       << pos.syllable + 1 << ")\n";
    Path seg = self;
    seg.push_back("seg");
    os << "    seg: " << lat.name_of(w.solution.type_at(seg)) << "\n";
    const ScoredGesture* prim = nullptr;
    const ScoredGesture* sec = nullptr;
    for (const auto& g : w.score.gestures) {
      if (g.position != at) continue;
      (g.state == "primary" ? prim : sec) = &g;
    }
    if (prim) {
      os << "      primary:\n";
      detail::explain_gesture(os, "        ", prim->spec, prim->timing, model.params);
    }
    os << "      secondary: " << secondary_state(w, at, lat) << "\n";
    if (sec) detail::explain_gesture(os, "        ", sec->spec, sec->timing, model.params);
  }
  os << "span: [0, " << detail::exact(w.score.span_end) << "]\n";
  return os.str();
}

}  // namespace phonogest
