#pragma once

#include "phonogest/config_text.hpp"
#include "phonogest/errors.hpp"
#include "phonogest/expr.hpp"
#include "phonogest/rational.hpp"
#include "phonogest/tract.hpp"

#include <cmath>
#include <map>
#include <optional>
#include <string>

namespace phonogest {

enum class ClipMode { clip_default, none };

inline ClipMode clip_from_string(const std::string& s) {
  if (s == "default") return ClipMode::clip_default;
  if (s == "none") return ClipMode::none;
  throw ConfigError("unknown clipping mode '" + s + "'");
}

inline std::string to_string(ClipMode m) { return m == ClipMode::none ? "none" : "default"; }

/// Quantitative gesture description: which tract variable it drives, the
/// categorical constriction degree/location and the numeric target.
struct GestureSpec {
  TractVariable tract = TractVariable::LA;
  std::string cd;
  std::string cl;
  double target = 0.0;
  ClipMode clip = ClipMode::clip_default;
  std::string gesture_class;

  friend bool operator==(const GestureSpec&, const GestureSpec&) = default;
};

/// Phase-scale parameters of a gesture class. Eigenperiod in ms, phases in degrees.
struct ClassTiming {
  Rational eigenperiod;
  Rational assoc;
  Rational release;
  std::map<std::string, Rational> assoc_by_role;
  std::map<std::string, Rational> release_by_role;
};

/// A gesture's activation interval on its phase scale. start/end are solved
/// quantities; the rest are class constants.
struct Timing {
  Rational start;
  Rational end;
  Rational eigenperiod;
  Rational assoc;
  Rational release;
};

/// Checks 0 < release <= 720, 0 <= assoc <= release, eigenperiod > 0.
inline void validate_timing_constants(const Rational& eigenperiod, const Rational& assoc, const Rational& release,
                                      const std::string& what) {
  if (eigenperiod <= 0) throw ConfigError(what + ": eigenperiod must be positive");
  if (release <= 0 || release > 720) throw ConfigError(what + ": release phase must lie in (0, 720]");
  if (assoc < 0 || assoc > release) throw ConfigError(what + ": association phase must lie in [0, release]");
}

struct TractInfo {
  double neutral = 0.0;
  double min = 0.0;
  double max = 1.0;
  int code = 0;
};

/// Per gesture class timing and per tract variable ranges, plus rendering settings.
class ParameterTable {
 public:
  Rational neutral_eigenperiod = 250;
  double ga_threshold = 1.0;
  double pr_threshold = 2.0;

  void set_class(const std::string& name, ClassTiming t) {
    validate_timing_constants(t.eigenperiod, t.assoc, t.release, "gesture class '" + name + "'");
    for (const auto& [role, a] : t.assoc_by_role)
      validate_timing_constants(t.eigenperiod, a, t.release_by_role.count(role) ? t.release_by_role.at(role) : t.release,
                                "gesture class '" + name + "' role " + role);
    for (const auto& [role, r] : t.release_by_role)
      validate_timing_constants(t.eigenperiod, t.assoc_by_role.count(role) ? t.assoc_by_role.at(role) : t.assoc, r,
                                "gesture class '" + name + "' role " + role);
    classes_[name] = std::move(t);
  }

  bool has_class(const std::string& name) const { return classes_.count(name) > 0; }

  const ClassTiming& gesture_class(const std::string& name) const {
    auto it = classes_.find(name);
    if (it == classes_.end()) throw ConfigError("unknown gesture class '" + name + "'");
    return it->second;
  }

  /// Timing constants for `cls` in syllable role `role`, overrides applied.
  Timing constants(const std::string& cls, const std::string& role) const {
    const ClassTiming& c = gesture_class(cls);
    Timing t;
    t.eigenperiod = c.eigenperiod;
    auto a = c.assoc_by_role.find(role);
    t.assoc = a == c.assoc_by_role.end() ? c.assoc : a->second;
    auto r = c.release_by_role.find(role);
    t.release = r == c.release_by_role.end() ? c.release : r->second;
    return t;
  }

  void set_tract(TractVariable tv, TractInfo info) {
    if (!(info.min <= info.neutral && info.neutral <= info.max))
      throw ConfigError("tract variable " + std::string(to_string(tv)) + ": neutral value outside [min, max]");
    tracts_[index_of(tv)] = info;
    has_tract_[index_of(tv)] = true;
  }

  const TractInfo& tract(TractVariable tv) const {
    if (!has_tract_[index_of(tv)]) throw ConfigError("tract variable " + std::string(to_string(tv)) + " not configured");
    return tracts_[index_of(tv)];
  }

  const std::map<std::string, ClassTiming>& classes() const { return classes_; }

  /// Rejects a spec whose class is unknown or whose target leaves the tract
  /// range while clipping is disabled.
  void check(const GestureSpec& g, const std::string& owner) const {
    gesture_class(g.gesture_class);
    const TractInfo& info = tract(g.tract);
    if (!std::isfinite(g.target)) throw ConfigError(owner + ": non-finite target");
    if (g.clip == ClipMode::none && (g.target < info.min || g.target > info.max))
      throw ConfigError(owner + ": target outside the range of " + std::string(to_string(g.tract)) +
                        " and clipping disabled");
  }

  void validate() const {
    for (auto tv : kTractVariables) tract(tv);
    if (neutral_eigenperiod <= 0) throw ConfigError("neutral eigenperiod must be positive");
  }

  static ParameterTable from_config(const ConfigDocument& doc) {
    ParameterTable table;
    for (const auto* s : doc.of_kind("settings")) {
      if (auto e = s->find("neutral_eigenperiod_ms")) table.neutral_eigenperiod = number(*s, *e);
      if (auto e = s->find("ga_threshold")) table.ga_threshold = to_double(number(*s, *e));
      if (auto e = s->find("pr_threshold")) table.pr_threshold = to_double(number(*s, *e));
    }
    for (const auto* s : doc.of_kind("tract")) {
      TractVariable tv;
      try {
        tv = tract_from_string(s->name);
      } catch (const LookupError& e) {
        throw ConfigError(s->where() + ": " + e.what());
      }
      TractInfo info;
      info.neutral = to_double(number(*s, "neutral"));
      info.min = to_double(number(*s, "min"));
      info.max = to_double(number(*s, "max"));
      info.code = static_cast<int>(to_double(number(*s, "code")));
      table.set_tract(tv, info);
    }
    for (const auto* s : doc.of_kind("class")) {
      if (s->name.empty()) throw ConfigError(s->where() + ": class section needs a name");
      ClassTiming c;
      c.eigenperiod = number(*s, "eigenperiod_ms");
      c.assoc = number(*s, "assoc_deg");
      c.release = number(*s, "release_deg");
      for (const auto& e : s->entries) {
        if (e.key.rfind("assoc_deg.", 0) == 0) c.assoc_by_role[e.key.substr(10)] = number(*s, e);
        else if (e.key.rfind("release_deg.", 0) == 0) c.release_by_role[e.key.substr(12)] = number(*s, e);
      }
      table.set_class(s->name, std::move(c));
    }
    table.validate();
    return table;
  }

 private:
  static Rational number(const ConfigSection& s, const ConfigEntry& e) {
    try {
      return parse_rational(e.value);
    } catch (const std::exception&) {
      throw ConfigError(s.where() + ": '" + e.key + "' is not a number: " + e.value);
    }
  }
  static Rational number(const ConfigSection& s, const char* key) {
    const ConfigEntry* e = s.find(key);
    if (!e) throw ConfigError(s.where() + ": missing key '" + key + "'");
    return number(s, *e);
  }

  std::map<std::string, ClassTiming> classes_;
  std::array<TractInfo, 10> tracts_{};
  std::array<bool, 10> has_tract_{};
};

/// start + eigenperiod * phase / 360, symbolically when `start` is a variable.
inline Expr phase_point(const Expr& start, const Rational& eigenperiod, const Rational& phase) {
  return start + Expr::number(eigenperiod) * (Expr::number(phase) / Expr::number(360));
}

inline Rational phase_point(const Rational& start, const Rational& eigenperiod, const Rational& phase) {
  if (eigenperiod <= 0) throw ConfigError("phase_point: eigenperiod must be positive");
  return start + eigenperiod * phase / 360;
}

/// Affine form of phase_point for a start variable.
inline AffineExpr phase_point(const std::string& start_var, const Rational& eigenperiod, const Rational& phase) {
  if (eigenperiod <= 0) throw ConfigError("phase_point: eigenperiod must be positive");
  return AffineExpr::variable(start_var) + AffineExpr::number(eigenperiod * phase / 360);
}

/// Parses "tract=LA cd=closed cl=lips target=-2 class=stop clip=default".
inline GestureSpec parse_gesture_spec(const std::string& text, const std::string& owner) {
  GestureSpec g;
  bool have_tract = false, have_target = false, have_class = false;
  for (const auto& word : split_words(text)) {
    auto eq = word.find('=');
    if (eq == std::string::npos) throw ConfigError(owner + ": expected key=value in gesture, got '" + word + "'");
    std::string k = word.substr(0, eq), v = word.substr(eq + 1);
    if (k == "tract") {
      try {
        g.tract = tract_from_string(v);
      } catch (const LookupError& e) {
        throw ConfigError(owner + ": " + e.what());
      }
      have_tract = true;
    } else if (k == "cd") {
      g.cd = v;
    } else if (k == "cl") {
      g.cl = v;
    } else if (k == "target") {
      try {
        g.target = std::stod(v);
      } catch (const std::exception&) {
        throw ConfigError(owner + ": bad target '" + v + "'");
      }
      have_target = true;
    } else if (k == "class") {
      g.gesture_class = v;
      have_class = true;
    } else if (k == "clip") {
      g.clip = clip_from_string(v);
    } else {
      throw ConfigError(owner + ": unknown gesture attribute '" + k + "'");
    }
  }
  if (!have_tract || !have_target || !have_class)
    throw ConfigError(owner + ": gesture needs tract, target and class");
  return g;
}

}  // namespace phonogest
