#pragma once

#include "phonogest/config_text.hpp"
#include "phonogest/errors.hpp"
#include "phonogest/feature_term.hpp"
#include "phonogest/gesture.hpp"
#include "phonogest/term_parser.hpp"
#include "phonogest/type_lattice.hpp"

#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace phonogest {

// ---------------------------------------------------------------------------
// Syllable roles

enum class Role { pure_onset, nucleus, pure_coda, codaonset };

inline std::string to_string(Role r) {
  switch (r) {
    case Role::pure_onset: return "pure_onset";
    case Role::nucleus: return "nucleus";
    case Role::pure_coda: return "pure_coda";
    case Role::codaonset: return "codaonset";
  }
  return "?";
}

/// Type names the phonology relies on; a grammar must define all of them.
inline const std::vector<std::string>& required_types() {
  static const std::vector<std::string> names{"pure_onset", "nucleus", "pure_coda", "codaonset", "in_onset",
                                              "coda",       "rhyme",   "vowel",     "obstruent", "boundary",
                                              "inactive",   "voiceless"};
  return names;
}

/// Obstruents are voiceless in the coda.
inline FeatureTerm final_devoicing() {
  return parse_term("self:(seg: ~obstruent ; seg:obstruent & (~coda ; coda & seg:secondary:voiceless))");
}

/// Alternating obstruents are voiced anywhere in an onset.
inline FeatureTerm voiced_in_onset() {
  return parse_term("self:(~in_onset ; in_onset & seg:secondary:inactive)");
}

/// Type lattice plus the named constraint library.
class Grammar {
 public:
  TypeLattice lattice;

  void add_constraint(const std::string& name, const std::string& text) {
    if (constraints_.count(name)) throw ConfigError("duplicate constraint '" + name + "'");
    if (lattice.has(name)) throw ConfigError("constraint '" + name + "' shadows a type");
    constraints_[name] = text;
  }

  bool has_constraint(const std::string& name) const { return constraints_.count(name) > 0; }
  const std::map<std::string, std::string>& constraints() const { return constraints_; }

  /// Parses constraint `name`, renaming its variables with `var_prefix`.
  /// Other constraint names used inside expand in place (no recursion).
  FeatureTerm instantiate(const std::string& name, const std::string& var_prefix) const {
    std::set<std::string> active;
    return expand(name, var_prefix, active);
  }

  /// Required types exist and every constraint parses and expands.
  void validate() const {
    for (const auto& t : required_types())
      if (!lattice.has(t)) throw ConfigError("type lattice lacks required type '" + t + "'");
    for (const auto& [name, text] : constraints_) instantiate(name, "check.");
  }

  static Grammar from_config(const ConfigDocument& doc) {
    Grammar g;
    for (const auto* s : doc.of_kind("atoms"))
      for (const auto& e : s->entries)
        for (const auto& a : split_words(e.value)) g.lattice.add_atom(a);
    for (const auto* s : doc.of_kind("types"))
      for (const auto& e : s->entries) g.lattice.define(e.key, split_on(e.value, '|'));
    for (const auto* s : doc.of_kind("constraint")) {
      if (s->name.empty()) throw ConfigError(s->where() + ": constraint needs a name");
      g.add_constraint(s->name, s->get("term"));
    }
    g.validate();
    return g;
  }

 private:
  FeatureTerm expand(const std::string& name, const std::string& prefix, std::set<std::string>& active) const {
    auto it = constraints_.find(name);
    if (it == constraints_.end()) throw ConfigError("unknown constraint '" + name + "'");
    if (!active.insert(name).second) throw ConfigError("recursive constraint definition '" + name + "'");
    auto resolver = [&](const std::string& id) -> std::optional<FeatureTerm> {
      if (!constraints_.count(id)) {
        if (!lattice.has(id)) throw ConfigError("constraint '" + name + "' uses unknown name '" + id + "'");
        return std::nullopt;
      }
      return expand(id, prefix, active);
    };
    FeatureTerm t = parse_term(it->second, resolver, prefix);
    active.erase(name);
    return t;
  }

  std::map<std::string, std::string> constraints_;
};

// ---------------------------------------------------------------------------
// Segment inventory

enum class VowelLength { lax_short, tense_long, none };

inline VowelLength vowel_length_from_string(const std::string& s) {
  if (s == "lax_short") return VowelLength::lax_short;
  if (s == "tense_long") return VowelLength::tense_long;
  if (s == "none") return VowelLength::none;
  throw ConfigError("unknown vowel length '" + s + "'");
}

/// Lexicon entry: phonological class, one primary gesture, the admissible
/// secondary states (in preference order) and attached constraints.
struct Segment {
  std::string id;
  std::vector<std::string> aliases;
  std::string class_type;
  bool alternating = false;
  VowelLength length = VowelLength::none;
  GestureSpec primary;
  std::vector<std::string> secondary;  // e.g. {"inactive", "voiceless"}
  std::vector<std::string> constraints;
};

class SegmentInventory {
 public:
  const Segment& lookup(const std::string& id) const {
    auto a = alias_.find(id);
    if (a == alias_.end()) throw LookupError("unknown segment '" + id + "'");
    return segments_.at(a->second);
  }

  bool contains(const std::string& id) const { return alias_.count(id) > 0; }
  const std::map<std::string, Segment>& segments() const { return segments_; }

  const GestureSpec& secondary_gesture(const std::string& state) const {
    auto it = secondary_.find(state);
    if (it == secondary_.end()) throw ConfigError("no gesture for secondary state '" + state + "'");
    return it->second;
  }
  bool has_secondary_gesture(const std::string& state) const { return secondary_.count(state) > 0; }

  bool is_vowel(const Segment& s) const { return in(s, "vowel"); }
  bool is_boundary(const Segment& s) const { return in(s, "boundary"); }
  bool is_obstruent(const Segment& s) const { return in(s, "obstruent"); }

  /// Whether the consonant sequence may form a syllable onset.
  bool legal_onset(const std::vector<const Segment*>& cluster) const {
    if (cluster.empty()) return true;
    if (cluster.size() == 1) return !illegal_single_onsets_.count(cluster[0]->id);
    std::vector<std::string> ids;
    for (const auto* s : cluster) ids.push_back(s->id);
    return onset_clusters_.count(ids) > 0;
  }

  const Grammar& grammar() const { return *grammar_; }

  void add(Segment s, const ParameterTable& params) {
    const std::string owner = "segment '" + s.id + "'";
    if (alias_.count(s.id)) throw ConfigError("duplicate segment id '" + s.id + "'");
    if (!grammar_->lattice.has(s.class_type)) throw ConfigError(owner + ": unknown class '" + s.class_type + "'");
    if (s.alternating && !is_obstruent(s)) throw ConfigError(owner + ": only obstruents can be alternating");
    params.check(s.primary, owner);
    if (s.secondary.empty()) throw ConfigError(owner + ": no secondary state");
    for (const auto& st : s.secondary) {
      if (!grammar_->lattice.has(st)) throw ConfigError(owner + ": unknown secondary state '" + st + "'");
      if (st != "inactive" && !secondary_.count(st))
        throw ConfigError(owner + ": secondary state '" + st + "' has no gesture");
    }
    for (const auto& c : s.constraints)
      if (!grammar_->has_constraint(c)) throw ConfigError(owner + ": unknown constraint '" + c + "'");
    for (const auto& a : s.aliases) {
      if (alias_.count(a)) throw ConfigError("duplicate segment id '" + a + "'");
      alias_[a] = s.id;
    }
    alias_[s.id] = s.id;
    segments_.emplace(s.id, std::move(s));
  }

  explicit SegmentInventory(std::shared_ptr<const Grammar> grammar) : grammar_(std::move(grammar)) {}

  static SegmentInventory from_config(const ConfigDocument& doc, std::shared_ptr<const Grammar> grammar,
                                      const ParameterTable& params) {
    SegmentInventory inv(std::move(grammar));
    const Grammar& g = *inv.grammar_;
    for (const auto* s : doc.of_kind("secondary")) {
      GestureSpec spec = parse_gesture_spec(s->get("gesture"), s->where());
      params.check(spec, s->where());
      if (!g.lattice.has(s->name)) throw ConfigError(s->where() + ": secondary state is not a type");
      inv.secondary_[s->name] = spec;
    }
    for (const auto* s : doc.of_kind("segment")) {
      Segment seg;
      seg.id = s->name;
      if (seg.id.empty()) throw ConfigError(s->where() + ": segment needs an id");
      seg.aliases = split_words(s->get_or("aliases", ""));
      seg.class_type = s->get("class");
      std::string alt = s->get_or("alternating", "no");
      if (alt != "yes" && alt != "no") throw ConfigError(s->where() + ": alternating must be yes or no");
      seg.alternating = alt == "yes";
      try {
        seg.length = vowel_length_from_string(s->get_or("length", "none"));
      } catch (const ConfigError& e) {
        throw ConfigError(s->where() + ": " + e.what());
      }
      seg.primary = parse_gesture_spec(s->get("primary"), s->where());
      seg.secondary = split_on(s->get_or("secondary", "inactive"), '|');
      seg.constraints = split_words(s->get_or("constraints", ""));
      inv.add(std::move(seg), params);
    }
    for (const auto* s : doc.of_kind("onsets")) {
      for (const auto& c : s->all("cluster")) {
        std::vector<std::string> ids;
        for (const auto& w : split_words(c)) ids.push_back(inv.resolve(w, s->where()));
        if (ids.size() < 2) throw ConfigError(s->where() + ": onset cluster needs two or more segments");
        inv.onset_clusters_.insert(ids);
      }
      for (const auto& w : split_words(s->get_or("illegal", "")))
        inv.illegal_single_onsets_.insert(inv.resolve(w, s->where()));
    }
    return inv;
  }

 private:
  bool in(const Segment& s, const char* type) const {
    const auto& lat = grammar_->lattice;
    return lat.denotation(s.class_type).subset_of(lat.denotation(type));
  }

  std::string resolve(const std::string& id, const std::string& where) const {
    auto a = alias_.find(id);
    if (a == alias_.end()) throw ConfigError(where + ": unknown segment '" + id + "'");
    return a->second;
  }

  std::shared_ptr<const Grammar> grammar_;
  std::map<std::string, Segment> segments_;
  std::map<std::string, std::string> alias_;
  std::map<std::string, GestureSpec> secondary_;
  std::set<std::vector<std::string>> onset_clusters_;
  std::set<std::string> illegal_single_onsets_;
};

// ---------------------------------------------------------------------------
// Syllabification

/// One segment of a word with its syllabic position. Boundary segments carry
/// no role; they attach to the onset of the next syllable or as an appendix.
struct WordPosition {
  const Segment* segment = nullptr;
  std::optional<Role> role;
  bool boundary = false;
  bool appendix = false;
  int syllable = -1;

  /// Role atom, or "onset"/"appendix" for boundary segments.
  std::string role_label() const {
    if (role) return to_string(*role);
    return appendix ? "appendix" : "onset";
  }
};

struct Syllable {
  int nucleus = -1;
  std::vector<int> onset;     // in temporal order, including an ambisyllabic first member
  std::vector<int> coda;      // pure_coda members
  std::vector<int> appendix;  // trailing boundary segments
};

struct PhonWord {
  std::vector<WordPosition> positions;
  std::vector<Syllable> syllables;

  std::vector<std::string> ids() const {
    std::vector<std::string> out;
    for (const auto& p : positions) out.push_back(p.segment->id);
    return out;
  }
};

/// Onset maximisation over the legal onset list; a single consonant after a
/// lax short vowel is ambisyllabic; word-final consonants are pure codas.
inline PhonWord syllabify(const std::vector<std::string>& word, const SegmentInventory& inv) {
  if (word.empty()) throw Unsyllabifiable("empty word");
  PhonWord w;
  std::vector<int> nuclei;
  for (const auto& id : word) {
    WordPosition p;
    p.segment = &inv.lookup(id);
    p.boundary = inv.is_boundary(*p.segment);
    if (inv.is_vowel(*p.segment)) {
      p.role = Role::nucleus;
      nuclei.push_back(static_cast<int>(w.positions.size()));
    }
    w.positions.push_back(p);
  }
  if (nuclei.empty()) throw Unsyllabifiable("no vowel in word");

  w.syllables.resize(nuclei.size());
  for (std::size_t s = 0; s < nuclei.size(); ++s) {
    w.syllables[s].nucleus = nuclei[s];
    w.positions[nuclei[s]].syllable = static_cast<int>(s);
  }
  auto put_onset = [&](int i, int syl, Role r) {
    auto& p = w.positions[i];
    if (!p.boundary) p.role = r;
    p.syllable = syl;
    w.syllables[syl].onset.push_back(i);
  };
  auto put_coda = [&](int i, int syl) {
    auto& p = w.positions[i];
    p.syllable = syl;
    if (p.boundary) {
      p.appendix = true;
      w.syllables[syl].appendix.push_back(i);
    } else {
      if (!w.syllables[syl].appendix.empty())
        throw Unsyllabifiable("segment '" + p.segment->id + "' follows a word-final boundary");
      p.role = Role::pure_coda;
      w.syllables[syl].coda.push_back(i);
    }
  };

  for (int i = 0; i < nuclei.front(); ++i) put_onset(i, 0, Role::pure_onset);
  for (std::size_t s = 0; s + 1 < nuclei.size(); ++s) {
    int lo = nuclei[s] + 1, hi = nuclei[s + 1];
    int next = static_cast<int>(s + 1);
    // A medial boundary segment starts the next onset.
    int split = hi;
    for (int i = lo; i < hi; ++i)
      if (w.positions[i].boundary) {
        split = i;
        break;
      }
    if (split == hi) {
      std::vector<const Segment*> cluster;
      for (int i = lo; i < hi; ++i) cluster.push_back(w.positions[i].segment);
      if (cluster.size() == 1 && w.positions[nuclei[s]].segment->length == VowelLength::lax_short) {
        put_onset(lo, next, Role::codaonset);
        continue;
      }
      split = hi;
      for (int k = lo; k < hi; ++k) {
        std::vector<const Segment*> suffix(cluster.begin() + (k - lo), cluster.end());
        if (inv.legal_onset(suffix)) {
          split = k;
          break;
        }
      }
    }
    for (int i = lo; i < split; ++i) put_coda(i, static_cast<int>(s));
    for (int i = split; i < hi; ++i) put_onset(i, next, Role::pure_onset);
  }
  int last = static_cast<int>(nuclei.size()) - 1;
  for (int i = nuclei.back() + 1; i < static_cast<int>(w.positions.size()); ++i) put_coda(i, last);
  return w;
}

}  // namespace phonogest
