#pragma once

#include "phonogest/affine_store.hpp"
#include "phonogest/errors.hpp"
#include "phonogest/gesture.hpp"
#include "phonogest/phonology.hpp"
#include "phonogest/solver.hpp"

#include <algorithm>
#include <string>
#include <vector>

namespace phonogest {

/// A potential gesture of a word: the primary gesture of every segment and
/// one slot per non-inactive secondary state the segment admits.
struct GestureSlot {
  int position = 0;
  std::string segment;
  std::string state = "primary";  // or the secondary state, e.g. "voiceless"
  std::string role;               // role atom or boundary attachment
  bool vocalic = false;
  GestureSpec spec;
  Timing constants;  // eigenperiod / assoc / release; start and end unused

  bool secondary() const { return state != "primary"; }
  std::string prefix() const { return "s" + std::to_string(position + 1) + "." + state; }
  std::string start_var() const { return prefix() + ".start"; }
  std::string end_var() const { return prefix() + ".end"; }
  std::string describe() const { return segment + "@" + std::to_string(position + 1) + "." + state; }
};

inline std::vector<GestureSlot> gesture_slots(const PhonWord& word, const SegmentInventory& inv,
                                              const ParameterTable& params) {
  std::vector<GestureSlot> slots;
  for (std::size_t i = 0; i < word.positions.size(); ++i) {
    const WordPosition& p = word.positions[i];
    GestureSlot g;
    g.position = static_cast<int>(i);
    g.segment = p.segment->id;
    g.role = p.role_label();
    g.vocalic = p.role == Role::nucleus;
    g.spec = p.segment->primary;
    g.constants = params.constants(g.spec.gesture_class, g.role);
    slots.push_back(g);
    for (const auto& st : p.segment->secondary) {
      if (st == "inactive") continue;
      GestureSlot s = g;
      s.state = st;
      s.vocalic = false;
      s.spec = inv.secondary_gesture(st);
      s.constants = params.constants(s.spec.gesture_class, s.role);
      slots.push_back(s);
    }
  }
  return slots;
}

/// end = start + eigenperiod * release / 360 for one gesture.
inline AffineEquation end_constraint(const std::string& start_var, const std::string& end_var, const Timing& t) {
  validate_timing_constants(t.eigenperiod, t.assoc, t.release, "gesture " + start_var);
  return AffineEquation{AffineExpr::variable(end_var), phase_point(start_var, t.eigenperiod, t.release),
                        "endtime"};
}

inline AffineEquation end_constraint(const GestureSlot& g) {
  AffineEquation eq = end_constraint(g.start_var(), g.end_var(), g.constants);
  eq.label = "endtime:" + g.describe();
  return eq;
}

/// An association equation; `slot` >= 0 marks equations that only hold when
/// that (secondary) gesture is present.
struct TimingEquation {
  AffineEquation equation;
  int slot = -1;
};

namespace detail {

inline AffineExpr assoc_point(const GestureSlot& g) {
  return phase_point(g.start_var(), g.constants.eigenperiod, g.constants.assoc);
}
inline AffineExpr release_point(const GestureSlot& g) {
  return phase_point(g.start_var(), g.constants.eigenperiod, g.constants.release);
}

}  // namespace detail

/// Association rules fixing the absolute timing of all gestures:
///   vocalic gestures are concatenated without gaps; the first onset gesture
///   of a syllable is associated with the start of its vocalic gesture, the
///   first coda (or appendix) gesture with its end; later cluster members are
///   associated with the release point of their predecessor; secondary
///   gestures share their host's association point; and the first vocalic
///   gesture starts late enough that no gesture starts before t = 0.
inline std::vector<TimingEquation> associate(const PhonWord& word, const std::vector<GestureSlot>& slots) {
  std::vector<int> primary(word.positions.size(), -1);
  for (std::size_t k = 0; k < slots.size(); ++k)
    if (!slots[k].secondary()) primary[slots[k].position] = static_cast<int>(k);

  std::vector<TimingEquation> out;
  auto emit = [&](AffineExpr lhs, AffineExpr rhs, std::string label, int slot = -1) {
    out.push_back(TimingEquation{AffineEquation{std::move(lhs), std::move(rhs), std::move(label)}, slot});
  };
  auto slot_of = [&](int position) -> const GestureSlot& { return slots.at(primary.at(position)); };

  for (std::size_t s = 0; s + 1 < word.syllables.size(); ++s) {
    const auto& v1 = slot_of(word.syllables[s].nucleus);
    const auto& v2 = slot_of(word.syllables[s + 1].nucleus);
    emit(AffineExpr::variable(v1.end_var()), AffineExpr::variable(v2.start_var()),
         "vocalic_concatenation:" + v1.describe() + "/" + v2.describe());
  }
  auto chain = [&](const std::vector<int>& cluster, const AffineExpr& anchor, const std::string& rule) {
    for (std::size_t k = 0; k < cluster.size(); ++k) {
      const auto& c = slot_of(cluster[k]);
      if (k == 0) emit(detail::assoc_point(c), anchor, rule + ":" + c.describe());
      else emit(detail::assoc_point(c), detail::release_point(slot_of(cluster[k - 1])), "cluster_chain:" + c.describe());
    }
  };
  for (const auto& syl : word.syllables) {
    const auto& v = slot_of(syl.nucleus);
    chain(syl.onset, AffineExpr::variable(v.start_var()), "onset_association");
    std::vector<int> tail = syl.coda;
    tail.insert(tail.end(), syl.appendix.begin(), syl.appendix.end());
    chain(tail, AffineExpr::variable(v.end_var()), "coda_association");
  }
  for (std::size_t k = 0; k < slots.size(); ++k) {
    if (!slots[k].secondary()) continue;
    const auto& host = slot_of(slots[k].position);
    emit(detail::assoc_point(slots[k]), detail::assoc_point(host), "secondary_association:" + slots[k].describe(),
         static_cast<int>(k));
  }

  if (word.syllables.empty()) return out;
  // Utterance anchor: the largest lead of any potential gesture before the
  // first vocalic gesture, from the relative system with that start at 0.
  const auto& first = slot_of(word.syllables.front().nucleus);
  AffineStore relative;
  relative.post(AffineExpr::variable(first.start_var()), AffineExpr::number(0));
  for (const auto& e : out) relative.post(e.equation);
  Rational lead = 0;
  for (const auto& g : slots) {
    if (!relative.knows(g.start_var())) continue;
    if (auto s = relative.value_of(g.start_var()); s && -*s > lead) lead = -*s;
  }
  emit(AffineExpr::variable(first.start_var()), AffineExpr::number(lead), "utterance_anchor");
  return out;
}

/// A gesture of a solved utterance with concrete timing (ms, exact).
struct ScoredGesture {
  GestureSpec spec;
  Timing timing;
  std::string segment;
  std::string role;
  std::string state;
  int position = 0;
  bool vocalic = false;

  double start_ms() const { return to_double(timing.start); }
  double end_ms() const { return to_double(timing.end); }
};

struct GesturalScore {
  std::vector<std::string> utterance;
  std::vector<ScoredGesture> gestures;
  Rational span_end = 0;

  double span_end_ms() const { return to_double(span_end); }
};

inline Path secondary_path(int position) { return {"phon", std::to_string(position + 1), "self", "seg", "secondary"}; }

/// Concrete score from a solution. Secondary slots are kept only when the
/// solved secondary state equals the slot's state. Any remaining free timing
/// variable is an error.
inline GesturalScore assemble_score(const PhonWord& word, const std::vector<GestureSlot>& slots,
                                    const Solution& solution, const TypeLattice& lattice) {
  GesturalScore score;
  score.utterance = word.ids();
  std::vector<std::string> unbound;
  for (const auto& g : slots) {
    if (g.secondary()) {
      TypeSet state = solution.type_at(secondary_path(g.position));
      if (!state.subset_of(lattice.denotation(g.state))) continue;
    }
    ScoredGesture sg;
    sg.spec = g.spec;
    sg.timing = g.constants;
    sg.segment = g.segment;
    sg.role = g.role;
    sg.state = g.state;
    sg.position = g.position;
    sg.vocalic = g.vocalic;
    auto lookup = [&](const std::string& var, Rational& into) {
      std::optional<Rational> v;
      if (solution.store().knows(var)) v = solution.value_of(var);
      if (v) into = *v;
      else unbound.push_back(var);
    };
    lookup(g.start_var(), sg.timing.start);
    lookup(g.end_var(), sg.timing.end);
    score.gestures.push_back(std::move(sg));
  }
  if (!unbound.empty()) {
    std::string msg = "undetermined gesture timing:";
    for (const auto& v : unbound) msg += " " + v;
    throw UndeterminedTiming(msg, unbound);
  }
  for (const auto& g : score.gestures) score.span_end = std::max(score.span_end, g.timing.end);
  return score;
}

}  // namespace phonogest
