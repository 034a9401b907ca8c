#pragma once

#include "phonogest/errors.hpp"
#include "phonogest/gesture.hpp"
#include "phonogest/timing.hpp"
#include "phonogest/tract.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace phonogest {

struct OscState {
  double x = 0;
  double v = 0;  // per ms
};

inline double omega(double eigenperiod_ms) {
  if (!(eigenperiod_ms > 0) || !std::isfinite(eigenperiod_ms))
    throw std::invalid_argument("eigenperiod must be positive");
  return 2 * std::numbers::pi / eigenperiod_ms;
}

/// Remaining fraction of the initial distance, starting from rest, after
/// `phase` degrees of the eigenperiod.
inline double relative_distance(double phase_deg) {
  if (phase_deg < 0) throw std::invalid_argument("phase must be non-negative");
  const double th = 2 * std::numbers::pi * phase_deg / 360;
  return (1 + th) * std::exp(-th);
}

/// Closed-form critically damped update, x'' = -w^2 (x - target) - 2 w x'.
inline OscState step(const OscState& s, double target, double w, double dt) {
  if (dt == 0) return s;
  if (dt < 0) throw std::invalid_argument("step needs dt >= 0");
  const double d = s.x - target;
  const double c2 = s.v + w * d;
  const double e = std::exp(-w * dt);
  return OscState{target + (d + c2 * dt) * e, (c2 - w * (d + c2 * dt)) * e};
}

/// Index (into `active`) of the gesture controlling a shared tract variable:
/// the latest start wins, ties go to the earlier entry.
inline std::size_t overlap_policy(const std::vector<const ScoredGesture*>& active) {
  if (active.empty()) throw std::invalid_argument("overlap_policy needs an active gesture");
  std::size_t best = 0;
  for (std::size_t i = 1; i < active.size(); ++i)
    if (active[i]->timing.start > active[best]->timing.start) best = i;
  return best;
}

/// Exact piecewise trajectory of one tract variable. Control is constant
/// between consecutive activation boundaries, so the state anywhere follows
/// from the state at the preceding boundary by one closed-form step.
class TractTrack {
 public:
  struct Piece {
    double t0 = 0;
    double target = 0;
    double omega = 0;
    OscState s0;
    int gesture = -1;  // index into the score, -1 for neutral relaxation
  };

  TractTrack(const GesturalScore& score, TractVariable tv, const ParameterTable& params)
      : info_(params.tract(tv)) {
    const double neutral = info_.neutral;
    const double w_neutral = omega(to_double(params.neutral_eigenperiod));
    std::vector<int> mine;
    std::vector<double> cuts{0.0};
    for (std::size_t i = 0; i < score.gestures.size(); ++i) {
      const auto& g = score.gestures[i];
      if (g.spec.tract != tv) continue;
      mine.push_back(static_cast<int>(i));
      cuts.push_back(g.start_ms());
      cuts.push_back(g.end_ms());
    }
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

    OscState s{neutral, 0};
    for (double t0 : cuts) {
      Piece p{t0, neutral, w_neutral, s, -1};
      std::vector<const ScoredGesture*> active;
      std::vector<int> index;
      for (int i : mine) {
        const auto& g = score.gestures[i];
        if (g.start_ms() <= t0 && t0 < g.end_ms()) {
          active.push_back(&g);
          index.push_back(i);
        }
      }
      if (!active.empty()) {
        std::size_t k = overlap_policy(active);
        p.gesture = index[k];
        p.target = active[k]->spec.target;
        p.omega = omega(to_double(active[k]->timing.eigenperiod));
      }
      if (!pieces_.empty()) {
        const Piece& prev = pieces_.back();
        p.s0 = step(prev.s0, prev.target, prev.omega, t0 - prev.t0);
      }
      s = p.s0;
      pieces_.push_back(p);
    }
  }

  const Piece& piece_at(double t) const {
    auto it = std::upper_bound(pieces_.begin(), pieces_.end(), t, [](double x, const Piece& p) { return x < p.t0; });
    return it == pieces_.begin() ? pieces_.front() : *std::prev(it);
  }

  OscState state_at(double t) const {
    const Piece& p = piece_at(t);
    return t <= p.t0 ? p.s0 : step(p.s0, p.target, p.omega, t - p.t0);
  }

  /// Oscillator position before clipping.
  double raw_at(double t) const { return state_at(t).x; }

  /// Exported value: saturated at the tract bounds.
  double value_at(double t) const {
    return std::clamp(raw_at(t), info_.min, info_.max);
  }

  int controlling_gesture(double t) const { return piece_at(t).gesture; }
  const std::vector<Piece>& pieces() const { return pieces_; }

 private:
  TractInfo info_;
  std::vector<Piece> pieces_;
};

struct Trajectory {
  double sample_rate = 0;
  double t0 = 0;
  std::vector<double> t;
  std::array<std::vector<double>, kTractVariables.size()> values;
  std::vector<bool> voiced;

  const std::vector<double>& of(TractVariable tv) const { return values[index_of(tv)]; }
};

/// Sample time k at `rate` Hz. Integer numerator keeps shared grid points
/// of different rates bit-identical.
inline double sample_time(std::size_t k, double rate) { return static_cast<double>(k) * 1000.0 / rate; }

inline Trajectory render(const GesturalScore& score, double rate, const ParameterTable& params) {
  if (!(rate > 0) || !std::isfinite(rate)) throw RenderError("sample rate must be positive");
  const double span = score.span_end_ms();
  const auto n = static_cast<std::size_t>(std::floor(span * rate / 1000.0 + 1e-9)) + 1;
  for (const auto& g : score.gestures) {
    double first = std::ceil(g.start_ms() * rate / 1000.0 - 1e-9) * 1000.0 / rate;
    if (first > g.end_ms())
      throw RenderError("sample rate " + std::to_string(rate) + " Hz leaves the activation interval of " +
                        g.segment + " (" + std::string(to_string(g.spec.tract)) + ") without a sample");
  }
  Trajectory out;
  out.sample_rate = rate;
  out.t.resize(n);
  for (std::size_t k = 0; k < n; ++k) out.t[k] = sample_time(k, rate);
  for (TractVariable tv : kTractVariables) {
    TractTrack track(score, tv, params);
    auto& col = out.values[index_of(tv)];
    col.resize(n);
    for (std::size_t k = 0; k < n; ++k) col[k] = track.value_at(out.t[k]);
  }
  const double ga = params.ga_threshold, pr = params.pr_threshold;
  out.voiced.resize(n);
  for (std::size_t k = 0; k < n; ++k)
    out.voiced[k] = out.of(TractVariable::GA)[k] < ga && out.of(TractVariable::PR)[k] > pr;
  return out;
}

/// First time in [t0, t1] at which |x - target| <= fraction * |x(t0) - target|,
/// assuming a monotone approach (critically damped from rest). Bisection on
/// the exact evaluator; NaN if never reached.
inline double time_to_fraction(const TractTrack& track, double target, double fraction, double t0, double t1,
                               double tol = 1e-12) {
  const double d0 = std::abs(track.raw_at(t0) - target);
  auto reached = [&](double t) { return std::abs(track.raw_at(t) - target) <= fraction * d0; };
  if (!reached(t1)) return std::numeric_limits<double>::quiet_NaN();
  double lo = t0, hi = t1;
  while (hi - lo > tol * std::max(1.0, hi)) {
    double mid = 0.5 * (lo + hi);
    (reached(mid) ? hi : lo) = mid;
  }
  return hi;
}

}  // namespace phonogest
