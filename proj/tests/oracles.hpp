#pragma once

// Independent reference implementations used only by the test suites.

#include "phonogest/expr.hpp"
#include "phonogest/feature_term.hpp"
#include "phonogest/rational.hpp"
#include "phonogest/type_lattice.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

namespace oracle {

using phonogest::AffineEquation;
using phonogest::AffineExpr;
using phonogest::FeatureTerm;
using phonogest::Rational;
using phonogest::TypeLattice;

// ---------------------------------------------------------------------------
// Dense linear algebra over Q: consistency and uniqueness by rank comparison.

struct DenseSystem {
  std::vector<std::string> vars;
  std::vector<std::vector<Rational>> rows;  // each row: coeffs..., rhs

  explicit DenseSystem(const std::vector<AffineEquation>& eqs) {
    std::set<std::string> names;
    for (const auto& e : eqs) {
      for (const auto& [v, c] : e.lhs.coeffs) names.insert(v);
      for (const auto& [v, c] : e.rhs.coeffs) names.insert(v);
    }
    vars.assign(names.begin(), names.end());
    for (const auto& e : eqs) {
      AffineExpr d = e.lhs - e.rhs;
      std::vector<Rational> row(vars.size() + 1, Rational(0));
      for (std::size_t j = 0; j < vars.size(); ++j) {
        auto it = d.coeffs.find(vars[j]);
        if (it != d.coeffs.end()) row[j] = it->second;
      }
      row.back() = -d.constant;
      rows.push_back(std::move(row));
    }
  }

  static int rank(std::vector<std::vector<Rational>> m, std::size_t cols) {
    int r = 0;
    for (std::size_t c = 0; c < cols && r < static_cast<int>(m.size()); ++c) {
      int piv = -1;
      for (int i = r; i < static_cast<int>(m.size()); ++i)
        if (m[i][c] != 0) { piv = i; break; }
      if (piv < 0) continue;
      std::swap(m[r], m[piv]);
      for (int i = 0; i < static_cast<int>(m.size()); ++i) {
        if (i == r || m[i][c] == 0) continue;
        Rational f = m[i][c] / m[r][c];
        for (std::size_t k = 0; k < m[i].size(); ++k) m[i][k] -= f * m[r][k];
      }
      ++r;
    }
    return r;
  }

  bool consistent() const {
    return rank(rows, vars.size()) == rank(rows, vars.size() + 1);
  }

  // Unique iff appending the unit row e_j does not raise the coefficient rank.
  bool determined(const std::string& v) const {
    auto it = std::find(vars.begin(), vars.end(), v);
    if (it == vars.end()) return false;
    auto m = rows;
    std::vector<Rational> unit(vars.size() + 1, Rational(0));
    unit[it - vars.begin()] = 1;
    int base = rank(m, vars.size());
    m.push_back(unit);
    return rank(m, vars.size()) == base;
  }
};

/// Random affine equation with small integer coefficients over `vars`, made
/// true by `planted` when it is given.
inline AffineEquation random_equation(std::mt19937_64& rng, const std::vector<std::string>& vars,
                                      const std::map<std::string, Rational>* planted) {
  std::uniform_int_distribution<int> coef(-3, 3), nvars(1, 3), pick(0, static_cast<int>(vars.size()) - 1),
      cst(-6, 6);
  AffineEquation eq;
  int k = nvars(rng);
  for (int i = 0; i < k; ++i) {
    int c = coef(rng);
    if (c == 0) c = 1;
    eq.lhs += AffineExpr::variable(vars[pick(rng)]) * Rational(c);
  }
  if (planted) {
    Rational value = eq.lhs.constant;
    for (const auto& [v, c] : eq.lhs.coeffs) value += c * planted->at(v);
    eq.rhs = AffineExpr::number(value);
  } else {
    eq.rhs = AffineExpr::number(Rational(cst(rng), 2));
  }
  return eq;
}

/// Planted solution on the grid {-2, -3/2, ..., 2}.
inline std::map<std::string, Rational> random_grid_point(std::mt19937_64& rng, const std::vector<std::string>& vars) {
  std::uniform_int_distribution<int> g(-4, 4);
  std::map<std::string, Rational> p;
  for (const auto& v : vars) p[v] = Rational(g(rng), 2);
  return p;
}

// ---------------------------------------------------------------------------
// Random lattices and feature terms with a brute-force satisfiability check.

inline TypeLattice random_lattice(std::mt19937_64& rng, int max_atoms = 6) {
  TypeLattice lat;
  int n = std::uniform_int_distribution<int>(1, max_atoms)(rng);
  for (int i = 0; i < n; ++i) lat.add_atom("a" + std::to_string(i));
  int named = std::uniform_int_distribution<int>(1, 4)(rng);
  for (int i = 0; i < named; ++i) {
    std::vector<std::string> members;
    for (const auto& t : lat.type_names())
      if (std::bernoulli_distribution(0.35)(rng)) members.push_back(t);
    if (members.empty()) members.push_back(lat.type_names()[rng() % lat.type_names().size()]);
    lat.define("t" + std::to_string(i), members);
  }
  return lat;
}

inline FeatureTerm random_term(std::mt19937_64& rng, const TypeLattice& lat, int depth, bool positive = true,
                               bool with_vars = true) {
  static const char* kAttrs[] = {"f", "g"};
  static const char* kVars[] = {"X", "Y"};
  const auto& names = lat.type_names();
  auto leaf = [&]() {
    if (with_vars && positive && std::bernoulli_distribution(0.15)(rng)) return FeatureTerm::var(kVars[rng() % 2]);
    return FeatureTerm::type(names[rng() % names.size()]);
  };
  if (depth == 0) return leaf();
  switch (std::uniform_int_distribution<int>(0, 4)(rng)) {
    case 0: return leaf();
    case 1: return FeatureTerm::feature(kAttrs[rng() % 2], random_term(rng, lat, depth - 1, positive, with_vars));
    case 2: return FeatureTerm::neg(random_term(rng, lat, depth - 1, !positive, with_vars));
    default: {
      int n = std::uniform_int_distribution<int>(2, 3)(rng);
      std::vector<FeatureTerm> parts;
      for (int i = 0; i < n; ++i) parts.push_back(random_term(rng, lat, depth - 1, positive, with_vars));
      return rng() % 2 ? FeatureTerm::conj(std::move(parts)) : FeatureTerm::disj(std::move(parts));
    }
  }
}

/// Classical satisfiability by enumerating one atom per mentioned path and
/// per variable; a variable at a path forces equal atoms.
class BruteForce {
 public:
  BruteForce(const TypeLattice& lat, const FeatureTerm& t) : lat_(lat), term_(t) {
    std::vector<std::string> path;
    collect(t, path);
  }

  bool satisfiable() {
    slots_ = static_cast<int>(paths_.size() + vars_.size());
    assignment_.assign(slots_, 0);
    return search(0);
  }

 private:
  void collect(const FeatureTerm& t, std::vector<std::string>& path) {
    using K = FeatureTerm::Kind;
    switch (t.kind()) {
      case K::type: paths_.emplace(path, paths_.size()); return;
      case K::var:
        paths_.emplace(path, paths_.size());
        vars_.emplace(t.name(), vars_.size());
        return;
      case K::feature:
        path.push_back(t.name());
        collect(t.child(), path);
        path.pop_back();
        return;
      case K::equation: return;
      default:
        for (const auto& c : t.children()) collect(c, path);
    }
  }

  bool search(int slot) {
    if (slot == slots_) {
      std::vector<std::string> path;
      return eval(term_, path);
    }
    for (int a = 0; a < lat_.atom_count(); ++a) {
      assignment_[slot] = a;
      if (search(slot + 1)) return true;
    }
    return false;
  }

  bool eval(const FeatureTerm& t, std::vector<std::string>& path) {
    using K = FeatureTerm::Kind;
    switch (t.kind()) {
      case K::type: return lat_.denotation(t.name()).contains(assignment_[paths_.at(path)]);
      case K::var:
        return assignment_[paths_.at(path)] == assignment_[paths_.size() + vars_.at(t.name())];
      case K::feature: {
        path.push_back(t.name());
        bool r = eval(t.child(), path);
        path.pop_back();
        return r;
      }
      case K::neg: return !eval(t.child(), path);
      case K::conj:
        for (const auto& c : t.children())
          if (!eval(c, path)) return false;
        return true;
      case K::disj:
        for (const auto& c : t.children())
          if (eval(c, path)) return true;
        return false;
      case K::equation: return true;
    }
    return false;
  }

  const TypeLattice& lat_;
  FeatureTerm term_;
  std::map<std::vector<std::string>, std::size_t> paths_;
  std::map<std::string, std::size_t> vars_;
  std::vector<int> assignment_;
  int slots_ = 0;
};

}  // namespace oracle
