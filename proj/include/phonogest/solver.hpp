#pragma once

#include "phonogest/affine_store.hpp"
#include "phonogest/feature_term.hpp"
#include "phonogest/type_lattice.hpp"

#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace phonogest {

/// A satisfying assignment: the most specific type at every constrained path,
/// variable bindings of paths, and the arithmetic store. Immutable once built.
class Solution {
 public:
  /// Most specific type at `path` (top when unconstrained).
  TypeSet type_at(const Path& path) const {
    auto bound = path_var_.find(path);
    if (bound != path_var_.end()) {
      auto it = var_types_.find(find(bound->second));
      return it == var_types_.end() ? top_ : it->second;
    }
    auto it = path_types_.find(path);
    return it == path_types_.end() ? top_ : it->second;
  }

  /// Variable bound at `path`, if any (canonical representative).
  std::optional<std::string> var_at(const Path& path) const {
    auto it = path_var_.find(path);
    if (it == path_var_.end()) return std::nullopt;
    return find(it->second);
  }

  std::optional<Rational> value_of(const std::string& var) const { return store_.value_of(var); }

  std::optional<Rational> value_at(const Path& path) const {
    auto v = var_at(path);
    if (!v) return std::nullopt;
    return store_.value_of(*v);
  }

  const AffineStore& store() const { return store_; }

  /// Every path mentioned by the solved description, in lexicographic order.
  std::vector<Path> paths() const {
    std::map<Path, int> all;
    for (const auto& [p, t] : path_types_) all[p];
    for (const auto& [p, v] : path_var_) all[p];
    std::vector<Path> out;
    for (const auto& [p, _] : all) out.push_back(p);
    return out;
  }

  /// Order-independent textual dump of types, coreferences and entailed values.
  std::string canonical(const TypeLattice& lattice) const {
    std::ostringstream os;
    for (const auto& p : paths()) {
      os << path_str(p) << " = " << lattice.name_of(type_at(p));
      if (auto v = var_at(p)) os << " @" << *v;
      os << "\n";
    }
    for (const auto& [v, q] : store_.entailed()) os << v << " := " << q << "\n";
    return os.str();
  }

 private:
  friend class Solver;

  std::string find(std::string v) const {
    for (auto it = alias_.find(v); it != alias_.end(); it = alias_.find(v)) v = it->second;
    return v;
  }

  TypeSet top_;
  std::map<Path, TypeSet> path_types_;
  std::map<Path, std::string> path_var_;
  std::map<std::string, std::string> alias_;
  std::map<std::string, TypeSet> var_types_;
  AffineStore store_;
};

/// Depth-first solver over typed feature descriptions with affine equations.
///
/// Disjunctions are explored left to right and the first satisfiable branch
/// wins, which yields the same solution as taking the first satisfiable
/// disjunct of `normalize(term)`. Conjunct order never affects the result.
class Solver {
 public:
  explicit Solver(const TypeLattice& lattice) : lattice_(lattice) {}

  std::optional<Solution> solve(const FeatureTerm& term, AffineStore store = {}) const {
    validate(term, true);
    Solution s;
    s.top_ = lattice_.top();
    s.store_ = std::move(store);
    std::vector<Goal> stack{Goal{term, {}, true}};
    if (!run(s, stack)) return std::nullopt;
    return s;
  }

  bool satisfiable(const FeatureTerm& term) const { return solve(term).has_value(); }

 private:
  struct Goal {
    FeatureTerm term;
    Path path;
    bool positive;
  };

  void validate(const FeatureTerm& t, bool positive) const {
    using K = FeatureTerm::Kind;
    switch (t.kind()) {
      case K::type: lattice_.denotation(t.name()); return;
      case K::var:
        if (!positive) throw UnsupportedConstruct("negation of variable " + t.name());
        return;
      case K::equation:
        if (!positive) throw UnsupportedConstruct("negation of arithmetic constraint " + t.str());
        linearize(t.lhs());
        linearize(t.rhs());
        return;
      case K::neg: validate(t.child(), !positive); return;
      default:
        for (const auto& c : t.children()) validate(c, positive);
    }
  }

  bool constrain(Solution& s, const Path& path, TypeSet t) const {
    auto bound = s.path_var_.find(path);
    TypeSet* slot;
    if (bound != s.path_var_.end()) {
      auto [it, _] = s.var_types_.try_emplace(s.find(bound->second), s.top_);
      slot = &it->second;
    } else {
      auto [it, _] = s.path_types_.try_emplace(path, s.top_);
      slot = &it->second;
    }
    *slot = lattice_.meet(*slot, t);
    return !slot->empty();
  }

  bool bind(Solution& s, const Path& path, const std::string& var) const {
    s.store_.declare(var, path_str(path));
    std::string r = s.find(var);
    auto [vt, _] = s.var_types_.try_emplace(r, s.top_);
    auto bound = s.path_var_.find(path);
    if (bound == s.path_var_.end()) {
      auto pt = s.path_types_.find(path);
      if (pt != s.path_types_.end()) {
        vt->second = lattice_.meet(vt->second, pt->second);
        s.path_types_.erase(pt);
      }
      s.path_var_.emplace(path, var);
      return !vt->second.empty();
    }
    std::string w = s.find(bound->second);
    if (w == r) return true;
    // Union: the lexicographically smaller name stays representative.
    auto [keep, drop] = std::minmax(w, r);
    TypeSet merged = lattice_.meet(s.var_types_[keep], s.var_types_[drop]);
    s.var_types_.erase(drop);
    s.var_types_[keep] = merged;
    s.alias_[drop] = keep;
    if (!s.store_.post(AffineExpr::variable(keep), AffineExpr::variable(drop))) return false;
    return !merged.empty();
  }

  bool run(Solution& s, std::vector<Goal>& stack) const {
    using K = FeatureTerm::Kind;
    while (!stack.empty()) {
      Goal g = std::move(stack.back());
      stack.pop_back();
      switch (g.term.kind()) {
        case K::type: {
          TypeSet d = lattice_.denotation(g.term.name());
          if (!constrain(s, g.path, g.positive ? d : lattice_.complement(d))) return false;
          break;
        }
        case K::feature: {
          Path p = g.path;
          p.push_back(g.term.name());
          stack.push_back(Goal{g.term.child(), std::move(p), g.positive});
          break;
        }
        case K::neg: stack.push_back(Goal{g.term.child(), g.path, !g.positive}); break;
        case K::var:
          if (!bind(s, g.path, g.term.name())) return false;
          break;
        case K::equation:
          if (!s.store_.post(linearize(g.term.lhs()), linearize(g.term.rhs()))) return false;
          break;
        case K::conj:
        case K::disj: {
          const auto& parts = g.term.children();
          bool all = (g.term.kind() == K::conj) == g.positive;
          if (all) {
            for (auto it = parts.rbegin(); it != parts.rend(); ++it) stack.push_back(Goal{*it, g.path, g.positive});
            break;
          }
          for (const auto& alt : parts) {
            Solution branch = s;
            std::vector<Goal> rest = stack;
            rest.push_back(Goal{alt, g.path, g.positive});
            if (run(branch, rest)) {
              s = std::move(branch);
              return true;
            }
          }
          return false;
        }
      }
    }
    return true;
  }

  const TypeLattice& lattice_;
};

}  // namespace phonogest
