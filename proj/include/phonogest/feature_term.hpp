#pragma once

#include "phonogest/errors.hpp"
#include "phonogest/expr.hpp"
#include "phonogest/type_lattice.hpp"

#include <memory>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

namespace phonogest {

/// Attribute path from the root of a description, e.g. {"phon", "3", "self"}.
using Path = std::vector<std::string>;

inline std::string path_str(const Path& p) {
  std::string out;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) out += ':';
    out += p[i];
  }
  return out;
}

/// Typed attribute-value description: type constraints, attribute:value
/// pairs, conjunction (&), disjunction (;), negation (~), variables and affine
/// equations. Immutable, cheap to copy.
class FeatureTerm {
 public:
  enum class Kind { type, feature, conj, disj, neg, var, equation };

  static FeatureTerm type(std::string name) { return make(Kind::type, std::move(name)); }
  static FeatureTerm feature(std::string attr, FeatureTerm value) {
    auto t = make(Kind::feature, std::move(attr));
    t.node_->children.push_back(std::move(value));
    return t;
  }
  static FeatureTerm at(const Path& path, FeatureTerm value) {
    for (auto it = path.rbegin(); it != path.rend(); ++it) value = feature(*it, std::move(value));
    return value;
  }
  static FeatureTerm conj(std::vector<FeatureTerm> parts) { return make(Kind::conj, {}, std::move(parts)); }
  static FeatureTerm disj(std::vector<FeatureTerm> parts) { return make(Kind::disj, {}, std::move(parts)); }
  static FeatureTerm neg(FeatureTerm t) { return make(Kind::neg, {}, {std::move(t)}); }
  static FeatureTerm var(std::string name) { return make(Kind::var, std::move(name)); }
  static FeatureTerm equal(Expr lhs, Expr rhs) {
    auto t = make(Kind::equation);
    t.node_->lhs = std::move(lhs);
    t.node_->rhs = std::move(rhs);
    return t;
  }
  /// The empty conjunction, satisfied by everything.
  static FeatureTerm truth() { return conj({}); }

  Kind kind() const { return node_->kind; }
  /// Type name, attribute name or variable name depending on kind.
  const std::string& name() const { return node_->name; }
  const std::vector<FeatureTerm>& children() const { return node_->children; }
  const FeatureTerm& child() const { return node_->children.front(); }
  const Expr& lhs() const { return *node_->lhs; }
  const Expr& rhs() const { return *node_->rhs; }

  std::string str() const {
    std::ostringstream os;
    print(os, 0);
    return os.str();
  }

 private:
  struct Node {
    Kind kind;
    std::string name;
    std::vector<FeatureTerm> children;
    std::optional<Expr> lhs;
    std::optional<Expr> rhs;
  };

  static FeatureTerm make(Kind k, std::string name = {}, std::vector<FeatureTerm> children = {}) {
    FeatureTerm t;
    t.node_ = std::make_shared<Node>();
    t.node_->kind = k;
    t.node_->name = std::move(name);
    t.node_->children = std::move(children);
    return t;
  }

  // Precedence: 0 = disjunction, 1 = conjunction, 2 = unary.
  void print(std::ostream& os, int ctx) const {
    switch (kind()) {
      case Kind::type: os << name(); return;
      case Kind::var: os << name(); return;
      case Kind::feature: os << name() << ':'; child().print(os, 2); return;
      case Kind::neg: os << '~'; child().print(os, 2); return;
      case Kind::equation: os << "equal(" << lhs().str() << ", " << rhs().str() << ")"; return;
      case Kind::conj:
      case Kind::disj: {
        bool is_conj = kind() == Kind::conj;
        if (children().empty()) { os << (is_conj ? "top" : "bottom"); return; }
        if (children().size() == 1) { child().print(os, ctx); return; }
        int mine = is_conj ? 1 : 0;
        if (ctx > mine) os << '(';
        for (std::size_t i = 0; i < children().size(); ++i) {
          if (i) os << (is_conj ? " & " : " ; ");
          children()[i].print(os, mine + 1);
        }
        if (ctx > mine) os << ')';
        return;
      }
    }
  }

  std::shared_ptr<Node> node_;
};

inline std::ostream& operator<<(std::ostream& os, const FeatureTerm& t) { return os << t.str(); }

/// One conjunct of a disjunctive normal form.
struct Literal {
  enum class Kind { type, var, equation };
  Kind kind;
  Path path;           // type, var
  TypeSet types;       // type: already complemented when negated
  std::string var;     // var
  AffineExpr lhs, rhs; // equation
};

using Conjunction = std::vector<Literal>;
/// Disjuncts in depth-first textual order.
using Dnf = std::vector<Conjunction>;

namespace detail {

inline Dnf cross(const Dnf& a, const Dnf& b) {
  Dnf out;
  out.reserve(a.size() * b.size());
  for (const auto& x : a)
    for (const auto& y : b) {
      Conjunction c = x;
      c.insert(c.end(), y.begin(), y.end());
      out.push_back(std::move(c));
    }
  return out;
}

inline Dnf normalize(const FeatureTerm& t, const TypeLattice& lat, Path& path, bool positive) {
  using K = FeatureTerm::Kind;
  switch (t.kind()) {
    case K::type: {
      TypeSet d = lat.denotation(t.name());
      Literal l{Literal::Kind::type, path, positive ? d : lat.complement(d), {}, {}, {}};
      return {{std::move(l)}};
    }
    case K::feature: {
      path.push_back(t.name());
      Dnf out = normalize(t.child(), lat, path, positive);
      path.pop_back();
      return out;
    }
    case K::neg: return normalize(t.child(), lat, path, !positive);
    case K::conj:
    case K::disj: {
      bool product = (t.kind() == K::conj) == positive;
      Dnf acc = product ? Dnf{Conjunction{}} : Dnf{};
      for (const auto& c : t.children()) {
        Dnf part = normalize(c, lat, path, positive);
        if (product) acc = cross(acc, part);
        else acc.insert(acc.end(), part.begin(), part.end());
      }
      return acc;
    }
    case K::var: {
      if (!positive) throw UnsupportedConstruct("negation of variable " + t.name());
      Literal l{Literal::Kind::var, path, {}, t.name(), {}, {}};
      return {{std::move(l)}};
    }
    case K::equation: {
      if (!positive) throw UnsupportedConstruct("negation of arithmetic constraint " + t.str());
      Literal l{Literal::Kind::equation, {}, {}, {}, linearize(t.lhs()), linearize(t.rhs())};
      return {{std::move(l)}};
    }
  }
  throw UnsupportedConstruct("unknown term kind");
}

}  // namespace detail

/// Disjunctive normal form of `t`. Negation is pushed to type constraints and
/// resolved to the finite complement over the lattice atoms; `~(a:X)` is read
/// as `a:~X`. Negated variables or equations are rejected.
inline Dnf normalize(const FeatureTerm& t, const TypeLattice& lattice) {
  Path p;
  return detail::normalize(t, lattice, p, true);
}

}  // namespace phonogest
