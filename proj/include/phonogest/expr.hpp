#pragma once

#include "phonogest/errors.hpp"
#include "phonogest/rational.hpp"

#include <map>
#include <memory>
#include <ostream>
#include <sstream>
#include <string>

namespace phonogest {

/// Sum of coefficient*variable terms plus a constant. Zero coefficients are
/// never stored.
struct AffineExpr {
  std::map<std::string, Rational> coeffs;
  Rational constant = 0;

  static AffineExpr variable(const std::string& name) {
    AffineExpr e;
    e.coeffs[name] = 1;
    return e;
  }
  static AffineExpr number(const Rational& q) {
    AffineExpr e;
    e.constant = q;
    return e;
  }

  bool is_constant() const { return coeffs.empty(); }

  AffineExpr& operator+=(const AffineExpr& o) {
    for (const auto& [v, c] : o.coeffs) {
      Rational& slot = coeffs[v];
      slot += c;
      if (slot == 0) coeffs.erase(v);
    }
    constant += o.constant;
    return *this;
  }
  AffineExpr& operator*=(const Rational& k) {
    if (k == 0) {
      coeffs.clear();
      constant = 0;
      return *this;
    }
    for (auto& [v, c] : coeffs) c *= k;
    constant *= k;
    return *this;
  }
  friend AffineExpr operator+(AffineExpr a, const AffineExpr& b) { return a += b; }
  friend AffineExpr operator-(AffineExpr a, AffineExpr b) {
    b *= Rational(-1);
    return a += b;
  }
  friend AffineExpr operator*(AffineExpr a, const Rational& k) { return a *= k; }
  friend bool operator==(const AffineExpr&, const AffineExpr&) = default;
};

inline std::ostream& operator<<(std::ostream& os, const AffineExpr& e) {
  bool first = true;
  for (const auto& [v, c] : e.coeffs) {
    if (!first) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << "-";
    Rational a = c < 0 ? Rational(-c) : c;
    if (a != 1) os << a << "*";
    os << v;
    first = false;
  }
  if (first) return os << e.constant;
  if (e.constant != 0) os << (e.constant < 0 ? " - " : " + ") << (e.constant < 0 ? Rational(-e.constant) : e.constant);
  return os;
}

/// lhs = rhs over ArithVars.
struct AffineEquation {
  AffineExpr lhs;
  AffineExpr rhs;
  std::string label;
};

/// Arithmetic expression tree as written in constraint text: the affine
/// fragment is extracted by `linearize`.
class Expr {
 public:
  enum class Op { constant, variable, add, sub, mul, div };

  static Expr number(const Rational& q) { return Expr(std::make_shared<Node>(Node{Op::constant, q, {}, {}, {}})); }
  static Expr var(const std::string& name) { return Expr(std::make_shared<Node>(Node{Op::variable, 0, name, {}, {}})); }

  friend Expr operator+(const Expr& a, const Expr& b) { return binary(Op::add, a, b); }
  friend Expr operator-(const Expr& a, const Expr& b) { return binary(Op::sub, a, b); }
  friend Expr operator*(const Expr& a, const Expr& b) { return binary(Op::mul, a, b); }
  friend Expr operator/(const Expr& a, const Expr& b) { return binary(Op::div, a, b); }

  Op op() const { return node_->op; }
  const Rational& value() const { return node_->value; }
  const std::string& name() const { return node_->name; }
  const Expr& left() const { return *node_->left; }
  const Expr& right() const { return *node_->right; }

  std::string str() const {
    std::ostringstream os;
    print(os);
    return os.str();
  }

 private:
  struct Node {
    Op op;
    Rational value;
    std::string name;
    std::shared_ptr<const Expr> left;
    std::shared_ptr<const Expr> right;
  };
  explicit Expr(std::shared_ptr<const Node> n) : node_(std::move(n)) {}

  static Expr binary(Op op, const Expr& a, const Expr& b) {
    return Expr(std::make_shared<Node>(
        Node{op, 0, {}, std::make_shared<const Expr>(a), std::make_shared<const Expr>(b)}));
  }

  void print(std::ostream& os) const {
    switch (op()) {
      case Op::constant: os << value(); return;
      case Op::variable: os << name(); return;
      default: break;
    }
    static constexpr const char* kSym[] = {"", "", " + ", " - ", " * ", " / "};
    os << "(";
    left().print(os);
    os << kSym[static_cast<int>(op())];
    right().print(os);
    os << ")";
  }

  std::shared_ptr<const Node> node_;
};

/// Extracts the affine form of `e`. Products of two non-constant factors and
/// division by a non-constant are rejected.
inline AffineExpr linearize(const Expr& e) {
  switch (e.op()) {
    case Expr::Op::constant: return AffineExpr::number(e.value());
    case Expr::Op::variable: return AffineExpr::variable(e.name());
    case Expr::Op::add: return linearize(e.left()) + linearize(e.right());
    case Expr::Op::sub: return linearize(e.left()) - linearize(e.right());
    case Expr::Op::mul: {
      AffineExpr a = linearize(e.left());
      AffineExpr b = linearize(e.right());
      if (a.is_constant()) return b * a.constant;
      if (b.is_constant()) return a * b.constant;
      throw UnsupportedConstruct("non-affine product: " + e.str());
    }
    case Expr::Op::div: {
      AffineExpr a = linearize(e.left());
      AffineExpr b = linearize(e.right());
      if (!b.is_constant()) throw UnsupportedConstruct("division by a variable: " + e.str());
      if (b.constant == 0) throw UnsupportedConstruct("division by zero: " + e.str());
      return a * (Rational(1) / b.constant);
    }
  }
  throw UnsupportedConstruct("unknown expression node");
}

}  // namespace phonogest
