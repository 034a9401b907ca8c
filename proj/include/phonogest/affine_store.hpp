#pragma once

#include "phonogest/errors.hpp"
#include "phonogest/expr.hpp"
#include "phonogest/rational.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace phonogest {

/// An arithmetic variable with a free-form role tag (e.g. "b.primary.start").
struct ArithVar {
  std::string id;
  std::string role;
};

/// Order-free store of affine equalities over exact rationals.
///
/// Kept in fully reduced row echelon form: each pivot variable is expressed in
/// terms of non-pivot (free) variables only, so a variable is entailed exactly
/// when it is a pivot with an empty row. Posting an equation that reduces to
/// `0 = c` with c != 0 leaves the store untouched and reports inconsistency.
class AffineStore {
 public:
  void declare(const std::string& id, const std::string& role = {}) {
    auto [it, inserted] = vars_.try_emplace(id, ArithVar{id, role});
    if (!inserted && it->second.role.empty()) it->second.role = role;
  }

  bool knows(const std::string& id) const { return vars_.count(id) > 0; }
  const std::map<std::string, ArithVar>& variables() const { return vars_; }

  /// Adds lhs = rhs. Returns false (store unchanged) if the result is inconsistent.
  bool post(const AffineExpr& lhs, const AffineExpr& rhs) {
    AffineExpr e = reduce(lhs - rhs);
    if (e.is_constant() && e.constant != 0) return false;
    for (const auto& [v, c] : lhs.coeffs) declare(v);
    for (const auto& [v, c] : rhs.coeffs) declare(v);
    if (e.is_constant()) return true;
    // Lowest-named variable becomes the pivot.
    auto pivot_it = e.coeffs.begin();
    std::string pivot = pivot_it->first;
    Rational scale = Rational(-1) / pivot_it->second;
    e.coeffs.erase(pivot_it);
    e *= scale;  // pivot = e
    for (auto& [p, row] : rows_) {
      auto hit = row.coeffs.find(pivot);
      if (hit == row.coeffs.end()) continue;
      Rational k = hit->second;
      row.coeffs.erase(hit);
      row += e * k;
    }
    rows_.emplace(pivot, std::move(e));
    return true;
  }

  bool post(const AffineEquation& eq) { return post(eq.lhs, eq.rhs); }
  bool post(const Expr& lhs, const Expr& rhs) { return post(linearize(lhs), linearize(rhs)); }

  /// Entailed value, or nullopt when the system leaves the variable free.
  std::optional<Rational> value_of(const std::string& id) const {
    if (!knows(id)) throw LookupError("unknown arithmetic variable '" + id + "'");
    auto it = rows_.find(id);
    if (it == rows_.end() || !it->second.is_constant()) return std::nullopt;
    return it->second.constant;
  }

  /// Every entailed binding, keyed by variable id.
  std::map<std::string, Rational> entailed() const {
    std::map<std::string, Rational> out;
    for (const auto& [p, row] : rows_)
      if (row.is_constant()) out.emplace(p, row.constant);
    return out;
  }

  /// `e` with all pivots substituted, i.e. in terms of free variables only.
  AffineExpr reduce(const AffineExpr& e) const {
    AffineExpr out = AffineExpr::number(e.constant);
    for (const auto& [v, c] : e.coeffs) {
      auto it = rows_.find(v);
      if (it == rows_.end()) out += AffineExpr::variable(v) * c;
      else out += it->second * c;
    }
    return out;
  }

  std::size_t rank() const { return rows_.size(); }

 private:
  std::map<std::string, ArithVar> vars_;
  std::map<std::string, AffineExpr> rows_;
};

}  // namespace phonogest
