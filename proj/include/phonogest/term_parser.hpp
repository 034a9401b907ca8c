#pragma once

#include "phonogest/errors.hpp"
#include "phonogest/expr.hpp"
#include "phonogest/feature_term.hpp"

#include <cctype>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace phonogest {

/// Resolves a bare lowercase identifier to a named constraint body, if it is one.
using MacroResolver = std::function<std::optional<FeatureTerm>(const std::string&)>;

/// Parser for the textual description language:
///
///     term    := conj { ';' conj }
///     conj    := unary { '&' unary }
///     unary   := ('~' | '∼') unary | primary
///     primary := '(' term ')' | 'equal' '(' expr ',' expr ')'
///              | attr ':' unary | Variable | type-or-macro
///     expr    := prod { ('+'|'-') prod }
///     prod    := factor { ('*'|'/') factor }
///     factor  := number | Variable | '-' factor | '(' expr ')'
///              | ('add'|'subtract'|'multiply'|'divide') '(' expr ',' expr ')'
///              | 'phase_point' '(' expr ',' expr ',' expr ')'
///
/// Identifiers starting with an uppercase letter are variables; they are
/// renamed to `prefix + name` so that every instantiation of a named
/// constraint gets its own variables.
class TermParser {
 public:
  TermParser(std::string_view text, MacroResolver macros = {}, std::string var_prefix = {})
      : text_(text), macros_(std::move(macros)), prefix_(std::move(var_prefix)) {}

  FeatureTerm parse() {
    FeatureTerm t = term();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected input");
    return t;
  }

  Expr parse_expr() {
    Expr e = expr();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected input");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw ConfigError("term syntax error at offset " + std::to_string(pos_) + ": " + msg + " in '" +
                      std::string(text_) + "'");
  }

  void skip_ws() {
    while (pos_ < text_.size()) {
      if (std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      else if (text_[pos_] == '%') {
        while (pos_ < text_.size() && text_[pos_] != '\n') ++pos_;
      } else break;
    }
  }

  bool accept(std::string_view tok) {
    skip_ws();
    if (text_.substr(pos_, tok.size()) == tok) {
      pos_ += tok.size();
      return true;
    }
    return false;
  }

  void expect(std::string_view tok) {
    if (!accept(tok)) fail("expected '" + std::string(tok) + "'");
  }

  static bool ident_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '.' || static_cast<unsigned char>(c) >= 0x80;
  }

  bool at_negation() {
    skip_ws();
    return text_.substr(pos_, 1) == "~" || text_.substr(pos_, 3) == "\xE2\x88\xBC";
  }

  std::optional<std::string> ident() {
    skip_ws();
    if (at_negation()) return std::nullopt;
    std::size_t start = pos_;
    while (pos_ < text_.size() && ident_char(text_[pos_])) ++pos_;
    if (start == pos_) return std::nullopt;
    return std::string(text_.substr(start, pos_ - start));
  }

  static bool is_variable(const std::string& s) { return std::isupper(static_cast<unsigned char>(s[0])); }

  FeatureTerm term() {
    std::vector<FeatureTerm> parts{conj()};
    while (accept(";")) parts.push_back(conj());
    return parts.size() == 1 ? parts.front() : FeatureTerm::disj(std::move(parts));
  }

  FeatureTerm conj() {
    std::vector<FeatureTerm> parts{unary()};
    while (accept("&")) parts.push_back(unary());
    return parts.size() == 1 ? parts.front() : FeatureTerm::conj(std::move(parts));
  }

  FeatureTerm unary() {
    if (accept("~") || accept("\xE2\x88\xBC")) return FeatureTerm::neg(unary());
    return primary();
  }

  FeatureTerm primary() {
    if (accept("(")) {
      FeatureTerm t = term();
      expect(")");
      return t;
    }
    auto id = ident();
    if (!id) fail("expected a description");
    if (*id == "equal") {
      expect("(");
      Expr l = expr();
      expect(",");
      Expr r = expr();
      expect(")");
      return FeatureTerm::equal(std::move(l), std::move(r));
    }
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == ':') {
      ++pos_;
      return FeatureTerm::feature(*id, unary());
    }
    if (is_variable(*id)) return FeatureTerm::var(prefix_ + *id);
    if (macros_) {
      if (auto m = macros_(*id)) return *m;
    }
    return FeatureTerm::type(*id);
  }

  Expr expr() {
    Expr e = prod();
    for (;;) {
      if (accept("+")) e = e + prod();
      else if (accept("-")) e = e - prod();
      else return e;
    }
  }

  Expr prod() {
    Expr e = factor();
    for (;;) {
      if (accept("*")) e = e * factor();
      else if (accept("/")) e = e / factor();
      else return e;
    }
  }

  Expr factor() {
    if (accept("(")) {
      Expr e = expr();
      expect(")");
      return e;
    }
    if (accept("-")) return Expr::number(0) - factor();
    skip_ws();
    if (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && (std::isdigit(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '.')) ++pos_;
      return Expr::number(parse_rational(std::string(text_.substr(start, pos_ - start))));
    }
    auto id = ident();
    if (!id) fail("expected an arithmetic expression");
    if (is_variable(*id)) return Expr::var(prefix_ + *id);
    std::vector<Expr> args;
    expect("(");
    args.push_back(expr());
    while (accept(",")) args.push_back(expr());
    expect(")");
    auto arity = [&](std::size_t n) {
      if (args.size() != n) fail("'" + *id + "' takes " + std::to_string(n) + " arguments");
    };
    if (*id == "add") { arity(2); return args[0] + args[1]; }
    if (*id == "subtract") { arity(2); return args[0] - args[1]; }
    if (*id == "multiply") { arity(2); return args[0] * args[1]; }
    if (*id == "divide") { arity(2); return args[0] / args[1]; }
    if (*id == "phase_point") {
      arity(3);
      return args[0] + args[1] * (args[2] / Expr::number(360));
    }
    fail("unknown function '" + *id + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  MacroResolver macros_;
  std::string prefix_;
};

inline FeatureTerm parse_term(std::string_view text, MacroResolver macros = {}, std::string var_prefix = {}) {
  return TermParser(text, std::move(macros), std::move(var_prefix)).parse();
}

inline Expr parse_expr(std::string_view text, std::string var_prefix = {}) {
  return TermParser(text, {}, std::move(var_prefix)).parse_expr();
}

}  // namespace phonogest
