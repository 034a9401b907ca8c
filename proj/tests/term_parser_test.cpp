#include "phonogest/term_parser.hpp"

#include "phonogest/affine_store.hpp"

#include <gtest/gtest.h>

using phonogest::ConfigError;
using phonogest::FeatureTerm;
using phonogest::parse_expr;
using phonogest::parse_term;
using phonogest::Rational;

TEST(TermParser, PrecedenceAndAttributes) {
  auto t = parse_term("a:b & c ; ~d:e");
  ASSERT_EQ(t.kind(), FeatureTerm::Kind::disj);
  EXPECT_EQ(t.str(), "a:b & c ; ~d:e");
  EXPECT_EQ(t.children()[1].kind(), FeatureTerm::Kind::neg);
  EXPECT_EQ(parse_term("seg:secondary:voiceless").str(), "seg:secondary:voiceless");
}

TEST(TermParser, UnicodeNegationAndComments) {
  auto t = parse_term("seg: \xE2\x88\xBC obstruent % trailing comment\n ; seg:obstruent");
  EXPECT_EQ(t.str(), "seg:~obstruent ; seg:obstruent");
}

TEST(TermParser, VariablesArePrefixed) {
  auto t = parse_term("time:start:Start & equal(Start, 3)", {}, "b1.");
  EXPECT_EQ(t.str(), "time:start:b1.Start & equal(b1.Start, 3)");
}

TEST(TermParser, MacrosExpand) {
  auto resolver = [](const std::string& name) -> std::optional<FeatureTerm> {
    if (name == "voiceless_coda") return parse_term("coda & seg:secondary:voiceless");
    return std::nullopt;
  };
  EXPECT_EQ(parse_term("obstruent & voiceless_coda", resolver).str(),
            "obstruent & (coda & seg:secondary:voiceless)");
}

TEST(TermParser, PhasePointArithmetic) {
  phonogest::AffineStore s;
  ASSERT_TRUE(s.post(parse_expr("phase_point(S, 200, 270)"), parse_expr("E")));
  ASSERT_TRUE(s.post(parse_expr("S"), parse_expr("100")));
  EXPECT_EQ(s.value_of("E"), Rational(250));
  ASSERT_TRUE(s.post(parse_expr("add(multiply(2, F), divide(1, 4))"), parse_expr("-0.75")));
  EXPECT_EQ(s.value_of("F"), Rational(-1, 2));
}

TEST(TermParser, SyntaxErrors) {
  EXPECT_THROW(parse_term("a &"), ConfigError);
  EXPECT_THROW(parse_term("(a ; b"), ConfigError);
  EXPECT_THROW(parse_term("equal(X, foo(1))"), ConfigError);
  EXPECT_THROW(parse_term("a b"), ConfigError);
}
