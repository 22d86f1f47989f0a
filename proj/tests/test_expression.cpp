#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <vector>

#include "ssrm/error.hpp"
#include "ssrm/expression.hpp"

namespace ssrm {
namespace {

double eval(std::string_view text, std::vector<double> x = {},
            const std::vector<std::string>& vars = {}, const std::map<std::string, double>& c = {}) {
  return Expression::parse(text, vars, c).evaluate(x);
}

TEST(ExpressionTest, Arithmetic) {
  EXPECT_DOUBLE_EQ(eval("1 + 2 * 3"), 7.0);
  EXPECT_DOUBLE_EQ(eval("(1 + 2) * 3"), 9.0);
  EXPECT_DOUBLE_EQ(eval("8 / 4 / 2"), 1.0);
  EXPECT_DOUBLE_EQ(eval("10 - 4 - 3"), 3.0);
  EXPECT_DOUBLE_EQ(eval("1.5e2 + .5"), 150.5);
}

TEST(ExpressionTest, PowerPrecedence) {
  EXPECT_DOUBLE_EQ(eval("2 ^ 3 ^ 2"), 512.0);
  EXPECT_DOUBLE_EQ(eval("-2 ^ 2"), -4.0);
  EXPECT_DOUBLE_EQ(eval("2 ^ -1"), 0.5);
  EXPECT_DOUBLE_EQ(eval("--3"), 3.0);
}

TEST(ExpressionTest, FunctionsAndConstants) {
  EXPECT_DOUBLE_EQ(eval("sqrt(16) + abs(-2) + exp(0) + log(1)"), 7.0);
  EXPECT_NEAR(eval("sin(pi / 2) + cos(pi)"), 0.0, 1e-15);
  EXPECT_DOUBLE_EQ(eval("k * 2", {}, {}, {{"k", 21.0}}), 42.0);
}

TEST(ExpressionTest, VariablesBindByPosition) {
  const auto e = Expression::parse("1 - x1^3 - x2^3", {"x1", "x2"});
  EXPECT_EQ(e.arity(), 2u);
  EXPECT_DOUBLE_EQ(e.evaluate(std::vector<double>{0.5, 0.5}), 0.75);
  EXPECT_DOUBLE_EQ(e.evaluate(std::vector<double>{1.0, 0.0}), 0.0);
}

TEST(ExpressionTest, ParseErrors) {
  EXPECT_THROW(eval("1 +"), ParseError);
  EXPECT_THROW(eval("(1 + 2"), ParseError);
  EXPECT_THROW(eval("foo(1)"), ParseError);
  EXPECT_THROW(eval("y + 1", {1.0}, {"x"}), ParseError);
  EXPECT_THROW(eval("1 2"), ParseError);
  EXPECT_THROW(eval("1 $ 2"), ParseError);
  try {
    eval("1 + * 2");
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position(), 4u);
  }
}

TEST(ExpressionTest, DomainErrors) {
  EXPECT_THROW(eval("1 / 0"), DomainError);
  EXPECT_THROW(eval("sqrt(-1)"), DomainError);
  EXPECT_THROW(eval("log(0)"), DomainError);
  EXPECT_THROW(eval("(-8) ^ 0.5"), DomainError);
}

TEST(ExpressionTest, ArityChecked) {
  const auto e = Expression::parse("x", {"x"});
  EXPECT_THROW(e.evaluate(std::vector<double>{}), ShapeError);
}

}  // namespace
}  // namespace ssrm
