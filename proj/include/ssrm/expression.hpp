#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ssrm/error.hpp"

namespace ssrm {

class ParseError : public Error {
 public:
  ParseError(std::size_t position, const std::string& what)
      : Error("expression error at offset " + std::to_string(position) + ": " + what),
        position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// Arithmetic expression over named variables.
///
/// Grammar: binary + - * / ^ (right-associative, binding tighter than unary
/// minus), parentheses, unary functions sin cos sqrt abs log exp, numeric
/// literals, variables, named constants and the built-in `pi`. Variables are
/// bound to positions of the argument vector at parse time.
class Expression {
 public:
  static Expression parse(std::string_view text, const std::vector<std::string>& variables,
                          const std::map<std::string, double>& constants = {});

  /// Throws DomainError for sqrt/log outside their domain and division by zero.
  double evaluate(std::span<const double> x) const;

  const std::string& text() const { return text_; }
  std::size_t arity() const { return arity_; }

  struct Node;

 private:
  std::string text_;
  std::size_t arity_ = 0;
  std::shared_ptr<const Node> root_;
};

}  // namespace ssrm
