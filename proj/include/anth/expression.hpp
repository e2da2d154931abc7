#ifndef ANTH_EXPRESSION_HPP
#define ANTH_EXPRESSION_HPP

#include <stdexcept>
#include <string>

#include "anth/surd_sum.hpp"

namespace anth {

class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Evaluates integers, rationals, sqrt(k) for rational k > 0, + - * / and
/// parentheses, e.g. "(1+sqrt(5))/2". Throws ParseError.
SurdSum parse_expression(const std::string& text);

}  // namespace anth

#endif  // ANTH_EXPRESSION_HPP
