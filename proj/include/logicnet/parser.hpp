#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "logicnet/formula.hpp"

namespace logicnet {

// Syntax error with the byte offset of the offending token and the set of
// tokens that would have been accepted there.
class ParseError : public std::runtime_error {
public:
    ParseError(std::string message, std::size_t offset,
               std::vector<std::string> expected);

    std::size_t offset() const { return offset_; }
    const std::vector<std::string>& expected() const { return expected_; }

private:
    std::size_t offset_;
    std::vector<std::string> expected_;
};

// Concrete syntax:
//   variables  [A-Za-z_][A-Za-z0-9_]*
//   !  &  |  ->  <>        (ASCII operators)
//   ¬  ∧  ∨  →  ◊          (accepted aliases)
//   parentheses; whitespace insignificant
// Precedence, tightest first: ! and <> (prefix), &, |, ->.
// -> associates to the right, & and | to the left.
// Empty input is a syntax error.
Formula parse(std::string_view text);

}  // namespace logicnet
