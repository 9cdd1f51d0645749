#pragma once

#include <cstddef>
#include <set>
#include <string>
#include <vector>

#include "omega/errors.hpp"

namespace omega::cli {

enum class TokenKind { Integer, Identifier, Punct, End };

struct Token {
  TokenKind kind;
  std::string text;
  std::size_t offset;  // byte offset in the input line
};

// Raised by the lexer and the parser. Offsets are byte offsets into the input.
class ParseError : public OmegaError {
 public:
  ParseError(std::size_t offset, std::set<std::string> expected, const std::string& found);

  std::size_t offset() const noexcept { return offset_; }
  const std::set<std::string>& expected() const noexcept { return expected_; }

 private:
  std::size_t offset_;
  std::set<std::string> expected_;
};

// Splits a line into integers, identifiers and single-character punctuation.
std::vector<Token> tokenize(const std::string& text);

// "'+'", "number", ... as used in expected-token sets.
std::string describe(const Token& token);

}  // namespace omega::cli
