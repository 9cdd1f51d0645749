#include "omega/cli/lexer.hpp"

#include <cctype>

namespace omega::cli {

namespace {

std::string expected_list(const std::set<std::string>& expected) {
  std::string out;
  for (const auto& e : expected) {
    if (!out.empty()) out += ", ";
    out += e;
  }
  return out;
}

const std::string kPunct = "+-*/^()[]{},;=@";

}  // namespace

ParseError::ParseError(std::size_t offset, std::set<std::string> expected, const std::string& found)
    : OmegaError("ParseError",
                 "at offset " + std::to_string(offset) + ": expected " + expected_list(expected) + ", found " + found,
                 ErrorClass::Parse),
      offset_(offset),
      expected_(std::move(expected)) {}

std::vector<Token> tokenize(const std::string& text) {
  std::vector<Token> tokens;
  std::size_t i = 0;
  while (i < text.size()) {
    const unsigned char c = static_cast<unsigned char>(text[i]);
    if (std::isspace(c)) {
      ++i;
    } else if (std::isdigit(c)) {
      std::size_t j = i;
      while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
      tokens.push_back({TokenKind::Integer, text.substr(i, j - i), i});
      i = j;
    } else if (std::isalpha(c) || c == '_') {
      std::size_t j = i;
      while (j < text.size() && (std::isalnum(static_cast<unsigned char>(text[j])) || text[j] == '_')) ++j;
      tokens.push_back({TokenKind::Identifier, text.substr(i, j - i), i});
      i = j;
    } else if (kPunct.find(static_cast<char>(c)) != std::string::npos) {
      tokens.push_back({TokenKind::Punct, std::string(1, static_cast<char>(c)), i});
      ++i;
    } else {
      throw ParseError(i, {"'('", "function", "number", "operator", "symbol"},
                       "character '" + std::string(1, static_cast<char>(c)) + "'");
    }
  }
  tokens.push_back({TokenKind::End, "", text.size()});
  return tokens;
}

std::string describe(const Token& token) {
  switch (token.kind) {
    case TokenKind::Integer:
      return "number " + token.text;
    case TokenKind::Identifier:
      return "identifier '" + token.text + "'";
    case TokenKind::Punct:
      return "'" + token.text + "'";
    case TokenKind::End:
      break;
  }
  return "end of input";
}

}  // namespace omega::cli
