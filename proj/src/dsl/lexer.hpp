#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "ktypes/error.hpp"

namespace ktypes::dsl::detail {

enum class Tok {
  Ident,
  Number,
  LParen,
  RParen,
  Comma,
  Dot,
  Colon,
  Semicolon,
  Slash,
  Amp,
  Bar,
  Bang,
  Arrow,
  Eq,
  Neq,
  End,
};

struct Token {
  Tok kind;
  std::string text;
  SourcePos pos;
};

std::string describe(Tok t);

/// Splits the whole input up front. Throws ParseError on stray characters.
std::vector<Token> tokenize(std::string_view text);

}  // namespace ktypes::dsl::detail
