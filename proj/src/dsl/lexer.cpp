#include "lexer.hpp"

#include <cctype>

namespace ktypes::dsl::detail {

std::string describe(Tok t) {
  switch (t) {
    case Tok::Ident: return "identifier";
    case Tok::Number: return "number";
    case Tok::LParen: return "'('";
    case Tok::RParen: return "')'";
    case Tok::Comma: return "','";
    case Tok::Dot: return "'.'";
    case Tok::Colon: return "':'";
    case Tok::Semicolon: return "';'";
    case Tok::Slash: return "'/'";
    case Tok::Amp: return "'&'";
    case Tok::Bar: return "'|'";
    case Tok::Bang: return "'!'";
    case Tok::Arrow: return "'->'";
    case Tok::Eq: return "'='";
    case Tok::Neq: return "'!='";
    case Tok::End: return "end of input";
  }
  return "?";
}

std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> out;
  SourcePos pos;
  std::size_t i = 0;
  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n; ++k, ++i) {
      if (text[i] == '\n') {
        ++pos.line;
        pos.column = 1;
      } else {
        ++pos.column;
      }
    }
  };
  while (i < text.size()) {
    const char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
      continue;
    }
    if (c == '#') {
      while (i < text.size() && text[i] != '\n') advance(1);
      continue;
    }
    const SourcePos start = pos;
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i;
      while (j < text.size() && (std::isalnum(static_cast<unsigned char>(text[j])) || text[j] == '_')) ++j;
      out.push_back({Tok::Ident, std::string(text.substr(i, j - i)), start});
      advance(j - i);
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
      out.push_back({Tok::Number, std::string(text.substr(i, j - i)), start});
      advance(j - i);
      continue;
    }
    auto two = text.substr(i, 2);
    if (two == "->") {
      out.push_back({Tok::Arrow, "->", start});
      advance(2);
      continue;
    }
    if (two == "!=") {
      out.push_back({Tok::Neq, "!=", start});
      advance(2);
      continue;
    }
    Tok kind;
    switch (c) {
      case '(': kind = Tok::LParen; break;
      case ')': kind = Tok::RParen; break;
      case ',': kind = Tok::Comma; break;
      case '.': kind = Tok::Dot; break;
      case ':': kind = Tok::Colon; break;
      case ';': kind = Tok::Semicolon; break;
      case '/': kind = Tok::Slash; break;
      case '&': kind = Tok::Amp; break;
      case '|': kind = Tok::Bar; break;
      case '!': kind = Tok::Bang; break;
      case '=': kind = Tok::Eq; break;
      default:
        throw ParseError(Errc::SyntaxError, start, std::string("unexpected character '") + c + "'");
    }
    out.push_back({kind, std::string(1, c), start});
    advance(1);
  }
  out.push_back({Tok::End, "", pos});
  return out;
}

}  // namespace ktypes::dsl::detail
