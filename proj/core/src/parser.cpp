#include "stit/parser.hpp"

#include <algorithm>
#include <cctype>
#include <optional>

namespace stit {

namespace {

std::string kind_message(ParseError::Kind kind, std::size_t pos, const std::string& detail) {
  switch (kind) {
    case ParseError::Kind::Syntax:
      return "syntax error at " + std::to_string(pos) + ": expected " + detail;
    case ParseError::Kind::UnknownAgent:
      return "unknown agent '" + detail + "' at " + std::to_string(pos);
    case ParseError::Kind::ReservedName:
      return "reserved word '" + detail + "' used as a variable at " + std::to_string(pos);
  }
  return detail;
}

enum class Tok { Ident, Tilde, Amp, Bar, Arrow, DArrow, LParen, RParen, LBrack, RBrack, End };

struct Token {
  Tok kind;
  std::string text;
  std::size_t pos;
};

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  Token next() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    const std::size_t start = pos_;
    if (pos_ >= text_.size()) return {Tok::End, {}, start};
    const char c = text_[pos_];
    if (ident_start(c)) {
      while (pos_ < text_.size() && ident_char(text_[pos_])) ++pos_;
      return {Tok::Ident, std::string(text_.substr(start, pos_ - start)), start};
    }
    auto single = [&](Tok k) {
      ++pos_;
      return Token{k, std::string(1, c), start};
    };
    switch (c) {
      case '~':
        return single(Tok::Tilde);
      case '&':
        return single(Tok::Amp);
      case '|':
        return single(Tok::Bar);
      case '(':
        return single(Tok::LParen);
      case ')':
        return single(Tok::RParen);
      case '[':
        return single(Tok::LBrack);
      case ']':
        return single(Tok::RBrack);
      default:
        break;
    }
    if (text_.substr(pos_, 2) == "->") {
      pos_ += 2;
      return {Tok::Arrow, "->", start};
    }
    if (text_.substr(pos_, 3) == "<->") {
      pos_ += 3;
      return {Tok::DArrow, "<->", start};
    }
    throw ParseError(ParseError::Kind::Syntax, start, "a token");
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

class Parser {
 public:
  Parser(std::string_view text, std::span<const std::string> agents)
      : lexer_(text), agents_(agents) {
    advance();
  }

  Formula parse() {
    Formula f = parse_iff();
    if (cur_.kind != Tok::End) fail("end of input");
    return f;
  }

 private:
  [[noreturn]] void fail(const std::string& expected) const {
    throw ParseError(ParseError::Kind::Syntax, cur_.pos, expected);
  }

  void advance() { cur_ = lexer_.next(); }

  void expect(Tok kind, const char* what) {
    if (cur_.kind != kind) fail(what);
    advance();
  }

  Formula parse_iff() {
    Formula f = parse_imp();
    while (cur_.kind == Tok::DArrow) {
      advance();
      f = Formula::iff(std::move(f), parse_imp());
    }
    return f;
  }

  Formula parse_imp() {
    Formula f = parse_or();
    if (cur_.kind == Tok::Arrow) {
      advance();
      return Formula::imp(std::move(f), parse_imp());
    }
    return f;
  }

  Formula parse_or() {
    Formula f = parse_and();
    while (cur_.kind == Tok::Bar) {
      advance();
      f = Formula::disj(std::move(f), parse_and());
    }
    return f;
  }

  Formula parse_and() {
    Formula f = parse_unary();
    while (cur_.kind == Tok::Amp) {
      advance();
      f = Formula::conj(std::move(f), parse_unary());
    }
    return f;
  }

  Formula parse_unary() {
    if (cur_.kind == Tok::Tilde) {
      advance();
      return Formula::neg(parse_unary());
    }
    if (cur_.kind == Tok::Ident && (cur_.text == "S" || cur_.text == "P")) {
      const bool settled = cur_.text == "S";
      advance();
      Formula arg = parse_unary();
      return settled ? Formula::settled(std::move(arg)) : Formula::possible(std::move(arg));
    }
    if (cur_.kind == Tok::LBrack) {
      advance();
      if (cur_.kind != Tok::Ident || (cur_.text != "c" && cur_.text != "d" && cur_.text != "i")) {
        fail("one of c, d, i");
      }
      const char which = cur_.text[0];
      advance();
      if (cur_.kind != Tok::Ident) fail("an agent name");
      std::string agent = cur_.text;
      if (std::find(agents_.begin(), agents_.end(), agent) == agents_.end()) {
        throw ParseError(ParseError::Kind::UnknownAgent, cur_.pos, agent);
      }
      advance();
      expect(Tok::RBrack, "']'");
      Formula arg = parse_unary();
      switch (which) {
        case 'c':
          return Formula::cstit(std::move(agent), std::move(arg));
        case 'd':
          return Formula::dstit(std::move(agent), std::move(arg));
        default:
          return Formula::imagine(std::move(agent), std::move(arg));
      }
    }
    return parse_atom();
  }

  Formula parse_atom() {
    if (cur_.kind == Tok::LParen) {
      advance();
      Formula f = parse_iff();
      expect(Tok::RParen, "')'");
      return f;
    }
    if (cur_.kind == Tok::Ident) {
      if (is_reserved_word(cur_.text)) {
        throw ParseError(ParseError::Kind::ReservedName, cur_.pos, cur_.text);
      }
      Formula f = Formula::var(cur_.text);
      advance();
      return f;
    }
    fail("a variable, '(' or a unary operator");
  }

  Lexer lexer_;
  std::span<const std::string> agents_;
  Token cur_{Tok::End, {}, 0};
};

}  // namespace

ParseError::ParseError(Kind kind, std::size_t position, std::string detail)
    : Error(kind_message(kind, position, detail)),
      kind_(kind),
      position_(position),
      detail_(std::move(detail)) {}

Formula parse_formula(std::string_view text, std::span<const std::string> agents) {
  return Parser(text, agents).parse();
}

std::vector<std::string> scan_agents(std::string_view text) {
  std::vector<std::string> out;
  Lexer lexer(text);
  std::optional<Token> prev2, prev1;
  try {
    for (Token t = lexer.next(); t.kind != Tok::End; t = lexer.next()) {
      if (t.kind == Tok::Ident && prev1 && prev2 && prev2->kind == Tok::LBrack &&
          prev1->kind == Tok::Ident && (prev1->text == "c" || prev1->text == "d" || prev1->text == "i") &&
          std::find(out.begin(), out.end(), t.text) == out.end()) {
        out.push_back(t.text);
      }
      prev2 = std::move(prev1);
      prev1 = std::move(t);
    }
  } catch (const ParseError&) {
    // Lexical garbage is reported by the real parse.
  }
  return out;
}

bool is_identifier(std::string_view s) {
  if (s.empty() || !ident_start(s.front())) return false;
  return std::all_of(s.begin(), s.end(), ident_char);
}

bool is_reserved_word(std::string_view s) {
  return s == "S" || s == "P" || s == "c" || s == "d" || s == "i";
}

}  // namespace stit
