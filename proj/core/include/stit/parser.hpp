#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "stit/error.hpp"
#include "stit/formula.hpp"

namespace stit {

/// Failure to read formula text. position() is a 0-based byte offset.
class ParseError : public Error {
 public:
  enum class Kind { Syntax, UnknownAgent, ReservedName };

  ParseError(Kind kind, std::size_t position, std::string expected_or_name);

  Kind kind() const { return kind_; }
  std::size_t position() const { return position_; }
  /// What the parser expected (Syntax) or the offending identifier.
  const std::string& detail() const { return detail_; }

 private:
  Kind kind_;
  std::size_t position_;
  std::string detail_;
};

/// Reads a formula over the declared agents. Sugar (P, [d a]) is kept in the
/// returned tree; call desugar() before evaluating or proof checking.
///
///   formula := iff
///   iff     := imp ("<->" imp)*
///   imp     := or ("->" imp)?
///   or      := and ("|" and)*
///   and     := unary ("&" unary)*
///   unary   := "~" unary | "S" unary | "P" unary
///            | "[" ("c"|"d"|"i") AGENT "]" unary | atom
///   atom    := VAR | "(" formula ")"
Formula parse_formula(std::string_view text, std::span<const std::string> agents);

/// Agent names occurring in bracket modalities of `text`, in order of first
/// appearance. Used when a command has no declared agent set to go on.
std::vector<std::string> scan_agents(std::string_view text);

bool is_identifier(std::string_view s);
/// S, P, c, d and i cannot be variable names.
bool is_reserved_word(std::string_view s);

}  // namespace stit
