#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "tw/syntax.hpp"

namespace tw {

struct ParseError : std::runtime_error {
  enum class Kind { Lex, Syntax, Unbound };
  ParseError(Kind kind, Span where, const std::string& message)
      : std::runtime_error(message), kind(kind), where(where) {}
  Kind kind;
  Span where;
};

/// Parse a whole .t file: a list of `let name = term;` definitions followed by
/// an optional main term. References to earlier definitions are expanded, so
/// every returned term is closed. Surface names become binder-relative indices.
SourceFile parse(std::string_view text);

/// Parse a single term with no definitions in scope.
Term parse_term_text(std::string_view text);

Type parse_type_text(std::string_view text);

}  // namespace tw
