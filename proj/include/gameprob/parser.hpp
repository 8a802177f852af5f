#pragma once

#include "gameprob/ast.hpp"

#include <string>
#include <string_view>

namespace gameprob {

/// Parses one judgment `<decls> |- <term> : <type>`. `//` starts a comment.
/// Throws ParseError (with line/column) on malformed input or a duplicate
/// declaration.
Judgment parse(std::string_view source);

/// Parses a bare term with no context, e.g. "skip ; skip".
TermPtr parse_term(std::string_view source);

/// Renders a term in the concrete syntax; parse_term(print(t)) has the
/// same shape as t.
std::string print(const Term& term);
std::string print(const Judgment& judgment);

}  // namespace gameprob
