// parser.hpp -- recursive-descent parser for ring element expressions.
//
// Grammar (whitespace insensitive):
//   expr    := term (('+' | '-') term)*
//   term    := factor ('*' factor)*
//   factor  := '-' factor | primary ('^' integer)?
//   primary := rational | generator | 'u' '(' expr ',' expr ',' expr ')'
//            | '(' expr ')' | '[' expr ',' expr ']'
//   rational:= integer ('/' integer)?
//   generator := <prefix><index>, e.g. x1, v2
//
// '^' binds tighter than '*', which binds tighter than '+'/'-'. '*' is
// always explicit. [a,b] desugars to a*b - b*a. The u(p,q,r) constructor
// is only valid in the upper-triangular-2 ring; its arguments are rational
// expressions.
#pragma once

#include "symch/ring.hpp"

#include <string_view>

namespace symch {

struct parse_error : error {
    size_t offset;
    parse_error(const std::string& msg, size_t off)
        : error(msg + " (at byte " + std::to_string(off) + ")"), offset(off) {}
};

Element parse_element(std::string_view src, const RingDescriptor& ring);

} // namespace symch
