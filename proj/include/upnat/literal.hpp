#pragma once

#include <string>
#include <string_view>

#include "upnat/func.hpp"
#include "upnat/lattice.hpp"
#include "upnat/upset.hpp"

namespace upnat {

/**
 * Set literals:
 *
 *     expr    := term ('|' term)*            union
 *     term    := postfix ('&' postfix)*      intersection
 *     postfix := primary ('-' NUM)*          decrement
 *     primary := '(' expr ')' | atom
 *     atom    := base ['+' [NUM] 'N'] | [NUM] 'N'
 *     base    := NUM | '{' [NUM (',' NUM)*] '}'
 *
 * `{5,6}+4N` is {5,6,9,10,...}, `6+N` is {6,7,...}, `N` is every natural and
 * `{}` is empty. A bare NUM must be followed by a period. Whitespace is
 * ignored. Throws SyntaxError.
 */
UPSet parse_set(std::string_view text);

/// Canonical literal: `{}`, `N`, `{a,...}` for finite sets, otherwise an
/// optional finite part `{...}|` followed by `g+rN` or `{g1,...}+rN` with
/// each generator as small as possible. parse_set(format_set(s)) == s.
std::string format_set(const UPSet& s);

/// `x^2+3x+1`, `-2x+5`, `scale:3`, `pow:2`, `table:[0,1,4,6]`.
/// Throws SyntaxError, or std::domain_error for polynomials negative on N.
FuncSpec parse_func(std::string_view text);

/// `(L-2 & L-3) | (L-0 & L-1)`; parentheses may also wrap single shifts.
LatticeExpr parse_expr(std::string_view text);

}  // namespace upnat
