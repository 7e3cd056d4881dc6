#pragma once

#include <string>

#include "prlab/preradical.hpp"

namespace prlab {

/// Evaluates a preradical expression over `u`.
///
///   expr    := meet ('|' meet)*
///   meet    := product ('&' product)*
///   product := primary (('*' | ':') primary)*
///   primary := 'zero' | 'one' | 'soc' | 'jac' | 'sing'
///            | ('alpha' | 'omega') '(' MODULE ',' SUB ')'
///            | 'filter' '(' [INT (',' INT)*] ')'
///            | ('hat' | 'sq' | 'circ' | 'bar' | 'tilde') '(' expr ')'
///            | '(' expr ')'
///
/// Binary operators are left associative. MODULE is a rep label. SUB names a
/// submodule of MODULE: a rep label (the unique fully invariant submodule of
/// that isomorphism type) or `#k` (the k-th entry of the submodule list).
/// Filter indices refer to the ring's left ideals in canonical order.
/// Whitespace is ignored. Syntax errors and unknown names throw ParseError.
Preradical eval_expr(const UniversePtr& u, const std::string& text);

/// Resolves SUB syntax against rep `m`; throws InvalidParameter.
const Submodule& resolve_submodule(const Universe& u, std::size_t m, const std::string& text);

}  // namespace prlab
