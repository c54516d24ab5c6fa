#pragma once

#include <string_view>

#include "bethck/upset.hpp"

namespace bethck {

/// Parses a set expression:
///
///   expr    := diff ('|' diff)*
///   diff    := inter ('\' inter)*
///   inter   := unary ('&' unary)*
///   unary   := '~' unary | primary
///   primary := 'res(' r 'mod' m ')' | 'fin{' [n (',' n)*] '}'
///            | 'up(threshold=' t ', period=' p ', prefix=' bits ', block=' bits ')'
///            | 'all' | 'none' | 'N0'
///            | ('cl' | 'clminus' | 'companion') '(' expr ')' | '(' expr ')'
///
/// Throws ParseError with the byte offset of the problem.
UPSet parse_upset_expr(std::string_view text);

}  // namespace bethck
