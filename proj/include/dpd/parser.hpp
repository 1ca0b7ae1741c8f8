#pragma once

#include <string>

#include "dpd/mobius.hpp"
#include "dpd/pair.hpp"

namespace dpd {

// A parsed and validated pair document together with its source text.
struct PairDocument {
    std::string source;
    DpdPair pair;
};

// Parses a pair document: three keys `curve:`, `D:`, `h:` (one per line, any
// order, each exactly once); `#` starts a comment.  Grammar in docs/grammar.md.
// Syntax problems raise ParseError(SyntaxError) with 1-based line/column;
// divisor support outside the curve raises ParseError(SemanticError); the
// validity checks of pair construction surface unchanged.
PairDocument parse_pair_document(const std::string& text);

// Value parsers for CLI flags and document fragments.  Each consumes the
// whole string (trailing input is a syntax error).
RationalFunction parse_function(const std::string& text);
QDivisor parse_divisor(const std::string& text);
RealCurve parse_curve(const std::string& text);
CurvePoint parse_point(const std::string& text);
Rational parse_rational(const std::string& text);

// Reads an expression that must be a fractional-linear map with real
// coefficients; InvalidMobius otherwise.
Mobius parse_mobius(const std::string& text);

} // namespace dpd
