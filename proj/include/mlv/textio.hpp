#pragma once

#include <optional>
#include <string>

#include "mlv/poly.hpp"

namespace mlv {

/// Parse failure with the offending position (for caret diagnostics).
struct ParseError : Error {
    ParseError(const std::string& msg, std::size_t pos) : Error(msg), position(pos) {}
    std::size_t position;
};

/// Grammar (whitespace insignificant except inside numbers):
///   poly   := ['-'] term (('+'|'-') term)*
///   term   := rational ['*' word] | word
///   word   := "1" | atom+
///   atom   := 'x' | 'x' digits | 'y' digits | 'z' '(' int ',' int ')'
///           | 'Y' '(' int ',' int ')'
/// 'x' without digits and 'y'/'z' atoms are Mlv letters; 'x' with digits and
/// 'Y' atoms are LevelN letters. Twists are reduced into range at build time.
NCPoly parse_poly(const std::string& text, Alphabet family, int level);
Word parse_word(const std::string& text, Alphabet family, int level);

/// Scan an expression and report what can be inferred without a --level flag:
/// the alphabet family, the smallest admissible level, and whether the level
/// is forced (all twists zero => level 1 suffices and is canonical).
struct ExprProbe {
    Alphabet family = Alphabet::Mlv;
    int min_level = 1;
    bool unambiguous = false; // true iff every twist index is 0 and family is Mlv
};
ExprProbe probe_expression(const std::string& text);

} // namespace mlv
