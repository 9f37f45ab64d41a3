#pragma once

#include <string_view>

#include "rbax/base_algebra.hpp"
#include "rbax/element.hpp"

namespace rbax {

// word   := factor (factor)*
// factor := letter | '[' word ']' | 'R' '(' word ')'
// letter := ident ('.' ident)*
// Letters are validated against the base; alternation against the word
// structure. Throws ParseError with a position, or DomainError for
// structurally broken input.
Word parse_word(std::string_view text, const BaseAlgebra& base);

// element := term (('+'|'-') term)*
// term    := [rational '*'] word
// Also accepts a bare "0" and an optional leading sign.
Element parse_element(std::string_view text, const BaseAlgebra& base);

}  // namespace rbax
