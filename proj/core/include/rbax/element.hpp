#pragma once

#include <string>

#include "rbax/formal_sum.hpp"
#include "rbax/word.hpp"

namespace rbax {

// Linear combination of bracketed words.
using Element = FormalSum<Word, WordLess>;

std::string render_element(const Element& e, const Alphabet& alphabet);

}  // namespace rbax
