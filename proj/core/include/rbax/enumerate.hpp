#pragma once

#include <cstddef>
#include <vector>

#include "rbax/base_algebra.hpp"
#include "rbax/word.hpp"

namespace rbax {

struct WordEnumConfig {
  std::size_t max_letters = 3;  // total generator occurrences per word
  std::size_t max_depth = 2;    // bracket nesting bound
  std::size_t cap = 500000;     // LimitError past this many words
};

// All words over the base with letter count between 1 and max_letters and
// depth at most max_depth, in canonical order, without duplicates. Under the
// tensor base a letter may absorb several generator occurrences; under the
// other bases letters are single generators.
std::vector<Word> enumerate_words(const BaseAlgebra& base, const WordEnumConfig& cfg);

}  // namespace rbax
