#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "rbax/alphabet.hpp"

namespace rbax {

class Word;
using WordPtr = std::shared_ptr<const Word>;

// One factor of a word's standard decomposition: a letter or a bracketed
// subword.
class Factor {
 public:
  explicit Factor(Letter l) : repr_(std::move(l)) {}
  explicit Factor(Word w);
  explicit Factor(WordPtr w);

  bool is_letter() const { return repr_.index() == 0; }
  bool is_bracket() const { return repr_.index() == 1; }
  const Letter& letter() const { return std::get<0>(repr_); }
  const Word& bracket() const { return *std::get<1>(repr_); }
  const WordPtr& bracket_ptr() const { return std::get<1>(repr_); }

 private:
  std::variant<Letter, WordPtr> repr_;
};

// Bracketed word: a nonempty factor sequence in which letters and brackets
// strictly alternate. Immutable; depth and letter count are cached.
class Word {
 public:
  // Throws DomainError when empty or when two adjacent factors share a kind.
  explicit Word(std::vector<Factor> factors);

  static Word letter(Letter l) { return Word({Factor(std::move(l))}); }
  static Word bracket(Word w) { return Word({Factor(std::move(w))}); }
  static Word bracket(WordPtr w) { return Word({Factor(std::move(w))}); }

  const std::vector<Factor>& factors() const { return factors_; }

  std::size_t breadth() const { return factors_.size(); }
  // 0 when the word starts (ends) with a letter, 1 for a bracket.
  int head() const { return factors_.front().is_bracket() ? 1 : 0; }
  int tail() const { return factors_.back().is_bracket() ? 1 : 0; }
  std::uint32_t depth() const { return depth_; }
  // Total generator occurrences, counting every part of every letter at
  // every nesting level. This is the grading used by enumeration bounds.
  std::uint32_t letter_count() const { return letter_count_; }

  friend bool operator==(const Word& a, const Word& b);

 private:
  std::vector<Factor> factors_;
  std::uint32_t depth_ = 0;
  std::uint32_t letter_count_ = 0;
};

inline Factor::Factor(Word w) : repr_(std::make_shared<const Word>(std::move(w))) {}
inline Factor::Factor(WordPtr w) : repr_(std::move(w)) {}

struct WordStats {
  int head;
  int tail;
  std::size_t breadth;
  std::uint32_t depth;
};

WordStats word_stats(const Word& w);

// The factor sequence whose concatenation reproduces the word.
inline const std::vector<Factor>& standard_decomposition(const Word& w) {
  return w.factors();
}

// Total order on words: letter count first, then depth (deeper words
// first), then the factor sequences lexicographically (brackets sort before
// letters, bracket contents recursively, letters by generator position in
// the alphabet).
std::strong_ordering compare_words(const Word& a, const Word& b);

struct WordLess {
  bool operator()(const Word& a, const Word& b) const {
    return compare_words(a, b) == std::strong_ordering::less;
  }
};

// Canonical text form: factors separated by single spaces, brackets as
// "[...]" without inner padding, letter parts joined by '.'.
std::string render_word(const Word& w, const Alphabet& alphabet);

// Concatenation helpers used by product routines. Callers are responsible
// for the alternation requirement at the seam; the Word constructor rejects
// violations.
Word concat_words(const Word& a, const Word& b);
Word word_from_slice(const std::vector<Factor>& factors, std::size_t first,
                     std::size_t count);

}  // namespace rbax
