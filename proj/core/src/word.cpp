#include "rbax/word.hpp"

#include <algorithm>

#include "rbax/errors.hpp"

namespace rbax {

Word::Word(std::vector<Factor> factors) : factors_(std::move(factors)) {
  if (factors_.empty()) throw DomainError("empty word");
  for (std::size_t i = 0; i + 1 < factors_.size(); ++i) {
    if (factors_[i].is_letter() == factors_[i + 1].is_letter()) {
      throw DomainError(factors_[i].is_letter()
                            ? "adjacent letters in word"
                            : "adjacent brackets in word");
    }
  }
  for (const Factor& f : factors_) {
    if (f.is_letter()) {
      letter_count_ += static_cast<std::uint32_t>(f.letter().size());
    } else {
      const Word& inner = f.bracket();
      depth_ = std::max(depth_, inner.depth() + 1);
      letter_count_ += inner.letter_count();
    }
  }
}

bool operator==(const Word& a, const Word& b) {
  if (a.letter_count_ != b.letter_count_ || a.depth_ != b.depth_ ||
      a.factors_.size() != b.factors_.size()) {
    return false;
  }
  for (std::size_t i = 0; i < a.factors_.size(); ++i) {
    const Factor& fa = a.factors_[i];
    const Factor& fb = b.factors_[i];
    if (fa.is_letter() != fb.is_letter()) return false;
    if (fa.is_letter()) {
      if (fa.letter() != fb.letter()) return false;
    } else {
      if (fa.bracket_ptr() != fb.bracket_ptr() && !(fa.bracket() == fb.bracket())) {
        return false;
      }
    }
  }
  return true;
}

WordStats word_stats(const Word& w) {
  return WordStats{w.head(), w.tail(), w.breadth(), w.depth()};
}

std::strong_ordering compare_words(const Word& a, const Word& b) {
  if (auto c = a.letter_count() <=> b.letter_count(); c != 0) return c;
  // deeper words sort first within a letter-count class
  if (auto c = b.depth() <=> a.depth(); c != 0) return c;
  std::size_t n = std::min(a.breadth(), b.breadth());
  for (std::size_t i = 0; i < n; ++i) {
    const Factor& fa = a.factors()[i];
    const Factor& fb = b.factors()[i];
    if (fa.is_bracket() != fb.is_bracket()) {
      return fa.is_bracket() ? std::strong_ordering::less : std::strong_ordering::greater;
    }
    if (fa.is_letter()) {
      if (auto c = fa.letter() <=> fb.letter(); c != 0) return c;
    } else {
      if (fa.bracket_ptr() == fb.bracket_ptr()) continue;
      if (auto c = compare_words(fa.bracket(), fb.bracket()); c != 0) return c;
    }
  }
  return a.breadth() <=> b.breadth();
}

std::string render_word(const Word& w, const Alphabet& alphabet) {
  std::string out;
  for (std::size_t i = 0; i < w.factors().size(); ++i) {
    if (i > 0) out += ' ';
    const Factor& f = w.factors()[i];
    if (f.is_letter()) {
      out += render_letter(f.letter(), alphabet);
    } else {
      out += '[';
      out += render_word(f.bracket(), alphabet);
      out += ']';
    }
  }
  return out;
}

Word concat_words(const Word& a, const Word& b) {
  std::vector<Factor> factors = a.factors();
  factors.insert(factors.end(), b.factors().begin(), b.factors().end());
  return Word(std::move(factors));
}

Word word_from_slice(const std::vector<Factor>& factors, std::size_t first,
                     std::size_t count) {
  return Word(std::vector<Factor>(factors.begin() + first,
                                  factors.begin() + first + count));
}

}  // namespace rbax
