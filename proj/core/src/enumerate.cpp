#include "rbax/enumerate.hpp"

#include <algorithm>

#include "rbax/errors.hpp"

namespace rbax {

namespace {

class WordBuilder {
 public:
  WordBuilder(const BaseAlgebra& base, const WordEnumConfig& cfg)
      : base_(base), cfg_(cfg) {}

  std::vector<Word> run() {
    std::vector<Word> out;
    for (std::size_t n = 1; n <= cfg_.max_letters; ++n) {
      for (bool letter_first : {true, false}) {
        for (auto& factors : sequences(n, cfg_.max_depth, letter_first)) {
          out.emplace_back(std::move(factors));
          if (out.size() > cfg_.cap) {
            throw LimitError("word enumeration exceeded the collection cap");
          }
        }
      }
    }
    std::sort(out.begin(), out.end(), WordLess{});
    return out;
  }

 private:
  // Alternating factor sequences consuming exactly n generator occurrences,
  // bracket contents limited to the given depth.
  std::vector<std::vector<Factor>> sequences(std::size_t n, std::size_t depth,
                                             bool letter_first) {
    std::vector<std::vector<Factor>> out;
    if (n == 0) return out;
    if (letter_first) {
      std::size_t max_take = base_.kind() == BaseKind::free_monoid ? n : 1;
      for (std::size_t take = 1; take <= max_take; ++take) {
        for (const Letter& l : letters(take)) {
          emit_with_rest(out, Factor(l), n - take, depth, false);
        }
      }
    } else {
      if (depth == 0) return out;
      for (std::size_t take = 1; take <= n; ++take) {
        for (bool inner_first : {true, false}) {
          for (auto& inner : sequences(take, depth - 1, inner_first)) {
            emit_with_rest(out, Factor(Word(std::move(inner))), n - take, depth, true);
          }
        }
      }
    }
    return out;
  }

  void emit_with_rest(std::vector<std::vector<Factor>>& out, Factor head,
                      std::size_t rest, std::size_t depth, bool rest_letter_first) {
    if (rest == 0) {
      out.push_back({std::move(head)});
      return;
    }
    for (auto& tail : sequences(rest, depth, rest_letter_first)) {
      std::vector<Factor> factors;
      factors.reserve(tail.size() + 1);
      factors.push_back(head);
      factors.insert(factors.end(), tail.begin(), tail.end());
      out.push_back(std::move(factors));
    }
  }

  // All letters consuming exactly `take` generator occurrences.
  std::vector<Letter> letters(std::size_t take) {
    std::vector<Letter> out;
    std::vector<Generator> parts;
    build_letters(take, parts, out);
    return out;
  }

  void build_letters(std::size_t left, std::vector<Generator>& parts,
                     std::vector<Letter>& out) {
    if (left == 0) {
      out.emplace_back(parts);
      return;
    }
    for (std::uint32_t g = 0; g < base_.alphabet().size(); ++g) {
      parts.push_back(Generator{g});
      build_letters(left - 1, parts, out);
      parts.pop_back();
    }
  }

  const BaseAlgebra& base_;
  const WordEnumConfig& cfg_;
};

}  // namespace

std::vector<Word> enumerate_words(const BaseAlgebra& base, const WordEnumConfig& cfg) {
  if (base.alphabet().empty()) return {};
  WordBuilder builder(base, cfg);
  return builder.run();
}

}  // namespace rbax
