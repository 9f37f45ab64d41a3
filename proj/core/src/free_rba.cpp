#include "rbax/free_rba.hpp"

#include "rbax/errors.hpp"

namespace rbax {

FreeRba::FreeRba(BaseAlgebra base, Rational weight, Limits limits)
    : base_(std::move(base)), weight_(std::move(weight)), limits_(limits) {}

void FreeRba::validate_word(const Word& w) const {
  for (const Factor& f : w.factors()) {
    if (f.is_letter()) {
      base_.check_letter(f.letter());
    } else {
      validate_word(f.bracket());
    }
  }
}

Element FreeRba::word_element(const Word& w) const {
  validate_word(w);
  return Element::single(w);
}

Element rb_apply(const Element& a) {
  std::vector<Element::Term> terms;
  terms.reserve(a.size());
  for (const auto& [w, c] : a.terms()) {
    terms.emplace_back(Word::bracket(std::make_shared<const Word>(w)), c);
  }
  return Element(std::move(terms));
}

Element FreeRba::rb(const Element& a) const { return rb_apply(a); }

Element FreeRba::embed(const Letter& l) const {
  base_.check_letter(l);
  return Element::single(Word::letter(l));
}

Element FreeRba::embed(const BaseElement& e) const {
  Element out;
  for (const auto& [l, c] : e.terms()) {
    base_.check_letter(l);
    out.add_term(Word::letter(l), c);
  }
  return out;
}

Element FreeRba::mul(const Element& a, const Element& b) const {
  Element out;
  for (const auto& [wa, ca] : a.terms()) {
    for (const auto& [wb, cb] : b.terms()) {
      out += product_words(wa, wb, limits_.max_product_depth).scaled(ca * cb);
    }
  }
  return out;
}

Element FreeRba::mul_words(const Word& a, const Word& b) const {
  validate_word(a);
  validate_word(b);
  return product_words(a, b, limits_.max_product_depth);
}

// The product of two words peels the boundary pair: the last factor of the
// left word times the first factor of the right word, expanded by the
// breadth-one rules, is spliced between the untouched outer factors. The
// splice preserves alternation because every expansion term keeps the head
// and tail kinds of the pair it came from.
Element FreeRba::product_words(const Word& a, const Word& b, int fuel) const {
  Element mid = product_single(a.factors().back(), b.factors().front(), fuel);
  if (mid.is_zero()) return mid;
  std::vector<Element::Term> out;
  out.reserve(mid.size());
  for (const auto& [w, c] : mid.terms()) {
    std::vector<Factor> factors(a.factors().begin(), a.factors().end() - 1);
    factors.insert(factors.end(), w.factors().begin(), w.factors().end());
    factors.insert(factors.end(), b.factors().begin() + 1, b.factors().end());
    out.emplace_back(Word(std::move(factors)), c);
  }
  return Element(std::move(out));
}

Element FreeRba::product_single(const Factor& a, const Factor& b, int fuel) const {
  if (a.is_letter() && b.is_letter()) {
    return embed(base_.mult(a.letter(), b.letter()));
  }
  if (a.is_letter() != b.is_letter()) {
    return Element::single(Word({a, b}));
  }
  if (fuel <= 0) {
    throw LimitError("word product exceeded the recursion depth limit");
  }
  const Word& x = a.bracket();
  const Word& y = b.bracket();
  Element sum = product_words(Word({a}), y, fuel - 1);
  sum += product_words(x, Word({b}), fuel - 1);
  if (!weight_.is_zero()) {
    sum += product_words(x, y, fuel - 1).scaled(weight_);
  }
  return rb_apply(sum);
}

}  // namespace rbax
