#pragma once

#include <cstddef>

#include "rbax/base_algebra.hpp"
#include "rbax/element.hpp"

namespace rbax {

struct Limits {
  // Bound on the recursion depth of the word product. Generous by default;
  // the recursion descends one bracket nesting level per step.
  int max_product_depth = 64;
  // Cap on generated collection sizes (enumeration, expansion).
  std::size_t max_collection = 500000;
};

// Free Rota-Baxter algebra of a fixed weight on a base algebra: elements are
// rational combinations of bracketed words, the operator wraps a bracket
// around each word, and the product splits off boundary factors and recurses
// into bracket pairs.
class FreeRba {
 public:
  using Element = rbax::Element;

  FreeRba(BaseAlgebra base, Rational weight, Limits limits = {});

  const BaseAlgebra& base() const { return base_; }
  const Alphabet& alphabet() const { return base_.alphabet(); }
  const Rational& weight() const { return weight_; }
  const Limits& limits() const { return limits_; }

  Element zero() const { return Element{}; }
  Element add(const Element& a, const Element& b) const { return a + b; }
  Element scale(const Rational& c, const Element& a) const { return a.scaled(c); }
  bool is_zero(const Element& a) const { return a.is_zero(); }

  Element mul(const Element& a, const Element& b) const;
  Element rb(const Element& a) const;

  Element embed(const Letter& l) const;
  Element embed(const BaseElement& e) const;

  // Validates the word against the base and wraps it as a one-term element.
  Element word_element(const Word& w) const;
  Element mul_words(const Word& a, const Word& b) const;

  // Every letter legal for the base, at every nesting level.
  void validate_word(const Word& w) const;

 private:
  Element product_words(const Word& a, const Word& b, int fuel) const;
  Element product_single(const Factor& a, const Factor& b, int fuel) const;

  BaseAlgebra base_;
  Rational weight_;
  Limits limits_;
};

// Linear extension of the bracket operator, usable without an ambient
// algebra; FreeRba::rb forwards here.
Element rb_apply(const Element& a);

}  // namespace rbax
