#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rbax/algebra_concepts.hpp"
#include "rbax/rational.hpp"

namespace rbax {

// Length-N rational sequences under the pointwise product, with the operator
// sending a sequence to its weighted strict partial sums:
// R(a)[k] = w * (a[0] + ... + a[k-1]). Satisfies the operator identity for
// every weight w.
class SequenceRba {
 public:
  using Element = std::vector<Rational>;

  SequenceRba(std::size_t length, Rational weight);

  std::size_t length() const { return length_; }
  Rational weight() const { return weight_; }

  Element zero() const { return Element(length_, Rational(0)); }
  Element add(const Element& a, const Element& b) const;
  Element scale(const Rational& c, const Element& a) const;
  bool is_zero(const Element& a) const;
  Element mul(const Element& a, const Element& b) const;
  Element rb(const Element& a) const;

  Element basis(std::size_t i) const;
  std::string str(const Element& a) const;

 private:
  void check(const Element& a) const;

  std::size_t length_;
  Rational weight_;
};

// Rational-coefficient polynomials in one variable under the usual product,
// with the operator taking the antiderivative vanishing at zero. Weight
// zero. With max_degree set, coefficients above that degree are discarded;
// the discarded span is closed under both operations, so the identities
// survive the truncation.
class PolynomialRba {
 public:
  using Element = std::vector<Rational>;  // coefficient by degree, trimmed

  explicit PolynomialRba(std::optional<std::size_t> max_degree = std::nullopt);

  std::optional<std::size_t> max_degree() const { return max_degree_; }
  Rational weight() const { return Rational(0); }

  Element zero() const { return {}; }
  Element add(const Element& a, const Element& b) const;
  Element scale(const Rational& c, const Element& a) const;
  bool is_zero(const Element& a) const { return a.empty(); }
  Element mul(const Element& a, const Element& b) const;
  Element rb(const Element& a) const;

  Element monomial(std::size_t degree, Rational coeff = Rational(1)) const;
  std::string str(const Element& a) const;

 private:
  Element trim(Element a) const;

  std::optional<std::size_t> max_degree_;
};

struct OracleCheckReport {
  bool pass = true;
  int checked = 0;
  std::string witness;
};

// Property check for a claimed Rota-Baxter algebra: the operator identity on
// sampled pairs plus associativity and bilinearity of the product on sampled
// triples. Sampler() must yield a random element; Render turns one into text
// for the witness.
template <RotaBaxterAlgebra A, class Sampler, class Render>
OracleCheckReport check_rb_algebra(const A& alg, Sampler&& sample, Render&& render,
                                   int pairs, int triples) {
  OracleCheckReport report;
  for (int i = 0; i < pairs; ++i) {
    auto x = sample();
    auto y = sample();
    auto residual = rb_residual(alg, x, y);
    ++report.checked;
    if (!alg.is_zero(residual)) {
      report.pass = false;
      report.witness = "operator identity fails on x = " + render(x) +
                       ", y = " + render(y) + ", residual = " + render(residual);
      return report;
    }
  }
  for (int i = 0; i < triples; ++i) {
    auto x = sample();
    auto y = sample();
    auto z = sample();
    ++report.checked;
    auto assoc = sub(alg, alg.mul(alg.mul(x, y), z), alg.mul(x, alg.mul(y, z)));
    if (!alg.is_zero(assoc)) {
      report.pass = false;
      report.witness = "product is not associative on x = " + render(x) + ", y = " +
                       render(y) + ", z = " + render(z);
      return report;
    }
    auto left_distrib =
        sub(alg, alg.mul(alg.add(x, y), z), alg.add(alg.mul(x, z), alg.mul(y, z)));
    auto right_distrib =
        sub(alg, alg.mul(x, alg.add(y, z)), alg.add(alg.mul(x, y), alg.mul(x, z)));
    auto scale_compat =
        sub(alg, alg.mul(alg.scale(Rational(3, 2), x), y),
            alg.scale(Rational(3, 2), alg.mul(x, y)));
    if (!alg.is_zero(left_distrib) || !alg.is_zero(right_distrib) ||
        !alg.is_zero(scale_compat)) {
      report.pass = false;
      report.witness = "product is not bilinear on x = " + render(x) + ", y = " +
                       render(y) + ", z = " + render(z);
      return report;
    }
  }
  return report;
}

}  // namespace rbax
