#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "rbax/dendriform.hpp"
#include "rbax/rational.hpp"

namespace rbax {

// A two- or three-piece operation set on a finite basis, held as dense
// structure constants over the rationals. Small by design: the dimension is
// capped so validation can afford every basis triple.
class FiniteDendriform {
 public:
  enum class Kind { dialgebra, trialgebra };
  static constexpr std::size_t kMaxDim = 12;

  using Element = std::vector<Rational>;          // coordinates over the basis
  using Table = std::vector<std::vector<Element>>;  // [i][j] -> coordinates

  // dot must be empty for a dialgebra and square for a trialgebra.
  FiniteDendriform(Kind kind, std::vector<std::string> basis, Table prec, Table succ,
                   Table dot, Rational weight = Rational(0));

  // Text form:
  //   kind trialgebra
  //   weight 1
  //   basis e1 e2
  //   e1 prec e2 -> 1*e1 + 1/2*e2
  // Missing entries default to zero; '#' starts a comment.
  static FiniteDendriform parse(std::istream& in);
  static FiniteDendriform load_file(const std::string& path);

  // The three-piece splitting carried by length-n sequences with the
  // weighted partial-sum operator, restricted to the indicator basis.
  static FiniteDendriform sequence_trialgebra(std::size_t n, const Rational& weight);
  // The two-piece splitting (prec + dot, succ) of the same structure.
  static FiniteDendriform sequence_prime_dialgebra(std::size_t n, const Rational& weight);
  // The two-piece splitting carried by polynomials under the antiderivative
  // operator, restricted to monomials of degree <= max_degree.
  static FiniteDendriform poly_dialgebra(std::size_t max_degree);

  Kind kind() const { return kind_; }
  std::size_t dim() const { return names_.size(); }
  const std::vector<std::string>& basis_names() const { return names_; }
  const Rational& weight() const { return weight_; }

  Element zero() const { return Element(dim(), Rational(0)); }
  Element basis(std::size_t i) const;
  Element add(const Element& a, const Element& b) const;
  Element scale(const Rational& c, const Element& a) const;
  bool is_zero(const Element& a) const;

  Element prec(const Element& a, const Element& b) const;
  Element succ(const Element& a, const Element& b) const;
  Element dot(const Element& a, const Element& b) const;  // trialgebra only

  DendOps<Element> ops() const;

  // Axiom residuals on every basis triple.
  AxiomReport<Element> validate() const;

  std::string str(const Element& a) const;

 private:
  Element apply_table(const Table& t, const Element& a, const Element& b) const;
  void check(const Element& a) const;

  Kind kind_;
  std::vector<std::string> names_;
  Rational weight_;
  Table prec_;
  Table succ_;
  Table dot_;
};

std::string to_string(FiniteDendriform::Kind k);

}  // namespace rbax
