#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "rbax/alphabet.hpp"
#include "rbax/formal_sum.hpp"

namespace rbax {

enum class BaseKind {
  zero_product,  // letters are single generators, every product vanishes
  free_monoid,   // letters are generator sequences, product is concatenation
  finite_table,  // letters are single generators, product from a table
};

std::string to_string(BaseKind k);

struct LetterLess {
  bool operator()(const Letter& a, const Letter& b) const { return a < b; }
};

using BaseElement = FormalSum<Letter, LetterLess>;

std::string render_base_element(const BaseElement& e, const Alphabet& alphabet);

// The coefficient algebra the bracketed words are built over. Owns the
// alphabet; for the finite-table kind also owns the structure constants,
// validated for bilinearity (by construction) and associativity on all
// generator triples at load time.
class BaseAlgebra {
 public:
  using Table = std::map<std::pair<std::uint32_t, std::uint32_t>, BaseElement>;

  static BaseAlgebra zero_product(Alphabet a);
  static BaseAlgebra free_monoid(Alphabet a);
  // Missing table entries default to zero. Throws DomainError with a witness
  // triple when the table is not associative.
  static BaseAlgebra finite_table(Alphabet a, Table t);
  // Lines "x y -> c1*z1 + c2*z2" with rational coefficients "p/q";
  // blank lines and '#' comments are skipped.
  static BaseAlgebra load_table(Alphabet a, std::istream& in);
  static BaseAlgebra load_table_file(Alphabet a, const std::string& path);

  BaseKind kind() const { return kind_; }
  const Alphabet& alphabet() const { return alphabet_; }

  // Rejects letters whose generators fall outside the alphabet, and
  // multi-part letters under the bases that only admit single generators.
  void check_letter(const Letter& l) const;

  BaseElement mult(const Letter& a, const Letter& b) const;
  BaseElement mult(const BaseElement& a, const BaseElement& b) const;

  // Re-checks table associativity on every generator triple. Trivially true
  // for the other kinds.
  struct Report {
    bool pass = true;
    std::string witness;
  };
  Report validate() const;

 private:
  BaseAlgebra(BaseKind k, Alphabet a) : kind_(k), alphabet_(std::move(a)) {}

  BaseKind kind_;
  Alphabet alphabet_;
  Table table_;
};

}  // namespace rbax
